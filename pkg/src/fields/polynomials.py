"""
Polynomials over F_p as coefficient lists, constant term first.

Lists are kept trimmed (no trailing zero coefficients); the zero polynomial is [].
"""

from itertools import product
from typing import Iterator, List

Poly = List[int]


def trim(a: Poly) -> Poly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, b_i in enumerate(b):
        c[i] = (c[i] + b_i) % p
    return trim(c)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    c = list(a) + [0] * (len(b) - len(a))
    for i, b_i in enumerate(b):
        c[i] = (c[i] - b_i) % p
    return trim(c)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, a_i in enumerate(a):
        if a_i:
            for j, b_j in enumerate(b):
                c[i + j] += a_i * b_j
    return trim([c_i % p for c_i in c])


def mod(a: Poly, b: Poly, p: int) -> Poly:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = trim(a)
    n = len(b)
    lead_inverse = pow(b[-1], -1, p)
    while len(r) >= n:
        shift = len(r) - n
        q = (r[-1] * lead_inverse) % p
        for j in range(n):
            r[shift + j] = (r[shift + j] - q * b[j]) % p
        r = trim(r)
    return r


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic greatest common divisor."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    if not a:
        return a
    lead_inverse = pow(a[-1], -1, p)
    return [(a_i * lead_inverse) % p for a_i in a]


def powmod(a: Poly, exponent: int, modulus: Poly, p: int) -> Poly:
    result: Poly = [1]
    base = mod(a, modulus, p)
    while exponent:
        if exponent & 1:
            result = mod(mul(result, base, p), modulus, p)
        base = mod(mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


def is_irreducible(a: Poly, p: int) -> bool:
    """
    Irreducibility over F_p: a has no factor of degree d <= deg(a)/2, tested via
    gcd(x^(p^d) - x, a) = 1 for each such d.
    """
    a = trim(a)
    if degree(a) <= 0:
        return False
    x = [0, 1]
    b = x
    for _ in range(degree(a) // 2):
        b = powmod(b, p, a, p)
        if gcd(sub(b, x, p), a, p) != [1]:
            return False
    return True


def monic_polynomials(p: int, m: int) -> Iterator[Poly]:
    """
    Monic degree-m polynomials, lexicographic in the coefficient order
    (c_0, c_1, ..., c_{m-1}).
    """
    for lower in product(range(p), repeat=m):
        yield list(lower) + [1]


def first_irreducible(p: int, m: int) -> Poly:
    for candidate in monic_polynomials(p, m):
        if is_irreducible(candidate, p):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")
