"""
Prime-power arithmetic: q(n), the largest prime-power divisor of n.
"""

from typing import Tuple

from sympy import factorint

from src.core.errors import InputError


def q_largest_prime_power(n: int) -> int:
    """Largest divisor of n that is a prime power; q(1) = 1."""
    if n < 1:
        raise InputError(f"q(n) needs n >= 1, got {n}")
    if n == 1:
        return 1
    return max(prime**exponent for prime, exponent in factorint(n).items())


def prime_power_parts(q: int) -> Tuple[int, int]:
    """(p, m) with q = p^m. Raises InputError if q is not a prime power."""
    factors = factorint(q)
    if len(factors) != 1:
        raise InputError(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    return int(p), int(m)


def prime_power_bound_holds(n: int) -> bool:
    """n <= q(n)^q(n)."""
    q = q_largest_prime_power(n)
    return n <= q**q
