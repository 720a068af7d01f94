"""
Arithmetic in F_{p^m} with a deterministic modulus, and the half sets F^+.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from loguru import logger
from sympy import isprime

from src.config.settings import HARD_MAX_VERTICES
from src.core.errors import DomainError, InputError
from src.fields import polynomials

ElementLike = Union["FieldElem", int, Sequence[int]]


@dataclass(frozen=True)
class FieldSpec:
    """
    F_{p^m} represented as F_p[x] / (modulus).

    The modulus is a monic irreducible polynomial of degree m, stored as a
    coefficient tuple with the constant term first.
    """

    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    @cached_property
    def elements(self) -> Tuple["FieldElem", ...]:
        """All elements in canonical order (lexicographic coefficient vectors)."""
        return tuple(FieldElem(self, coeffs) for coeffs in product(range(self.p), repeat=self.m))

    @cached_property
    def _positions(self) -> Dict[Tuple[int, ...], int]:
        return {element.coeffs: i for i, element in enumerate(self.elements)}

    def index(self, element: "FieldElem") -> int:
        """Vertex index of an element in canonical order."""
        return self._positions[element.coeffs]

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.m)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, (1,) + (0,) * (self.m - 1))

    def nonzero(self) -> List["FieldElem"]:
        return [element for element in self.elements if not element.is_zero]

    def element(self, value: ElementLike) -> "FieldElem":
        """
        Coerce a value into the field.

        Integers become constant polynomials; sequences are coefficient vectors,
        constant term first.
        """
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise InputError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise InputError(f"coefficient vector {tuple(value)} longer than m={self.m}")
        return FieldElem(self, tuple(coeffs + [0] * (self.m - len(coeffs))))

    def parse_element(self, text: str) -> "FieldElem":
        """Inverse of str(): "3" for prime fields, "(c0,c1,...)" otherwise."""
        text = text.strip()
        try:
            if text.startswith("("):
                return self.element([int(part) for part in text.strip("()").split(",") if part.strip()])
            return self.element(int(text))
        except ValueError:
            raise InputError(f"cannot parse field element {text!r}") from None

    def __str__(self) -> str:
        return f"F_{self.order}"


@dataclass(frozen=True)
class FieldElem:
    """An element of F_{p^m}: a reduced coefficient vector of length m."""

    spec: FieldSpec
    coeffs: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _wrap(self, poly: Sequence[int]) -> "FieldElem":
        poly = list(poly)
        return FieldElem(self.spec, tuple(poly + [0] * (self.spec.m - len(poly))))

    def _other(self, other: ElementLike) -> "FieldElem":
        return self.spec.element(other)

    def __add__(self, other: ElementLike) -> "FieldElem":
        other = self._other(other)
        p = self.spec.p
        return FieldElem(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        p = self.spec.p
        return FieldElem(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: ElementLike) -> "FieldElem":
        return self + (-self._other(other))

    def __mul__(self, other: ElementLike) -> "FieldElem":
        other = self._other(other)
        p = self.spec.p
        product_poly = polynomials.mul(list(self.coeffs), list(other.coeffs), p)
        return self._wrap(polynomials.mod(product_poly, list(self.spec.modulus), p))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "FieldElem":
        """
        Multiplicative inverse via a^(p^m - 2).

        Raises:
            DomainError: for the zero element
        """
        if self.is_zero:
            raise DomainError("zero has no multiplicative inverse")
        return self ** (self.spec.order - 2)

    def __truediv__(self, other: ElementLike) -> "FieldElem":
        return self * self._other(other).inverse()

    def __lt__(self, other: "FieldElem") -> bool:
        return self.coeffs < other.coeffs

    def __le__(self, other: "FieldElem") -> bool:
        return self.coeffs <= other.coeffs

    def __str__(self) -> str:
        if self.spec.is_prime_field:
            return str(self.coeffs[0])
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"

    __repr__ = __str__


# Free-function forms of the field operations
def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def neg(a: FieldElem) -> FieldElem:
    return -a


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()


@lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> FieldSpec:
    """
    Build F_{p^m} with the lexicographically smallest monic irreducible modulus
    (coefficient order constant term first).

    Raises:
        InputError: if p is not prime, m < 1, or p^m exceeds the vertex limit
    """
    if not isprime(p):
        raise InputError(f"{p} is not prime")
    if m < 1:
        raise InputError(f"extension degree must be positive, got {m}")
    if p**m > HARD_MAX_VERTICES:
        raise InputError(f"p^m = {p**m} exceeds the limit of {HARD_MAX_VERTICES}")
    modulus = tuple(polynomials.first_irreducible(p, m))
    logger.debug(f"F_{p**m}: modulus coefficients {modulus}")
    return FieldSpec(p, m, modulus)


def plus_set(spec: FieldSpec) -> List[FieldElem]:
    """
    F^+: exactly one of x and -x for every nonzero x, keeping x iff its coefficient
    vector is lexicographically no larger than that of -x. For p = 2 this is F*.
    """
    return [x for x in spec.nonzero() if x.coeffs <= (-x).coeffs]


def canonical(x: FieldElem) -> FieldElem:
    """The representative of {x, -x} that lies in F^+."""
    negated = -x
    return x if x.coeffs <= negated.coeffs else negated


def coerce_subset(spec: FieldSpec, values: Iterable[ElementLike]) -> frozenset:
    """
    Coerce values into a subset of F^+.

    Raises:
        InputError: if some value is not an element of plus_set(spec)
    """
    allowed = set(plus_set(spec))
    subset = frozenset(spec.element(value) for value in values)
    outside = [str(x) for x in subset if x not in allowed]
    if outside:
        raise InputError(f"elements {sorted(outside)} are not in F^+ of {spec}")
    return subset


def format_subset(subset: Iterable[FieldElem]) -> List[str]:
    """Sorted element strings, in canonical element order."""
    return [str(x) for x in sorted(subset)]
