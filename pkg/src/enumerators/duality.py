"""
The transformation matrices C_n and C_{n;c}, and the duality check ŵ ≡ C_n w (mod p).
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence, Tuple

from sympy import Matrix

from src.config.settings import HARD_MAX_VERTICES
from src.core.errors import InputError


@dataclass(frozen=True)
class TransformMatrix:
    """
    (C_n)_{i,j} = (-1)^j binom(n - j, i - j), zero above the diagonal.

    The restriction C_{n;c} keeps the first n - c + 1 columns and the last
    n - c + 1 rows, so (C_{n;c})_{i,j} = (C_n)_{i+c,j}.
    """

    n: int
    c: Optional[int]
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        """Exact determinant, computed by sympy."""
        return int(Matrix(self.entries).det())

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != len(self.entries[0]):
            raise InputError(f"vector of length {len(vector)} does not fit a {self.size}-column matrix")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def to_rows(self):
        return [list(row) for row in self.entries]


def _entry(n: int, i: int, j: int) -> int:
    if j > i:
        return 0
    return (-1) ** j * comb(n - j, i - j)


def _check(n: int, c: int = 0) -> None:
    if not 0 <= c <= n <= HARD_MAX_VERTICES:
        raise InputError(f"matrix parameters need 0 <= c <= n <= {HARD_MAX_VERTICES}, got n={n}, c={c}")


@lru_cache(maxsize=None)
def transform_matrix(n: int) -> TransformMatrix:
    _check(n)
    entries = tuple(tuple(_entry(n, i, j) for j in range(n + 1)) for i in range(n + 1))
    return TransformMatrix(n, None, entries)


@lru_cache(maxsize=None)
def restrict(n: int, c: int) -> TransformMatrix:
    _check(n, c)
    size = n - c + 1
    entries = tuple(tuple(_entry(n, i + c, j) for j in range(size)) for i in range(size))
    return TransformMatrix(n, c, entries)


def verify_duality(w: Sequence[int], w_hat: Sequence[int], n: int, p: int) -> bool:
    """
    True iff ŵ ≡ C_n w componentwise mod p.

    Raises:
        InputError: either vector does not have length n + 1
    """
    w = list(getattr(w, "entries", w))
    w_hat = list(getattr(w_hat, "entries", w_hat))
    if len(w) != n + 1 or len(w_hat) != n + 1:
        raise InputError(f"level vectors must have length {n + 1}, got {len(w)} and {len(w_hat)}")
    expected = transform_matrix(n).apply(w)
    return all((a - b) % p == 0 for a, b in zip(expected, w_hat))
