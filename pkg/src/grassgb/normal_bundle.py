"""Stiefel-Whitney classes of the stable normal bundle of G_{3,n}.

With r defined by 2^(r+1) < 3n < 2^(r+2), the total class is
    w(nu) = (1 + w1^4 + w2^2 + w1^2 w2^2 + w3^2) (1 + w1 + w2 + w3)^(2^(r+1) - n - 3)
A nonzero w_k(nu) gives the immersion lower bound 3n + k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .gf2poly import Polynomial, mul_truncated, parse, pow_truncated
from .grassmann import GrassmannRing

TOTAL_CLASS = parse("1 + w1 + w2 + w3")
CORRECTION = parse("1 + w1^4 + w2^2 + w1^2*w2^2 + w3^2")


class NotApplicable(ValueError):
    """An identity was requested outside the range of n where it is stated."""


def r_for(n: int) -> int:
    """The unique r with 2^(r+1) < 3n < 2^(r+2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (3 * n).bit_length() - 2


def alpha(m: int) -> int:
    """Number of ones in the binary expansion of m."""
    return bin(m).count("1")


@dataclass(frozen=True)
class NormalClassTable:
    n: int
    r: int
    classes: dict = field(repr=False)

    def __post_init__(self):
        lo, hi = 1 << (self.r + 1), 1 << (self.r + 2)
        if not lo < 3 * self.n < hi:
            raise ValueError(f"r={self.r} does not satisfy 2^(r+1) < 3n < 2^(r+2) for n={self.n}")

    def __getitem__(self, i: int) -> Polynomial:
        return self.classes.get(i, Polynomial.zero())

    def nonzero(self) -> dict:
        return {i: p for i, p in sorted(self.classes.items()) if not p.is_zero()}


def _product_table(n: int, exponent: int, r: int) -> NormalClassTable:
    if exponent < 0:
        raise ValueError(f"negative exponent {exponent} for n={n}")
    ring = GrassmannRing.get(n)
    top = ring.dimension
    total = mul_truncated(CORRECTION, pow_truncated(TOTAL_CLASS, exponent, top), top)
    reduced = ring.nf(total)
    classes = {i: reduced.degree_part(i) for i in range(top + 1)}
    return NormalClassTable(n, r, classes)


@lru_cache(maxsize=None)
def normal_total_class(n: int) -> NormalClassTable:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")
    r = r_for(n)
    return _product_table(n, (1 << (r + 1)) - n - 3, r)


def o2_applicable(n: int) -> bool:
    r = r_for(n)
    return 3 * n > 2 * (1 << r) and n <= (1 << r) - 3


def o2_consistency(n: int) -> bool:
    """Compare the shorter-exponent product with the table from the main formula.

    Raises NotApplicable outside (2/3)2^r < n <= 2^r - 3.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")
    if not o2_applicable(n):
        raise NotApplicable(f"the shorter product formula does not apply at n={n}")
    r = r_for(n)
    alt = _product_table(n, (1 << r) - n - 3, r)
    main = normal_total_class(n)
    return all(alt[i] == main[i] for i in range(3 * n + 1))


def top_nonzero(table: NormalClassTable):
    degrees = [i for i, p in table.classes.items() if i >= 1 and not p.is_zero()]
    return max(degrees) if degrees else None


def immersion_lower_bound(n: int) -> int:
    top = top_nonzero(normal_total_class(n))
    return 3 * n + (top or 0)


def massey_check(n: int) -> bool:
    """w_i(nu) vanishes for i > 3n - alpha(3n)."""
    table = normal_total_class(n)
    cutoff = 3 * n - alpha(3 * n)
    return all(table[i].is_zero() for i in range(cutoff + 1, 3 * n + 1))
