"""Steenrod squares on H*(G_{3,n}; Z2).

Sq^1 and Sq^2 have closed forms on monomials. The general Sq^i is Wu's
formula on w1, w2, w3 extended to monomials through the Cartan formula,
so the two paths cross-check each other for i <= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import Polynomial, binom_mod2, cohom_degree, pow_truncated, mul_truncated
from .grassmann import GrassmannRing


@dataclass(frozen=True)
class SteenrodOp:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("Steenrod square index must be nonnegative")

    def __call__(self, ring: GrassmannRing, p: Polynomial) -> Polynomial:
        return sq(ring, self.index, p)


def _sq1_terms(t):
    a, b, c = t
    out = []
    if (a + b + c) & 1:
        out.append((a + 1, b, c))
    if b & 1:
        out.append((a, b - 1, c + 1))
    return out


def _sq2_terms(t):
    a, b, c = t
    out = []
    if binom_mod2(a + b + c, 2):
        out.append((a + 2, b, c))
    if (b * (a + c)) & 1:
        out.append((a + 1, b - 1, c + 1))
    if (b + c) & 1:
        out.append((a, b + 1, c))
    if binom_mod2(b, 2):
        out.append((a, b - 2, c + 2))
    return out


def _apply_termwise(ring, p, rule):
    acc = set()
    for t in p.term_set:
        acc.symmetric_difference_update(rule(t))
    return ring.nf(Polynomial._from_set(acc, 3))


def sq1(ring: GrassmannRing, p: Polynomial) -> Polynomial:
    return _apply_termwise(ring, p, _sq1_terms)


def sq2(ring: GrassmannRing, p: Polynomial) -> Polynomial:
    return _apply_termwise(ring, p, _sq2_terms)


def _w(s):
    if s == 0:
        return Polynomial.one()
    if s > 3:
        return Polynomial.zero()
    e = [0, 0, 0]
    e[s - 1] = 1
    return Polynomial.monomial(*e)


def wu(i: int, j: int) -> Polynomial:
    """Sq^i(w_j) in Z2[w1, w2, w3], with w_s = 0 for s > 3."""
    if i < 0 or i > j:
        return Polynomial.zero()
    out = Polynomial.zero()
    for t in range(i + 1):
        if j + t > 3:
            break
        if binom_mod2(j + t - i - 1, t):
            out = out + _w(i - t) * _w(j + t)
    return out


_TOTAL_GEN = tuple(
    sum((wu(i, j) for i in range(j + 1)), Polynomial.zero()) for j in (1, 2, 3)
)

_total_cache: dict = {}


def _total_square_monomial(ring: GrassmannRing, t) -> Polynomial:
    key = (ring.n, t)
    hit = _total_cache.get(key)
    if hit is not None:
        return hit
    bound = min(ring.dimension, 2 * cohom_degree(t))
    out = Polynomial.one()
    for gen, e in zip(_TOTAL_GEN, t):
        if e:
            out = mul_truncated(out, pow_truncated(gen, e, bound), bound)
    out = ring.nf(out)
    _total_cache[key] = out
    return out


def sq_total(ring: GrassmannRing, p: Polynomial) -> Polynomial:
    """Total square Sq = Sq^0 + Sq^1 + ... applied to p, in normal form."""
    acc = set()
    for t in p.term_set:
        acc.symmetric_difference_update(_total_square_monomial(ring, t).term_set)
    return Polynomial._from_set(acc, 3)


def sq(ring: GrassmannRing, i: int, p: Polynomial) -> Polynomial:
    if i < 0:
        raise ValueError("Steenrod square index must be nonnegative")
    if i == 0:
        return ring.nf(p)
    acc = set()
    for t in p.term_set:
        d = cohom_degree(t)
        if i > d or d + i > ring.dimension:
            continue
        acc.symmetric_difference_update(
            _total_square_monomial(ring, t).degree_part(d + i).term_set
        )
    return Polynomial._from_set(acc, 3)


def sq_power_rule_check(ring: GrassmannRing, u: Polynomial, m: int, k: int) -> bool:
    """Compare Sq^m(u^(2^k)) with (Sq^(m/2^k) u)^(2^k), or with 0 when 2^k does not divide m."""
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    q = 1 << k
    lhs = sq(ring, m, ring.pow(u, q))
    if m % q:
        rhs = Polynomial.zero()
    else:
        rhs = ring.pow(sq(ring, m // q, u), q)
    return lhs == rhs
