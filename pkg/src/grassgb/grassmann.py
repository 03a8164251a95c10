"""The ideal I_{3,n} and the mod-2 cohomology ring of G_{3,n}.

Polynomials live in Z2[w1, w2, w3] with w_i of cohomological weight i.
``g_closed`` evaluates the closed-form basis elements g_{m,l}; the set of
those with m + l <= n + 1 is the reduced Groebner basis of I_{3,n}.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .gf2poly import (
    Polynomial,
    add,
    binom_mod2,
    cohom_degree,
    grlex_key,
    mul,
    multinom_mod2,
    pow_truncated,
)
from .groebner import GroebnerBasis, s_polynomial

W1 = Polynomial.monomial(1, 0, 0)
W2 = Polynomial.monomial(0, 1, 0)
W3 = Polynomial.monomial(0, 0, 1)


def _check_n(n):
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")


def _weighted_solutions(k: int, r: int):
    """All (a_1..a_k) >= 0 with sum i*a_i = r."""
    if k == 1:
        yield (r,)
        return
    for last in range(r // k + 1):
        for head in _weighted_solutions(k - 1, r - k * last):
            yield head + (last,)


def dual_class(k: int, n: int, r: int) -> Polynomial:
    """Degree-r dual Stiefel-Whitney class in k variables.

    ``n`` is accepted for interface symmetry with the rest of the module;
    the polynomial itself does not depend on it.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    terms = [e for e in _weighted_solutions(k, r) if multinom_mod2(e)]
    return Polynomial._from_set(terms, k)


def ideal_generators(n: int) -> list:
    _check_n(n)
    return [dual_class(3, n, n + 1 + i) for i in range(3)]


def g_closed(n: int, m: int, l: int) -> Polynomial:
    _check_n(n)
    if m < 0 or l < 0:
        raise ValueError("m and l must be nonnegative")
    return _g_closed(n, m, l)


@lru_cache(maxsize=None)
def _g_closed(n, m, l):
    total = n + 1 + m + 2 * l
    terms = []
    for c in range(total // 3 + 1):
        rest = total - 3 * c
        for b in range(rest // 2 + 1):
            a = rest - 2 * b
            if binom_mod2(a + b + c - m - l, a) and binom_mod2(b + c - l, b):
                terms.append((a, b, c))
    return Polynomial._from_set(terms, 3)


def basis_indices(n: int):
    """Index pairs (m, l) with m + l <= n + 1, in the basis list order."""
    return [(m, l) for m in range(n + 2) for l in range(n + 2 - m)]


@lru_cache(maxsize=None)
def closed_basis(n: int) -> GroebnerBasis:
    _check_n(n)
    elems = tuple(_g_closed(n, m, l) for m, l in basis_indices(n))
    return GroebnerBasis(elems, reduced=True)


def overflow_decomposition(n: int, m: int, l: int) -> Polynomial:
    """Right-hand side of g_{m,l} = sum_j C(m-j, j) g_{m-2j, l+j} for m + l = n + 2."""
    _check_n(n)
    if m < 0 or l < 0 or m + l != n + 2:
        raise ValueError(f"need m + l = n + 2, got m={m}, l={l}, n={n}")
    out = Polynomial.zero()
    for j in range(1, m // 2 + 1):
        if binom_mod2(m - j, j):
            out = add(out, _g_closed(n, m - 2 * j, l + j))
    return out


def g_expanded(n: int, m: int, l: int) -> Polynomial:
    """g_{m,l} for m + l <= n + 2, expressed through elements of G."""
    if m + l <= n + 1:
        return g_closed(n, m, l)
    if m + l == n + 2:
        return overflow_decomposition(n, m, l)
    raise ValueError(f"g_{{{m},{l}}} is outside the range m + l <= n + 2")


@dataclass(frozen=True)
class GradedBasis:
    n: int
    degree: int
    monomials: tuple
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {m: i for i, m in enumerate(self.monomials)})

    def __len__(self):
        return len(self.monomials)

    def coordinates(self, p: Polynomial) -> list:
        """Bit vector of a normal-form polynomial of this degree."""
        vec = [0] * len(self.monomials)
        for t in p.term_set:
            if t not in self.index:
                raise ValueError(f"monomial {t} is not in the degree-{self.degree} basis")
            vec[self.index[t]] = 1
        return vec

    def from_coordinates(self, vec) -> Polynomial:
        if len(vec) != len(self.monomials):
            raise ValueError("coordinate vector has the wrong length")
        return Polynomial._from_set((m for m, bit in zip(self.monomials, vec) if bit & 1), 3)


def additive_basis(n: int, d: int) -> GradedBasis:
    _check_n(n)
    monos = []
    if 0 <= d <= 3 * n:
        for c in range(d // 3 + 1):
            for b in range((d - 3 * c) // 2 + 1):
                a = d - 3 * c - 2 * b
                if a + b + c <= n:
                    monos.append((a, b, c))
    monos.sort(key=grlex_key, reverse=True)
    return GradedBasis(n, d, tuple(monos))


class GrassmannRing:
    """H*(G_{3,n}; Z2) presented as Z2[w1,w2,w3] / I_{3,n}.

    Use ``GrassmannRing.get(n)`` to share one cached instance per n.
    """

    _instances: dict = {}

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        self.dimension = 3 * n
        self.basis = closed_basis(n)
        self._g = {ml: g for ml, g in zip(basis_indices(n), self.basis.elements)}
        self._mono_nf = {}
        self._graded = {d: additive_basis(n, d) for d in range(3 * n + 1)}

    @classmethod
    def get(cls, n: int) -> "GrassmannRing":
        ring = cls._instances.get(n)
        if ring is None:
            ring = cls._instances[n] = cls(n)
        return ring

    def __repr__(self):
        return f"GrassmannRing(n={self.n})"

    def graded_basis(self, d: int) -> GradedBasis:
        if 0 <= d <= self.dimension:
            return self._graded[d]
        return GradedBasis(self.n, d, ())

    def _divisor(self, t):
        # O(1) pick of an element of G whose leading term divides t
        n = self.n
        m = min(t[1], n + 1)
        l = min(t[2], n + 1 - m)
        return (n + 1 - m - l, m, l), self._g[(m, l)]

    def _reduce_monomial(self, t) -> frozenset:
        cached = self._mono_nf.get(t)
        if cached is not None:
            return cached
        n, top = self.n, self.dimension
        current = {t}
        heap = [tuple(-x for x in grlex_key(t)) + (t,)]
        out = []
        while heap:
            u = heapq.heappop(heap)[-1]
            if u not in current:
                continue
            current.discard(u)
            if sum(u) <= n:
                out.append(u)
                continue
            lt, g = self._divisor(u)
            q = (u[0] - lt[0], u[1] - lt[1], u[2] - lt[2])
            for s in g.term_set:
                if s == lt:
                    continue
                v = (q[0] + s[0], q[1] + s[1], q[2] + s[2])
                if v in current:
                    current.discard(v)
                elif v[0] + 2 * v[1] + 3 * v[2] <= top:
                    current.add(v)
                    heapq.heappush(heap, tuple(-x for x in grlex_key(v)) + (v,))
        result = frozenset(out)
        self._mono_nf[t] = result
        return result

    def nf(self, p: Polynomial) -> Polynomial:
        if p.arity != 3:
            raise ValueError("cohomology classes need arity 3")
        acc = set()
        top = self.dimension
        for t in p.term_set:
            if t[0] + 2 * t[1] + 3 * t[2] > top:
                continue
            if t[0] + t[1] + t[2] <= self.n:
                acc ^= {t}
            else:
                acc ^= self._reduce_monomial(t)
        return Polynomial._from_set(acc, 3)

    def mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        from .gf2poly import mul_truncated
        return self.nf(mul_truncated(p, q, self.dimension))

    def pow(self, p: Polynomial, e: int) -> Polynomial:
        return self.nf(pow_truncated(p, e, self.dimension))

    def coordinates(self, p: Polynomial, d: int) -> list:
        return self.graded_basis(d).coordinates(self.nf(p).degree_part(d))


def cohomology_nf(ring: GrassmannRing, p: Polynomial) -> Polynomial:
    return ring.nf(p)


def q_binomial(a: int, b: int) -> list:
    """Coefficients of the Gaussian binomial [a choose b]_q, lowest degree first."""
    if b < 0 or b > a:
        return [0]
    num = [1]
    den = [1]
    for i in range(b):
        num = _int_poly_mul(num, _one_minus_q_pow(a - i))
        den = _int_poly_mul(den, _one_minus_q_pow(i + 1))
    return _int_poly_exact_div(num, den)


def _one_minus_q_pow(k):
    p = [0] * (k + 1)
    p[0] = 1
    p[k] -= 1
    return p


def _int_poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _int_poly_exact_div(num, den):
    num = list(num)
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        coeff, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        quot[i] = coeff
        for j, d in enumerate(den):
            num[i + j] -= coeff * d
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    while len(quot) > 1 and quot[-1] == 0:
        quot.pop()
    return quot


def betti_numbers(n: int) -> list:
    _check_n(n)
    return [len(additive_basis(n, d)) for d in range(3 * n + 1)]


def poincare_check(n: int) -> bool:
    dims = betti_numbers(n)
    coeffs = q_binomial(n + 3, 3)
    coeffs = coeffs + [0] * (len(dims) - len(coeffs))
    return dims == coeffs and sum(dims) == math.comb(n + 3, 3)


def height(ring: GrassmannRing, p: Polynomial):
    """Largest h with p^h nonzero in cohomology; ``math.inf`` for units."""
    x = ring.nf(p)
    if x.is_zero():
        raise ValueError("height is undefined for a class that reduces to zero")
    if (0, 0, 0) in x.term_set:
        return math.inf
    h, power = 1, x
    while True:
        nxt = ring.mul(power, x)
        if nxt.is_zero():
            return h
        h, power = h + 1, nxt


@dataclass
class RecurrenceReport:
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name, indices, holds):
        self.checked += 1
        if not holds:
            self.failures.append((name, indices))


def _wpow(a, b, c):
    return Polynomial.monomial(a, b, c)


def recurrence_check(n: int) -> RecurrenceReport:
    """Machine-check the recurrences and S-polynomial presentations of G.

    Participants g_{m,l} with m + l = n + 2 are replaced by their expansion
    in elements of G.
    """
    _check_n(n)
    rep = RecurrenceReport(n)
    g = lambda m, l: g_expanded(n, m, l)  # noqa: E731
    top = n + 2

    for m in range(top + 1):
        for l in range(top + 1 - m):
            if m + l + 2 <= top:
                lhs = g(m + 2, l)
                rhs = add(add(g(m, l + 1), mul(W2, g(m, l))), mul(W1, g(m + 1, l)))
                rep.record("rec-m+2", (m, l), lhs == rhs)
            if m + l + 2 <= top:
                lhs = g(m + 1, l + 1)
                rhs = add(mul(W3, g(m, l)), mul(W1, g(m, l + 1)))
                rep.record("rec-w3", (m, l), lhs == rhs)
            if m >= 1 and m + l + 1 <= top:
                lhs = g(m - 1, l + 2)
                rhs = add(mul(W3, g(m, l)), mul(W2, g(m - 1, l + 1)))
                rep.record("rec-l+2", (m, l), lhs == rhs)

    for m, l in basis_indices(n):
        if m + l == n + 2:
            continue
        base = g_closed(n, m, l)
        for r in range(1, n + 2 - m - l):
            lhs = s_polynomial(base, g_closed(n, m + r, l))
            rhs = Polynomial.zero()
            for i in range(r):
                rhs = add(rhs, mul(_wpow(i, r - 1 - i, 0), add(g(m + 2 + i, l), g(m + i, l + 1))))
            rep.record("S-a", (m, l, r), lhs == rhs)
        for s in range(1, n + 2 - m - l):
            lhs = s_polynomial(base, g_closed(n, m, l + s))
            rhs = Polynomial.zero()
            for j in range(s):
                rhs = add(rhs, mul(_wpow(j, 0, s - 1 - j), g(m + 1, l + 1 + j)))
            rep.record("S-b", (m, l, s), lhs == rhs)
        for s in range(1, m + 1):
            lhs = s_polynomial(base, g_closed(n, m - s, l + s))
            rhs = Polynomial.zero()
            for j in range(s):
                rhs = add(rhs, mul(_wpow(0, j, s - 1 - j), g(m - 1 - j, l + 2 + j)))
            rep.record("S-c", (m, l, s), lhs == rhs)

    for m, l in basis_indices(n):
        base = g_closed(n, m, l)
        for r in range(n + 2):
            for s in range(n + 2):
                # two-parameter family, shifted up in both indices
                if 0 < r + s and m + l + r + s <= n + 1:
                    lhs = s_polynomial(base, g_closed(n, m + r, l + s))
                    rhs = Polynomial.zero()
                    for i in range(r):
                        rhs = add(rhs, mul(_wpow(s + i, r - 1 - i, 0),
                                           add(g(m + 2 + i, l + s), g(m + i, l + s + 1))))
                    for j in range(s):
                        rhs = add(rhs, mul(_wpow(j, r, s - 1 - j), g(m + 1, l + 1 + j)))
                    rep.record("P-a", (m, l, r, s), lhs == rhs)
                if s == 0 or l < s:
                    continue
                if r >= s and m + r + l - s <= n + 1:
                    lhs = s_polynomial(base, g_closed(n, m + r, l - s))
                    rhs = Polynomial.zero()
                    for i in range(r - s):
                        rhs = add(rhs, mul(_wpow(i, r - 1 - i, 0), add(g(m + 2 + i, l), g(m + i, l + 1))))
                    for j in range(s):
                        rhs = add(rhs, mul(_wpow(r - s, j, s - 1 - j), g(m + r - 1 - j, l - s + 2 + j)))
                    rep.record("P-b", (m, l, r, s), lhs == rhs)
                if r < s:
                    lhs = s_polynomial(base, g_closed(n, m + r, l - s))
                    rhs = Polynomial.zero()
                    for i in range(s - r):
                        rhs = add(rhs, mul(_wpow(i, r, s - r - 1 - i), g(m + 1, l - s + r + 1 + i)))
                    for j in range(r):
                        rhs = add(rhs, mul(_wpow(0, j, s - 1 - j), g(m + r - 1 - j, l - s + 2 + j)))
                    rep.record("P-c", (m, l, r, s), lhs == rhs)

    for m in range(n + 3):
        l = n + 2 - m
        rep.record("overflow", (m, l), overflow_decomposition(n, m, l) == g_closed(n, m, l))

    g00, g10, g20 = g_closed(n, 0, 0), g_closed(n, 1, 0), g_closed(n, 2, 0)
    rep.record("dual-n+1", (0, 0), dual_class(3, n, n + 1) == g00)
    rep.record("dual-n+2", (1, 0), dual_class(3, n, n + 2) == add(mul(W1, g00), g10))
    rep.record("dual-n+3", (2, 0), dual_class(3, n, n + 3) == add(mul(W1 * W1, g00), g20))
    return rep
