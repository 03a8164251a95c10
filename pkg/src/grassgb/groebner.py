"""Groebner-basis machinery over GF(2) under grlex.

Division always tracks cofactors, so every reduction doubles as a
checkable certificate ``p = sum(q_i * f_i) + r``.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .gf2poly import (
    Polynomial,
    add,
    add_all,
    grlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mul,
)


class BuchbergerBudgetExceeded(RuntimeError):
    """Raised when Buchberger's pair queue is not exhausted within the budget."""


def _neg_key(m):
    return tuple(-x for x in grlex_key(m))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    reduced: bool = False
    leading_terms: tuple = field(init=False)

    def __post_init__(self):
        elems = tuple(self.elements)
        if any(g.is_zero() for g in elems):
            raise ValueError("a Groebner basis cannot contain the zero polynomial")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "leading_terms", tuple(g.leading_term() for g in elems))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def is_reduced(self) -> bool:
        """Check the reducedness invariant directly (independent of the flag)."""
        lts = self.leading_terms
        if len(set(lts)) != len(lts):
            return False
        for i, g in enumerate(self.elements):
            for j, lt in enumerate(lts):
                if i != j and any(mono_divides(lt, t) for t in g.term_set):
                    return False
        return True


@dataclass(frozen=True)
class DivisionResult:
    normal_form: Polynomial
    cofactors: tuple

    def certificate_holds(self, p: Polynomial, divisors) -> bool:
        """``p == sum(cofactor_i * divisor_i) + normal_form`` exactly."""
        total = add_all((mul(q, f) for q, f in zip(self.cofactors, divisors)), p.arity)
        return add(total, self.normal_form) == p


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial is undefined")
    lf, lg = f.leading_term(), g.leading_term()
    lcm = mono_lcm(lf, lg)
    return add(_mono_times(mono_div(lcm, lf), f), _mono_times(mono_div(lcm, lg), g))


def _mono_times(m, p: Polynomial) -> Polynomial:
    return Polynomial._from_set((tuple(x + y for x, y in zip(m, t)) for t in p.term_set), p.arity)


def _divisor_finder(lts):
    cache = {}
    min_deg = min(sum(lt) for lt in lts)

    def find(t):
        if sum(t) < min_deg:
            return None
        if t not in cache:
            cache[t] = next((i for i, lt in enumerate(lts) if mono_divides(lt, t)), None)
        return cache[t]

    return find


def divide(p: Polynomial, divisors, cofactors: bool = True) -> DivisionResult:
    """Multivariate division of ``p`` by an ordered list of divisors.

    The grlex-greatest reducible term is always eliminated first, using the
    first divisor (in list order) whose leading term divides it, so the
    remainder is fully reduced.
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    if any(f.is_zero() for f in divisors):
        raise ValueError("zero polynomial in divisor list")
    lts = [f.leading_term() for f in divisors]
    find = _divisor_finder(lts)

    current = set(p.term_set)
    heap = [(_neg_key(t), t) for t in current]
    heapq.heapify(heap)
    remainder = []
    quotients = [set() for _ in divisors] if cofactors else None
    while heap:
        _, t = heapq.heappop(heap)
        if t not in current:
            continue
        i = find(t)
        if i is None:
            current.discard(t)
            remainder.append(t)
            continue
        q = mono_div(t, lts[i])
        if cofactors:
            quotients[i] ^= {q}
        for s in divisors[i].term_set:
            u = tuple(x + y for x, y in zip(q, s))
            if u in current:
                current.discard(u)
            else:
                current.add(u)
                heapq.heappush(heap, (_neg_key(u), u))
    nf = Polynomial._from_set(remainder, p.arity)
    cof = tuple(Polynomial._from_set(qs, p.arity) for qs in quotients) if cofactors else ()
    return DivisionResult(nf, cof)


def normal_form(p: Polynomial, divisors) -> Polynomial:
    return divide(p, divisors, cofactors=False).normal_form


def is_groebner(basis, with_certificates: bool = False) -> bool:
    """True iff every pairwise S-polynomial divides to zero modulo ``basis``.

    With ``with_certificates`` each division is also checked as an exact
    identity with no degree inflation in the cofactor terms.
    """
    elems = list(basis)
    if any(g.is_zero() for g in elems):
        raise ValueError("zero element in basis")
    for f, g in itertools.combinations(elems, 2):
        s = s_polynomial(f, g)
        if s.is_zero():
            continue
        res = divide(s, elems, cofactors=with_certificates)
        if not res.normal_form.is_zero():
            return False
        if with_certificates and not _certificate_ok(s, elems, res):
            return False
    return True


def _certificate_ok(p, divisors, res: DivisionResult) -> bool:
    if not res.certificate_holds(p, divisors):
        return False
    top = grlex_key(p.leading_term()) if p else None
    for q, f in zip(res.cofactors, divisors):
        if q.is_zero():
            continue
        lt = tuple(x + y for x, y in zip(q.leading_term(), f.leading_term()))
        if top is None or grlex_key(lt) > top:
            return False
    return True


def ideal_membership(p: Polynomial, basis) -> bool:
    if p.is_zero():
        return True
    return normal_form(p, list(basis)).is_zero()


def buchberger(generators, chain_criterion: bool = False, max_pairs: int = 1_000_000) -> GroebnerBasis:
    """Buchberger's algorithm with the normal selection strategy.

    Pairs with coprime leading terms are skipped; Buchberger's chain
    criterion is applied too when ``chain_criterion`` is set.
    """
    basis = [g for g in generators if not g.is_zero()]
    if not basis:
        raise ValueError("need at least one nonzero generator")
    lts = [g.leading_term() for g in basis]
    pending = set()
    heap = []

    def push(i, j):
        lcm = mono_lcm(lts[i], lts[j])
        pending.add((i, j))
        heapq.heappush(heap, (grlex_key(lcm), i, j))

    for i, j in itertools.combinations(range(len(basis)), 2):
        push(i, j)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise BuchbergerBudgetExceeded(f"pair budget {max_pairs} exhausted")
        li, lj = lts[i], lts[j]
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if chain_criterion and _chain_skip(i, j, lts, pending):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h.is_zero():
            continue
        basis.append(h)
        lts.append(h.leading_term())
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return GroebnerBasis(tuple(basis), reduced=False)


def _chain_skip(i, j, lts, pending) -> bool:
    lcm = mono_lcm(lts[i], lts[j])
    for k, lt in enumerate(lts):
        if k in (i, j) or not mono_divides(lt, lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def auto_reduce(basis) -> GroebnerBasis:
    """Interreduce until every element is fully reduced modulo the others.

    On a Groebner basis this yields the (unique) reduced Groebner basis.
    The generated ideal is preserved for any input.
    """
    elems = [g for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for idx in range(len(elems)):
            f = elems[idx]
            others = elems[:idx] + elems[idx + 1:]
            h = normal_form(f, others) if others else f
            if h != f:
                changed = True
                if h.is_zero():
                    del elems[idx]
                else:
                    elems[idx] = h
                break
    elems.sort(key=lambda g: grlex_key(g.leading_term()), reverse=True)
    return GroebnerBasis(tuple(elems), reduced=True)
