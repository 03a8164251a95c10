"""Linear algebra over GF(2) on graded pieces of H*(G_{3,n}; Z2).

Operators such as (Sq^2 + w2(nu)) Sq^1 are small expression trees, so one
declaration drives both pointwise evaluation and the matrix of the map
between two graded pieces. The lemma registry checks the operator values
and kernel/image conditions used by the lifting arguments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .gf2poly import Polynomial, cohom_degree, format_poly, parse
from .grassmann import GradedBasis, GrassmannRing
from .normal_bundle import normal_total_class
from .steenrod import sq


class HypothesisError(ValueError):
    """The lemma's congruence hypothesis on n is not satisfied."""


class UnknownLemma(KeyError):
    pass


# ---------------------------------------------------------------- operators

@dataclass(frozen=True)
class _Sq:
    i: int

    @property
    def shift(self):
        return self.i

    def __str__(self):
        return f"Sq{self.i}"


@dataclass(frozen=True)
class _Mul:
    cls: Polynomial
    degree: int

    @property
    def shift(self):
        return self.degree

    def __str__(self):
        return f"({format_poly(self.cls)})"


class OperatorExpr:
    """A GF(2) sum of composition chains of Sq^i and multiplications.

    ``a * b`` means "apply b, then a"; ``a + b`` is the pointwise sum.
    Chains are stored in written order.
    """

    __slots__ = ("chains", "shift")

    def __init__(self, chains, shift=None):
        counts = {}
        for ch in chains:
            ch = tuple(ch)
            counts[ch] = counts.get(ch, 0) ^ 1
        self.chains = tuple(ch for ch, c in counts.items() if c)
        shifts = {sum(p.shift for p in ch) for ch in self.chains}
        if len(shifts) > 1:
            raise ValueError(f"inhomogeneous operator: degree shifts {sorted(shifts)}")
        if shifts:
            shift = shifts.pop()
        self.shift = shift

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        if self.shift is not None and other.shift is not None and self.shift != other.shift:
            raise ValueError(f"inhomogeneous operator: degree shifts {self.shift} and {other.shift}")
        shift = self.shift if self.shift is not None else other.shift
        return OperatorExpr(self.chains + other.chains, shift)

    def __mul__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        shift = None
        if self.shift is not None and other.shift is not None:
            shift = self.shift + other.shift
        return OperatorExpr([a + b for a in self.chains for b in other.chains], shift)

    def __repr__(self):
        if not self.chains:
            return "0"
        return " + ".join("*".join(str(p) for p in ch) if ch else "id" for ch in self.chains)


def SQ(i: int) -> OperatorExpr:
    if i < 0:
        raise ValueError("Steenrod square index must be nonnegative")
    return OperatorExpr([()] if i == 0 else [(_Sq(i),)], 0 if i == 0 else i)


def MUL(cls: Polynomial, degree: int = None) -> OperatorExpr:
    """Multiplication by a homogeneous class; pass ``degree`` when cls may be 0."""
    if degree is None:
        if cls.is_zero():
            raise ValueError("degree is required for the zero class")
        degree = cohom_degree(cls.leading_term())
    if not cls.is_zero() and not (cls.is_homogeneous() and cohom_degree(cls.leading_term()) == degree):
        raise ValueError(f"class {format_poly(cls)} is not homogeneous of degree {degree}")
    if cls.is_zero():
        return OperatorExpr([], degree)
    if degree == 0:
        return OperatorExpr([()], 0)
    return OperatorExpr([(_Mul(cls, degree),)], degree)


IDENTITY = SQ(0)


def apply(ring: GrassmannRing, expr: OperatorExpr, p: Polynomial) -> Polynomial:
    x = ring.nf(p)
    out = Polynomial.zero()
    for ch in expr.chains:
        y = x
        for prim in reversed(ch):
            if y.is_zero():
                break
            if isinstance(prim, _Sq):
                y = sq(ring, prim.i, y)
            else:
                y = ring.mul(prim.cls, y)
        out = out + y
    return out


# ------------------------------------------------------------ linear algebra

@dataclass
class Gf2Matrix:
    """Column j is the image of source basis vector j in target coordinates."""
    data: np.ndarray
    source: GradedBasis = None
    target: GradedBasis = None

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.uint8) & 1
        if self.data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")

    @property
    def shape(self):
        return self.data.shape

    def is_zero(self) -> bool:
        return not self.data.any()

    def apply(self, vec) -> list:
        v = np.asarray(vec, dtype=np.uint8) & 1
        return [int(x) for x in (self.data.astype(np.int64) @ v) & 1]

    def rank(self) -> int:
        return rank(self)

    def kernel(self) -> list:
        return kernel(self)

    def image(self) -> list:
        return image(self)


def _rref(mat: np.ndarray):
    m = (np.array(mat, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        m[others] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def _as_array(m) -> np.ndarray:
    return m.data if isinstance(m, Gf2Matrix) else np.asarray(m, dtype=np.uint8) & 1


def rank(m) -> int:
    return len(_rref(_as_array(m))[1])


def kernel(m) -> list:
    """Basis of the null space, one bit-vector per free column."""
    a = _as_array(m)
    red, pivots = _rref(a)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            if red[row, f]:
                v[pc] = 1
        basis.append(v)
    return basis


def image(m) -> list:
    """Basis of the column space (the pivot columns of the matrix)."""
    a = _as_array(m)
    _, pivots = _rref(a)
    return [[int(x) for x in a[:, c]] for c in pivots]


def span_rank(vectors, length: int = None) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    if length is not None and any(len(v) != length for v in vectors):
        raise ValueError("vector length mismatch")
    return rank(np.array(vectors, dtype=np.uint8))


def subspace_contained(a, b) -> bool:
    """True iff span(a) is a subspace of span(b)."""
    a, b = [list(v) for v in a], [list(v) for v in b]
    if not a:
        return True
    lengths = {len(v) for v in a + b}
    if len(lengths) != 1:
        raise ValueError("vector length mismatch")
    return span_rank(b) == span_rank(b + a)


def in_span(v, vectors) -> bool:
    return subspace_contained([v], vectors) if vectors else not any(v)


def operator_matrix(ring: GrassmannRing, expr: OperatorExpr, source_degree: int) -> Gf2Matrix:
    shift = expr.shift or 0
    if source_degree < 0 or source_degree + shift > ring.dimension:
        raise ValueError(f"degrees {source_degree} -> {source_degree + shift} outside [0, {ring.dimension}]")
    src = ring.graded_basis(source_degree)
    tgt = ring.graded_basis(source_degree + shift)
    data = np.zeros((len(tgt), len(src)), dtype=np.uint8)
    for j, mono in enumerate(src.monomials):
        img = apply(ring, expr, Polynomial._from_set([mono], 3))
        data[:, j] = tgt.coordinates(img)
    return Gf2Matrix(data, src, tgt)


def is_surjective(m: Gf2Matrix) -> bool:
    return rank(m) == m.shape[0]


# ------------------------------------------------------------------ registry

@dataclass
class CheckResult:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class LemmaReport:
    lemma_id: str
    n: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "n": self.n,
            "passed": self.passed,
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


@dataclass(frozen=True)
class LemmaSpec:
    lemma_id: str
    modulus: int
    residue: int
    min_n: int
    summary: str
    run: Callable

    def applies(self, n: int) -> bool:
        return n >= self.min_n and n % self.modulus == self.residue

    @property
    def hypothesis(self) -> str:
        return f"n = {self.residue} mod {self.modulus}, n >= {self.min_n}"


_FIELD = re.compile(r"\{n([+-]\d+)?\}")


class _Ctx:
    """Per-n helpers shared by the lemma checks."""

    def __init__(self, ring: GrassmannRing, report: LemmaReport):
        self.ring = ring
        self.n = ring.n
        self.report = report
        self.table = normal_total_class(ring.n)

    def cls(self, text: str) -> Polynomial:
        n = self.n
        return self.ring.nf(parse(_FIELD.sub(lambda m: str(n + int(m.group(1) or 0)), text)))

    def nu(self, i: int) -> OperatorExpr:
        return MUL(self.table[i], i)

    def nu_cls(self, i: int) -> Polynomial:
        return self.table[i]

    def record(self, label, passed, detail=""):
        self.report.checks.append(CheckResult(label, bool(passed), detail))

    def value(self, op_name: str, op: OperatorExpr, arg: str, expected: str):
        got = apply(self.ring, op, self.cls(arg))
        want = self.cls(expected)
        self.record(f"{op_name}({arg}) = {expected}", got == want, f"got {format_poly(got)}")
        return got

    def equal(self, label: str, got: Polynomial, expected: str):
        want = self.cls(expected)
        self.record(label, got == want, f"got {format_poly(got)}")

    def nonzero(self, text: str):
        self.record(f"{text} != 0", not self.cls(text).is_zero())

    def vanish_from(self, start: int):
        bad = [i for i in range(max(start, 0), 3 * self.n + 1) if not self.table[i].is_zero()]
        self.record(f"w_i(nu) = 0 for i >= {start}", not bad, f"nonzero in degrees {bad}" if bad else "")

    def matrix(self, op: OperatorExpr, degree: int) -> Gf2Matrix:
        return operator_matrix(self.ring, op, degree)

    def vec(self, text: str, degree: int) -> list:
        return self.ring.coordinates(self.cls(text), degree)


def _sq2_nu(c: _Ctx) -> OperatorExpr:
    return SQ(2) + c.nu(2)


def _D(c: _Ctx) -> OperatorExpr:
    return SQ(2) + MUL(c.ring.mul(c.nu_cls(1), c.nu_cls(1)), 2) + c.nu(2)


def _F1(c: _Ctx) -> OperatorExpr:
    return _D(c) * SQ(1)


def _F2(c: _Ctx) -> OperatorExpr:
    r = c.ring
    w1, w2, w3, w4 = (c.nu_cls(i) for i in range(1, 5))
    a = SQ(4) + MUL(r.mul(w2, w2), 4) + MUL(w4, 4)
    b = MUL(r.nf(r.mul(w1, w2) + w3), 3)
    return a * SQ(1) + b * SQ(2) + (MUL(r.mul(w1, w1), 2) + MUL(w2, 2)) * SQ(3)


def _F3(c: _Ctx) -> OperatorExpr:
    r = c.ring
    w1, w2, w3, w4 = (c.nu_cls(i) for i in range(1, 5))
    a = SQ(4) + MUL(r.mul(w2, w2), 4) + MUL(w4, 4)
    b = MUL(r.nf(r.mul(w1, w2) + w3), 3)
    return a * SQ(2) + b * SQ(3)


def _l11(c):
    n = c.n
    c.vanish_from(3 * n - 2)
    c.equal("w2(nu) = w2", c.nu_cls(2), "w2")


def _l21(c):
    n = c.n
    c.equal(f"w_{3 * n - 4}(nu) = 0", c.nu_cls(3 * n - 4), "0")
    c.equal(f"w_{3 * n - 2}(nu) = 0", c.nu_cls(3 * n - 2), "0")
    c.equal("w2(nu) = w1^2 + w2", c.nu_cls(2), "w1^2 + w2")


def _l22(c):
    op = _sq2_nu(c)
    c.value("(Sq2+w2(nu))", op, "w1*w3^{n-2}", "w1*w2*w3^{n-2} + w3^{n-1}")
    c.value("(Sq2+w2(nu))", op, "w2^2*w3^{n-3}", "w2^3*w3^{n-3}")


def _l23(c):
    n = c.n
    c.record(f"Sq1 on H^{3 * n - 2} is zero", c.matrix(SQ(1), 3 * n - 2).is_zero())
    c.value("Sq1", SQ(1), "w1*w3^{n-1}", "0")
    c.value("Sq1", SQ(1), "w2^2*w3^{n-2}", "0")


def _l24(c):
    op = _sq2_nu(c)
    c.value("(Sq2+w2(nu))", op, "w1*w2*w3^{n-2}", "w2*w3^{n-1}")
    c.nonzero("w2*w3^{n-1}")
    c.value("(Sq2+w2(nu))", op, "w2^3*w3^{n-3}", "0")
    c.value("(Sq2+w2(nu))", op, "w3^{n-1}", "w2*w3^{n-1}")


def _l25(c):
    c.value("Sq1", SQ(1), "w1*w2*w3^{n-2}", "w1*w3^{n-1}")
    c.value("Sq1", SQ(1), "w2^3*w3^{n-3}", "w2^2*w3^{n-2}")
    c.value("Sq1", SQ(1), "w3^{n-1}", "w1*w3^{n-1}")


def _l26(c):
    c.value("Sq2", SQ(2), "w1*w2*w3^{n-2} + w3^{n-1}", "w2*w3^{n-1}")


def _ll2(c):
    c.vanish_from(3 * c.n - 8)
    c.equal("w2(nu) = 0", c.nu_cls(2), "0")
    c.equal("w4(nu) = w2^2", c.nu_cls(4), "w2^2")


def _ll3(c):
    c.value("Sq2", SQ(2), "w1^2*w2^2*w3^{n-4}",
            "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3} + w2^4*w3^{n-4} + w2*w3^{n-2}")
    c.value("Sq2", SQ(2), "w1*w2*w3^{n-3}", "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3}")
    c.value("Sq2", SQ(2), "w3^{n-2}", "w1^2*w3^{n-2} + w2*w3^{n-2}")


def _ll4(c):
    c.value("Sq2", SQ(2), "w1^2*w3^{n-2}", "w1*w3^{n-1} + w2^2*w3^{n-2}")
    for arg in ("w1*w2^2*w3^{n-3}", "w2^4*w3^{n-4}", "w2*w3^{n-2}"):
        c.value("Sq2", SQ(2), arg, "w1*w3^{n-1}")


def _ll5(c):
    c.value("Sq1", SQ(1), "w1*w2*w3^{n-2}", "w2^2*w3^{n-2}")
    c.value("Sq1", SQ(1), "w2^3*w3^{n-3}", "0")
    c.value("Sq1", SQ(1), "w3^{n-1}", "0")


def _ll6(c):
    x = "w1*w2^4*w3^{n-5}"
    c.value("Sq2Sq1", SQ(2) * SQ(1), x, "w3^{n-1}")
    c.value("Sq2", SQ(2), x, "0")
    c.value("(Sq4+w2^2)", SQ(4) + MUL(c.cls("w2^2")), x, "0")


def _ll7(c):
    c.value("Sq1", SQ(1), "w1*w2^2*w3^{n-3}", "w2^3*w3^{n-3} + w3^{n-1}")
    c.value("Sq1", SQ(1), "w2*w3^{n-2}", "w3^{n-1}")
    c.value("Sq2", SQ(2), "w1*w2^2*w3^{n-3} + w2*w3^{n-2}", "0")


def _ll8(c):
    c.value("Sq2", SQ(2), "w1*w3^{n-2}", "w1*w2*w3^{n-2}")


def _l27(c):
    c.vanish_from(3 * c.n - 14)
    c.equal("w1(nu) = w1", c.nu_cls(1), "w1")
    c.equal("w2(nu) = w1^2 + w2", c.nu_cls(2), "w1^2 + w2")
    c.equal("w3(nu) = w1^3 + w3", c.nu_cls(3), "w1^3 + w3")
    c.equal("w4(nu) = w1^4 + w1^2*w2", c.nu_cls(4), "w1^4 + w1^2*w2")


def _l28(c):
    op = _F1(c)
    for args, out in (
        (("w1^3*w2*w3^{n-4}", "w1^2*w3^{n-3}"), "w1^2*w3^{n-2} + w1*w2^2*w3^{n-3}"),
        (("w1*w2^5*w3^{n-6}", "w2^4*w3^{n-5}"), "w2^4*w3^{n-4}"),
        (("w2^7*w3^{n-7}", "w2*w3^{n-3}"), "w2*w3^{n-2}"),
    ):
        for arg in args:
            c.value("F1", op, arg, out)


def _l29(c):
    op = _D(c)
    for arg in ("w1^2*w3^{n-2}", "w1*w2^2*w3^{n-3}"):
        c.value("D", op, arg, "w2^2*w3^{n-2}")
    c.nonzero("w2^2*w3^{n-2}")
    for arg in ("w2^4*w3^{n-4}", "w2*w3^{n-2}"):
        c.value("D", op, arg, "0")


def _l30(c):
    op = _F2(c)
    c.value("F2", op, "w1^3*w2*w3^{n-4} + w1^2*w3^{n-3}", "w1*w3^{n-1} + w2^2*w3^{n-2}")
    c.value("F2", op, "w1*w2^5*w3^{n-6} + w2^4*w3^{n-5}", "0")
    c.value("F2", op, "w2^7*w3^{n-7} + w2*w3^{n-3}", "w2^2*w3^{n-2}")


def _l31(c):
    c.value("F3", _F3(c), "w1*w2^5*w3^{n-6} + w2^4*w3^{n-5}", "w2*w3^{n-1}")
    c.nonzero("w2*w3^{n-1}")


def _l32(c):
    op = _D(c)
    c.value("H", op, "w1^2*w2*w3^{n-3}", "w2^3*w3^{n-3} + w3^{n-1}")
    c.value("H", op, "w1*w3^{n-2}", "w1*w2*w3^{n-2}")
    c.value("H", op, "w2^2*w3^{n-3}", "w3^{n-1}")


def _l33(c):
    c.value("Sq1", SQ(1), "w2^3*w3^{n-3}", "w2^2*w3^{n-2}")
    c.value("Sq1", SQ(1), "w3^{n-1}", "w1*w3^{n-1}")


def _lift_0mod4(c):
    n = c.n
    op = _sq2_nu(c)
    c.value("(Sq2+w2(nu))", op, "w3^{n-1}", "w2*w3^{n-1}")
    c.value("Sq1", SQ(1), "w2*w3^{n-1}", "w3^{n}")
    c.record(f"(Sq2+w2(nu)): H^{3 * n - 3} -> H^{3 * n - 1} is onto", is_surjective(c.matrix(op, 3 * n - 3)))
    c.record(f"Sq1: H^{3 * n - 1} -> H^{3 * n} is onto", is_surjective(c.matrix(SQ(1), 3 * n - 1)))


def _lift_6mod8(c):
    n = c.n
    op = _sq2_nu(c)
    ker = kernel(c.matrix(op, 3 * n - 3))
    img = image(c.matrix(op, 3 * n - 5))
    c.record("ker(Sq2+w2(nu) on 3n-3) in im(Sq2+w2(nu) from 3n-5)", subspace_contained(ker, img))
    c.value("Sq1", SQ(1), "w1*w2*w3^{n-2} + w3^{n-1}", "0")
    c.record(f"Sq1: H^{3 * n - 3} -> H^{3 * n - 2} is onto", is_surjective(c.matrix(SQ(1), 3 * n - 3)))


def _lift_1mod8(c):
    n = c.n
    d = 3 * n - 4
    basis = [c.vec(t, d) for t in ("w1^2*w3^{n-2}", "w1*w2^2*w3^{n-3}", "w2^4*w3^{n-4}", "w2*w3^{n-2}")]
    img = image(c.matrix(SQ(2), 3 * n - 6))
    sums = [[x ^ y for x, y in zip(basis[i], basis[j])] for i in range(4) for j in range(i + 1, 4)]
    total = [sum(col) & 1 for col in zip(*basis)]
    c.record("im(Sq2 from 3n-6) holds all pairwise sums and the total sum",
             all(in_span(v, img) for v in sums + [total]))
    # odd-weight classes are exactly those outside the image; their Sq2 never lies in im Sq1
    sq2 = c.matrix(SQ(2), d)
    sq1_img = image(c.matrix(SQ(1), 3 * n - 3))
    odd = []
    for mask in range(1, 16):
        if bin(mask).count("1") in (1, 3):
            v = [0] * len(basis[0])
            for k in range(4):
                if mask >> k & 1:
                    v = [x ^ y for x, y in zip(v, basis[k])]
            odd.append(v)
    ok = all(not in_span(v, img) and not in_span(sq2.apply(v), sq1_img) for v in odd)
    c.record("Sq2 of classes outside im(Sq2) avoids im(Sq1 from 3n-3)", ok)
    c.record(f"Sq2: H^{d} -> H^{3 * n - 2} is onto", is_surjective(sq2))
    ker_sq1 = kernel(c.matrix(SQ(1), 3 * n - 3))
    witnesses = [c.vec("w3^{n-1}", 3 * n - 3), c.vec("w2^3*w3^{n-3}", 3 * n - 3)]
    c.record("ker(Sq1 on 3n-3) spanned by Sq2Sq1(alpha') and Sq1(beta')",
             subspace_contained(ker_sq1, witnesses))
    combined = image(c.matrix(_sq2_nu(c), 3 * n - 5)) + image(c.matrix(SQ(1), d))
    c.record(f"(Sq2+w2(nu))H^{3 * n - 5} + Sq1 H^{d} = H^{3 * n - 3}",
             span_rank(combined) == len(c.ring.graded_basis(3 * n - 3)))


def _lift_2mod8(c):
    n = c.n
    f1 = c.matrix(_F1(c), 3 * n - 7)
    f2 = c.matrix(_F2(c), 3 * n - 7)
    f3 = c.matrix(_F3(c), 3 * n - 7)
    d = c.matrix(_D(c), 3 * n - 4)
    c.record("ker D in im F1", subspace_contained(kernel(d), image(f1)))
    ker_f1 = kernel(f1)
    c.record(f"F2(ker F1) = H^{3 * n - 2}",
             span_rank([f2.apply(v) for v in ker_f1]) == len(c.ring.graded_basis(3 * n - 2)))
    x = c.vec("w1*w2^5*w3^{n-6} + w2^4*w3^{n-5}", 3 * n - 7)
    c.record("w1*w2^5*w3^{n-6} + w2^4*w3^{n-5} in ker F1 and ker F2, F3 nonzero",
             not any(f1.apply(x)) and not any(f2.apply(x)) and any(f3.apply(x)))
    c.record(f"H: H^{3 * n - 5} -> H^{3 * n - 3} is onto", is_surjective(c.matrix(_D(c), 3 * n - 5)))
    c.record(f"Sq1: H^{3 * n - 3} -> H^{3 * n - 2} is onto", is_surjective(c.matrix(SQ(1), 3 * n - 3)))


_REGISTRY = {}


def _register(lemma_id, modulus, residue, min_n, summary, run):
    _REGISTRY[lemma_id] = LemmaSpec(lemma_id, modulus, residue, min_n, summary, run)


_register("l11", 4, 0, 4, "vanishing of w_i(nu), i >= 3n-2, and w2(nu)", _l11)
_register("l21", 8, 6, 6, "w_{3n-4}(nu) = w_{3n-2}(nu) = 0 and w2(nu)", _l21)
_register("l22", 8, 6, 6, "(Sq2+w2(nu)) on H^{3n-5}", _l22)
_register("l23", 8, 6, 6, "Sq1 on H^{3n-2} is zero", _l23)
_register("l24", 8, 6, 6, "(Sq2+w2(nu)) on H^{3n-3}", _l24)
_register("l25", 8, 6, 6, "Sq1 on H^{3n-3}", _l25)
_register("l26", 8, 6, 6, "Sq2(w1 w2 w3^{n-2} + w3^{n-1})", _l26)
_register("ll2", 8, 1, 9, "vanishing of w_i(nu), i >= 3n-8, w2(nu), w4(nu)", _ll2)
_register("ll3", 8, 1, 9, "Sq2 on H^{3n-6}", _ll3)
_register("ll4", 8, 1, 9, "Sq2 on H^{3n-4}", _ll4)
_register("ll5", 8, 1, 9, "Sq1 on H^{3n-3}", _ll5)
_register("ll6", 8, 1, 9, "operators on w1 w2^4 w3^{n-5}", _ll6)
_register("ll7", 8, 1, 9, "Sq1 and Sq2 on w1 w2^2 w3^{n-3}, w2 w3^{n-2}", _ll7)
_register("ll8", 8, 1, 9, "Sq2(w1 w3^{n-2})", _ll8)
_register("l27", 8, 2, 10, "vanishing of w_i(nu), i >= 3n-14, and w1..w4(nu)", _l27)
_register("l28", 8, 2, 10, "F1 on H^{3n-7}", _l28)
_register("l29", 8, 2, 10, "D on H^{3n-4}", _l29)
_register("l30", 8, 2, 10, "F2 on H^{3n-7}", _l30)
_register("l31", 8, 2, 10, "F3 on H^{3n-7}", _l31)
_register("l32", 8, 2, 10, "H on H^{3n-5}", _l32)
_register("l33", 8, 2, 10, "Sq1 on H^{3n-3}", _l33)
_register("lift-0mod4", 4, 0, 4, "surjectivity conditions for n = 0 mod 4", _lift_0mod4)
_register("lift-6mod8", 8, 6, 6, "kernel/image conditions for n = 6 mod 8", _lift_6mod8)
_register("lift-1mod8", 8, 1, 9, "image and span conditions for n = 1 mod 8", _lift_1mod8)
_register("lift-2mod8", 8, 2, 10, "kernel/image conditions for n = 2 mod 8", _lift_2mod8)


def lemma_ids() -> list:
    return list(_REGISTRY)


def lemma_spec(lemma_id: str) -> LemmaSpec:
    try:
        return _REGISTRY[lemma_id]
    except KeyError:
        raise UnknownLemma(lemma_id) from None


def applicable_lemmas(n: int) -> list:
    return [lid for lid, spec in _REGISTRY.items() if spec.applies(n)]


def verify_lemma(ring: GrassmannRing, lemma_id: str) -> LemmaReport:
    spec = lemma_spec(lemma_id)
    if not spec.applies(ring.n):
        raise HypothesisError(f"{lemma_id} requires {spec.hypothesis}; got n={ring.n}")
    report = LemmaReport(lemma_id, ring.n)
    spec.run(_Ctx(ring, report))
    return report
