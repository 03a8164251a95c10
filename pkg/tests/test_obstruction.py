import random

import numpy as np
import pytest

from grassgb.gf2poly import Polynomial, parse
from grassgb.grassmann import GrassmannRing
from grassgb.normal_bundle import normal_total_class
from grassgb.obstruction import (
    IDENTITY,
    MUL,
    SQ,
    HypothesisError,
    OperatorExpr,
    UnknownLemma,
    applicable_lemmas,
    apply,
    image,
    in_span,
    kernel,
    lemma_ids,
    operator_matrix,
    rank,
    subspace_contained,
    verify_lemma,
)
from grassgb.steenrod import sq

REQUIRED_IDS = {"l11", "l21", "l22", "l23", "l24", "l25", "l26", "ll2", "ll3", "ll4", "ll5",
                "ll6", "ll7", "ll8", "l27", "l28", "l29", "l30", "l31", "l32", "l33"}


def cls(ring, text):
    return ring.nf(parse(text))


def nu(n, i):
    return MUL(normal_total_class(n)[i], i)


def operators(n):
    """Every operator the registry uses at this n, rebuilt from public pieces."""
    ring = GrassmannRing.get(n)
    t = normal_total_class(n)
    w1, w2, w3, w4 = (t[i] for i in range(1, 5))
    sq2_nu = SQ(2) + nu(n, 2)
    d = SQ(2) + MUL(ring.mul(w1, w1), 2) + nu(n, 2)
    a = SQ(4) + MUL(ring.mul(w2, w2), 4) + MUL(w4, 4)
    b = MUL(ring.nf(ring.mul(w1, w2) + w3), 3)
    f2 = a * SQ(1) + b * SQ(2) + (MUL(ring.mul(w1, w1), 2) + MUL(w2, 2)) * SQ(3)
    f3 = a * SQ(2) + b * SQ(3)
    return {
        "Sq1": SQ(1), "Sq2": SQ(2), "Sq2Sq1": SQ(2) * SQ(1), "Sq2+w2(nu)": sq2_nu,
        "Sq4+w2^2": SQ(4) + MUL(parse("w2^2")), "D": d, "F1": d * SQ(1), "F2": f2, "F3": f3,
    }


def test_registry_ids():
    assert REQUIRED_IDS <= set(lemma_ids())


def test_operator_algebra():
    assert (SQ(1) + SQ(1)).chains == ()
    assert (SQ(2) * SQ(1)).shift == 3
    with pytest.raises(ValueError):
        SQ(1) + SQ(2)
    with pytest.raises(ValueError):
        MUL(parse("w1 + w2"))
    with pytest.raises(ValueError):
        MUL(Polynomial.zero())
    assert MUL(Polynomial.zero(), 2).shift == 2
    assert isinstance(IDENTITY, OperatorExpr)


def test_composition_order():
    ring = GrassmannRing.get(9)
    x = parse("w1*w2^4*w3^4")
    assert apply(ring, SQ(2) * SQ(1), x) == sq(ring, 2, sq(ring, 1, x))
    assert apply(ring, SQ(2) * SQ(1), x) == ring.nf(parse("w3^8"))


@pytest.mark.parametrize("n", [6, 14])
def test_sq1_zero_on_codim_two(n):
    ring = GrassmannRing.get(n)
    assert operator_matrix(ring, SQ(1), 3 * n - 2).is_zero()


@pytest.mark.parametrize("n", [4, 8])
def test_image_contains_class(n):
    ring = GrassmannRing.get(n)
    m = operator_matrix(ring, SQ(2) + nu(n, 2), 3 * n - 1 - 2)
    target = ring.coordinates(cls(ring, f"w2*w3^{n - 1}"), 3 * n - 1)
    assert in_span(target, image(m))
    assert apply(ring, SQ(2) + nu(n, 2), cls(ring, f"w3^{n - 1}")) == cls(ring, f"w2*w3^{n - 1}")


def test_identity_matrix():
    ring = GrassmannRing.get(5)
    for d in (0, 4, 9, 15):
        m = operator_matrix(ring, IDENTITY, d)
        assert np.array_equal(m.data, np.eye(m.shape[0], dtype=np.uint8))


@pytest.mark.parametrize("size", [1, 3, 6])
def test_kernel_trivial_cases(size):
    zero = np.zeros((2, size), dtype=np.uint8)
    assert len(kernel(zero)) == size
    assert kernel(np.eye(size, dtype=np.uint8)) == []


@pytest.mark.parametrize("n", [10, 18])
def test_kernel_of_d(n):
    ring = GrassmannRing.get(n)
    d = operators(n)["D"]
    deg = 3 * n - 4
    m = operator_matrix(ring, d, deg)
    expected = [ring.coordinates(cls(ring, t.format(a=n - 2, b=n - 3, c=n - 4)), deg)
                for t in ("w1^2*w3^{a} + w1*w2^2*w3^{b}", "w2^4*w3^{c}", "w2*w3^{a}")]
    ker = kernel(m)
    assert subspace_contained(ker, expected) and subspace_contained(expected, ker)
    f1 = operator_matrix(ring, operators(n)["F1"], 3 * n - 7)
    assert subspace_contained(ker, image(f1))


@pytest.mark.parametrize("n", [6, 14])
def test_kernel_in_image_six_mod_8(n):
    ring = GrassmannRing.get(n)
    op = operators(n)["Sq2+w2(nu)"]
    ker = kernel(operator_matrix(ring, op, 3 * n - 3))
    img = image(operator_matrix(ring, op, 3 * n - 5))
    assert ker and subspace_contained(ker, img)


def test_subspace_reflexive():
    rng = random.Random(3)
    vecs = [[rng.randint(0, 1) for _ in range(8)] for _ in range(4)]
    assert subspace_contained(vecs, vecs)
    assert subspace_contained([], vecs)


@pytest.mark.parametrize("n", [6, 9, 10])
def test_matrix_pointwise_agreement(n):
    ring = GrassmannRing.get(n)
    rng = random.Random(n)
    for name, op in operators(n).items():
        for deg in rng.sample(range(0, 3 * n - op.shift + 1), 6):
            m = operator_matrix(ring, op, deg)
            src = ring.graded_basis(deg)
            for _ in range(5):
                vec = [rng.randint(0, 1) for _ in range(len(src))]
                p = src.from_coordinates(vec)
                got = apply(ring, op, p)
                assert ring.coordinates(got, deg + op.shift) == m.apply(vec), (name, deg)
            assert rank(m) + len(kernel(m)) == m.shape[1]
            assert rank(m) == len(image(m))


@pytest.mark.parametrize("n", [9, 17])
def test_sq2_image_holds_sums(n):
    ring = GrassmannRing.get(n)
    d = 3 * n - 4
    names = [f"w1^2*w3^{n - 2}", f"w1*w2^2*w3^{n - 3}", f"w2^4*w3^{n - 4}", f"w2*w3^{n - 2}"]
    basis = [ring.coordinates(cls(ring, t), d) for t in names]
    img = image(operator_matrix(ring, SQ(2), 3 * n - 6))
    for i in range(4):
        for j in range(i + 1, 4):
            assert in_span([x ^ y for x, y in zip(basis[i], basis[j])], img)
    assert in_span([sum(col) % 2 for col in zip(*basis)], img)
    for v in basis:
        assert not in_span(v, img)


@pytest.mark.parametrize("n", [6, 14])
def test_kernel_membership_sq1(n):
    ring = GrassmannRing.get(n)
    x = cls(ring, f"w1*w2*w3^{n - 2} + w3^{n - 1}")
    assert sq(ring, 1, x).is_zero()
    assert sq(ring, 1, cls(ring, f"w3^{n - 1}")) == cls(ring, f"w1*w3^{n - 1}")


def _labels(report):
    return {c.label: c.passed for c in report.checks}


def test_verify_l24_example():
    rep = verify_lemma(GrassmannRing.get(6), "l24")
    labels = _labels(rep)
    assert labels["(Sq2+w2(nu))(w1*w2*w3^{n-2}) = w2*w3^{n-1}"]
    assert labels["(Sq2+w2(nu))(w2^3*w3^{n-3}) = 0"]
    assert labels["(Sq2+w2(nu))(w3^{n-1}) = w2*w3^{n-1}"]
    assert labels["w2*w3^{n-1} != 0"]
    assert rep.passed


def test_verify_ll5_example():
    rep = verify_lemma(GrassmannRing.get(9), "ll5")
    assert rep.passed and len(rep.checks) == 3
    ring = GrassmannRing.get(9)
    assert sq(ring, 1, cls(ring, "w1*w2*w3^7")) == cls(ring, "w2^2*w3^7")


def test_verify_l30_example():
    n = 10
    ring = GrassmannRing.get(n)
    rep = verify_lemma(ring, "l30")
    assert rep.passed and len(rep.checks) == 3
    f2 = operators(n)["F2"]
    assert apply(ring, f2, cls(ring, "w1*w2^5*w3^4 + w2^4*w3^5")).is_zero()
    assert apply(ring, f2, cls(ring, "w2^7*w3^3 + w2*w3^7")) == cls(ring, "w2^2*w3^8")


def test_operator_values_cross_check():
    n = 10
    ring = GrassmannRing.get(n)
    f3 = operators(n)["F3"]
    assert apply(ring, f3, cls(ring, "w1*w2^5*w3^4 + w2^4*w3^5")) == cls(ring, "w2*w3^9")
    n = 9
    ring = GrassmannRing.get(n)
    x = cls(ring, "w1*w2^4*w3^4")
    assert apply(ring, operators(n)["Sq4+w2^2"], x).is_zero()
    assert apply(ring, SQ(2), x).is_zero()


@pytest.mark.parametrize("n", [4, 8, 6, 14, 9, 17, 10, 18])
def test_all_applicable_lemmas_pass(n):
    ids = applicable_lemmas(n)
    assert ids
    for lid in ids:
        rep = verify_lemma(GrassmannRing.get(n), lid)
        assert rep.passed, [c for c in rep.checks if not c.passed]


@pytest.mark.parametrize("n,family", [(10, {"l27", "l28", "l29", "l30", "l31", "l32", "l33"}),
                                      (6, {"l21", "l22", "l23", "l24", "l25", "l26"}),
                                      (9, {"ll2", "ll3", "ll4", "ll5", "ll6", "ll7", "ll8"}),
                                      (4, {"l11"})])
def test_applicable_families(n, family):
    assert family <= set(applicable_lemmas(n))


@pytest.mark.parametrize("n,lemma", [(7, "l22"), (8, "l22"), (14, "ll5"), (9, "l30"), (6, "l11"), (2 + 8, "l11")])
def test_hypothesis_violation(n, lemma):
    with pytest.raises(HypothesisError):
        verify_lemma(GrassmannRing.get(n), lemma)


def test_unknown_lemma():
    with pytest.raises(UnknownLemma):
        verify_lemma(GrassmannRing.get(6), "l99")


def test_report_dict():
    d = verify_lemma(GrassmannRing.get(6), "l22").to_dict()
    assert d["lemma"] == "l22" and d["n"] == 6 and d["passed"]
    assert all(set(c) == {"label", "passed", "detail"} for c in d["checks"])
