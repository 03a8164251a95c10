import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassgb.gf2poly import (
    INFINITY,
    Polynomial,
    add,
    binom_mod2,
    cohom_degree,
    format_poly,
    grlex_cmp,
    mono_mul,
    mul,
    mul_truncated,
    multinom_mod2,
    order_degree,
    parse,
    pow_truncated,
)

from oracles import binom_bigint, p_mul, p_pow, truncate

W1, W2, W3 = Polynomial.monomial(1, 0, 0), Polynomial.monomial(0, 1, 0), Polynomial.monomial(0, 0, 1)
ONE = Polynomial.one()

monomials = st.tuples(*(st.integers(0, 6),) * 3)
polys = st.frozensets(monomials, max_size=6).map(lambda s: Polynomial._from_set(s, 3))


@pytest.mark.parametrize("a,b,expected", [
    (-1, 1, 1),
    (7, -2, 0),
    (5, 2, 0),
    (0, 0, 1),
    (-5, 0, 1),
    (123, 0, 1),
    (7, 3, 1),
    (4, 5, 0),
])
def test_binom_mod2_examples(a, b, expected):
    assert binom_mod2(a, b) == expected


def test_binom_mod2_matches_bigint_oracle():
    for a in range(-20, 21):
        for b in range(0, 21):
            assert binom_mod2(a, b) == binom_bigint(a, b), (a, b)


@pytest.mark.parametrize("entries,expected", [
    ([1, 1, 0], 0),
    ([3, 0, 0], 1),
    ([0, 0, 0], 1),
    ([1, 2, 4], 1),
    ([1, 1, 1], 0),
])
def test_multinom_examples(entries, expected):
    assert multinom_mod2(entries) == expected


@given(st.integers(0, 40), st.integers(0, 40))
def test_multinom_two_entries_is_binomial(a, b):
    assert multinom_mod2([a, b]) == binom_mod2(a + b, a)


@given(st.lists(st.integers(0, 20), min_size=1, max_size=4))
def test_multinom_permutation_invariant(entries):
    values = {multinom_mod2(list(p)) for p in itertools.permutations(entries)}
    assert len(values) == 1


def test_degrees():
    assert order_degree((2, 1, 3)) == 6
    assert cohom_degree((2, 1, 3)) == 13


@pytest.mark.parametrize("smaller,larger", [
    ((0, 3, 0), (1, 0, 2)),
    ((0, 0, 1), (1, 1, 0)),
    ((0, 0, 0), (0, 0, 1)),
    ((0, 1, 1), (1, 0, 1)),
])
def test_grlex_examples(smaller, larger):
    assert grlex_cmp(smaller, larger) == -1
    assert grlex_cmp(larger, smaller) == 1


@settings(max_examples=1500)
@given(monomials, monomials, monomials)
def test_grlex_total_and_multiplicative(m1, m2, t):
    c = grlex_cmp(m1, m2)
    if m1 == m2:
        assert c == 0
    else:
        assert c in (-1, 1) and grlex_cmp(m2, m1) == -c
        assert grlex_cmp(mono_mul(m1, t), mono_mul(m2, t)) == c


def test_add_examples():
    assert (W1 + W2) + (W2 + W3) == W1 + W3
    p = W1 * W2 + W3
    assert p + Polynomial.zero() == p
    assert (p + p).is_zero()


def test_mul_examples():
    assert (W1 + W2) ** 2 == W1 ** 2 + W2 ** 2
    g = parse("w1^2*w3^5 + w2*w3^5")
    assert W2 * g == parse("w1^2*w2*w3^5 + w2^2*w3^5")
    assert g * ONE == g


@settings(max_examples=500)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert add(add(p, q), r) == add(p, add(q, r))
    assert add(p, q) == add(q, p)
    assert add(p, p).is_zero()
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert mul(p, q) == mul(q, p)
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))


@settings(max_examples=500)
@given(polys, polys)
def test_frobenius(p, q):
    assert (p + q) ** 2 == p ** 2 + q ** 2
    assert p.frobenius() == p * p


@settings(max_examples=300)
@given(polys, polys)
def test_mul_matches_set_oracle(p, q):
    assert (p * q).term_set == p_mul(p.term_set, q.term_set)


def test_mul_truncated_examples():
    assert mul_truncated(W3, W3, 3).is_zero()
    p = W1 * W2 + W3 + ONE
    assert mul_truncated(p, p + W1, INFINITY) == mul(p, p + W1)
    assert mul_truncated(ONE + W1, ONE + W1, 1) == ONE


@settings(max_examples=300)
@given(polys, polys, st.integers(0, 30))
def test_mul_truncated_matches_truncated_product(p, q, d):
    assert mul_truncated(p, q, d) == mul(p, q).truncate(d)


@pytest.mark.parametrize("s", range(0, 6))
def test_pow_truncated_frobenius(s):
    out = pow_truncated(ONE + W1, 2 ** s, 20)
    expected = ONE + W1 ** (2 ** s) if 2 ** s <= 20 else ONE
    assert out == expected


def test_pow_truncated_cube_oracle():
    total = ONE + W1 + W2 + W3
    want = truncate(p_pow(total.term_set, 3), 3)
    got = pow_truncated(total, 3, 3)
    assert got.term_set == want
    # the w1*w2 coefficient is 3!/(1!1!1!) = 6, so it drops out
    assert got == parse("1 + w1 + w1^2 + w1^3 + w2 + w3")
    assert pow_truncated(total, 0, 3) == ONE


@settings(max_examples=200)
@given(polys, st.integers(0, 9), st.integers(0, 25))
def test_pow_truncated_oracle(p, e, d):
    assert pow_truncated(p, e, d).term_set == truncate(p_pow(p.term_set, e), d)


@pytest.mark.parametrize("text,terms", [
    ("w2^5 + w1*w3^3", {(0, 5, 0), (1, 0, 3)}),
    ("0", set()),
    ("1", {(0, 0, 0)}),
    ("w1 + w1", set()),
    ("w1*w1*w2", {(2, 1, 0)}),
    (" w3 ^ 2 + 1 ", {(0, 0, 2), (0, 0, 0)}),
])
def test_parse(text, terms):
    assert parse(text).term_set == frozenset(terms)


@pytest.mark.parametrize("text", ["w4", "w1 +", "x1", "w1^", "w1**2", "", "w1 w2"])
def test_parse_errors(text):
    with pytest.raises(SyntaxError):
        parse(text)


@settings(max_examples=300)
@given(polys)
def test_format_parse_roundtrip(p):
    assert parse(format_poly(p)) == p
    assert Polynomial.from_json(p.to_json()) == p


def test_leading_term_and_terms_order():
    p = parse("w3 + w1*w2 + w2^3 + w1*w3^2")
    assert p.leading_term() == (1, 0, 2)
    assert p.terms[0] == (1, 0, 2)
    assert format_poly(p) == "w1*w3^2 + w2^3 + w1*w2 + w3"
