"""Multivariate polynomials over GF(2) under the grlex order.

Monomials are plain tuples of exponents ``(a, b, c)`` standing for
``w1^a w2^b w3^c``; variable ``w_i`` carries cohomological weight ``i``.
A :class:`Polynomial` is an immutable set of monomials (every coefficient
is 1), serialized in strictly decreasing grlex order.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence

Monomial = tuple  # tuple[int, ...]

#: Largest exponent a monomial may carry.  Products exceeding it raise
#: OverflowError instead of silently producing garbage.
MAX_EXPONENT = 2**31 - 1

INFINITY = None  # sentinel for "no truncation" in mul_truncated/pow_truncated


# ---------- coefficients mod 2

def binom_mod2(a: int, b: int) -> int:
    """C(a, b) mod 2 for arbitrary integers, ``C(a, b) = 0`` when ``b < 0``.

    Negative tops use the falling-factorial reflection
    ``C(a, b) = (-1)^b C(b - a - 1, b)``.
    """
    if b < 0:
        return 0
    if a < 0:
        a = b - a - 1
    if b > a:
        return 0
    # Lucas: odd iff every binary digit of b is a digit of a
    return 1 if (a & b) == b else 0


def multinom_mod2(entries: Sequence[int]) -> int:
    """Multinomial coefficient ``[a1, ..., ak]`` mod 2.

    Computed as the chained product
    ``C(a1+...+ak, a1) C(a2+...+ak, a2) ... C(a_{k-1}+a_k, a_{k-1})``.
    """
    if any(e < 0 for e in entries):
        raise ValueError(f"multinomial entries must be nonnegative, got {list(entries)}")
    rest = sum(entries)
    for e in entries[:-1]:
        if not binom_mod2(rest, e):
            return 0
        rest -= e
    return 1


# ---------- monomials

def order_degree(m: Monomial) -> int:
    return sum(m)


def cohom_degree(m: Monomial) -> int:
    return sum(i * e for i, e in enumerate(m, start=1))


def grlex_key(m: Monomial) -> tuple:
    """Sort key realizing grlex with w1 > w2 > ... (larger key = larger monomial)."""
    return (sum(m),) + tuple(m)


def grlex_cmp(m1: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError(f"arity mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = grlex_key(m1), grlex_key(m2)
    return (k1 > k2) - (k1 < k2)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(m1, m2))


def mono_divides(d: Monomial, m: Monomial) -> bool:
    return all(x <= y for x, y in zip(d, m))


def mono_div(m: Monomial, d: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(d, m))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(m1, m2))


# ---------- polynomials

class Polynomial:
    """Immutable polynomial over GF(2) in ``arity`` variables."""

    __slots__ = ("arity", "_terms", "_sorted", "_hash")

    def __init__(self, terms: Iterable[Monomial] = (), arity: int = 3):
        # duplicates cancel pairwise (characteristic 2)
        acc: set = set()
        for t in terms:
            t = tuple(t)
            if len(t) != arity:
                raise ValueError(f"monomial {t} does not have arity {arity}")
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in {t}")
            acc ^= {t}
        self.arity = arity
        self._terms = frozenset(acc)
        self._sorted = None
        self._hash = None

    @classmethod
    def _from_set(cls, terms, arity: int) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.arity = arity
        p._terms = frozenset(terms)
        p._sorted = None
        p._hash = None
        return p

    @classmethod
    def zero(cls, arity: int = 3) -> "Polynomial":
        return cls._from_set((), arity)

    @classmethod
    def one(cls, arity: int = 3) -> "Polynomial":
        return cls._from_set(((0,) * arity,), arity)

    @classmethod
    def monomial(cls, *exponents: int) -> "Polynomial":
        return cls([tuple(exponents)], arity=len(exponents))

    @classmethod
    def var(cls, i: int, arity: int = 3) -> "Polynomial":
        """The generator ``w_i`` (1-based)."""
        e = [0] * arity
        e[i - 1] = 1
        return cls._from_set((tuple(e),), arity)

    # -- inspection

    @property
    def terms(self) -> tuple:
        """Monomials in strictly decreasing grlex order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms, key=grlex_key, reverse=True))
        return self._sorted

    @property
    def term_set(self) -> frozenset:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        if self._sorted is not None:
            return self._sorted[0]
        return max(self._terms, key=grlex_key)

    def max_exponent(self) -> int:
        return max((max(t) for t in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({cohom_degree(t) for t in self._terms}) <= 1

    def degree_part(self, d: int) -> "Polynomial":
        return Polynomial._from_set(
            (t for t in self._terms if cohom_degree(t) == d), self.arity)

    def truncate(self, max_cohom_degree) -> "Polynomial":
        if max_cohom_degree is None:
            return self
        return Polynomial._from_set(
            (t for t in self._terms if cohom_degree(t) <= max_cohom_degree), self.arity)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def __contains__(self, m):
        return tuple(m) in self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other in (0, 1):
            other = Polynomial.zero(self.arity) if other == 0 else Polynomial.one(self.arity)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self._terms))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic

    def __add__(self, other):
        return add(self, _coerce(other, self.arity))

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        return mul(self, _coerce(other, self.arity))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return pow_truncated(self, e, None)

    def frobenius(self, k: int = 1) -> "Polynomial":
        """``p^(2^k)``: over GF(2) squaring just doubles every exponent."""
        s = 1 << k
        return Polynomial._from_set(
            (tuple(s * x for x in t) for t in self._terms), self.arity)

    def to_json(self) -> dict:
        return {"arity": self.arity, "terms": [list(t) for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls((tuple(t) for t in data["terms"]), arity=data["arity"])


def _coerce(x, arity):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial.one(arity) if x % 2 else Polynomial.zero(arity)
    raise TypeError(f"cannot combine Polynomial with {type(x).__name__}")


def _check_arity(p: Polynomial, q: Polynomial):
    if p.arity != q.arity:
        raise ValueError(f"arity mismatch: {p.arity} vs {q.arity}")


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_arity(p, q)
    return Polynomial._from_set(p._terms ^ q._terms, p.arity)


def add_all(polys: Iterable[Polynomial], arity: int = 3) -> Polynomial:
    acc: set = set()
    for p in polys:
        acc ^= p._terms
    return Polynomial._from_set(acc, arity)


def mul_truncated(p: Polynomial, q: Polynomial, max_cohom_degree=INFINITY) -> Polynomial:
    """Product with every monomial of cohomological degree above the bound dropped."""
    _check_arity(p, q)
    if p.max_exponent() + q.max_exponent() > MAX_EXPONENT:
        raise OverflowError("exponent overflow in polynomial product")
    if len(p) > len(q):
        p, q = q, p
    acc: set = set()
    if max_cohom_degree is None:
        for s in p._terms:
            for t in q._terms:
                acc ^= {tuple(x + y for x, y in zip(s, t))}
    else:
        qd = [(t, cohom_degree(t)) for t in q._terms]
        for s in p._terms:
            room = max_cohom_degree - cohom_degree(s)
            if room < 0:
                continue
            for t, d in qd:
                if d <= room:
                    acc ^= {tuple(x + y for x, y in zip(s, t))}
    return Polynomial._from_set(acc, p.arity)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return mul_truncated(p, q, INFINITY)


def pow_truncated(p: Polynomial, e: int, max_cohom_degree=INFINITY) -> Polynomial:
    """``p^e`` by binary exponentiation, truncating after every product.

    Squarings are Frobenius maps, so the work is a product of at most
    ``log2(e)`` sparse factors ``p^(2^k)``.
    """
    if e < 0:
        raise ValueError("negative exponent")
    result = Polynomial.one(p.arity)
    k = 0
    while e:
        if e & 1:
            factor = p.frobenius(k).truncate(max_cohom_degree)
            result = mul_truncated(result, factor, max_cohom_degree)
        e >>= 1
        k += 1
    return result


def sum_of_monomials(monos: Iterable[Monomial], arity: int = 3) -> Polynomial:
    return Polynomial(monos, arity=arity)


# ---------- text form

def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        ch = text[pos]
        if ch.isdigit():
            j = pos
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[pos:j], pos))
            pos = j
        elif ch in "w^*+":
            tokens.append((ch, ch, pos))
            pos += 1
        else:
            raise SyntaxError(f"unexpected character {ch!r} at position {pos}")
    tokens.append(("end", "", len(text)))
    return tokens


def parse(text: str, arity: int = 3) -> Polynomial:
    """Parse ``"w2^5 + w1*w3^3"`` style text.

    Grammar: ``poly := "0" | term ("+" term)*``, ``term := "1" | factor
    ("*" factor)*``, ``factor := "w" index ("^" exponent)?``.
    """
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def expect(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise SyntaxError(f"expected {kind!r} but found {what!r} at position {tok[2]}")
        i += 1
        return tok

    if len(tokens) == 2 and tokens[0][:2] == ("num", "0"):
        return Polynomial.zero(arity)

    monos = []
    while True:
        exps = [0] * arity
        if peek()[0] == "num":
            tok = expect("num")
            if tok[1] != "1":
                raise SyntaxError(f"only the constants 0 and 1 are allowed, got {tok[1]!r} "
                                  f"at position {tok[2]}")
        else:
            while True:
                expect("w")
                idx_tok = expect("num")
                idx = int(idx_tok[1])
                if not 1 <= idx <= arity:
                    raise SyntaxError(f"unknown variable w{idx} at position {idx_tok[2]}")
                e = 1
                if peek()[0] == "^":
                    expect("^")
                    e = int(expect("num")[1])
                exps[idx - 1] += e
                if peek()[0] != "*":
                    break
                expect("*")
        monos.append(tuple(exps))
        if peek()[0] == "end":
            break
        expect("+")
    return Polynomial(monos, arity=arity)


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            factors.append(f"w{i}")
        elif e > 1:
            factors.append(f"w{i}^{e}")
    return "*".join(factors) if factors else "1"


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    return " + ".join(format_monomial(t) for t in p.terms)


def product(polys: Iterable[Polynomial], arity: int = 3) -> Polynomial:
    return reduce(mul, polys, Polynomial.one(arity))
