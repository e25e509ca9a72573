"""Exact multivariate polynomials over Q, first-order jets, and a recursive gcd.

Coefficients are :class:`fractions.Fraction`. Exponent vectors are dense tuples
of length ``nvars``. Terms are kept in a dict with no zero coefficients; the
canonical ordering (for printing and serialization) is graded lexicographic,
largest term first.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Rational = Fraction

MAX_VARS = 11  # P^n with n <= 10


class PolyError(ValueError):
    pass


class MixedDegree:
    """Marker returned by :func:`homogeneous_degree` for non-homogeneous input."""

    def __repr__(self):
        return "MIXED"


class ZeroPolynomial:
    """Marker returned by :func:`homogeneous_degree` for the zero polynomial."""

    def __repr__(self):
        return "ZERO"


MIXED = MixedDegree()
ZERO_POLY = ZeroPolynomial()


def as_rational(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"not an exact rational: {c!r}")


def grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class MultiPoly:
    """Immutable polynomial in ``nvars`` variables ``x0..x{nvars-1}``."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if not 1 <= nvars <= MAX_VARS:
            raise PolyError(f"nvars must be in 1..{MAX_VARS}, got {nvars}")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise PolyError(f"bad exponent vector {exp} for {nvars} variables")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise PolyError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MultiPoly":
        """The linear form sum(c_i * x_i)."""
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted path: terms already clean
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # -- basic predicates -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise PolyError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        c = as_rational(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # -- calculus / evaluation --------------------------------------------
    def diff(self, i: int) -> "MultiPoly":
        return partial_derivative(self, i)

    def __call__(self, *point):
        return evaluate(self, point)


def add_mul_scale(p: MultiPoly, q: MultiPoly | None, op: str, c=None) -> MultiPoly:
    """Dispatch ``op`` in {"add", "mul", "scale"}; ``scale`` uses ``c`` and ignores ``q``."""
    if op == "add":
        return p + _same(p, q)
    if op == "mul":
        return p * _same(p, q)
    if op == "scale":
        return p.scale(c)
    raise PolyError(f"unknown op {op!r}")


def _same(p, q):
    if q is None or q.nvars != p.nvars:
        raise PolyError("variable-count mismatch")
    return q


def partial_derivative(p: MultiPoly, i: int) -> MultiPoly:
    if not 0 <= i < p.nvars:
        raise PolyError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for exp, c in p.terms.items():
        a = exp[i]
        if a:
            e = list(exp)
            e[i] = a - 1
            out[tuple(e)] = c * a
    return MultiPoly._raw(p.nvars, out)


def gradient(p: MultiPoly) -> list[MultiPoly]:
    return [partial_derivative(p, i) for i in range(p.nvars)]


def homogeneous_degree(p: MultiPoly):
    """Total degree if ``p`` is homogeneous, else ``MIXED``; ``ZERO_POLY`` for 0."""
    if p.is_zero():
        return ZERO_POLY
    degs = {sum(e) for e in p.terms}
    if len(degs) != 1:
        return MIXED
    return degs.pop()


# ---------------------------------------------------------------------------
# first-order jets


@dataclass(frozen=True)
class JetScalar:
    """``value + sum(partials[j] * eps_j)`` with all products ``eps_i*eps_j = 0``."""

    value: Fraction
    partials: tuple

    @classmethod
    def constant(cls, value, m: int) -> "JetScalar":
        return cls(as_rational(value), (Fraction(0),) * m)

    @classmethod
    def seed(cls, value, direction: Sequence) -> "JetScalar":
        return cls(as_rational(value), tuple(as_rational(d) for d in direction))

    def _lift(self, other):
        if isinstance(other, JetScalar):
            if len(other.partials) != len(self.partials):
                raise ValueError("jet dimension mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return JetScalar(Fraction(other), (Fraction(0),) * len(self.partials))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return JetScalar(self.value + o.value, tuple(a + b for a, b in zip(self.partials, o.partials)))

    __radd__ = __add__

    def __neg__(self):
        return JetScalar(-self.value, tuple(-a for a in self.partials))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return JetScalar(self.value * other, tuple(a * other for a in self.partials))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return JetScalar(
            self.value * o.value,
            tuple(self.value * b + a * o.value for a, b in zip(self.partials, o.partials)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.value:
            raise ZeroDivisionError("jet division by an infinitesimal")
        v = self.value / o.value
        return JetScalar(v, tuple((a - v * b) / o.value for a, b in zip(self.partials, o.partials)))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if k == 0:
            return JetScalar.constant(1, len(self.partials))
        vk1 = self.value ** (k - 1)
        return JetScalar(vk1 * self.value, tuple(k * vk1 * a for a in self.partials))

    def is_zero(self) -> bool:
        return not self.value and not any(self.partials)

    def has_unit_value(self) -> bool:
        return bool(self.value)


def evaluate(p: MultiPoly, point: Sequence):
    """Evaluate at a point whose entries may be rationals, jets or polynomials."""
    if len(point) != p.nvars:
        raise PolyError(f"point has length {len(point)}, expected {p.nvars}")
    point = [as_rational(x) if isinstance(x, (int, str)) else x for x in point]
    if not p.terms:
        return _zero_like(point)
    maxdeg = [0] * p.nvars
    for exp in p.terms:
        for i, a in enumerate(exp):
            if a > maxdeg[i]:
                maxdeg[i] = a
    powers = []
    for x, top in zip(point, maxdeg):
        pw = [None] * (top + 1)
        if top:
            pw[1] = x
            for k in range(2, top + 1):
                pw[k] = pw[k - 1] * x
        powers.append(pw)
    total = None
    for exp, c in p.terms.items():
        term = c
        for i, a in enumerate(exp):
            if a:
                term = powers[i][a] * term
        total = term if total is None else total + term
    if isinstance(total, Fraction) and any(not isinstance(x, Fraction) for x in point):
        # every term was constant; lift into the ambient type
        return _zero_like(point) + total
    return total


def _zero_like(point):
    for x in point:
        if isinstance(x, JetScalar):
            return JetScalar.constant(0, len(x.partials))
        if isinstance(x, MultiPoly):
            return MultiPoly.zero(x.nvars)
    return Fraction(0)


# ---------------------------------------------------------------------------
# division and gcd


def divmod_poly(p: MultiPoly, q: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Multivariate division by a single divisor (grlex leading terms).

    ``{q}`` is a Groebner basis of the ideal it generates, so the remainder is
    zero exactly when ``q`` divides ``p``.
    """
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lexp, lc = q.leading_term()
    n = p.nvars
    rem = dict(p.terms)
    quo: dict[tuple[int, ...], Fraction] = {}
    out_rem: dict[tuple[int, ...], Fraction] = {}
    qterms = list(q.terms.items())
    while rem:
        exp = max(rem, key=grlex_key)
        c = rem[exp]
        if all(a >= b for a, b in zip(exp, lexp)):
            shift = tuple(a - b for a, b in zip(exp, lexp))
            f = c / lc
            quo[shift] = quo.get(shift, 0) + f
            for e2, c2 in qterms:
                e = tuple(a + b for a, b in zip(e2, shift))
                v = rem.get(e, 0) - f * c2
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        else:
            out_rem[exp] = c
            del rem[exp]
    return MultiPoly(n, quo), MultiPoly._raw(n, out_rem)


def divides(q: MultiPoly, p: MultiPoly) -> bool:
    return divmod_poly(p, q)[1].is_zero()


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    quo, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise PolyError("inexact division")
    return quo


def integer_content(p: MultiPoly) -> Fraction:
    """Positive rational c such that p/c has coprime integer coefficients."""
    if p.is_zero():
        return Fraction(0)
    den = lcm(*(c.denominator for c in p.terms.values()))
    num = gcd(*(int(c * den) for c in p.terms.values()))
    return Fraction(num, den)


def normalize_poly(p: MultiPoly) -> MultiPoly:
    """Integral primitive representative with positive grlex-leading coefficient."""
    if p.is_zero():
        return p
    c = integer_content(p)
    if p.leading_term()[1] < 0:
        c = -c
    return p.scale(1 / c)


def _as_univariate(p: MultiPoly, v: int) -> dict[int, MultiPoly]:
    """Coefficients of ``p`` as a polynomial in ``x_v`` (keys are powers of x_v)."""
    buckets: dict[int, dict] = {}
    for exp, c in p.terms.items():
        k = exp[v]
        e = list(exp)
        e[v] = 0
        buckets.setdefault(k, {})[tuple(e)] = c
    return {k: MultiPoly._raw(p.nvars, t) for k, t in buckets.items()}


def _from_univariate(coeffs: Mapping[int, MultiPoly], v: int, nvars: int) -> MultiPoly:
    out = {}
    for k, cp in coeffs.items():
        for exp, c in cp.terms.items():
            e = list(exp)
            e[v] += k
            out[tuple(e)] = c
    return MultiPoly._raw(nvars, out)


def _content_in(p: MultiPoly, v: int) -> MultiPoly:
    return _gcd_list(list(_as_univariate(p, v).values()))


def _prem(a: MultiPoly, b: MultiPoly, v: int) -> MultiPoly:
    """A pseudo-remainder of ``a`` by ``b`` with respect to ``x_v``."""
    db = b.degree_in(v)
    lb = _as_univariate(b, v)[db]
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lr = _as_univariate(r, v)[dr]
        r = r * lb - lr * MultiPoly.var(r.nvars, v, dr - db) * b
    return r


def _gcd2(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if p.is_zero():
        return normalize_poly(q)
    if q.is_zero():
        return normalize_poly(p)
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(p.nvars, 1)
    vs = p.variables() | q.variables()
    if _coprime_certificate(p, q):
        return MultiPoly.const(p.nvars, 1)
    v = min(vs)
    if p.degree_in(v) == 0 or q.degree_in(v) == 0:
        # x_v absent from one side: gcd lives in the coefficients
        coeffs = list(_as_univariate(p, v).values()) + list(_as_univariate(q, v).values())
        return _gcd_list(coeffs)
    cp, cq = _content_in(p, v), _content_in(q, v)
    a, b = exact_div(p, cp), exact_div(q, cq)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero() and b.degree_in(v) > 0:
        r = _prem(a, b, v)
        a, b = b, (exact_div(r, _content_in(r, v)) if not r.is_zero() else r)
    if b.is_zero():
        g = exact_div(a, _content_in(a, v))
    else:
        g = MultiPoly.const(p.nvars, 1)
    return normalize_poly(g * _gcd2(cp, cq))


def _gcd_list(polys: list[MultiPoly]) -> MultiPoly:
    polys = sorted((p for p in polys if not p.is_zero()), key=lambda p: (len(p.terms), p.total_degree()))
    if not polys:
        raise PolyError("gcd of all-zero input")
    g = normalize_poly(polys[0])
    for p in polys[1:]:
        if g.is_constant():
            break
        g = _gcd2(g, p)
    return g


def common_factor(polys: Iterable[MultiPoly]) -> MultiPoly:
    """Greatest common divisor, normalized; the constant 1 when coprime."""
    polys = list(polys)
    if not polys:
        raise PolyError("empty list")
    n = polys[0].nvars
    for p in polys:
        if p.nvars != n:
            raise PolyError("variable-count mismatch")
    if all(p.is_zero() for p in polys):
        raise PolyError("common factor of all-zero input")
    return _gcd_list(polys)


# Univariate helpers over Q, coefficient lists in ascending degree.

def _uv_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _uv_mod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _uv_trim(a)
    return a


def uv_gcd(a, b):
    a, b = _uv_trim([Fraction(x) for x in a]), _uv_trim([Fraction(x) for x in b])
    while b:
        a, b = b, _uv_mod(a, b)
    if a:
        a = [c / a[-1] for c in a]
    return a


def _coprime_certificate(p: MultiPoly, q: MultiPoly, tries: int = 2) -> bool:
    """Sound (one-sided) coprimality test by specialization.

    If ``g = gcd(p, q)`` has positive degree in ``x_v``, specializing the other
    variables at a point where the leading coefficients of ``p`` and ``q`` in
    ``x_v`` do not vanish leaves a univariate gcd of degree at least
    ``deg_v g``. A constant specialized gcd for every variable therefore proves
    ``g`` constant. ``False`` means "not proven".
    """
    rng = random.Random(hash((p, q)) & 0xFFFFFFFF)
    for v in sorted(p.variables() | q.variables()):
        dp, dq = p.degree_in(v), q.degree_in(v)
        if dp == 0 or dq == 0:
            continue
        ok = False
        for _ in range(tries):
            pt = [Fraction(rng.randint(-997, 997)) for _ in range(p.nvars)]
            up = _specialize(p, v, pt)
            uq = _specialize(q, v, pt)
            if len(up) - 1 != dp or len(uq) - 1 != dq:
                continue
            if len(uv_gcd(up, uq)) == 1:
                ok = True
                break
        if not ok:
            return False
    return True


def _specialize(p: MultiPoly, v: int, pt) -> list[Fraction]:
    out: dict[int, Fraction] = {}
    for exp, c in p.terms.items():
        t = c
        for i, a in enumerate(exp):
            if i != v and a:
                t *= pt[i] ** a
        out[exp[v]] = out.get(exp[v], 0) + t
    top = max(out) if out else -1
    return _uv_trim([out.get(k, Fraction(0)) for k in range(top + 1)])


# ---------------------------------------------------------------------------
# text and JSON


def _coef_text(c: Fraction) -> str:
    return str(c)


def to_text(p: MultiPoly) -> str:
    """Canonical text: ``c * x0^a0*...*xn^an`` terms joined by `` + ``."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        mono = "*".join(f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(exp) if a)
        parts.append(f"{_coef_text(c)} * {mono}" if mono else _coef_text(c))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|x(\d+)|(\^)|([-+*()]))")


def parse_poly(text: str, nvars: int) -> MultiPoly:
    """Parse sums/products of rationals and ``x<i>^k``; parentheses allowed."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group(1):
            tokens.append(("num", Fraction(m.group(1))))
        elif m.group(2):
            tokens.append(("var", int(m.group(2))))
        elif m.group(3):
            tokens.append(("op", "^"))
        elif m.group(4):
            tokens.append(("op", m.group(4)))
    parser = _Parser(tokens, nvars)
    result = parser.expr()
    if parser.i != len(tokens):
        raise PolyError("trailing input in polynomial text")
    return result


class _Parser:
    def __init__(self, tokens, nvars):
        self.t, self.i, self.n = tokens, 0, nvars

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            base = MultiPoly.const(self.n, val)
        elif kind == "var":
            if val >= self.n:
                raise PolyError(f"x{val} out of range for {self.n} variables")
            base = MultiPoly.var(self.n, val)
        elif (kind, val) == ("op", "("):
            base = self.expr()
            if self.take() != ("op", ")"):
                raise PolyError("unbalanced parentheses")
        elif (kind, val) == ("op", "-"):
            return -self.factor()
        else:
            raise PolyError(f"unexpected token {val!r}")
        if self.peek() == ("op", "^"):
            self.take()
            kind, k = self.take()
            if kind != "num" or k.denominator != 1:
                raise PolyError("exponent must be a non-negative integer")
            base = base ** int(k)
        return base


def poly_to_json(p: MultiPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [{"exp": list(e), "coef": _coef_text(c)} for e, c in p.sorted_terms()],
    }


def poly_from_json(obj, nvars: int | None = None) -> MultiPoly:
    """Accept the JSON object form, or a text string when ``nvars`` is known."""
    if isinstance(obj, str):
        if nvars is None:
            raise PolyError("text polynomial needs an explicit variable count")
        return parse_poly(obj, nvars)
    if not isinstance(obj, dict) or "terms" not in obj:
        raise PolyError("polynomial JSON must have 'nvars' and 'terms'")
    n = int(obj.get("nvars", nvars or 0))
    if nvars is not None and n != nvars:
        raise PolyError(f"polynomial has {n} variables, expected {nvars}")
    terms: dict[tuple[int, ...], Fraction] = {}
    for t in obj["terms"]:
        try:
            exp, coef = tuple(int(e) for e in t["exp"]), t["coef"]
            if isinstance(coef, float):
                _reject_float(coef)
            c = as_rational(coef)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise PolyError(f"malformed term {t!r}; expected {{'exp': [...], 'coef': ...}}") from exc
        terms[exp] = terms.get(exp, 0) + c
    return MultiPoly(n, terms)


def _reject_float(x):
    raise PolyError(f"floating-point coefficient {x!r}; use 'num/den' strings")
