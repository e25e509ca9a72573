from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from degfol.polycore import (
    MIXED,
    ZERO_POLY,
    JetScalar,
    MultiPoly,
    PolyError,
    add_mul_scale,
    common_factor,
    divides,
    divmod_poly,
    evaluate,
    exact_div,
    gradient,
    homogeneous_degree,
    normalize_poly,
    parse_poly,
    partial_derivative,
    poly_from_json,
    poly_to_json,
    to_text,
)

from conftest import P

NV = 3
SYMS = sympy.symbols("x0:3")


def polys(nvars=NV, max_terms=5, max_deg=3):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    coefs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
    return st.dictionaries(exps, coefs, max_size=max_terms).map(lambda t: MultiPoly(nvars, t))


def to_sympy(p):
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**e for s, e in zip(SYMS, exp)])
                       for exp, c in p.terms.items()])


def from_sympy(expr, nvars=NV):
    poly = sympy.Poly(sympy.expand(expr), *SYMS[:nvars])
    return MultiPoly(nvars, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


# -- worked examples ---------------------------------------------------------------

def test_add_cancels():
    assert add_mul_scale(P("x0 + x1", 2), P("-x0", 2), "add") == P("x1", 2)


def test_mul_and_scale():
    assert add_mul_scale(P("x0", 2), P("x1", 2), "mul") == P("x0*x1", 2)
    assert add_mul_scale(P("x0^2 - x1^2", 2), None, "scale", Fraction(1, 2)) == P("1/2*x0^2 - 1/2*x1^2", 2)


def test_partial_derivatives():
    f = P("x0^2*x1", 3)
    assert partial_derivative(f, 0) == P("2*x0*x1", 3)
    assert partial_derivative(f, 2).is_zero()
    assert partial_derivative(P("x0*x1 + x1^2", 2), 1) == P("x0 + 2*x1", 2)


def test_evaluate_rational_and_jet():
    assert evaluate(P("x0*x1", 2), [2, 3]) == 6
    assert evaluate(P("x0 + x1", 2), [Fraction(1, 2), Fraction(1, 3)]) == Fraction(5, 6)
    j = evaluate(P("x0^2", 1), [JetScalar(Fraction(1), (Fraction(1),))])
    assert j == JetScalar(Fraction(1), (Fraction(2),))


def test_homogeneous_degree_markers():
    assert homogeneous_degree(P("x0^2*x1 + x2^3", 3)) == 3
    assert homogeneous_degree(P("x0 + x0^2", 1)) is MIXED
    assert homogeneous_degree(MultiPoly.zero(2)) is ZERO_POLY


@pytest.mark.parametrize("inputs, expected", [
    (["x0*x1", "x0*x2"], "x0"),
    (["x0", "x1"], "1"),
    (["x0^2*x1^2", "x0*x1^3"], "x0*x1^2"),
])
def test_common_factor_examples(inputs, expected):
    assert common_factor([P(t, 3) for t in inputs]) == P(expected, 3)


def test_common_factor_trial_division_oracle():
    # brute force over the exponent lattice of x0^2 x1^2 and x0 x1^3
    a, b = P("x0^2*x1^2", 2), P("x0*x1^3", 2)
    best = max(((i, j) for i in range(3) for j in range(4)
                if divides(P(f"x0^{i}*x1^{j}", 2), a) and divides(P(f"x0^{i}*x1^{j}", 2), b)),
               key=sum)
    assert best == (1, 2)


def test_common_factor_rejects_empty():
    with pytest.raises(PolyError):
        common_factor([])
    with pytest.raises(PolyError):
        common_factor([MultiPoly.zero(2)])


# -- ring axioms against sympy ---------------------------------------------------

@settings(max_examples=1000)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MultiPoly.zero(NV)


@settings(max_examples=200)
@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert a * b == from_sympy(to_sympy(a) * to_sympy(b))


@settings(max_examples=200)
@given(polys(), st.integers(0, NV - 1))
def test_derivative_matches_sympy(a, i):
    assert partial_derivative(a, i) == from_sympy(sympy.diff(to_sympy(a), SYMS[i]))


@settings(max_examples=200)
@given(polys(max_terms=4, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_gcd_matches_sympy(a, b, g):
    a, b = a * g, b * g
    if a.is_zero() or b.is_zero():
        return
    ours = common_factor([a, b])
    theirs = from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)))
    assert normalize_poly(ours) == normalize_poly(theirs)
    assert divides(ours, a) and divides(ours, b)


@settings(max_examples=200)
@given(polys(), polys(max_terms=3))
def test_division_identity(a, q):
    if q.is_zero():
        return
    quo, rem = divmod_poly(a, q)
    assert quo * q + rem == a
    assert exact_div(a * q, q) == a


@given(st.integers(1, 4), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_euler_identity(d, coeffs):
    # sum x_i d_i f = deg(f) f for homogeneous f
    x = [MultiPoly.var(3, i) for i in range(3)]
    f = sum(((x[0] ** (d - k)) * (x[k % 3] ** k) for k in range(d + 1)), MultiPoly.zero(3))
    f = f + MultiPoly.linear(coeffs) ** d
    if f.is_zero():
        return
    lhs = sum((x[i] * g for i, g in enumerate(gradient(f))), MultiPoly.zero(3))
    assert lhs == f.scale(d)


@given(polys(max_deg=2), st.lists(st.integers(-9, 9), min_size=NV, max_size=NV),
       st.lists(st.integers(-9, 9), min_size=NV, max_size=NV))
def test_jet_partials_are_directional_derivatives(f, point, direction):
    jet = evaluate(f, [JetScalar(Fraction(p), (Fraction(v),)) for p, v in zip(point, direction)])
    assert jet.value == evaluate(f, point)
    expected = sum((evaluate(partial_derivative(f, i), point) * v for i, v in enumerate(direction)), Fraction(0))
    assert jet.partials[0] == expected


def test_jet_division_and_power():
    x = JetScalar.seed(Fraction(2), [Fraction(1)])
    assert (x**3).partials == (Fraction(12),)
    assert (1 / x).partials == (Fraction(-1, 4),)


# -- text and JSON ---------------------------------------------------------------

@settings(max_examples=300)
@given(polys())
def test_text_round_trip(a):
    assert parse_poly(to_text(a), NV) == a


@settings(max_examples=300)
@given(polys())
def test_json_round_trip(a):
    assert poly_from_json(poly_to_json(a)) == a


def test_parser_handles_parentheses():
    assert parse_poly("-(x0 - 2*x1)^2", 2) == P("-x0^2 + 4*x0*x1 - 4*x1^2", 2)


@pytest.mark.parametrize("bad", ["x0 +", "x5", "x0^-1", "2..3", "x0 x1"])
def test_parser_rejects(bad):
    with pytest.raises(PolyError):
        parse_poly(bad, 2)


@pytest.mark.parametrize("terms", [
    [{"exp": [1], "coef": 0.5}],
    [[[1], "1"]],
    [{"exp": [1]}],
    [{"exp": [1], "coef": "abc"}],
    [{"exp": [1], "coef": "1/0"}],
])
def test_json_rejects_malformed_terms(terms):
    with pytest.raises(PolyError):
        poly_from_json({"nvars": 1, "terms": terms})
