"""Twisted projective 1-forms ``omega = sum A_i dx_i`` on P^n.

A form is stored through its coefficient polynomials. Nothing is assumed on
construction beyond a shared variable count and a nonzero coefficient;
:func:`validate` reports what holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .polycore import (
    MIXED,
    ZERO_POLY,
    MultiPoly,
    PolyError,
    common_factor,
    evaluate,
    exact_div,
    homogeneous_degree,
    partial_derivative,
    poly_from_json,
    poly_to_json,
)


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class OneForm:
    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if len(cs) < 2:
            raise FormError("a form on P^n needs n+1 >= 2 coefficients")
        for c in cs:
            if not isinstance(c, MultiPoly) or c.nvars != len(cs):
                raise FormError("each coefficient must be a MultiPoly in n+1 variables")
        if all(c.is_zero() for c in cs):
            raise FormError("zero form")

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    @property
    def n(self) -> int:
        """Dimension of the ambient projective space."""
        return len(self.coeffs) - 1

    def coefficient_degree(self) -> int:
        degs = {homogeneous_degree(a) for a in self.coeffs if not a.is_zero()}
        if len(degs) != 1 or MIXED in degs:
            raise FormError("coefficients are not homogeneous of one common degree")
        return degs.pop()

    def at(self, point: Sequence):
        return [evaluate(a, point) for a in self.coeffs]

    def __str__(self):
        return " + ".join(f"({a})*dx{i}" for i, a in enumerate(self.coeffs) if not a.is_zero())


@dataclass
class FormReport:
    homogeneous_ok: bool
    coefficient_degree: int | None
    euler_ok: bool
    integrable: bool
    foliation_degree: int | None
    common_factor_constant: bool
    violating_triples: list = field(default_factory=list)
    common_factor: str = "1"

    @property
    def valid(self) -> bool:
        return self.homogeneous_ok and self.euler_ok and self.integrable and self.common_factor_constant

    def to_json(self) -> dict:
        return {
            "homogeneous_ok": self.homogeneous_ok,
            "coefficient_degree": self.coefficient_degree,
            "euler_ok": self.euler_ok,
            "integrable": self.integrable,
            "foliation_degree": self.foliation_degree,
            "common_factor_constant": self.common_factor_constant,
            "common_factor": self.common_factor,
            "singular_set_check": "heuristic: no common factor (excludes codim-1 singular set only)",
            "violating_triples": [list(t) for t in self.violating_triples],
            "valid": self.valid,
        }


def euler_contraction(form: OneForm) -> MultiPoly:
    """``sum x_i A_i``; zero exactly when the form descends to P^n."""
    form.coefficient_degree()
    n = form.nvars
    total = MultiPoly.zero(n)
    for i, a in enumerate(form.coeffs):
        total = total + MultiPoly.var(n, i) * a
    return total


def wedge_d_coefficient(form: OneForm, i: int, j: int, k: int, d=None) -> MultiPoly:
    """Coefficient of dx_i^dx_j^dx_k in omega ^ d(omega)."""
    A = form.coeffs
    if d is None:
        d = [[partial_derivative(a, m) for m in range(form.nvars)] for a in A]
    return (
        A[i] * (d[k][j] - d[j][k])
        + A[j] * (d[i][k] - d[k][i])
        + A[k] * (d[j][i] - d[i][j])
    )


def integrability_check(form: OneForm) -> tuple[bool, list[tuple[int, int, int]]]:
    """Return (integrable, violating index triples i<j<k)."""
    d = [[partial_derivative(a, m) for m in range(form.nvars)] for a in form.coeffs]
    bad = [
        (i, j, k)
        for i, j, k in combinations(range(form.nvars), 3)
        if not wedge_d_coefficient(form, i, j, k, d).is_zero()
    ]
    return not bad, bad


def validate(form: OneForm) -> FormReport:
    degs = {homogeneous_degree(a) for a in form.coeffs if not a.is_zero()}
    homogeneous = len(degs) == 1 and MIXED not in degs and ZERO_POLY not in degs
    cdeg = next(iter(degs)) if homogeneous else None
    euler_ok = homogeneous and euler_contraction(form).is_zero()
    if euler_ok:
        integrable, bad = integrability_check(form)
    else:
        integrable, bad = False, []
    cf = common_factor(list(form.coeffs))
    return FormReport(
        homogeneous_ok=homogeneous,
        coefficient_degree=cdeg,
        euler_ok=euler_ok,
        integrable=integrable,
        foliation_degree=(cdeg - 1) if homogeneous else None,
        common_factor_constant=cf.is_constant(),
        violating_triples=bad,
        common_factor=str(cf),
    )


def normalize(form: OneForm) -> OneForm:
    """Divide out the common factor, make coefficients integral and primitive,
    and fix the sign by the grlex-leading term of the first nonzero coefficient."""
    cs = list(form.coeffs)
    g = common_factor(cs)
    if not g.is_constant():
        cs = [exact_div(a, g) if not a.is_zero() else a for a in cs]
    nz = [c for a in cs for c in a.terms.values()]
    den = lcm(*(c.denominator for c in nz))
    num = gcd(*(int(c * den) for c in nz))
    scale = Fraction(den, num)
    lead = next(a for a in cs if not a.is_zero()).leading_term()[1]
    if lead < 0:
        scale = -scale
    return OneForm(tuple(a.scale(scale) for a in cs))


def from_first_integral(F: MultiPoly, G: MultiPoly) -> OneForm:
    """Normalized ``G dF - F dG``, whose leaves lie in the level sets of F/G."""
    if F.nvars != G.nvars:
        raise FormError("F and G live in different polynomial rings")
    if G.is_zero() or F.is_zero():
        raise FormError("first integral components must be nonzero")
    dF, dG = homogeneous_degree(F), homogeneous_degree(G)
    if dF in (MIXED, ZERO_POLY) or dG in (MIXED, ZERO_POLY) or dF != dG:
        raise FormError(f"F and G must be homogeneous of one degree (got {dF}, {dG})")
    if not common_factor([F, G]).is_constant():
        raise FormError("F and G share a nonconstant factor")
    coeffs = [G * partial_derivative(F, i) - F * partial_derivative(G, i) for i in range(F.nvars)]
    if all(c.is_zero() for c in coeffs):
        raise FormError("F/G is constant")
    form = normalize(OneForm(tuple(coeffs)))
    _recheck(form)
    return form


def _recheck(form: OneForm):
    if not euler_contraction(form).is_zero():
        raise AssertionError("constructed form violates the Euler relation")
    if not integrability_check(form)[0]:
        raise AssertionError("constructed form is not integrable")


def compose_linear(p: MultiPoly, matrix: Sequence[Sequence]) -> MultiPoly:
    """``p(matrix @ x)`` for an (m+1) x (n+1) matrix, p in m+1 variables."""
    rows = [MultiPoly.linear([Fraction(c) for c in row]) for row in matrix]
    if len(rows) != p.nvars:
        raise FormError("matrix row count must match the polynomial's variables")
    return evaluate(p, rows)


def pullback_linear(eta: OneForm, matrix: Sequence[Sequence]) -> OneForm:
    """Pull back along the linear projection x -> matrix @ x from P^n to P^m."""
    lam = [[Fraction(c) for c in row] for row in matrix]
    m1 = eta.nvars
    if len(lam) != m1:
        raise FormError(f"matrix must have {m1} rows")
    n1 = len(lam[0])
    if any(len(row) != n1 for row in lam):
        raise FormError("ragged matrix")
    if linalg.rank(lam) != m1:
        raise FormError("projection matrix is rank deficient")
    composed = [compose_linear(a, lam) for a in eta.coeffs]
    coeffs = []
    for j in range(n1):
        acc = MultiPoly.zero(n1)
        for i in range(m1):
            if lam[i][j]:
                acc = acc + composed[i].scale(lam[i][j])
        coeffs.append(acc)
    form = normalize(OneForm(tuple(coeffs)))
    _recheck(form)
    return form


def foliation_degree(form: OneForm) -> int:
    rep = validate(form)
    if not rep.valid:
        raise FormError("form does not define a foliation; run validate() for details")
    return rep.foliation_degree


# -- JSON ------------------------------------------------------------------------


def form_to_json(form: OneForm) -> dict:
    return {"nvars": form.nvars, "coeffs": [poly_to_json(a) for a in form.coeffs]}


def form_from_json(obj) -> OneForm:
    try:
        n = int(obj["nvars"])
        coeffs = obj["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormError("form JSON needs 'nvars' and 'coeffs'") from exc
    if len(coeffs) != n:
        raise FormError(f"expected {n} coefficients, got {len(coeffs)}")
    try:
        return OneForm(tuple(poly_from_json(c, n) for c in coeffs))
    except PolyError as exc:
        raise FormError(str(exc)) from exc
