"""Focal points of the line congruence cut out by the Gauss fibers.

For a form of rank n-1 the Gauss fibers are lines. Near a generic point p the
congruence is charted by ``alpha0(s) = p + sum s_j w_j`` (a transversal
section) and ``alpha1(s)``, the kernel direction of the Jacobian at
``alpha0(s)``. The first-order jet of ``alpha1`` determines a square matrix
``Abar`` with

    d alpha1 / d s_j  =  sum_l Abar[j][l] * w_l   (mod span(alpha0, alpha1))

and the focal points on the line through p and d = alpha1(0) are the roots of
``det(t0*I + t1*Abar)``, read as the points ``t0*p + t1*d``. Ordering the
transversals so the first n-2 are tangent to the leaf makes ``Abar`` block
lower triangular; the leading block gives the focal points of the leaf.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .forms import OneForm
from .gauss import (
    SingularPointError,
    fiber_direction,
    generic_rank,
    jacobian,
    leaf_tangent_basis,
    random_point,
)
from .polycore import JetScalar, MultiPoly, divmod_poly, evaluate, homogeneous_degree, to_text

MAX_FRAME_RETRIES = 20


class FocalError(ValueError):
    pass


class FrameError(FocalError):
    """The point is not generic enough to build a congruence chart."""


@dataclass
class FocalFrame:
    base_point: list
    direction: list
    transversals: list  # leaf transversals first, then one transverse vector
    leaf_transversals: list
    jet_matrix: list  # Abar, rows indexed by the differentiation direction
    gauge_index: int

    @property
    def m(self) -> int:
        return len(self.transversals)

    def to_json(self) -> dict:
        return {
            "base_point": [str(x) for x in self.base_point],
            "direction": [str(x) for x in self.direction],
            "transversals": [[str(x) for x in w] for w in self.transversals],
            "leaf_transversals": len(self.leaf_transversals),
            "jet_matrix": [[str(x) for x in row] for row in self.jet_matrix],
        }


@dataclass
class FocalReport:
    F_G: MultiPoly
    F_M0: MultiPoly
    degrees_ok: bool
    divides: bool
    quotient: MultiPoly | None
    block_zero: bool
    roots_summary: dict
    frame: FocalFrame | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.degrees_ok and self.divides

    def to_json(self) -> dict:
        return {
            "F_G": binary_coefficients(self.F_G),
            "F_M0": binary_coefficients(self.F_M0),
            "F_G_text": to_text(self.F_G),
            "F_M0_text": to_text(self.F_M0),
            "degrees_ok": self.degrees_ok,
            "divides": self.divides,
            "quotient": binary_coefficients(self.quotient) if self.quotient is not None else None,
            "leaf_block_upper_right_zero": self.block_zero,
            "roots": self.roots_summary,
            "frame": self.frame.to_json() if self.frame else None,
        }


def binary_coefficients(f: MultiPoly) -> list[str]:
    """Coefficients of a binary form, ordered t0^d, t0^(d-1) t1, ..., t1^d."""
    d = f.total_degree()
    if d < 0:
        return []
    return [str(f.terms.get((d - k, k), Fraction(0))) for k in range(d + 1)]


def _jet_point(p, ws):
    m = len(ws)
    return [JetScalar(p[i], tuple(w[i] for w in ws)) for i in range(len(p))]


def _kernel_jet(J, p, ws, d, g):
    """Jet of the kernel vector of J along alpha0(s), gauge-fixed by v[g] = d[g]."""
    x = _jet_point(p, ws)
    Jx = [[evaluate(e, x) for e in row] for row in J]
    n1 = len(p)
    others = [k for k in range(n1) if k != g]
    a = [[row[k] for k in others] for row in Jx]
    b = [-(row[g] * d[g]) for row in Jx]
    try:
        sol = linalg.solve_jet(a, b)
    except linalg.SingularSystem as exc:
        raise FrameError(str(exc)) from exc
    v = [None] * n1
    v[g] = JetScalar.constant(d[g], len(ws))
    for k, s in zip(others, sol):
        v[k] = s
    return v


def build_focal_frame(
    form: OneForm,
    p: Sequence,
    leaf_transversals: Sequence[Sequence] | None = None,
    transverse: Sequence | None = None,
    J=None,
) -> FocalFrame:
    """Chart the congruence at p and extract the jet matrix Abar.

    ``leaf_transversals`` (n-2 vectors with A(p).w = 0) and ``transverse``
    (A(p).w != 0) default to choices derived from the leaf tangent basis and
    the standard basis.
    """
    p = [Fraction(x) for x in p]
    n1 = len(p)
    if J is None:
        J = jacobian(form)
    try:
        kernel = fiber_direction(form, p, J=J)
    except SingularPointError as exc:
        raise FrameError(str(exc)) from exc
    if len(kernel) != 1:
        raise FrameError(f"kernel dimension {len(kernel)} != 1 at {p}")
    d = kernel[0]
    a_p = form.at(p)
    if leaf_transversals is None:
        leaf = linalg.independent_mod(leaf_tangent_basis(form, p), [p, d])
    else:
        leaf = [[Fraction(x) for x in w] for w in leaf_transversals]
        if any(linalg.dot(a_p, w) for w in leaf):
            raise FrameError("leaf transversals must satisfy A(p).w = 0")
    if len(leaf) != n1 - 3:
        raise FrameError("could not find n-2 leaf transversals independent of the line")
    if transverse is None:
        i = max(range(n1), key=lambda k: abs(a_p[k]))
        transverse = [Fraction(int(k == i)) for k in range(n1)]
    transverse = [Fraction(x) for x in transverse]
    if not linalg.dot(a_p, transverse):
        raise FrameError("transverse vector lies in the tangent hyperplane")
    ws = leaf + [transverse]
    basis = [p, d] + ws
    if linalg.rank(basis) != n1:
        raise FrameError("transversals are not independent modulo the line")

    g = max(range(n1), key=lambda k: abs(d[k]))
    v = _kernel_jet(J, p, ws, d, g)
    if any(v[k].value != d[k] for k in range(n1)):
        raise FrameError("jet kernel does not restrict to the sampled kernel")
    cols = linalg.transpose(basis)
    abar = []
    for j in range(len(ws)):
        dv = [v[k].partials[j] for k in range(n1)]
        c = linalg.solve(cols, dv)
        abar.append(c[2:])
    return FocalFrame(p, d, ws, leaf, abar, g)


def _pencil_matrix(a: Sequence[Sequence[Fraction]]) -> list[list[MultiPoly]]:
    t0 = MultiPoly.var(2, 0)
    t1 = MultiPoly.var(2, 1)
    m = len(a)
    return [[(t0 if i == j else MultiPoly.zero(2)) + t1.scale(a[i][j]) for j in range(m)] for i in range(m)]


def focal_polynomial_congruence(frame: FocalFrame) -> MultiPoly:
    """``det(t0*I + t1*Abar)``, a binary form of degree n-1."""
    return linalg.det_poly(_pencil_matrix(frame.jet_matrix))


def focal_polynomial_leaf(frame: FocalFrame) -> MultiPoly:
    """Determinant of the leaf block of ``t0*I + t1*Abar``; degree n-2."""
    k = len(frame.leaf_transversals)
    if k != frame.m - 1:
        raise FrameError("frame lacks n-2 leaf transversals")
    if k == 0:
        return MultiPoly.const(2, 1)
    block = [row[:k] for row in frame.jet_matrix[:k]]
    return linalg.det_poly(_pencil_matrix(block))


def rational_roots(f: MultiPoly) -> tuple[list[tuple[Fraction, int]], list[int]]:
    """Rational roots of ``f(t, 1)`` with multiplicities, plus degrees of
    the irreducible nonlinear factors over Q."""
    import sympy

    d = f.total_degree()
    coeffs = [f.terms.get((d - k, k), Fraction(0)) for k in range(d + 1)]
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], t, domain="QQ")
    _, factors = poly.factor_list()
    roots, others = [], []
    at_infinity = d - poly.degree()
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append((Fraction(int(r.p), int(r.q)), int(mult)))
        else:
            others.extend([int(fac.degree())] * int(mult))
    roots.sort()
    if at_infinity:
        roots.append((None, at_infinity))
    return roots, others


def roots_summary(f: MultiPoly, frame: FocalFrame | None = None) -> dict:
    """Rational linear factors of a binary form as points of the line.

    A root ``(t0 : t1) = (r : 1)`` is the point ``r*p + d`` of the line
    through the base point p and the kernel direction d.
    """
    roots, others = rational_roots(f)
    entries = []
    for r, mult in roots:
        tt = ("1", "0") if r is None else (str(r), "1")
        entry = {"t": list(tt), "multiplicity": mult}
        if frame is not None:
            if r is None:
                pt = frame.base_point
            else:
                pt = [r * a + b for a, b in zip(frame.base_point, frame.direction)]
            entry["point"] = linalg.canonical_vector(pt)
        entries.append(entry)
    return {
        "pattern": sorted((m for _, m in roots), reverse=True) + sorted(others, reverse=True),
        "rational": entries,
        "irreducible_degrees": others,
    }


def focal_report(frame: FocalFrame, n: int) -> FocalReport:
    fg = focal_polynomial_congruence(frame)
    fm = focal_polynomial_leaf(frame)
    degrees_ok = homogeneous_degree(fg) == n - 1 and homogeneous_degree(fm) == n - 2
    q, r = divmod_poly(fg, fm)
    divides = r.is_zero() and homogeneous_degree(q) == 1
    k = len(frame.leaf_transversals)
    block_zero = all(not frame.jet_matrix[i][j] for i in range(k) for j in range(k, frame.m))
    return FocalReport(
        F_G=fg,
        F_M0=fm,
        degrees_ok=degrees_ok,
        divides=divides,
        quotient=q if r.is_zero() else None,
        block_zero=block_zero,
        roots_summary=roots_summary(fg, frame),
        frame=frame,
    )


def frame_at_random_point(form: OneForm, rng: random.Random, J=None) -> FocalFrame:
    if J is None:
        J = jacobian(form)
    last = None
    for _ in range(MAX_FRAME_RETRIES):
        p = random_point(rng, form.nvars)
        try:
            frame = build_focal_frame(form, p, J=J)
        except FrameError as exc:
            last = exc
            continue
        return frame
    raise FrameError(f"no generic point found after {MAX_FRAME_RETRIES} tries: {last}")


def check_focal_theorem(form: OneForm, num_lines: int = 5, seed: int = 0, rank: int | None = None) -> list[FocalReport]:
    """Focal reports at ``num_lines`` random invariant lines of a rank n-1 form."""
    n = form.n
    if rank is None:
        rank = generic_rank(form, 10, seed)
    if rank != n - 1:
        raise FocalError(f"focal analysis needs rank n-1 = {n - 1}, form has rank {rank}")
    rng = random.Random(seed)
    J = jacobian(form)
    reports = []
    attempts = 0
    while len(reports) < num_lines:
        attempts += 1
        if attempts > num_lines * MAX_FRAME_RETRIES:
            raise FrameError("too many degenerate lines")
        frame = frame_at_random_point(form, rng, J)
        rep = focal_report(frame, n)
        if rep.F_G.is_zero():
            continue  # line inside the fundamental set
        reports.append(rep)
    return reports
