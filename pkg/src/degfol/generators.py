"""Constructible families of degenerate foliations, used as ground truth."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .forms import FormError, OneForm, from_first_integral, pullback_linear, validate
from .polycore import MIXED, ZERO_POLY, MultiPoly, homogeneous_degree, poly_from_json

FAMILIES = ("PENCIL", "LINEAR_PULLBACK", "P3_CONE", "P4_CONE")
COEF_RANGE = 9


class GeneratorError(ValueError):
    pass


@dataclass
class GeneratorSpec:
    family: str
    parameters: dict = field(default_factory=dict)
    seed: int | None = None


def gen_pencil(F: MultiPoly, G: MultiPoly) -> OneForm:
    """Pencil of hyperplanes through {F = G = 0}."""
    if homogeneous_degree(F) != 1 or homogeneous_degree(G) != 1:
        raise GeneratorError("pencil needs two linear forms")
    rows = [[F.terms.get(_unit(F.nvars, i), 0) for i in range(F.nvars)],
            [G.terms.get(_unit(G.nvars, i), 0) for i in range(G.nvars)]]
    if linalg.rank(rows) < 2:
        raise GeneratorError("linear forms are dependent")
    return from_first_integral(F, G)


def _unit(n, i):
    return tuple(int(j == i) for j in range(n))


def gen_linear_pullback(eta: OneForm, matrix: Sequence[Sequence]) -> OneForm:
    if not validate(eta).valid:
        raise GeneratorError("base form is not a foliation")
    try:
        return pullback_linear(eta, matrix)
    except FormError as exc:
        raise GeneratorError(str(exc)) from exc


def _embed(p: MultiPoly, nvars: int) -> MultiPoly:
    """A binary form in (x0, x1) viewed in ``nvars`` variables."""
    if p.nvars == nvars:
        if p.variables() - {0, 1}:
            raise GeneratorError("P, Q, R must only involve x0, x1")
        return p
    if p.nvars != 2:
        raise GeneratorError("P, Q, R must be binary forms")
    return MultiPoly(nvars, {e + (0,) * (nvars - 2): c for e, c in p.terms.items()})


def gen_p3_cone(P: MultiPoly, Q: MultiPoly, R: MultiPoly) -> OneForm:
    """Foliation with first integral (x2 P - Q) / (x3 P - R) on P^3.

    Leaves are cones over the rational curve (x0 P : x1 P : Q : R).
    """
    P, Q, R = (_embed(p, 4) for p in (P, Q, R))
    dP, dQ, dR = (homogeneous_degree(p) for p in (P, Q, R))
    if any(d in (MIXED, ZERO_POLY) for d in (dP, dQ, dR)) or not (dP + 1 == dQ == dR):
        raise GeneratorError(f"need deg P + 1 = deg Q = deg R, got {dP}, {dQ}, {dR}")
    x2, x3 = MultiPoly.var(4, 2), MultiPoly.var(4, 3)
    try:
        form = from_first_integral(x2 * P - Q, x3 * P - R)
    except FormError as exc:
        raise GeneratorError(str(exc)) from exc
    if not validate(form).valid:
        raise GeneratorError("cone-family form failed validation")
    return form


def projection_with_center(center: Sequence) -> list[list[Fraction]]:
    """Rows spanning the annihilator of ``center`` (the projection from it)."""
    c = [Fraction(x) for x in center]
    if not any(c):
        raise GeneratorError("center must be nonzero")
    return linalg.nullspace([c], len(c))


def gen_p4_cone(eta: OneForm, center: Sequence) -> OneForm:
    """Pull back a foliation on P^3 along the projection of P^4 from ``center``."""
    if eta.nvars != 4:
        raise GeneratorError("base foliation must live on P^3")
    if len(center) != 5:
        raise GeneratorError("center must be a point of P^4")
    return gen_linear_pullback(eta, projection_with_center(center))


# -- random draws ----------------------------------------------------------------


def random_binary_form(rng: random.Random, degree: int, nvars: int = 2) -> MultiPoly:
    while True:
        terms = {}
        for k in range(degree + 1):
            exp = (degree - k, k) + (0,) * (nvars - 2)
            terms[exp] = rng.randint(-COEF_RANGE, COEF_RANGE)
        p = MultiPoly(nvars, terms)
        if not p.is_zero():
            return p


def random_linear(rng: random.Random, nvars: int) -> MultiPoly:
    while True:
        c = [rng.randint(-COEF_RANGE, COEF_RANGE) for _ in range(nvars)]
        if any(c):
            return MultiPoly.linear(c)


def random_quadric(rng: random.Random, nvars: int) -> MultiPoly:
    terms = {}
    for i in range(nvars):
        for j in range(i, nvars):
            e = [0] * nvars
            e[i] += 1
            e[j] += 1
            terms[tuple(e)] = rng.randint(-COEF_RANGE, COEF_RANGE)
    return MultiPoly(nvars, terms)


def random_pencil(rng: random.Random, nvars: int) -> tuple[OneForm, MultiPoly, MultiPoly]:
    while True:
        F, G = random_linear(rng, nvars), random_linear(rng, nvars)
        try:
            return gen_pencil(F, G), F, G
        except (GeneratorError, FormError):
            continue


def random_p2_degree_one(rng: random.Random) -> OneForm:
    """A degree-one foliation on P^2, ``A = x cross (M x)`` for integer M."""
    from .gauss import generic_rank

    x = [MultiPoly.var(3, i) for i in range(3)]
    while True:
        M = [[rng.randint(-COEF_RANGE, COEF_RANGE) for _ in range(3)] for _ in range(3)]
        V = [sum((x[j].scale(M[i][j]) for j in range(3)), MultiPoly.zero(3)) for i in range(3)]
        A = (x[1] * V[2] - x[2] * V[1], x[2] * V[0] - x[0] * V[2], x[0] * V[1] - x[1] * V[0])
        if any(a.is_zero() for a in A):
            continue
        form = OneForm(A)
        rep = validate(form)
        if rep.valid and rep.foliation_degree == 1 and generic_rank(form, 5, rng.randint(0, 10**9)) == 2:
            return form


def random_quadric_foliation(rng: random.Random, nvars: int) -> OneForm:
    """First integral Q / L^2: generic degree-one foliation with quadric leaves."""
    from .gauss import generic_rank

    while True:
        Q, L = random_quadric(rng, nvars), random_linear(rng, nvars)
        try:
            form = from_first_integral(Q, L * L)
        except FormError:
            continue
        if validate(form).valid and generic_rank(form, 5, rng.randint(0, 10**9)) == nvars - 1:
            return form


def random_projection(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    while True:
        m = [[rng.randint(-COEF_RANGE, COEF_RANGE) for _ in range(cols)] for _ in range(rows)]
        if linalg.rank(m) == rows:
            return m


def random_cone_params(rng: random.Random, deg_p: int) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Draw (P, Q, R) until the cone-family form is valid."""
    while True:
        P = random_binary_form(rng, deg_p)
        Q = random_binary_form(rng, deg_p + 1)
        R = random_binary_form(rng, deg_p + 1)
        try:
            gen_p3_cone(P, Q, R)
        except (GeneratorError, FormError):
            continue
        return P, Q, R


# -- GeneratorSpec -> form --------------------------------------------------------


def _poly_param(params, key, nvars):
    if key not in params:
        raise GeneratorError(f"missing parameter {key!r}")
    return poly_from_json(params[key], nvars)


def generate(spec: GeneratorSpec) -> OneForm:
    """Build a form from a GeneratorSpec; ``parameters.random`` draws from ``seed``."""
    from .forms import form_from_json

    fam = spec.family.upper()
    params = spec.parameters or {}
    if fam not in FAMILIES:
        raise GeneratorError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    rng = random.Random(spec.seed if spec.seed is not None else 0)
    rand = params.get("random", False)
    if fam == "PENCIL":
        n1 = int(params.get("nvars", 4))
        if rand:
            return random_pencil(rng, n1)[0]
        return gen_pencil(_poly_param(params, "F", n1), _poly_param(params, "G", n1))
    if fam == "LINEAR_PULLBACK":
        if rand:
            m1, n1 = int(params.get("base_nvars", 3)), int(params.get("nvars", 4))
            eta = random_p2_degree_one(rng) if m1 == 3 else random_quadric_foliation(rng, m1)
            return gen_linear_pullback(eta, random_projection(rng, m1, n1))
        return gen_linear_pullback(form_from_json(params["eta"]), params["matrix"])
    if fam == "P3_CONE":
        if rand:
            P, Q, R = random_cone_params(rng, int(params.get("deg_p", 1)))
        else:
            P, Q, R = (_binary_param(params, k) for k in "PQR")
        return gen_p3_cone(P, Q, R)
    # P4_CONE
    center = [Fraction(c) for c in params.get("center", [0, 0, 0, 0, 1])]
    if rand:
        return gen_p4_cone(random_quadric_foliation(rng, 4), center)
    return gen_p4_cone(form_from_json(params["eta"]), center)


def _binary_param(params, key):
    if key not in params:
        raise GeneratorError(f"missing parameter {key!r}")
    val = params[key]
    if isinstance(val, dict):
        return poly_from_json(val)
    return poly_from_json(val, 2)
