"""Gauss map ``p -> [A_0(p) : ... : A_n(p)]``: Jacobian, generic rank, fibers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .forms import OneForm
from .polycore import MultiPoly, evaluate, partial_derivative

SAMPLE_BOX = 10**6
MAX_RESAMPLES = 50


class SingularPointError(ValueError):
    """All coefficients of the form vanish at the requested point."""


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(linalg.canonical_vector(self.coords)))

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        return cls(tuple(Fraction(t.strip()) for t in text.split(",")))

    def vector(self) -> list[Fraction]:
        return [Fraction(c) for c in self.coords]

    def __len__(self):
        return len(self.coords)


@dataclass
class GaussSample:
    point: ProjPoint
    jacobian_rank: int
    kernel: list
    linear: list

    def to_json(self) -> dict:
        return {
            "point": list(self.point.coords),
            "jacobian_rank": self.jacobian_rank,
            "kernel": [[str(x) for x in v] for v in self.kernel],
            "linear": self.linear,
        }


@dataclass
class GaussAnalysis:
    rank: int
    seed: int
    num_samples: int
    samples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "seed": self.seed,
            "num_samples": self.num_samples,
            "samples": [s.to_json() for s in self.samples],
        }


def jacobian(form: OneForm) -> list[list[MultiPoly]]:
    """``J[i][j] = d A_i / d x_j``."""
    return [[partial_derivative(a, j) for j in range(form.nvars)] for a in form.coeffs]


def eval_matrix(J: Sequence[Sequence[MultiPoly]], point: Sequence) -> list[list]:
    return [[evaluate(e, point) for e in row] for row in J]


def random_point(rng: random.Random, nvars: int, box: int = SAMPLE_BOX) -> list[Fraction]:
    while True:
        pt = [Fraction(rng.randint(-box, box)) for _ in range(nvars)]
        if any(pt):
            return pt


def sample_regular_points(form: OneForm, count: int, rng: random.Random) -> list[list[Fraction]]:
    """``count`` points where the form does not vanish, resampling singular draws."""
    out = []
    misses = 0
    while len(out) < count:
        pt = random_point(rng, form.nvars)
        if any(form.at(pt)):
            out.append(pt)
        else:
            misses += 1
            if misses > MAX_RESAMPLES:
                raise SamplingError("every sampled point was singular")
    return out


def _rank_at(J, pt) -> int:
    return linalg.rank(eval_matrix(J, pt))


def generic_rank(form: OneForm, num_samples: int = 10, seed: int = 0) -> int:
    """Projective rank of dG: max affine Jacobian rank over samples, minus one.

    Euler's identity ``J(x) x = deg(A) * A(x)`` puts ``A(x)`` in the image of
    ``J(x)``, so the projectivized differential loses exactly one dimension.
    """
    return analyze(form, num_samples, seed, with_fibers=False).rank


def analyze(form: OneForm, num_samples: int = 10, seed: int = 0, with_fibers: bool = True) -> GaussAnalysis:
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    rng = random.Random(seed)
    J = jacobian(form)
    pts = sample_regular_points(form, num_samples, rng)
    ranks = [_rank_at(J, p) for p in pts]
    r = max(ranks) - 1
    samples = []
    for p, jr in zip(pts, ranks):
        kernel, verdicts = [], []
        if with_fibers and jr - 1 == r:
            kernel = fiber_direction(form, p, J=J)
            verdicts = [verify_fiber_linearity(form, p, v) for v in kernel]
        samples.append(GaussSample(ProjPoint(tuple(p)), jr, kernel, verdicts))
    return GaussAnalysis(rank=r, seed=seed, num_samples=num_samples, samples=samples)


def _point(p) -> list[Fraction]:
    if isinstance(p, ProjPoint):
        return p.vector()
    return [Fraction(x) for x in p]


def fiber_direction(form: OneForm, p, J=None) -> list[list[Fraction]]:
    """Basis, modulo p, of {v : J(p) v in span A(p)}.

    Because ``J(p) p`` is a nonzero multiple of ``A(p)``, that space is
    ``ker J(p)`` plus ``span(p)``, and ``ker J(p)`` never meets ``span(p)``.
    The affine kernel is therefore returned as the complement.
    """
    pt = _point(p)
    if not any(form.at(pt)):
        raise SingularPointError(f"form vanishes at {pt}")
    if J is None:
        J = jacobian(form)
    return linalg.nullspace(eval_matrix(J, pt), form.nvars)


def leaf_tangent_basis(form: OneForm, p) -> list[list[Fraction]]:
    """n-1 vectors spanning {v : A(p).v = 0} modulo p (the leaf's tangent hyperplane)."""
    pt = _point(p)
    a = form.at(pt)
    if not any(a):
        raise SingularPointError(f"form vanishes at {pt}")
    sols = linalg.nullspace([a], form.nvars)
    return linalg.independent_mod(sols, [pt])


def line_restriction(poly: MultiPoly, p: Sequence, v: Sequence) -> list[Fraction]:
    """Coefficients (ascending in t) of ``poly(p + t v)``."""
    args = [MultiPoly(1, {(0,): a, (1,): b}) for a, b in zip(p, v)]
    r = evaluate(poly, args)
    if r.is_zero():
        return []
    top = r.degree_in(0)
    return [r.terms.get((k,), Fraction(0)) for k in range(top + 1)]


def _uv_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def gauss_minors_on_line(form: OneForm, p, v) -> list[list[Fraction]]:
    """Univariate polynomials ``A_i(p+tv) A_j(p) - A_j(p+tv) A_i(p)`` for i<j."""
    pt, vv = _point(p), [Fraction(x) for x in v]
    base = form.at(pt)
    along = [line_restriction(a, pt, vv) for a in form.coeffs]
    minors = []
    for i in range(form.nvars):
        for j in range(i + 1, form.nvars):
            m = _sub(_uv_mul(along[i], [base[j]]), _uv_mul(along[j], [base[i]]))
            minors.append(m)
    return minors


def _sub(a, b):
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def verify_fiber_linearity(form: OneForm, p, v) -> bool:
    """True iff the Gauss map is constant on the line through p in direction v."""
    return all(not m for m in gauss_minors_on_line(form, p, v))
