"""Decision procedures for degenerate foliations on P^3, structural hints on P^4."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .focal import FocalError, check_focal_theorem
from .forms import FormError, OneForm, validate
from .gauss import fiber_direction, generic_rank, sample_regular_points

RANK_SAMPLES = 10
EVIDENCE_LINES = 2


class Kind(str, enum.Enum):
    NONDEGENERATE = "NONDEGENERATE"
    PENCIL = "PENCIL"
    LINEAR_PULLBACK = "LINEAR_PULLBACK"
    CONE_FIRST_INTEGRAL = "CONE_FIRST_INTEGRAL"
    UNRESOLVED = "UNRESOLVED"


@dataclass
class TangencyCenter:
    subspace: list  # integer basis vectors c with sum c_i A_i = 0

    @property
    def dim(self) -> int:
        return len(self.subspace)

    def to_json(self):
        return [list(v) for v in self.subspace]


@dataclass
class Verdict:
    kind: Kind
    rank: int
    seed: int
    center: list | None = None
    axis: list | None = None
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "rank": self.rank,
            "seed": self.seed,
            "center": self.center,
            "axis": self.axis,
            "evidence": self.evidence,
        }


def detect_tangency_center(form: OneForm) -> TangencyCenter:
    """All constant vectors c with ``sum c_i A_i == 0``: directions along which
    the lines through each point are tangent to the foliation."""
    monomials = sorted({e for a in form.coeffs for e in a.terms})
    rows = [[a.terms.get(mono, Fraction(0)) for a in form.coeffs] for mono in monomials]
    basis = linalg.nullspace(rows, form.nvars)
    return TangencyCenter(linalg.canonical_basis(basis) if basis else [])


def center_identity_holds(form: OneForm, c) -> bool:
    total = None
    for ci, a in zip(c, form.coeffs):
        if ci:
            term = a.scale(Fraction(ci))
            total = term if total is None else total + term
    return total is None or total.is_zero()


def _require_valid(form: OneForm):
    rep = validate(form)
    if not rep.valid:
        raise FormError(f"form is not a foliation: {rep.to_json()}")
    return rep


def _pencil_axis(form: OneForm, rng: random.Random, count: int = 4):
    pts = sample_regular_points(form, count, rng)
    images = [form.at(p) for p in pts]
    axis = linalg.nullspace(images, form.nvars)
    return pts, images, axis


def classify_p3(form: OneForm, seed: int = 0) -> Verdict:
    if form.n != 3:
        raise FormError("classify_p3 needs a form on P^3")
    _require_valid(form)
    r = generic_rank(form, RANK_SAMPLES, seed)
    rng = random.Random(seed + 1)
    if r == 3:
        return Verdict(Kind.NONDEGENERATE, r, seed)
    if r == 1:
        pts, images, axis = _pencil_axis(form, rng)
        center = detect_tangency_center(form)
        axis_basis = linalg.canonical_basis(axis) if axis else []
        contains = all(linalg.dot(a, v) == 0 for a in images for v in axis)
        if len(axis_basis) != 2 or not contains or not linalg.same_span(axis_basis, center.subspace):
            return Verdict(Kind.UNRESOLVED, r, seed, evidence={
                "reason": "Gauss image is not a line of hyperplanes through a common axis",
                "axis": axis_basis, "center": center.to_json()})
        return Verdict(Kind.PENCIL, r, seed, axis=axis_basis, evidence={
            "gauss_image": [linalg.canonical_vector(a) for a in images[:2]],
            "axis_in_every_sampled_leaf": contains})
    if r == 2:
        center = detect_tangency_center(form)
        if center.dim == 1:
            c = center.subspace[0]
            sound = center_identity_holds(form, c)
            radial = _radial_fibers(form, c, rng)
            if not (sound and radial):
                return Verdict(Kind.UNRESOLVED, r, seed, evidence={
                    "reason": "tangency center inconsistent with the Gauss fibers",
                    "center": center.to_json(), "identity": sound, "radial": radial})
            return Verdict(Kind.LINEAR_PULLBACK, r, seed, center=center.to_json(), evidence={
                "identity_exact": sound,
                "fibers_through_center": radial,
                "non_exclusive": "a rational first integral may also exist; not decided"})
        if center.dim == 0:
            try:
                reports = check_focal_theorem(form, EVIDENCE_LINES, seed, rank=r)
            except FocalError as exc:
                return Verdict(Kind.UNRESOLVED, r, seed, evidence={"reason": f"focal evidence failed: {exc}"})
            if not all(rep.ok for rep in reports):
                return Verdict(Kind.UNRESOLVED, r, seed, evidence={
                    "reason": "focal theorem check failed", "focal": [x.to_json() for x in reports]})
            return Verdict(Kind.CONE_FIRST_INTEGRAL, r, seed, evidence={
                "center": [], "focal": [_focal_summary(x) for x in reports]})
        return Verdict(Kind.UNRESOLVED, r, seed, evidence={
            "reason": f"rank 2 with a {center.dim}-dimensional tangency center", "center": center.to_json()})
    return Verdict(Kind.UNRESOLVED, r, seed, evidence={"reason": f"unexpected rank {r}"})


def _radial_fibers(form: OneForm, c, rng: random.Random, count: int = 3) -> bool:
    """Every sampled Gauss fiber is the line through the sample and c."""
    for p in sample_regular_points(form, count, rng):
        ker = fiber_direction(form, p)
        if len(ker) != 1 or linalg.rank([p, ker[0], list(c)]) != 2:
            return False
    return True


def _focal_summary(rep) -> dict:
    js = rep.to_json()
    return {k: js[k] for k in ("F_G", "F_M0", "degrees_ok", "divides", "roots")}


def analyze_p4(form: OneForm, seed: int = 0, num_lines: int = 3) -> dict:
    """Rank, tangency center and (for rank 3) focal reports on P^4. Hints only."""
    if form.n != 4:
        raise FormError("analyze_p4 needs a form on P^4")
    _require_valid(form)
    r = generic_rank(form, RANK_SAMPLES, seed)
    center = detect_tangency_center(form)
    hints = {
        0: "no linear subspace of tangent directions",
        1: "cone over a foliation of P^3 (linear pull-back from the center point)",
        2: "linear pull-back of a foliation on P^2 (center line)",
        3: "pencil of hyperplanes through the center plane",
    }
    out = {
        "rank": r,
        "degenerate": r < 4,
        "seed": seed,
        "center": center.to_json(),
        "center_dim": center.dim,
        "hint": hints.get(center.dim, "unexpected center dimension"),
        "note": "structural hints only; joins and bands are not detected",
        "focal": None,
    }
    if r == 3:
        try:
            out["focal"] = [_focal_summary(rep) for rep in check_focal_theorem(form, num_lines, seed, rank=r)]
        except FocalError as exc:
            out["focal"] = {"error": str(exc)}
    return out
