import random

import pytest

from degfol import linalg
from degfol.classify import Kind, analyze_p4, center_identity_holds, classify_p3, detect_tangency_center
from degfol.forms import FormError
from degfol.generators import (
    gen_linear_pullback,
    gen_p3_cone,
    random_cone_params,
    random_p2_degree_one,
    random_pencil,
    random_projection,
    random_quadric_foliation,
)

from conftest import P

ROUND_TRIPS = 20


def coeff_row(linear, nvars):
    return [linear.terms.get(tuple(int(j == i) for j in range(nvars)), 0) for i in range(nvars)]


@pytest.mark.parametrize("seed", range(ROUND_TRIPS))
def test_pencil_round_trip(seed):
    rng = random.Random(seed)
    f, F, G = random_pencil(rng, 4)
    v = classify_p3(f, seed)
    assert v.kind is Kind.PENCIL and v.rank == 1
    assert linalg.same_span(v.axis, linalg.nullspace([coeff_row(F, 4), coeff_row(G, 4)], 4))


@pytest.mark.parametrize("seed", range(ROUND_TRIPS))
def test_pullback_round_trip(seed):
    rng = random.Random(1000 + seed)
    lam = random_projection(rng, 3, 4)
    f = gen_linear_pullback(random_p2_degree_one(rng), lam)
    v = classify_p3(f, seed)
    assert v.kind is Kind.LINEAR_PULLBACK and v.rank == 2
    assert linalg.same_span(v.center, linalg.nullspace(lam, 4))
    assert v.evidence["non_exclusive"]


@pytest.mark.parametrize("seed", range(ROUND_TRIPS))
def test_cone_round_trip(seed):
    rng = random.Random(2000 + seed)
    f = gen_p3_cone(*random_cone_params(rng, 1 + seed % 3))
    v = classify_p3(f, seed)
    assert v.kind is Kind.CONE_FIRST_INTEGRAL and v.rank == 2
    assert v.center is None and v.evidence["center"] == []


@pytest.mark.parametrize("seed", range(ROUND_TRIPS))
def test_nondegenerate_round_trip(seed):
    f = random_quadric_foliation(random.Random(3000 + seed), 4)
    v = classify_p3(f, seed)
    assert v.kind is Kind.NONDEGENERATE and v.rank == 3


def test_worked_examples(corpus):
    v = classify_p3(corpus["pencil_p3_a"], 0)
    assert v.kind is Kind.PENCIL and linalg.same_span(v.axis, [[0, 0, 1, 0], [0, 0, 0, 1]])
    v = classify_p3(corpus["pullback_p2_p3_e3"], 0)
    assert v.kind is Kind.LINEAR_PULLBACK and v.center == [[0, 0, 0, 1]]
    assert classify_p3(corpus["cone_p3_a"], 7).kind is Kind.CONE_FIRST_INTEGRAL


def test_tangency_centers(corpus):
    assert linalg.same_span(detect_tangency_center(corpus["pullback_p2_p4_line"]).subspace,
                            [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    pencil = corpus["pencil_p3_b"]  # F = x0 + 2x1 - x3, G = x1 + 3x2
    axis = linalg.nullspace([[1, 2, 0, -1], [0, 1, 3, 0]], 4)
    center = detect_tangency_center(pencil)
    assert center.dim == 2 and linalg.same_span(center.subspace, axis)
    assert all(center_identity_holds(pencil, c) for c in center.subspace)
    assert detect_tangency_center(corpus["nondegenerate_p4_quadric"]).dim == 0
    assert not center_identity_holds(corpus["cone_p3_a"], [0, 0, 0, 1])


def test_corpus_has_no_unresolved(corpus):
    for name, f in corpus.items():
        if name == "contact_p3" or f.n != 3:
            continue
        assert classify_p3(f, 1729).kind is not Kind.UNRESOLVED, name


def test_verdict_json():
    f, _, _ = random_pencil(random.Random(0), 4)
    js = classify_p3(f, 3).to_json()
    assert js["kind"] == "PENCIL" and js["seed"] == 3 and len(js["axis"]) == 2


def test_classify_rejects(corpus):
    with pytest.raises(FormError):
        classify_p3(corpus["contact_p3"])
    with pytest.raises(FormError):
        classify_p3(corpus["pencil_p4_a"])
    with pytest.raises(FormError):
        analyze_p4(corpus["cone_p3_a"])


def test_analyze_p4_cone(corpus):
    out = analyze_p4(corpus["pullback_p3_p4_cone"], 0)
    assert out["rank"] == 3 and out["center_dim"] == 1 and out["center"] == [[0, 0, 0, 0, 1]]
    assert len(out["focal"]) == 3
    for rep in out["focal"]:
        assert len(rep["F_G"]) == 4 and len(rep["F_M0"]) == 3
        assert rep["degrees_ok"] and rep["divides"]


def test_analyze_p4_pullback_from_plane(corpus):
    out = analyze_p4(corpus["pullback_p2_p4_line"], 0)
    assert out["rank"] <= 2 and out["center_dim"] == 2 and out["focal"] is None


def test_analyze_p4_nondegenerate(corpus):
    out = analyze_p4(corpus["nondegenerate_p4_quadric"], 0)
    assert out["rank"] == 4 and not out["degenerate"] and out["center"] == [] and out["focal"] is None


def test_analyze_p4_pencil(corpus):
    out = analyze_p4(corpus["pencil_p4_a"], 0)
    assert out["rank"] == 1 and out["center_dim"] == 3
