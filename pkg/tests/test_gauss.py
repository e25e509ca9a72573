import random
from fractions import Fraction

import pytest
import sympy

from degfol import linalg
from degfol.forms import OneForm
from degfol.gauss import (
    ProjPoint,
    SingularPointError,
    analyze,
    eval_matrix,
    fiber_direction,
    generic_rank,
    jacobian,
    leaf_tangent_basis,
    random_point,
    sample_regular_points,
    verify_fiber_linearity,
)
from degfol.generators import (
    gen_linear_pullback,
    gen_p3_cone,
    gen_p4_cone,
    gen_pencil,
    random_cone_params,
    random_p2_degree_one,
    random_quadric_foliation,
)
from degfol.polycore import MultiPoly

from conftest import P


def sympy_rank(form, seed, samples=6):
    """Independent oracle: sympy Jacobian at random integer points."""
    xs = sympy.symbols(f"x0:{form.nvars}")
    A = [sympy.sympify(str(a).replace("^", "**")) if not a.is_zero() else sympy.Integer(0) for a in form.coeffs]
    Jsym = sympy.Matrix([[sympy.diff(a, x) for x in xs] for a in A])
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        pt = {x: rng.randint(-1000, 1000) for x in xs}
        best = max(best, Jsym.subs(pt).rank())
    return best - 1


def test_jacobian_of_two_variable_form():
    f = OneForm((P("x1", 3), P("-x0", 3), MultiPoly.zero(3)))
    J = jacobian(f)
    assert eval_matrix(J, [5, 7, 11]) == [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]


def test_cone_jacobian_is_quadratic():
    J = jacobian(gen_p3_cone(P("x0", 2), P("x1^2", 2), P("x0*x1", 2)))
    assert len(J) == 4 and all(len(row) == 4 for row in J)
    assert {e.total_degree() for row in J for e in row if not e.is_zero()} == {2}


@pytest.mark.parametrize("name, expected", [
    ("pencil_p3_a", 1), ("pencil_p4_b", 1),
    ("pullback_p2_p3_e3", 2), ("pullback_p2_p3_random", 2), ("pullback_p2_p4_line", 2),
    ("cone_p3_a", 2), ("cone_p3_b", 2),
    ("pullback_p3_p4_cone", 3), ("p4_cone_over_cone", 2),
    ("nondegenerate_p3_quadric", 3), ("nondegenerate_p4_quadric", 4),
])
def test_rank_against_sympy_oracle(corpus, name, expected):
    f = corpus[name]
    assert generic_rank(f, 10, 0) == expected
    assert sympy_rank(f, 99) == expected


@pytest.mark.parametrize("name", ["pencil_p3_b", "cone_p3_c", "pullback_p3_p4_cone", "nondegenerate_p4_quadric"])
def test_rank_stable_across_seeds(corpus, name):
    assert len({generic_rank(corpus[name], 10, s) for s in (0, 1, 2)}) == 1


@pytest.mark.parametrize("name", ["cone_p3_a", "pullback_p2_p3_random", "pullback_p3_p4_cone", "pencil_p4_a"])
def test_euler_row_identity(corpus, name):
    # J(x) x = deg(A) A(x)
    f = corpus[name]
    d = f.coefficient_degree()
    J = jacobian(f)
    for p in sample_regular_points(f, 3, random.Random(4)):
        assert linalg.matvec(eval_matrix(J, p), p) == [d * a for a in f.at(p)]


@pytest.mark.parametrize("name", ["cone_p3_b", "pullback_p2_p4_line", "pullback_p3_p4_cone", "pencil_p3_b"])
def test_kernel_lies_in_tangent_hyperplane(corpus, name):
    f = corpus[name]
    for p in sample_regular_points(f, 3, random.Random(8)):
        a = f.at(p)
        for v in fiber_direction(f, p):
            assert linalg.dot(a, v) == 0


def test_fiber_direction_examples(corpus):
    rng = random.Random(0)
    pb = corpus["pullback_p2_p3_e3"]
    p = sample_regular_points(pb, 1, rng)[0]
    (k,) = fiber_direction(pb, p)
    assert linalg.rank([p, k, [0, 0, 0, 1]]) == 2
    assert fiber_direction(corpus["nondegenerate_p3_quadric"], random_point(rng, 4)) == []
    pencil = corpus["pencil_p3_a"]
    assert len(fiber_direction(pencil, sample_regular_points(pencil, 1, rng)[0])) == 2


def test_fiber_direction_at_singular_point():
    f = gen_pencil(P("x0", 4), P("x1", 4))
    with pytest.raises(SingularPointError):
        fiber_direction(f, [0, 0, 1, 1])


def test_pencil_kernel_directions_linear(corpus):
    f = corpus["pencil_p4_a"]
    for p in sample_regular_points(f, 3, random.Random(1)):
        assert all(verify_fiber_linearity(f, p, v) for v in fiber_direction(f, p))


def test_cone_fibers_linear_and_corruption_detected():
    rng = random.Random(12)
    f = gen_p3_cone(*random_cone_params(rng, 1))
    for p in sample_regular_points(f, 5, rng):
        (v,) = fiber_direction(f, p)
        assert verify_fiber_linearity(f, p, v)
        bad = [x + rng.randint(1, 5) for x in v]
        assert not verify_fiber_linearity(f, p, bad)


def test_leaf_tangent_basis_example():
    f = OneForm((P("x1", 3), P("-x0", 3), MultiPoly.zero(3)))
    p = [1, 1, 1]
    basis = leaf_tangent_basis(f, p)
    assert len(basis) == 1
    assert all(v[0] == v[1] for v in basis)
    assert linalg.rank([p] + basis) == 2


def test_analysis_json_records_samples(corpus):
    ga = analyze(corpus["cone_p3_a"], 4, 7)
    js = ga.to_json()
    assert js["rank"] == 2 and js["seed"] == 7 and len(js["samples"]) == 4
    assert all(all(s["linear"]) for s in js["samples"] if s["kernel"])


def test_projpoint_canonical():
    assert ProjPoint.parse("2,-4,6") == ProjPoint.parse("-1,2,-3")
    with pytest.raises(ValueError):
        ProjPoint.parse("0,0,0")


def test_rank_bound_under_pullback():
    eta = random_p2_degree_one(random.Random(3))
    pulled = gen_linear_pullback(eta, [[1, 2, 0, 0], [0, 1, 0, 1], [0, 0, 1, 3]])
    # linear pull-back along a surjection preserves the rank of the base
    assert generic_rank(pulled) == generic_rank(eta) == 2


def test_p4_cone_rank_three():
    base = random_quadric_foliation(random.Random(21), 4)
    assert generic_rank(gen_p4_cone(base, [1, 0, 2, 0, 1])) == 3
