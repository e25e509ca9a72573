import random

import pytest

from degfol.forms import validate
from degfol.gauss import generic_rank
from degfol.generators import (
    GeneratorError,
    GeneratorSpec,
    gen_linear_pullback,
    gen_p3_cone,
    gen_p4_cone,
    gen_pencil,
    generate,
    projection_with_center,
    random_pencil,
    random_quadric_foliation,
)
from degfol.forms import form_to_json
from degfol.polycore import poly_to_json

from conftest import P


def test_pencil_examples():
    f = gen_pencil(P("x0", 4), P("x1", 4))
    assert validate(f).valid and generic_rank(f) == 1
    g = gen_pencil(P("x0 + x1", 5), P("x2 - x3", 5))
    assert validate(g).valid and generic_rank(g) == 1
    with pytest.raises(GeneratorError):
        gen_pencil(P("x0", 4), P("x0", 4))
    with pytest.raises(GeneratorError):
        gen_pencil(P("x0^2", 4), P("x1^2", 4))


def test_pullback_examples(corpus):
    assert generic_rank(corpus["pullback_p2_p3_e3"]) == 2
    assert generic_rank(gen_p4_cone(corpus["nondegenerate_p3_quadric"], [0, 0, 0, 0, 1])) == 3
    pencil, _, _ = random_pencil(random.Random(4), 4)
    assert generic_rank(gen_p4_cone(pencil, [1, 0, 0, 0, 0])) == 1
    with pytest.raises(GeneratorError):
        gen_linear_pullback(corpus["contact_p3"], [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]])


def test_radial_base_gives_rank_one():
    # a radial foliation on P^2 is a pencil of lines, so its pull-back is a pencil of planes
    radial = gen_pencil(P("x0", 3), P("x1", 3))
    pulled = gen_linear_pullback(radial, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    assert generic_rank(pulled) == 1


def test_cone_examples():
    f = gen_p3_cone(P("x0", 2), P("x1^2", 2), P("x0*x1", 2))
    assert validate(f).valid and generic_rank(f) == 2
    linear = gen_p3_cone(P("1", 2), P("x0", 2), P("x1", 2))  # first integral (x2 - x0)/(x3 - x1)
    assert validate(linear).valid and generic_rank(linear) == 1
    with pytest.raises(GeneratorError):
        gen_p3_cone(P("x0", 2), P("x0^2", 2), P("x0*x1", 2))
    with pytest.raises(GeneratorError):
        gen_p3_cone(P("x0", 2), P("x1^3", 2), P("x0*x1", 2))


def test_p4_cone_of_cone(corpus):
    f = gen_p4_cone(corpus["cone_p3_a"], [0, 0, 0, 0, 1])
    assert validate(f).valid and generic_rank(f) == 2
    g = gen_p4_cone(corpus["cone_p3_b"], [1, 0, 0, 0, 1])
    assert validate(g).valid


def test_projection_with_center_annihilates():
    rows = projection_with_center([1, 2, 0, 0, 3])
    assert len(rows) == 4
    assert all(sum(r * c for r, c in zip(row, [1, 2, 0, 0, 3])) == 0 for row in rows)
    with pytest.raises(GeneratorError):
        projection_with_center([0, 0, 0])


def test_generate_explicit_and_random():
    f = generate(GeneratorSpec("P3_CONE", {"P": "x0", "Q": "x1^2", "R": "x0*x1"}))
    assert f == gen_p3_cone(P("x0", 2), P("x1^2", 2), P("x0*x1", 2))
    g = generate(GeneratorSpec("pencil", {"F": poly_to_json(P("x0", 4)), "G": "x2", "nvars": 4}))
    assert generic_rank(g) == 1
    for fam in ("PENCIL", "LINEAR_PULLBACK", "P3_CONE", "P4_CONE"):
        a = generate(GeneratorSpec(fam, {"random": True}, seed=11))
        b = generate(GeneratorSpec(fam, {"random": True}, seed=11))
        assert a == b and validate(a).valid
    eta = random_quadric_foliation(random.Random(0), 4)
    h = generate(GeneratorSpec("P4_CONE", {"eta": form_to_json(eta), "center": [0, 1, 0, 0, 0]}))
    assert h.n == 4
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("JOIN", {}))
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("P3_CONE", {"P": "x0"}))
