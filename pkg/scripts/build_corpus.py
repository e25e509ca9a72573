"""Write the shipped corpus of forms to corpus/forms/.

    python scripts/build_corpus.py [--out corpus/forms]

Families: 4 pencils, 4 linear pull-backs, 3 members of the P^3 cone family,
the contact form on P^3 (not integrable), plus two nondegenerate quadric
foliations and a cone over a cone on P^4.
"""

import argparse
import json
import random
from pathlib import Path

from degfol.forms import OneForm, form_to_json
from degfol.generators import (
    gen_linear_pullback,
    gen_p3_cone,
    gen_p4_cone,
    gen_pencil,
    random_p2_degree_one,
    random_projection,
    random_quadric_foliation,
)
from degfol.polycore import parse_poly


def p(text, n):
    return parse_poly(text, n)


def contact_form() -> OneForm:
    return OneForm((p("x1", 4), p("-x0", 4), p("x3", 4), p("-x2", 4)))


def build() -> dict:
    eta2 = random_p2_degree_one(random.Random(7))
    quad3 = random_quadric_foliation(random.Random(11), 4)
    quad4 = random_quadric_foliation(random.Random(13), 5)
    cone_a = gen_p3_cone(p("x0", 2), p("x1^2", 2), p("x0*x1", 2))
    forms = {
        "pencil_p3_a": gen_pencil(p("x0", 4), p("x1", 4)),
        "pencil_p3_b": gen_pencil(p("x0 + 2*x1 - x3", 4), p("x1 + 3*x2", 4)),
        "pencil_p4_a": gen_pencil(p("x0 + x1", 5), p("x2 - x3", 5)),
        "pencil_p4_b": gen_pencil(p("x0 - x4", 5), p("2*x1 + x2 + x3", 5)),
        "pullback_p2_p3_e3": gen_linear_pullback(eta2, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
        "pullback_p2_p3_random": gen_linear_pullback(eta2, random_projection(random.Random(3), 3, 4)),
        "pullback_p2_p4_line": gen_linear_pullback(eta2, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]),
        "pullback_p3_p4_cone": gen_p4_cone(quad3, [0, 0, 0, 0, 1]),
        "cone_p3_a": cone_a,
        "cone_p3_b": gen_p3_cone(p("x0^2 + x1^2", 2), p("x0^3 + 2*x1^3", 2), p("x0^2*x1 - x1^3", 2)),
        "cone_p3_c": gen_p3_cone(p("x1", 2), p("x0^2 + x0*x1", 2), p("3*x1^2 - x0^2", 2)),
        "contact_p3": contact_form(),
        "nondegenerate_p3_quadric": quad3,
        "nondegenerate_p4_quadric": quad4,
        "p4_cone_over_cone": gen_p4_cone(cone_a, [0, 0, 0, 0, 1]),
    }
    return forms


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "corpus" / "forms"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, form in build().items():
        (out / f"{name}.json").write_text(json.dumps(form_to_json(form), sort_keys=True, indent=2) + "\n")
        print(f"wrote {name}.json  (P^{form.n})")


if __name__ == "__main__":
    main()
