"""Focal points along random Gauss fibers of cone-family foliations on P^3.

For each draw, prints the congruence and leaf focal polynomials on a few
fibers and checks where the roots land: the leaf's focal point sits on the
vertex line x0 = x1 = 0, the other one on the base curve F = G = 0.

    python scripts/focal_demo.py [--draws 3] [--lines 2] [--seed 0]
"""

import argparse
import random
from dataclasses import dataclass

from degfol.focal import check_focal_theorem, roots_summary
from degfol.generators import gen_p3_cone, random_cone_params
from degfol.polycore import MultiPoly, evaluate, to_text


@dataclass
class DemoConfig:
    draws: int = 3
    lines: int = 2
    seed: int = 0


def lift(f):
    return MultiPoly(4, {e + (0, 0): c for e, c in f.terms.items()})


def run(cfg: DemoConfig):
    rng = random.Random(cfg.seed)
    x2, x3 = MultiPoly.var(4, 2), MultiPoly.var(4, 3)
    for k in range(cfg.draws):
        P, Q, R = random_cone_params(rng, 1 + k % 3)
        F, G = x2 * lift(P) - lift(Q), x3 * lift(P) - lift(R)
        print(f"draw {k}: P = {to_text(P)}, Q = {to_text(Q)}, R = {to_text(R)}")
        form = gen_p3_cone(P, Q, R)
        for rep in check_focal_theorem(form, cfg.lines, seed=cfg.seed + k):
            leaf = roots_summary(rep.F_M0, rep.frame)["rational"][0]["point"]
            others = [r["point"] for r in rep.roots_summary["rational"] if r["point"] != leaf]
            on_curve = all(evaluate(F, q) == 0 and evaluate(G, q) == 0 for q in others)
            print(f"  F_G = {to_text(rep.F_G)}   F_M0 = {to_text(rep.F_M0)}   divides: {rep.divides}")
            print(f"    leaf focal point {leaf} on vertex line: {leaf[0] == leaf[1] == 0}")
            print(f"    other focal point(s) {others} on base curve: {on_curve}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", type=int, default=3)
    ap.add_argument("--lines", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(DemoConfig(args.draws, args.lines, args.seed))


if __name__ == "__main__":
    main()
