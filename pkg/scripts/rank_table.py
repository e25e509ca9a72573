"""Generic Gauss rank, tangency center and classification for every corpus form.

    python scripts/rank_table.py [--dir corpus/forms] [--seeds 0 1 2]
"""

import argparse
import json
from dataclasses import dataclass, field
from pathlib import Path

from degfol.classify import analyze_p4, classify_p3, detect_tangency_center
from degfol.forms import form_from_json, validate
from degfol.gauss import generic_rank


@dataclass
class TableConfig:
    directory: Path = Path(__file__).resolve().parents[1] / "corpus" / "forms"
    seeds: list = field(default_factory=lambda: [0, 1, 2])
    samples: int = 10


def row(name, form, cfg):
    rep = validate(form)
    if not rep.valid:
        return [name, f"P^{form.n}", "-", "-", "not integrable"]
    ranks = sorted({generic_rank(form, cfg.samples, s) for s in cfg.seeds})
    center = detect_tangency_center(form)
    if form.n == 3:
        verdict = classify_p3(form, cfg.seeds[0]).kind.value
    elif form.n == 4:
        verdict = analyze_p4(form, cfg.seeds[0], num_lines=1)["hint"]
    else:
        verdict = ""
    return [name, f"P^{form.n}", "/".join(map(str, ranks)), str(center.dim), verdict]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dir", type=Path, default=TableConfig.directory)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--samples", type=int, default=10)
    args = ap.parse_args()
    cfg = TableConfig(args.dir, args.seeds, args.samples)
    rows = [["form", "space", "rank", "center dim", "verdict"]]
    for path in sorted(cfg.directory.glob("*.json")):
        rows.append(row(path.stem, form_from_json(json.loads(path.read_text())), cfg))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
