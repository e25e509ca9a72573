"""``degfol`` command line: deterministic JSON reports on stdout or a file.

Exit codes: 0 success, 2 the input is not a foliation (or fails an analysis
precondition; the report says why), 1 usage or input-format errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .classify import analyze_p4, classify_p3
from .focal import FocalError, check_focal_theorem
from .forms import FormError, OneForm, form_from_json, form_to_json, validate
from .gauss import (
    ProjPoint,
    SingularPointError,
    analyze,
    fiber_direction,
    leaf_tangent_basis,
    sample_regular_points,
    verify_fiber_linearity,
)
from .generators import GeneratorError, GeneratorSpec, generate
from .polycore import PolyError

DEFAULT_SEED = 1729
SEED_ENV = "FOLIATION_SEED"
VERBS = ("check", "rank", "fibers", "focal", "classify", "generate", "corpus")
CORPUS_VERBS = ("check", "rank", "fibers", "focal", "classify")

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def form_hash(form: OneForm) -> str:
    blob = json.dumps(form_to_json(form), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{SEED_ENV} must be an integer") from exc
    return DEFAULT_SEED


def load_json(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        text = Path(source).read_text()
    return json.loads(text)


def load_form(source: str) -> OneForm:
    try:
        return form_from_json(load_json(source))
    except (OSError, json.JSONDecodeError, FormError, PolyError) as exc:
        raise UsageError(f"cannot read form from {source!r}: {exc}") from exc


# -- verbs -------------------------------------------------------------------------
# Each returns (exit_code, body dict).


def _invalid(rep) -> tuple[int, dict]:
    return EXIT_INVALID, {"status": "invalid", "validation": rep.to_json()}


def verb_check(form: OneForm, args) -> tuple[int, dict]:
    rep = validate(form)
    body = {"status": "ok" if rep.valid else "invalid", "validation": rep.to_json()}
    body.update(euler_ok=rep.euler_ok, integrable=rep.integrable, degree=rep.foliation_degree)
    return (EXIT_OK if rep.valid else EXIT_INVALID), body


def verb_rank(form: OneForm, args) -> tuple[int, dict]:
    rep = validate(form)
    if not rep.valid:
        return _invalid(rep)
    ga = analyze(form, args.samples, args.seed)
    return EXIT_OK, {"status": "ok", "gauss": ga.to_json()}


def verb_fibers(form: OneForm, args) -> tuple[int, dict]:
    rep = validate(form)
    if not rep.valid:
        return _invalid(rep)
    if args.point:
        try:
            pt = ProjPoint.parse(args.point).vector()
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --point: {exc}") from exc
        if len(pt) != form.nvars:
            raise UsageError(f"--point needs {form.nvars} coordinates")
    else:
        pt = sample_regular_points(form, 1, random.Random(args.seed))[0]
    try:
        kernel = fiber_direction(form, pt)
        tangent = leaf_tangent_basis(form, pt)
    except SingularPointError as exc:
        return EXIT_INVALID, {"status": "singular_point", "error": str(exc)}
    return EXIT_OK, {
        "status": "ok",
        "point": [str(x) for x in pt],
        "kernel": [[str(x) for x in v] for v in kernel],
        "linear": [verify_fiber_linearity(form, pt, v) for v in kernel],
        "leaf_tangent": [[str(x) for x in v] for v in tangent],
    }


def verb_focal(form: OneForm, args) -> tuple[int, dict]:
    rep = validate(form)
    if not rep.valid:
        return _invalid(rep)
    try:
        reports = check_focal_theorem(form, args.lines, args.seed)
    except FocalError as exc:
        return EXIT_INVALID, {"status": "precondition", "error": str(exc)}
    return EXIT_OK, {
        "status": "ok" if all(r.ok for r in reports) else "theorem_check_failed",
        "reports": [r.to_json() for r in reports],
    }


def verb_classify(form: OneForm, args) -> tuple[int, dict]:
    rep = validate(form)
    if not rep.valid:
        return _invalid(rep)
    if form.n == 3:
        return EXIT_OK, {"status": "ok", "verdict": classify_p3(form, args.seed).to_json()}
    if form.n == 4:
        return EXIT_OK, {"status": "ok", "p4_analysis": analyze_p4(form, args.seed)}
    return EXIT_INVALID, {"status": "unsupported", "error": f"classification is defined on P^3 and P^4, got P^{form.n}"}


ANALYSES = {
    "check": verb_check,
    "rank": verb_rank,
    "fibers": verb_fibers,
    "focal": verb_focal,
    "classify": verb_classify,
}


def _envelope(verb: str, seed: int, form: OneForm | None, body: dict) -> dict:
    out = {"tool": "degfol", "version": __version__, "verb": verb, "seed": seed}
    if form is not None:
        out["input_hash"] = form_hash(form)
        out["n"] = form.n
    out.update(body)
    return out


def _corpus_entry(job):
    path, verb, seed, samples, lines = job
    ns = argparse.Namespace(seed=seed, samples=samples, lines=lines, point=None)
    entry = {"file": path.name}
    try:
        form = form_from_json(json.loads(path.read_text()))
    except (OSError, ValueError, KeyError, TypeError, FormError, PolyError) as exc:
        entry.update(status="error", error=f"{type(exc).__name__}: {exc}")
        return entry
    try:
        code, body = ANALYSES[verb](form, ns)
    except Exception as exc:  # one bad entry must not stop the run
        entry.update(status="error", error=f"{type(exc).__name__}: {exc}")
        return entry
    entry.update(exit_code=code, input_hash=form_hash(form), n=form.n, report=body)
    entry["status"] = "pass" if code == EXIT_OK else "fail"
    return entry


def corpus_run(directory, verb: str, seed: int, samples: int = 10, lines: int = 3, jobs: int = 1) -> dict:
    """Run ``verb`` over every ``*.json`` in ``directory`` (sorted by name)."""
    if verb not in CORPUS_VERBS:
        raise UsageError(f"corpus verb must be one of {CORPUS_VERBS}")
    d = Path(directory)
    if not d.is_dir():
        raise UsageError(f"not a directory: {directory}")
    files = sorted(d.glob("*.json"), key=lambda p: p.name)
    job_list = [(p, verb, seed, samples, lines) for p in files]
    if jobs > 1 and len(job_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_corpus_entry, job_list))
    else:
        entries = [_corpus_entry(j) for j in job_list]
    counts = {"pass": 0, "fail": 0, "error": 0}
    for e in entries:
        counts[e["status"]] += 1
    return {
        "tool": "degfol",
        "version": __version__,
        "verb": "corpus",
        "corpus_verb": verb,
        "seed": seed,
        "entries": entries,
        "counts": counts,
        "total": len(entries),
    }


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degfol", description="Degenerate codimension-one foliations on P^n.")
    p.add_argument("--version", action="version", version=f"degfol {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("input", help="OneForm JSON: a path, '-' for stdin, or inline JSON")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--output", "-o", default=None)
        return sp

    common(sub.add_parser("check", help="validate a form"))
    sp = common(sub.add_parser("rank", help="generic rank of the Gauss map"))
    sp.add_argument("--samples", type=int, default=10)
    sp = common(sub.add_parser("fibers", help="Gauss fiber directions at a point"))
    sp.add_argument("--point", default=None, help='comma-separated coordinates "a0,...,an"')
    sp = common(sub.add_parser("focal", help="focal polynomials on random invariant lines"))
    sp.add_argument("--lines", type=int, default=5)
    common(sub.add_parser("classify", help="classify on P^3, structural hints on P^4"))
    sp = common(sub.add_parser("generate", help="emit a form from a generator family"), needs_input=False)
    sp.add_argument("--family", required=True)
    sp.add_argument("--params", default=None, help="GeneratorSpec or parameters JSON (path or inline)")
    sp = common(sub.add_parser("corpus", help="run a verb over a directory of forms"), needs_input=False)
    sp.add_argument("--dir", required=True)
    sp.add_argument("--verb", dest="corpus_verb", required=True, choices=CORPUS_VERBS)
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--lines", type=int, default=3)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.seed = resolve_seed(args.seed)
        for name in ("samples", "lines", "jobs"):
            if getattr(args, name, 1) < 1:
                raise UsageError(f"--{name} must be >= 1")
        if args.verb == "corpus":
            report = corpus_run(args.dir, args.corpus_verb, args.seed, args.samples, args.lines, args.jobs)
            _emit(dumps(report), args.output)
            return EXIT_OK
        if args.verb == "generate":
            return _generate(args)
        form = load_form(args.input)
        code, body = ANALYSES[args.verb](form, args)
        _emit(dumps(_envelope(args.verb, args.seed, form, body)), args.output)
        return code
    except UsageError as exc:
        sys.stderr.write(f"degfol: error: {exc}\n")
        return EXIT_USAGE


def _generate(args) -> int:
    params, seed = {}, args.seed
    if args.params:
        try:
            obj = load_json(args.params)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read params: {exc}") from exc
        if "parameters" in obj:
            params = obj["parameters"]
            if obj.get("seed") is not None:
                seed = int(obj["seed"])
        else:
            params = obj
    try:
        form = generate(GeneratorSpec(args.family, params, seed))
    except (GeneratorError, FormError, PolyError, KeyError) as exc:
        sys.stderr.write(f"degfol: generate failed: {exc}\n")
        return EXIT_INVALID
    _emit(dumps(form_to_json(form)), args.output)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
