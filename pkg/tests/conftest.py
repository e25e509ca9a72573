import json
import os
from pathlib import Path

import pytest
from hypothesis import settings

from degfol.forms import form_from_json
from degfol.polycore import parse_poly

settings.register_profile("default", deadline=None)
settings.register_profile("ci", deadline=None, max_examples=50)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus" / "forms"
GOLDEN = ROOT / "corpus" / "expected_classify.json"


def P(text, nvars):
    return parse_poly(text, nvars)


def load_corpus():
    return {p.stem: form_from_json(json.loads(p.read_text())) for p in sorted(CORPUS.glob("*.json"))}


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


# Acceptance lines are collected here and printed at the end of the run.
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
