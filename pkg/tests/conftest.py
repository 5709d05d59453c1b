from __future__ import annotations

from pathlib import Path

import pytest

from linquot import Monomial, VariableContext
from linquot.cli import parse_ordering_text

DATA = Path(__file__).parent / "data"


def load_ordering(name: str, vars_hint: int | None = None):
    return parse_ordering_text((DATA / name).read_text(), vars_hint)


def load_o4_sets():
    sets = []
    for raw in (DATA / "o4_quotients.txt").read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            sets.append(frozenset(line.split()))
    return sets


@pytest.fixture(scope="session")
def a6k2_ordering():
    mons = load_ordering("a6k2_ordering.txt", vars_hint=6)
    assert len(mons) == 42
    return mons


@pytest.fixture(scope="session")
def o4_sets():
    sets = load_o4_sets()
    assert len(sets) == 41
    return sets


@pytest.fixture(scope="session")
def star_square():
    """The square of the three-edge star ideal on x1..x4, in revlex order."""
    ctx = VariableContext.default(4)
    return [Monomial.parse(s, ctx) for s in
            ("x1^2*x2^2", "x1^2*x2*x3", "x1^2*x3^2",
             "x1^2*x2*x4", "x1^2*x3*x4", "x1^2*x4^2")]
