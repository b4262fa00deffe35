from __future__ import annotations

import pytest
from hypothesis import strategies as st

from rcwb.finpar import FinParModel, FinSet, PartialMap, atom

# Acceptance results, filled in by test_acceptance.py and echoed once at the
# end of the session so they survive pytest's output capture.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])


X = atom("X", ["x0", "x1"])
Y = atom("Y", ["y0", "y1"])
Z = atom("Z", ["z0"])
A = atom("A", ["a0"])
B = atom("B", ["b0", "b1"])


@pytest.fixture(scope="session")
def demo2() -> FinParModel:
    return FinParModel.from_atoms([A, B], 2)


@pytest.fixture(scope="session")
def demo3() -> FinParModel:
    return FinParModel.from_atoms([A, B], 3)


def pm(dom: FinSet, cod: FinSet, graph: dict) -> PartialMap:
    return PartialMap.from_graph(dom, cod, graph)


def partial_maps(dom: FinSet, cod: FinSet) -> st.SearchStrategy[PartialMap]:
    entry = st.none() if not len(cod) else st.one_of(st.none(), st.integers(0, len(cod) - 1))
    return st.lists(entry, min_size=len(dom), max_size=len(dom)).map(lambda t: PartialMap(dom, cod, tuple(t)))


def idempotents(obj: FinSet) -> st.SearchStrategy[PartialMap]:
    return st.lists(st.booleans(), min_size=len(obj), max_size=len(obj)).map(
        lambda keep: PartialMap(obj, obj, tuple(i if k else None for i, k in enumerate(keep)))
    )


@st.composite
def finsets(draw, max_size: int = 3) -> FinSet:
    n = draw(st.integers(0, max_size))
    name = draw(st.sampled_from(["P", "Q", "R"]))
    return atom(name, [f"{name.lower()}{i}" for i in range(n)])
