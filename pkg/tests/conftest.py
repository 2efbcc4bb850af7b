import random

import pytest
from hypothesis import strategies as st

from netwidth.frame_net import Frame3
from netwidth.generators import random_plane_graph


@st.composite
def plane_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    keep = draw(st.floats(0.0, 1.0))
    return random_plane_graph(n, seed, keep=keep)


@st.composite
def framed_graphs(draw, max_n=10):
    g = draw(plane_graphs(max_n))
    n = len(g.outer_walk) - 1
    j = draw(st.integers(0, n))
    k = draw(st.integers(j, n))
    return g, Frame3(g.outer_walk, j, k)


def random_instances(count, max_n, seed=0, min_n=1):
    """Deterministic stream of ``(graph, frame)`` pairs."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        g = random_plane_graph(n, rng.randrange(10**9), keep=rng.random())
        w = len(g.outer_walk) - 1
        j = rng.randint(0, w)
        k = rng.randint(j, w)
        yield g, Frame3(g.outer_walk, j, k)


@pytest.fixture
def c15():
    from netwidth.generators import cycle
    from netwidth.frame_net import make_frame

    g = cycle(15)
    return g, make_frame(g, 5, 10)


_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line for an acceptance criterion."""

    def record(number, name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}"
        _ACCEPTANCE.append(line + (f" ({detail})" if detail else ""))
        print(_ACCEPTANCE[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
