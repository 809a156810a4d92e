import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from spincover.gf2core import GF2Mat, GF2Vec

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@st.composite
def vectors(draw, n=None, max_n=12):
    if n is None:
        n = draw(st.integers(1, max_n))
    return GF2Vec(n, draw(st.integers(0, (1 << n) - 1)))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=8):
    rows = rows if rows is not None else draw(st.integers(1, max_dim))
    cols = cols if cols is not None else draw(st.integers(1, max_dim))
    data = tuple(draw(st.integers(0, (1 << cols) - 1)) for _ in range(rows))
    return GF2Mat(rows, cols, data)


def to_np(m: GF2Mat):
    import numpy as np
    return np.array([[m[i, j] for j in range(m.cols)] for i in range(m.rows)], dtype=np.int64)


@pytest.fixture(scope="session")
def fixtures():
    from spincover._oracles import load_fixtures
    return load_fixtures()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(n))
