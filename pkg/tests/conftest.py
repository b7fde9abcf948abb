import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matbrion.fixtures import random_matroid, random_set_function, random_submodular
from matbrion.laurent import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def laurent_polys(nvars: int, max_terms: int = 5, lo: int = -3, hi: int = 3):
    exps = st.tuples(*[st.integers(lo, hi)] * nvars)
    return st.dictionaries(exps, st.integers(-4, 4), max_size=max_terms).map(
        lambda d: LaurentPoly(nvars, d))


@st.composite
def matroids(draw, min_n: int = 1, max_n: int = 4):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32))
    return random_matroid(random.Random(seed), n)


@st.composite
def matroid_and_delta(draw, min_n: int = 1, max_n: int = 4, submodular: bool = False):
    m = draw(matroids(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32)))
    z = random_submodular(rng, m.n) if submodular else random_set_function(rng, m.n)
    return m, z


@pytest.fixture
def rng():
    return random.Random(12345)
