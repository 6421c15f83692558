import sys

import pytest
from gmpy2 import mpq
from hypothesis import settings, strategies as st

from tuaxioms import Game

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(mpq, st.integers(-6, 6), st.sampled_from([1, 1, 2, 3, 5]))


@st.composite
def games(draw, n=None, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    worths = draw(st.lists(small_rationals, min_size=(1 << n) - 1, max_size=(1 << n) - 1))
    return Game(n, [mpq(0), *worths])


def brute_mobius(v):
    """Dividends straight from the alternating-sum definition."""
    out = [mpq(0)] * (1 << v.n)
    for T in range(1, 1 << v.n):
        S = T
        while True:
            sign = -1 if (bin(T).count("1") - bin(S).count("1")) % 2 else 1
            out[T] += sign * v.worths[S]
            if S == 0:
                break
            S = (S - 1) & T
    return out


@pytest.fixture
def w1_v():
    return Game(3, [mpq(x) for x in (0, 1, 1, 0, 1, 0, 0, 2)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
