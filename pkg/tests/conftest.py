import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from cylknot import Endpoint, GaussDiagram, Letter, OVER, UNDER

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# Pass/fail lines from the acceptance battery, echoed after the run so they
# are visible without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)

TREFOIL = "O1+U2+O3+U1+O2+U3+"
FIGURE_EIGHT = "O1+U2+O3-U4-O2+U1+O4-U3-"

# 34-letter word of the blue knot in the thickened torus; its reduced form
# is the lattice element with raw coordinates (4, 4).
KNOWN_NONSLICE_WORD = (
    "b b^-1 B' B'^-1 B B^-1 B B^-1 B' a B' B^-1 b' a b b^-1 b a b' a a b'^-1 "
    "a b^-1 a B^-1 b' a a B^-1 B b^-1 a b^-1"
)
KNOWN_NONSLICE_REDUCED = "B' B^-1 B' B^-1 b' b^-1 b' b^-1"

LETTER_POOL = tuple(
    Letter(sym, exp) for sym in ("a", "b", "b'", "B", "B'") for exp in (1, -1)
)


def random_word(rng: random.Random, max_len: int):
    return tuple(rng.choice(LETTER_POOL) for _ in range(rng.randint(0, max_len)))


def diagram_from_matching(matching, passages=None, signs=None) -> GaussDiagram:
    """Build a diagram from a perfect matching on 0..2n-1.

    ``matching`` is a list of (i, j) slot pairs; the first slot of each pair
    is the overcrossing unless ``passages`` overrides it.
    """
    n = len(matching)
    endpoints = [None] * (2 * n)
    for c, (i, j) in enumerate(matching):
        over_first = True if passages is None else passages[c]
        sign = 1 if signs is None else signs[c]
        endpoints[i] = Endpoint(str(c + 1), OVER if over_first else UNDER, sign)
        endpoints[j] = Endpoint(str(c + 1), UNDER if over_first else OVER, sign)
    return GaussDiagram(tuple(endpoints))


def all_matchings(points):
    """Every perfect matching of the list ``points``."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in all_matchings(remaining):
            yield [(first, partner)] + tail


@st.composite
def diagrams(draw, max_chords: int = 6):
    n = draw(st.integers(min_value=0, max_value=max_chords))
    slots = draw(st.permutations(list(range(2 * n))))
    matching = [(slots[2 * c], slots[2 * c + 1]) for c in range(n)]
    passages = [draw(st.booleans()) for _ in range(n)]
    signs = [draw(st.sampled_from((1, -1))) for _ in range(n)]
    return diagram_from_matching(matching, passages, signs)


@pytest.fixture
def rng():
    return random.Random(20240817)
