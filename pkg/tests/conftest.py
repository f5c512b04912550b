import itertools
import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from covertsynth.fsa import from_transitions

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile(
    "thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def automata(draw, events=("a", "b", "c"), max_states=4, marked=True):
    """Small random deterministic automaton over ``events``."""
    n = draw(st.integers(1, max_states))
    triples = []
    for q in range(n):
        for e in events:
            if draw(st.booleans()):
                triples.append((q, e, draw(st.integers(0, n - 1))))
    mk = [q for q in range(n) if marked and draw(st.booleans())]
    return from_transitions(events, triples, 0, mk, states=list(range(n)))


def all_strings(events, max_len):
    for r in range(max_len + 1):
        yield from itertools.product(sorted(events), repeat=r)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
