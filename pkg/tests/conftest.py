import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from iib.fixtures import random_graph, random_instance

settings.register_profile(
    "iib", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("iib")


@st.composite
def instances(draw, max_n=10, max_k=4, max_l=4):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_instance(random.Random(seed), max_n=max_n, max_k=max_k, max_l=max_l)


@st.composite
def raw_graphs(draw, max_n=10):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_graph(rng, rng.randint(1, max_n))


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, echoed at the end of the session
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, detail: str) -> bool:
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
