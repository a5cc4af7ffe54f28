import pytest

from ssetlab.lifting import fill_inner_horns
from ssetlab.scenario import build_objects
from ssetlab.simplicial import boundary, horn, standard_simplex

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def env():
    return build_objects()


@pytest.fixture(scope="session")
def filled():
    return fill_inner_horns(build_objects()["S"], 3, 1)


def small_fixtures():
    """Named simplicial sets used across the property suites."""
    objs = build_objects()
    out = {f"Delta{n}": standard_simplex(n) for n in range(4)}
    out.update({f"Horn3_{k}": horn(3, k) for k in range(4)})
    out["Horn2_1"] = horn(2, 1)
    out["Boundary3"] = boundary(3)
    out["S"] = objs["S"]
    return out
