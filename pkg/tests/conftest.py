"""Shared fixtures: the worked relations and profiles used across tests."""

import pytest

from dsrvote import parse_ballots, validate_relation

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)

EX2_BALLOTS = """\
alternatives: x,y,z,u
1: x > y > z > u
1: y > z > u > x
1: z > u > x > y
"""

EX4_BALLOTS = """\
alternatives: a,b,c
4: approve {a}
2: approve {b}
1: approve {b,c}
4: approve {c}
"""


@pytest.fixture
def ex1_rel():
    # a beats b, c, d; c beats b; b beats d; c ties d
    return validate_relation(
        [
            [0, 1, 1, 1],
            [-1, 0, -1, 1],
            [-1, 1, 0, 0],
            [-1, -1, 0, 0],
        ],
        names=("a", "b", "c", "d"),
    )


@pytest.fixture
def ex2_profile():
    return parse_ballots(EX2_BALLOTS)


@pytest.fixture
def ex3_rel():
    return validate_relation(
        [
            [0, 1, -1, 1, 1, -1],
            [-1, 0, 1, -1, 1, 1],
            [1, -1, 0, 1, -1, 1],
            [-1, 1, -1, 0, -1, 1],
            [-1, -1, 1, 1, 0, -1],
            [1, -1, -1, -1, 1, 0],
        ],
        names=("a1", "a2", "a3", "a4", "a5", "a6"),
    )


@pytest.fixture
def ex4_approval():
    return parse_ballots(EX4_BALLOTS)


@pytest.fixture
def ex5_rel():
    return validate_relation(
        [
            [0, 1, 1, -1],
            [-1, 0, 1, 1],
            [-1, -1, 0, 1],
            [1, -1, -1, 0],
        ],
        names=("a", "b", "c", "d"),
    )


@pytest.fixture
def ex6_rel():
    # a beats b, b beats c, a ties c
    return validate_relation(
        [
            [0, 1, 0],
            [-1, 0, 1],
            [0, -1, 0],
        ],
        names=("a", "b", "c"),
    )
