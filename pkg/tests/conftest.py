import pytest

from tamepoly.poly import Xspace, parse, xspace

NAGATA_TEXT = (
    "x1 - 2*x2*(x2^2 + x1*x3) - x3*(x2^2 + x1*x3)^2",
    "x2 + x3*(x2^2 + x1*x3)",
    "x3",
)


def P(text, n=3):
    return parse(text, xspace(n))


def G(text, m=2):
    return parse(text, Xspace(m))


@pytest.fixture
def nagata():
    from tamepoly.calculus import PolySystem
    return PolySystem(tuple(P(t) for t in NAGATA_TEXT))


# Acceptance results are collected here by tests/test_acceptance.py and
# printed as one PASS/FAIL line per criterion at the end of the run.
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, note = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {note}")
