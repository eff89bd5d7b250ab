import pytest
from hypothesis import settings

settings.register_profile("repo", derandomize=True, deadline=None)
settings.load_profile("repo")

from lexcoh import GF32003, MonomialIdeal, PolyIdeal, Polynomial, RingContext


def mono(text: str, n: int) -> MonomialIdeal:
    return MonomialIdeal.parse(text, n)


def poly_ideal(text: str, n: int, field=GF32003) -> PolyIdeal:
    ctx = RingContext(n, field)
    return PolyIdeal(ctx, [Polynomial.parse(ctx, s) for s in text.split(",")])


SKEW = "X1*X3, X1*X4, X2*X3, X2*X4"


@pytest.fixture
def skew():
    return mono(SKEW, 4)


# one PASS/FAIL line per acceptance criterion, echoed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
