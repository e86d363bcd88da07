import pytest

from cdring.quadratic import make_ring

# (d, f) pairs covering imaginary/real, d mod 4 branches, maximal and not.
TEST_RINGS = [(-1, 1), (-5, 1), (-3, 1), (-7, 1), (2, 1), (5, 1), (13, 1),
              (-3, 2), (-1, 2), (5, 2), (-5, 3)]
MAXIMAL = [df for df in TEST_RINGS if df[1] == 1]
NON_MAXIMAL = [df for df in TEST_RINGS if df[1] > 1]


def ring_id(df):
    return f"d{df[0]}f{df[1]}"


@pytest.fixture(params=TEST_RINGS, ids=ring_id)
def ring(request):
    return make_ring(*request.param)


@pytest.fixture(params=MAXIMAL, ids=ring_id)
def maximal_ring(request):
    return make_ring(*request.param)


@pytest.fixture
def gauss():
    return make_ring(-1, 1)


@pytest.fixture
def z_sqrt_m5():
    return make_ring(-5, 1)


@pytest.fixture
def eisen_f2():
    return make_ring(-3, 2)


# Acceptance summary lines, filled by tests/test_acceptance.py.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
