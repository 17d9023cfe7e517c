import pytest

from coxring import PointConfiguration, PrimeField, QQ, full_ideal

F101 = PrimeField(101)
F32003 = PrimeField(32003)

PARAMS = {
    4: (), 5: (2, 3), 6: (2, 3, 5, 7), 7: (2, 3, 5, 7, 13, 17),
    8: (2, 3, 5, 7, 13, 17, 19, 23),
}


def config(r, F=QQ):
    return PointConfiguration.from_params(F, PARAMS[r], r=r)


@pytest.fixture(scope="session")
def ideals():
    """Relation sets keyed by r: Q for r <= 6, F_101 for r = 7, F_32003 for r = 8."""
    cache = {}

    def get(r):
        if r not in cache:
            F = QQ if r <= 6 else (F101 if r == 7 else F32003)
            cache[r] = full_ideal(r, config(r, F))
        return cache[r]
    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
