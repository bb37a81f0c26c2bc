import random

import pytest
from hypothesis import HealthCheck, settings

from catnuc.catalog import random_invertible_matrix
from catnuc.cocycles import function_bialgebra, isotypic_module
from catnuc.fields import QQ
from catnuc.groups import cyclic_group
from catnuc.modcat import RModule

settings.register_profile(
    "exact",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def kz2():
    return function_bialgebra(cyclic_group(2))


@pytest.fixture(scope="session")
def kz3():
    return function_bialgebra(cyclic_group(3))


def small_modules(R, rng):
    """Regular module plus a 1- and a 2-dimensional module in a random basis."""
    mods = [RModule.regular(R)]
    for d in (1, 2):
        labels = [rng.randrange(R.dim) for _ in range(d)]
        mods.append(isotypic_module(R, labels, random_invertible_matrix(d, QQ, rng)))
    return mods


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::test_")[-1]
                lines.append(f"{'PASS' if outcome == 'passed' else 'FAIL'} {name} ({rep.duration:.1f}s)")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)
