"""Shared fixtures: small working fields and a terse parse helper."""

import pytest

from fanolines import PrimeField, build_extension, parse_polynomial
from fanolines.poly import default_names


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def f11():
    return PrimeField(11)


@pytest.fixture(scope="session")
def f10007():
    return PrimeField(10007)


@pytest.fixture(scope="session")
def f9():
    return build_extension(3, 2)


def parse(text, nvars, field):
    return parse_polynomial(text, default_names(nvars), field)


# acceptance-gate result lines, echoed after the run so they survive
# pytest's fd-level capture
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
