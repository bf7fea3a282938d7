"""Shared session-scoped fixtures so the expensive suites run once."""

import pytest

from majrep import decomp


@pytest.fixture(scope="session")
def intersection_report():
    return decomp.intersection_suite()


@pytest.fixture(scope="session")
def udependent_report():
    return decomp.udependent_suite()


@pytest.fixture(scope="session")
def radical_reports():
    return {n: decomp.radical_report(n) for n in range(8, 13)}


@pytest.fixture(scope="session")
def dipendenti_reports():
    return {n: decomp.dipendenti_suite(n) for n in (8, 9, 10)}
