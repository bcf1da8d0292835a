import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from gsp4sieve.fixtures import get_fixture, hecke_data_dir  # noqa: E402
from gsp4sieve.heckedata import load_hecke_dir  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def curves():
    return {name: get_fixture(name).curve() for name in ("A", "A2", "A3", "Leprevost", "BrumerKramer")}


@pytest.fixture(scope="session")
def hecke_table():
    return load_hecke_dir(hecke_data_dir())


# -- acceptance bookkeeping ---------------------------------------------------

_OUTCOMES = {}
_CRITERION_OF = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _CRITERION_OF[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    n = _CRITERION_OF.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _OUTCOMES.setdefault(n, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        seen = set(_OUTCOMES[n])
        verdict = "FAIL" if "failed" in seen else "PASS" if "passed" in seen else "SKIP"
        terminalreporter.write_line(f"criterion {n}: {verdict} ({len(_OUTCOMES[n])} checks)")
