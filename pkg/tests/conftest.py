import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def finite_arrays(min_size=1, max_size=60, lo=-10.0, hi=10.0):
    return arrays(
        np.float64,
        st.integers(min_size, max_size),
        elements=st.floats(lo, hi, allow_nan=False, allow_infinity=False, width=64),
    )


alphas = st.floats(0.0, 1.0, allow_nan=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20121)


# acceptance criteria: tests marked ``criterion(n, title)`` roll up into one
# PASS/FAIL line per criterion at the end of the run
_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    num = getattr(report, "criterion", None)
    if num is None:
        return
    entry = _criteria[num]
    if report.when == "call" or report.failed:
        entry["ok"] = entry["ok"] and report.passed
        entry["ran"] = True


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        num, title = mark.args
        _criteria.setdefault(num, {"title": title, "ok": True, "ran": False})
        outcome.get_result().criterion = num


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {e['title']}")
