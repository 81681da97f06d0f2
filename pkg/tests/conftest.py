import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mcdm_compare import load_reference_dataset, run_study, validate_matrix  # noqa: E402

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def bank():
    return load_reference_dataset()


@pytest.fixture(scope="session")
def bank_printed():
    return load_reference_dataset(as_printed=True)


@pytest.fixture(scope="session")
def study(bank):
    return run_study(bank)


@pytest.fixture(scope="session")
def bank_rows(bank):
    return [list(map(float, r)) for r in bank.values]


BENEFIT = [True] * 5 + [False] * 2


@st.composite
def matrices(draw, min_m=2, max_m=12, min_n=1, max_n=8, lo=0.01, hi=100.0):
    """Random valid decision matrices (strictly positive, no constant column)."""
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    cell = st.floats(lo, hi, allow_nan=False, allow_infinity=False)
    values = np.array(draw(st.lists(st.lists(cell, min_size=n, max_size=n), min_size=m, max_size=m)))
    # force every column to vary
    for j in range(n):
        if values[:, j].max() == values[:, j].min():
            values[0, j] = values[0, j] * 1.5 if values[0, j] < hi / 2 else values[0, j] / 1.5
    dirs = draw(st.lists(st.sampled_from(["max", "min"]), min_size=n, max_size=n))
    return validate_matrix(
        [f"A{i}" for i in range(m)], [f"C{j}" for j in range(n)], values, directions=dirs
    )


def random_matrix(rng, m, n, lo=0.01, hi=100.0):
    values = rng.uniform(lo, hi, size=(m, n))
    dirs = rng.choice(["max", "min"], size=n)
    return validate_matrix(
        [f"A{i}" for i in range(m)], [f"C{j}" for j in range(n)], values, directions=dirs
    )


# -- acceptance summary ------------------------------------------------------

CRITERIA = {
    "1": "criteria weights",
    "2": "max/min weight ratios",
    "3": "score and rank columns",
    "4": "R_score grid",
    "5": "Spearman matrices and averages",
    "6": "property suites",
    "7": "RAM final-score form",
}
_outcomes: dict[str, list[tuple[str, bool]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _outcomes.setdefault(str(marker.args[0]), []).append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(_outcomes, key=lambda k: (not k.isdigit(), k)):
        results = _outcomes[key]
        passed = sum(ok for _, ok in results)
        label = CRITERIA.get(key, "diagnostic")
        status = "PASS" if passed == len(results) else "FAIL"
        tr.write_line(f"criterion {key} ({label}): {status}  [{passed}/{len(results)} checks]")
        for name, ok in results:
            if not ok:
                tr.write_line(f"    failed: {name}")
