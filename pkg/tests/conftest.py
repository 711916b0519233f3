import io
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cubicacm import _cache, cli, lattice  # noqa: E402

CORRUPT_GRAM = (1, -1, -1, -1, -1, -1, -2)

_criteria = {}


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="session")
def verify_output():
    """One full ``verify`` run through the CLI, shared by the whole session."""
    code, out, err = run_cli("verify")
    return code, json.loads(out), err


@pytest.fixture(scope="session")
def report(verify_output):
    return {c["id"]: c for c in verify_output[1]["checks"]}


@pytest.fixture
def corrupted_gram():
    saved = lattice.GRAM_DIAG
    lattice.GRAM_DIAG = CORRUPT_GRAM
    _cache.clear_caches()
    try:
        yield
    finally:
        lattice.GRAM_DIAG = saved
        _cache.clear_caches()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = next((m for m in getattr(report, "_criterion", ()) or ()), None)
    if marker is None or (report.when != "call" and report.passed):
        return
    n, title = marker
    if report.when == "call" or report.failed:
        _criteria.setdefault(n, (title, []))[1].append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = [tuple(m.args)]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, results = _criteria[n]
        status = "PASS" if results and all(results) else "FAIL"
        terminalreporter.write_line(f"{status} criterion {n:2d}: {title}")
