import pytest

from semicov import oracle

_acceptance: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def universe():
    """Every numerical semigroup of genus <= 8, generated by the oracle."""
    return oracle.brute_semigroups(8)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
