import pytest

_CRITERIA: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _CRITERIA.append((number, title, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, verdict, seconds in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title} ({seconds:.2f}s)")
