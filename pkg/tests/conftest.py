import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        label, title = marker.args
        _criteria.append((label, title, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, title, passed in _criteria:
        terminalreporter.write_line(f"criterion {label}: {'PASS' if passed else 'FAIL'}  {title}")
