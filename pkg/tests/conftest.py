"""Per-criterion PASS/FAIL summary for tests marked ``criterion``."""

import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "time": 0.0, "count": 0})
    if report.failed:
        entry["ok"] = False
    if report.when == "call":
        entry["time"] += report.duration
        entry["count"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        e = _results[number]
        status = "PASS" if e["ok"] and e["count"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:2d} {status}  {e['title']}  ({e['count']} checks, {e['time']:.2f} s)"
        )
