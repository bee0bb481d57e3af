from __future__ import annotations

import pytest

_RESULTS: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion number and short title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    entry = _RESULTS.setdefault(num, {"title": title, "ok": True, "ran": False, "secs": 0.0})
    if rep.when == "call":
        entry["ran"] = True
        entry["secs"] += rep.duration
    if rep.failed or (rep.when == "call" and rep.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_RESULTS):
        e = _RESULTS[num]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        tr.write_line(f"[{status}] {num:2d}. {e['title']} ({e['secs']:.2f}s)")
