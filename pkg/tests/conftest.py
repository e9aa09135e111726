import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, list[str]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = getattr(report, "criterion", None)
    if mark is None:
        return
    num, title = mark
    _titles[num] = title
    _criteria.setdefault(num, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_criteria):
        outs = _criteria[num]
        if any(o == "failed" for o in outs):
            verdict = "FAIL"
        elif all(o == "passed" for o in outs):
            verdict = "PASS"
        else:
            verdict = "SKIP"
        tr.write_line(f"criterion {num:2d}: {verdict}  {_titles[num]}  ({outs.count('passed')}/{len(outs)} checks)")
