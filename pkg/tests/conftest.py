from collections import defaultdict

import pytest

CRITERIA = {
    1: "worked 4x7 alignment: gap profile and both trims",
    2: "ASHES alignment: gap keeps 3 sites, core keeps 5",
    3: "Quechua morphemes trim to the root",
    4: "Table 4 counts reproduce printed P and W within 0.005",
    5: "synthetic affix data: gap trimming beats none and random",
    6: "property suites",
    7: "greedy patterns vs brute-force minimum",
    8: "byte-identical compare output",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _outcomes[marker.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            continue
        failed = [name for name, ok in results if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"[{status}] criterion {n}: {title} ({len(results) - len(failed)}/{len(results)} checks)"
        terminalreporter.write_line(line)
        for name in failed:
            terminalreporter.write_line(f"         failed: {name}")
