"""Per-criterion bookkeeping for the acceptance suite.

Tests tagged ``@pytest.mark.criterion(n)`` are tallied, and the terminal
summary prints one PASS/FAIL line per criterion.
"""
from collections import defaultdict

CRITERIA = {
    1: "disconnected point-image example: weak, strong, not cp, not continuous",
    2: "second interval example: weak, not strong, cp, continuous at r = 2",
    3: "two-point images: isomorphic, subdivisions not, cut points differ",
    4: "3x3 square onto its ring: cp retraction, no continuous one up to r = 2",
    5: "local cp test agrees with brute force on 500 random maps",
    6: "composition of 200 random cp pairs is cp",
    7: "morphological maps are cp; disconnected structuring elements are not",
    8: "windowed erosion and opening identities; the ring closes to the square",
    9: "shy iff inverse is cp on 200 random continuous surjections",
    10: "cp retraction exists iff the target is connected",
    11: "CLI fixtures: exit codes and byte-stable --json reports",
}

_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion checked by this test")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if call.when == "setup" and call.excinfo is not None:
        _outcomes[n].append(False)
    elif call.when == "call":
        _outcomes[n].append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        runs = _outcomes.get(n)
        if not runs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status:<7} {title}")
