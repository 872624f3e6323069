import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled by tests/test_acceptance.py: criterion number -> (title, passed, seconds, limit)
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        title, ok, secs, limit = ACCEPTANCE_RESULTS[k]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {k:2d}. {title} ({secs:.2f}s, limit {limit:g}s)")
