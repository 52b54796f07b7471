import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# (criterion, passed, seconds, detail) rows filled in by test_acceptance
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, secs, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {detail}")
