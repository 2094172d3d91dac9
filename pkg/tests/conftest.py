import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# PASS/FAIL lines recorded by the acceptance tests; echoed after the run so
# they survive pytest's fd-level output capture.
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.line(line)
