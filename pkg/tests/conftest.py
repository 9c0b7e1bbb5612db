"""Shared pytest plumbing: surfaces the acceptance-criterion result lines.

The acceptance tests record one pass/fail line per criterion; printing
them from inside a test would be swallowed by capture, so they are
replayed in the terminal summary instead.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
