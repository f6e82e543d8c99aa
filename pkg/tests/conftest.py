import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# exact arithmetic on random inputs has long-tail timings; no per-example deadline
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter, config):
    lines = config.__dict__.get("_acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
