import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRIT = re.compile(r"test_acceptance\.py::test_c(\d+)_")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcome = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            m = _CRIT.search(getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                num = int(m.group(1))
                if key != "passed" or num not in outcome:
                    outcome[num] = "PASS" if key == "passed" else "FAIL"
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(outcome):
        terminalreporter.write_line(f"{outcome[num]} criterion {num}: {CRITERIA[num]}")
