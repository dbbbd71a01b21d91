import re


def pytest_terminal_summary(terminalreporter):
    criteria = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if not m:
                continue
            name, ok, runs = criteria.get(int(m.group(1)), (m.group(2).replace("_", " "), True, 0))
            criteria[int(m.group(1))] = (name, ok and outcome == "passed", runs + (rep.when == "call"))
    if criteria:
        terminalreporter.section("acceptance criteria")
        for num in sorted(criteria):
            name, ok, runs = criteria[num]
            terminalreporter.write_line(f"AC{num} {'PASS' if ok else 'FAIL'}  {name} ({runs} case{'s' * (runs != 1)})")
