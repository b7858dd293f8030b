def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome, verdict in (("passed", "PASS"), ("failed", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(report.user_properties)
            if report.when == "call" and "criterion" in props:
                lines.append((props["criterion"], verdict))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, verdict in sorted(lines, key=lambda x: int(x[0].split()[0][2:])):
        terminalreporter.write_line(f"{verdict}  {criterion}")
