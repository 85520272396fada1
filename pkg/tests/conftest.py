def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                extra = "".join(f"  {k}={v}" for k, v in props.items() if k not in ("criterion", "title"))
                lines.append((props["criterion"], f"{outcome.upper():6} AC{props['criterion']:02d} {props['title']}{extra}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
