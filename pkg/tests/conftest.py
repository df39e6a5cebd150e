import common


def pytest_terminal_summary(terminalreporter):
    if common.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(common.ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
