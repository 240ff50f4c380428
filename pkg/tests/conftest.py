def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[k])
