def pytest_terminal_summary(terminalreporter):
    # surface the per-criterion lines even when capture is on
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(RESULTS):
            terminalreporter.write_line(line)
