import gridpoints


def pytest_terminal_summary(terminalreporter):
    if not gridpoints.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(gridpoints.RESULTS):
        ok, detail = gridpoints.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
