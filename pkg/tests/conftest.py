def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
    missing = [n for n in range(1, 15) if n not in results]
    if missing:
        terminalreporter.write_line(f"not run: {missing}")
