_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.passed:
        _acceptance_results[name] = "PASS"
    elif report.skipped:
        _acceptance_results[name] = "SKIP"
    else:
        _acceptance_results[name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_acceptance_results):
        terminalreporter.write_line(f"{name}: {_acceptance_results[name]}")
