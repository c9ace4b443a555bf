"""Collects one summary line per acceptance criterion."""

_LINES = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if hasattr(report, "wasxfail"):
        verdict = "FAIL (known, see notes)"
    else:
        verdict = "PASS" if report.passed else "FAIL"
    _LINES.append(f"criterion {props['criterion']:>3}: {verdict:<24} {props.get('detail', '')}")


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
