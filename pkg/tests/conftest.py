from __future__ import annotations

ACCEPTANCE_RESULTS: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        ACCEPTANCE_RESULTS[report.nodeid] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    from bps_series.goettsche import SIGN_CONVENTION

    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(ACCEPTANCE_RESULTS):
        outcome, duration = ACCEPTANCE_RESULTS[nodeid]
        name = nodeid.split("::")[-1]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{name}: {verdict} ({duration:.2f}s)")
    terminalreporter.write_line(f"run log, BPS sign convention: {SIGN_CONVENTION}")
