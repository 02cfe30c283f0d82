"""Terminal summary for the acceptance suite.

Every test in test_acceptance.py is one acceptance criterion; this hook
prints one PASS/FAIL line per criterion (with duration and any recorded
values) after the normal pytest output, so the criteria can be audited
without reading the dots.
"""

_ACCEPTANCE_REPORTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE_REPORTS.append(report)


def _summary_line(report):
    verdict = "PASS" if report.passed else "FAIL"
    name = report.nodeid.split("::")[-1]
    line = "%s  %-46s %6.2fs" % (verdict, name, report.duration)
    extras = "; ".join("%s=%s" % (k, v) for k, v in report.user_properties)
    if extras:
        line += "  [%s]" % extras
    return line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_REPORTS:
        return
    terminalreporter.section("acceptance criteria")
    for report in sorted(_ACCEPTANCE_REPORTS, key=lambda r: r.nodeid):
        kwargs = {"green": True} if report.passed else {"red": True, "bold": True}
        terminalreporter.write_line(_summary_line(report), **kwargs)
