from collections import defaultdict

from hypothesis import HealthCheck, settings

# every property suite runs a fixed, reproducible sequence of examples
settings.register_profile(
    "repro", derandomize=True, deadline=None, max_examples=200,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large])
settings.load_profile("repro")

_criteria = defaultdict(list)


def pytest_runtest_logreport(report):
    # acceptance tests are named test_criterion_<n>_<what>
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = name.split("_")[2]
        _criteria[num].append((name[len("test_criterion_") + len(num) + 1:], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=int):
        checks = _criteria[num]
        bad = [c for c, outcome in checks if outcome != "passed"]
        status = "PASS" if not bad else "FAIL"
        detail = f"{len(checks) - len(bad)}/{len(checks)} checks"
        if bad:
            detail += "; failing: " + ", ".join(bad)
        terminalreporter.write_line(f"criterion {num}: {status} ({detail})")
