import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, text = mark.args
    ok = rep.passed and not hasattr(rep, "wasxfail")
    if rep.skipped and hasattr(rep, "wasxfail"):
        ok = False
    _CRITERIA.setdefault(n, []).append((item.name, text, ok))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        for name, text, ok in _CRITERIA[n]:
            terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {text}  [{name}]")
