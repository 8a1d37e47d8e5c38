import pytest

# criterion number -> list of (test id, passed)
_ACCEPTANCE: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        k, title = marker.args
        _ACCEPTANCE.setdefault(k, [title])
        _ACCEPTANCE[k].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        title, *results = _ACCEPTANCE[k]
        ok = bool(results) and all(passed for _, passed in results)
        tr.write_line(f"acceptance criterion {k}: {'PASS' if ok else 'FAIL'}  {title}")
        for name, passed in results:
            if not passed:
                tr.write_line(f"    failed: {name}")
