import pytest

# filled by tests/test_acceptance.py: (criterion, passed, detail)
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test sets ``rec.detail`` as it goes."""

    class Record:
        detail = ""

    rec = Record()
    yield rec
    failed = getattr(request.node, "rep_call", None)
    passed = failed is not None and failed.passed
    ACCEPTANCE_LINES.append((request.node.name.removeprefix("test_"), passed, rec.detail))


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    setattr(item, f"rep_{rep.when}", rep)
    return rep
