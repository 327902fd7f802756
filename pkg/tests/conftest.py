import pytest

from hopflens import make

_ACCEPTANCE = []


def record_acceptance(name, ok, detail=""):
    _ACCEPTANCE.append((name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}".rstrip())


@pytest.fixture
def q():
    """Shorthand constructor: q(5, 2) -> 5/2."""
    return make
