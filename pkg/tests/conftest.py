import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Call as ``criterion(n, title, passed, detail)``; a test that raises first is recorded as FAIL."""
    seen = []

    def record(n, title, passed, detail=""):
        seen.append(n)
        _ACCEPTANCE[n] = (title, bool(passed), detail)

    yield record
    marker = request.node.get_closest_marker("criterion")
    if marker and marker.args[0] not in seen:
        n, title = marker.args
        _ACCEPTANCE[n] = (title, False, "check raised before reporting")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {n}. {title}: {detail}")
