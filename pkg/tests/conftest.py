import pytest

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE = []


class _Recorder:
    def __call__(self, number, name, ok, detail=""):
        ACCEPTANCE.append((number, name, bool(ok), detail))
        return ok


@pytest.fixture
def criterion():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:>2}: {name}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
