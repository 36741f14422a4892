import pytest

#: acceptance lines collected during the run, printed in the terminal summary
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def acceptance_line():
    def record(ac: str, ok: bool, detail: str) -> None:
        ACCEPTANCE[ac] = f"{ac} {'PASS' if ok else 'FAIL'}: {detail}"
        print(ACCEPTANCE[ac])

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for ac in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        terminalreporter.write_line(ACCEPTANCE[ac])
