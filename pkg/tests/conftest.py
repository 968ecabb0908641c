import pytest

from accordion_tau.geometry import validate_dissection

# one line per acceptance criterion, echoed after the run so the verdicts
# survive pytest's output capture
ACCEPTANCE_LINES: list[str] = []


def record_criterion(criterion: int, ok: bool, detail: str = "") -> bool:
    tag = "PASS" if ok else "FAIL"
    line = f"[criterion {criterion}] {tag}" + (f"  {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def hexagon_fan():
    return validate_dissection(6, [(0, 2), (0, 3), (0, 4)])


@pytest.fixture
def heptagon_zigzag():
    # the three-diagonal heptagon dissection whose quiver is 1 -> 2 -> 3
    # with the composite killed
    return validate_dissection(7, [(0, 2), (2, 4), (4, 6)])
