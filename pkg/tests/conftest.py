import numpy as np
import pytest

# the paper's worked binary example
PAPER_IMAGE = np.array(
    [
        [1, 1, 1, 1, 1],
        [1, 1, 1, 1, 0],
        [1, 1, 1, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
    ],
    dtype=np.uint8,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def paper_image():
    return PAPER_IMAGE.copy()


@pytest.fixture
def ramp():
    # g(x, y) = x, one gray unit per column
    return np.tile(np.arange(24, dtype=np.uint8), (24, 1))


_criteria = []


@pytest.fixture
def criterion():
    """Record a named acceptance criterion and assert it."""

    def check(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else "")
        _criteria.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.write_line(line)
