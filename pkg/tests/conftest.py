import numpy as np
import pytest
import skimage.data


@pytest.fixture(scope="session")
def camera():
    """512x512 8-bit grayscale test host."""
    return skimage.data.camera().astype(np.float64)


@pytest.fixture(scope="session")
def corpus():
    """The five 512x512 grayscale hosts used across the suite."""
    names = ("camera", "gravel", "brick", "grass", "moon")
    return {n: getattr(skimage.data, n)().astype(np.float64) for n in names}


@pytest.fixture
def rng():
    return np.random.default_rng(0)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance report")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
