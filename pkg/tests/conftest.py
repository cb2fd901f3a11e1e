import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

E12 = np.array([[0, 1], [0, 0]], dtype=complex)

# zero or magnitude in [1e-3, 2]: products of several entries stay far from underflow
finite = st.one_of(st.just(0.0), st.floats(1e-3, 2), st.floats(-2, -1e-3))


@st.composite
def complex_matrices(draw, rows=None, cols=None, max_dim=4, square=False):
    r = rows or draw(st.integers(1, max_dim))
    c = r if square else (cols or draw(st.integers(1, max_dim)))
    re = draw(arrays(np.float64, (r, c), elements=finite))
    im = draw(arrays(np.float64, (r, c), elements=finite))
    return re + 1j * im


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one line per acceptance criterion, printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
