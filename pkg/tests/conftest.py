import numpy as np
import pytest


def eq11_covariance(A, Aprime, B, C):
    return np.array(
        [
            [A, 0.0, B, C],
            [0.0, A, C, -B],
            [B, C, Aprime, 0.0],
            [C, -B, 0.0, Aprime],
        ]
    )


def invariant_pt_eigenvalues(sigma):
    """PT symplectic eigenvalues of a two-mode covariance from its local invariants."""
    alpha, beta, gamma = sigma[:2, :2], sigma[2:, 2:], sigma[:2, 2:]
    delta = np.linalg.det(alpha) + np.linalg.det(beta) - 2.0 * np.linalg.det(gamma)
    det = np.linalg.det(sigma)
    disc = np.sqrt(max(delta**2 - 4.0 * det, 0.0))
    return np.sqrt((delta + disc) / 2.0), np.sqrt(max((delta - disc) / 2.0, 0.0))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
