from __future__ import annotations

import pytest

from coapprox import mat, validate_basis


def column_basis(*columns):
    """Basis from spanning vectors (each a full ambient-length tuple)."""
    return validate_basis(mat(zip(*columns)))


@pytest.fixture
def span3_l16():
    """Three-dimensional subspace of l1^6 used as the worked fixture."""
    return column_basis(
        (4, 2, 1, -1, -4, 4),
        (-1, 3, 5, 2, 1, 6),
        (1, 4, 2, 1, -1, 8),
    )


@pytest.fixture
def pair_l17_coproximinal():
    return column_basis((1, 1, 2, 0, 4, -2, 0), (1, 2, 2, 0, 4, -4, 0))


@pytest.fixture
def pair_l17_not_coproximinal():
    return column_basis((1, 0, 2, 3, -1, -2, 0), (-1, 0, 1, 0, 1, -1, 0))


@pytest.fixture
def pair_l15_cochebyshev():
    return column_basis((1, 1, 2, 4, -2), (1, 2, 2, 4, -4))
