"""Shared test fixtures and small builders."""

import numpy as np
import pytest

from splinefill.imagecore import ImageGrid, ScratchMask


def grid(array) -> ImageGrid:
    """Build an ImageGrid from a 2-D (gray) or 3-D array of floats."""
    a = np.asarray(array, dtype=np.float64)
    if a.ndim == 2:
        a = a[:, :, np.newaxis]
    return ImageGrid(a)


def mask_from(array) -> ScratchMask:
    """Build a ScratchMask from any truthy 2-D array."""
    return ScratchMask(np.asarray(array, dtype=bool))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
