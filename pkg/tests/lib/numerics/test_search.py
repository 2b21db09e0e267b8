import math

import numpy as np
import pytest

from cesembed.lib.config import NumericsConfig
from cesembed.lib.numerics import log_grid, sup_search


def test_log_grid_is_strictly_inside_and_increasing():
    grid = log_grid(0.0, 1.0, 32)
    assert grid.shape == (32,)
    assert np.all(np.diff(grid) > 0)
    assert grid[0] > 0 and grid[-1] < 1


def test_log_grid_reaches_far_on_infinite_interval():
    grid = log_grid(1.0, math.inf, 16, NumericsConfig(quad_depth=1e-6))
    assert grid[0] > 1.0
    assert grid[-1] > 1e5


def test_sup_search_refines_interior_maximum():
    got = sup_search(lambda pts, rows: pts * (1.0 - pts), 0.0, 1.0)
    assert float(got[0]) == pytest.approx(0.25, rel=1e-7)


def test_sup_search_one_row_per_interval():
    hi = np.array([1.0, 2.0, 3.0])
    got = sup_search(lambda pts, rows: np.sin(pts), np.zeros(3), hi)
    np.testing.assert_allclose(got, [math.sin(1.0), 1.0, 1.0], rtol=1e-7)


def test_sup_search_rows_index_is_passed_through():
    scale = np.array([1.0, 10.0])

    def fn(pts, rows):
        return scale[rows][:, None] * pts * (1.0 - pts)

    got = sup_search(fn, np.zeros(2), np.ones(2), budget=256)
    np.testing.assert_allclose(got, [0.25, 2.5], rtol=1e-7)


def test_sup_search_empty_rows_are_zero():
    got = sup_search(lambda pts, rows: pts, np.array([1.0, 0.0]), np.array([1.0, 2.0]))
    assert got[0] == 0.0
    assert got[1] == pytest.approx(2.0)


def test_sup_search_divergence_detection_by_side():
    def blows_up_at_zero(pts, rows):
        return 1.0 / pts

    assert float(sup_search(blows_up_at_zero, 0.0, 1.0, detect_divergence=True)[0]) == math.inf
    assert float(sup_search(blows_up_at_zero, 0.0, 1.0, detect_divergence="lo")[0]) == math.inf
    finite = float(sup_search(blows_up_at_zero, 0.0, 1.0, detect_divergence="hi")[0])
    assert math.isfinite(finite)
