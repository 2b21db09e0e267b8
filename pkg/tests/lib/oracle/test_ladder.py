import math

import numpy as np
import pytest

from cesembed.lib.oracle import OracleConfig, derive_ladder, rung_breaks
from cesembed.lib.weights import Interval

UNIT = Interval(0.0, 1.0)
HALF_LINE = Interval(1.0, math.inf)


def _nested(ladder) -> bool:
    return all(
        lo1 <= lo0 and hi0 <= hi1 and (lo0, hi0) != (lo1, hi1)
        for (lo0, hi0), (lo1, hi1) in zip(ladder[:-1], ladder[1:])
    )


def test_finite_ladder():
    ladder = derive_ladder(Interval(0.0, 2.0), OracleConfig())
    assert len(ladder) == 6
    assert ladder[0] == pytest.approx((0.02, 1.98))
    assert ladder[-1] == pytest.approx((2e-12, 2.0 - 2e-12))
    assert _nested(ladder)


def test_half_line_ladder():
    ladder = derive_ladder(HALF_LINE, OracleConfig(ladder_rungs=3))
    flat = [x for domain in ladder for x in domain]
    assert flat == pytest.approx([1.01, 5.0, 1.0001, 17.0, 1.000001, 65.0])
    assert _nested(ladder)


def test_offsets_are_floored():
    ladder = derive_ladder(UNIT, OracleConfig(ladder_rungs=4, rung_refinement=1e-5))
    assert ladder[-1][0] == pytest.approx(1e-14)
    assert ladder[-2][0] == pytest.approx(1e-14)


def test_explicit_ladder_wins():
    cfg = OracleConfig(truncation_ladder=((0.1, 0.9), (0.05, 0.95)))
    assert derive_ladder(UNIT, cfg) == [(0.1, 0.9), (0.05, 0.95)]


def test_finite_breaks_cluster_at_both_ends():
    breaks = rung_breaks((0.01, 0.99), UNIT, 16)
    assert breaks.shape == (17,)
    assert breaks[0] == 0.01 and breaks[-1] == 0.99
    assert np.all(np.diff(breaks) > 0)
    np.testing.assert_allclose(breaks + breaks[::-1], 1.0, rtol=1e-12)
    widths = np.diff(breaks)
    assert widths[0] < widths[8] and widths[-1] < widths[8]


def test_half_line_breaks_are_geometric():
    breaks = rung_breaks((1.01, 5.0), HALF_LINE, 8)
    assert breaks[0] == 1.01 and breaks[-1] == 5.0
    offsets = breaks - 1.0
    np.testing.assert_allclose(offsets[1:] / offsets[:-1], (4.0 / 0.01) ** (1 / 8), rtol=1e-9)
