import math

import pytest

from cesembed.lib.config import NumericsConfig
from cesembed.lib.oracle import OracleConfig
from cesembed.lib.reduce import CanonicalProblem
from cesembed.lib.weights import Interval, WeightExpr, constant


@pytest.fixture
def small_oracle_cfg():
    """Oráculo barato o bastante para a suíte: grade curta e poucos degraus."""
    return OracleConfig(grid_size=16, restarts=2, ascent_iters=100, ladder_rungs=3)


@pytest.fixture
def fast_numerics():
    return NumericsConfig(quad_cells=8, gl_order=8, sup_grid=32, nested_sup_grid=16)


@pytest.fixture
def make_canonical():
    def _factory(
        p,
        q,
        r,
        *,
        u: WeightExpr | None = None,
        v: WeightExpr | None = None,
        w: WeightExpr | None = None,
        interval: tuple[float, float] = (0.0, 1.0),
    ) -> CanonicalProblem:
        return CanonicalProblem(
            p,
            q,
            r,
            u if u is not None else constant(),
            v if v is not None else constant(),
            w if w is not None else constant(),
            Interval(*interval),
        )

    return _factory


@pytest.fixture
def half_line():
    return (1.0, math.inf)
