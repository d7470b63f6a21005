import copy

import pytest

from newtondual.core.duals import ExponentBound
from newtondual.core.monomials import MonomialIdeal
from newtondual.helpers.catalogue import compatible_not_stable, cubic_closure, small_dual_ideal

SMALL_CONFIG: dict = {
    "common": {"debug": True, "version": "test"},
    "sentry": {"dsn": "", "environment": "test"},
    "oracle": {"field": "Q", "workers": 1, "max_generators": 20},
    "toric": {"degree_cap": 3, "max_products": 200000},
    "sweeps": {
        "seed": 7,
        "max_points": 5,
        "sizes": {
            "involution": 20,
            "product": 5,
            "alexander_variables": 3,
            "graph_vertices": 4,
            "borel": 3,
            "stable_quadratic": 3,
            "fiber": 3,
        },
    },
    "output": {"indent": False},
}


@pytest.fixture
def cfg() -> dict:
    return copy.deepcopy(SMALL_CONFIG)


@pytest.fixture
def small_dual() -> tuple[MonomialIdeal, ExponentBound]:
    return small_dual_ideal()


@pytest.fixture
def closure() -> MonomialIdeal:
    return cubic_closure()


@pytest.fixture
def unstable_ferrers():
    return compatible_not_stable()
