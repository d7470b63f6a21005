import pytest

from newtondual.core.ferrers import removal_order
from newtondual.core.monomials import ideal_from_exponents
from newtondual.core.stability import check_linear_quotients, dual_order, x_set
from newtondual.helpers.catalogue import compatible_not_stable, cubic_closure, quasi_diagram
from newtondual.helpers.sampling import shifted_diagrams
from newtondual.verify_borel import check_borel_resolution, verify_borel
from newtondual.verify_duals import verify_duals
from newtondual.verify_fields import verify_fields
from newtondual.verify_planar import (
    check_planar_resolution,
    check_removal_quotients,
    check_stable_quadratic,
    verify_planar,
)
from newtondual.verify_stability import verify_stability
from newtondual.verify_toric import verify_toric


def test_borel_resolution_of_cubic_closure():
    assert check_borel_resolution(cubic_closure())


def test_planar_resolution_of_compatible_diagram():
    diag, bound = compatible_not_stable()
    assert check_planar_resolution(diag, bound)


def test_removal_quotients_of_compatible_diagram(unstable_ferrers):
    diag, bound = unstable_ferrers
    assert check_removal_quotients(diag)
    assert check_removal_quotients(diag, bound)


def test_removal_quotients_of_quasi_diagram():
    assert check_removal_quotients(quasi_diagram())


def test_removal_quotients_hold_on_every_small_diagram():
    for diag in shifted_diagrams(6):
        assert check_removal_quotients(diag), diag.rows


def test_removal_quotients_colons_match_x_sets(unstable_ferrers):
    diag, bound = unstable_ferrers
    order = removal_order(diag)
    result = check_linear_quotients(dual_order(order, bound))
    assert result.ok
    assert result.colons == (frozenset({3}), frozenset({2}), frozenset({2, 3}))
    assert x_set(order.ideal, order.order[-1], "any-other") == frozenset({2, 3})


def test_stable_quadratic_count():
    assert check_stable_quadratic(ideal_from_exponents([(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]))


def test_duals_suite(cfg):
    assert verify_duals(cfg)


def test_stability_suite(cfg):
    assert verify_stability(cfg)


def test_toric_suite(cfg):
    assert verify_toric(cfg)


def test_fields_suite(cfg):
    assert verify_fields(cfg)


def test_borel_suite(cfg):
    assert verify_borel(cfg)


def test_planar_suite(cfg):
    assert verify_planar(cfg)


@pytest.mark.slow
def test_planar_suite_up_to_eight_points(cfg):
    cfg["sweeps"]["max_points"] = 8
    assert verify_planar(cfg)
