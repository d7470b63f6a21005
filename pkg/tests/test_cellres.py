import dataclasses

import pytest

from newtondual.core.cellres import (
    LabeledCellComplex,
    betti_from_complex,
    build_borel_complex,
    build_planar_complex,
    build_taylor_complex,
    check_incidence,
    check_label_law,
    complex_label_lcm,
    euler_characteristic,
    free_complex,
    is_minimal,
    predicted_betti,
    restrict_leq,
    vertex_labels,
)
from newtondual.core.duals import exponent_bound, newton_bound
from newtondual.core.monomials import fold_lcm, ideal_from_exponents, monomial
from newtondual.exceptions import (
    IncidenceException,
    IncompatibleDiagramException,
    NonMinimalException,
    NotDeterminedException,
    NotStableException,
)
from newtondual.helpers.catalogue import compatible_not_stable_dual, quasi_diagram, stable_not_strongly_stable


def flip_one_sign(cx: LabeledCellComplex) -> LabeledCellComplex:
    """The same complex with the first incidence sign of its first 2-cell reversed."""
    cell = cx.of_dim(2)[0]
    (q, sign), *rest = cx.facets[cell.id]
    facets = dict(cx.facets)
    facets[cell.id] = ((q, -sign), *rest)
    return dataclasses.replace(cx, facets=facets)


def test_borel_complex_of_cubic_closure(closure):
    cx = build_borel_complex(closure, newton_bound(closure))
    assert cx.f_vector() == (14, 21, 9, 1)
    assert check_label_law(cx)
    assert check_incidence(cx)
    assert euler_characteristic(cx) == 1
    assert cx.of_dim(3)[0].label == fold_lcm(closure.generators)

    fc = free_complex(cx)
    assert is_minimal(fc)
    assert betti_from_complex(fc).totals() == (14, 21, 9, 1)
    assert predicted_betti(closure) == (14, 21, 9, 1)


def test_borel_vertices_are_the_dual_generators(closure):
    bound = newton_bound(closure)
    cx = build_borel_complex(closure, bound)
    assert sorted(m.exponents for m in vertex_labels(cx)) == sorted(
        tuple(b - e for b, e in zip(bound.exponents, g.exponents, strict=True)) for g in closure.generators
    )


def test_borel_complex_preconditions(closure):
    with pytest.raises(NotStableException):
        build_borel_complex(stable_not_strongly_stable(), newton_bound(stable_not_strongly_stable()))
    with pytest.raises(NotDeterminedException):
        build_borel_complex(closure, exponent_bound((2, 2, 2, 2)))
    with pytest.raises(NotStableException):
        predicted_betti(stable_not_strongly_stable())


def test_flipped_sign_is_caught(closure):
    broken = flip_one_sign(build_borel_complex(closure, newton_bound(closure)))
    assert not check_incidence(broken)
    with pytest.raises(IncidenceException):
        free_complex(broken)


def test_planar_complex_of_compatible_diagram(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    assert cx.f_vector() == (4, 4, 1)
    assert ideal_from_exponents(m.exponents for m in vertex_labels(cx)) == compatible_not_stable_dual()
    assert cx.of_dim(2)[0].label == bound
    assert complex_label_lcm(cx) == bound
    assert check_label_law(cx)
    assert check_incidence(cx)
    assert betti_from_complex(free_complex(cx)).totals() == (4, 4, 1)


def test_planar_restriction(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    below = restrict_leq(cx, monomial((3, 4, 1)))
    assert below.f_vector() == (2, 1)
    assert euler_characteristic(below) == 1


def test_planar_flipped_sign_is_caught(unstable_ferrers):
    diag, bound = unstable_ferrers
    assert not check_incidence(flip_one_sign(build_planar_complex(diag, bound)))


def test_planar_needs_a_compatible_diagram():
    quasi = quasi_diagram()
    with pytest.raises(IncompatibleDiagramException):
        build_planar_complex(quasi, exponent_bound([2] * 7))


def test_taylor_complex():
    cx = build_taylor_complex([monomial((1, 0)), monomial((0, 1))])
    assert cx.f_vector() == (2, 1)
    assert check_label_law(cx) and check_incidence(cx)
    assert betti_from_complex(free_complex(cx)).totals() == (2, 1)


def test_non_minimal_complex():
    fc = free_complex(build_taylor_complex([monomial((1, 0)), monomial((1, 1))]))
    assert not is_minimal(fc)
    with pytest.raises(NonMinimalException):
        betti_from_complex(fc)


def test_single_generator_is_minimal():
    fc = free_complex(build_taylor_complex([monomial((0, 0))]))
    assert is_minimal(fc)
