from itertools import pairwise

import pytest

from newtondual.core.ferrers import (
    ShiftedDiagram,
    betti_w_formula,
    check_move_structure,
    check_prefix_connectivity,
    check_stable_good_moves,
    check_y_chain,
    diagram_from_ideal,
    diagram_from_points,
    diagram_ideal,
    generalized_ferrers_ideal,
    good_moves,
    is_compatible,
    is_compatible_direct,
    is_connected,
    is_westward,
    monomial_point,
    moves_from,
    point_monomial,
    removal_order,
    removal_sequence,
    shifted_partition,
    specialize,
    w_betti,
    y_sets,
)
from newtondual.core.monomials import ideal_from_exponents, monomial
from newtondual.core.stability import is_stable, is_strongly_stable
from newtondual.exceptions import (
    DisconnectedDiagramException,
    IncompatibleDiagramException,
    InvalidPartitionException,
    SpecializationException,
)
from newtondual.helpers.catalogue import (
    FERRERS_443,
    QUASI_DIAGRAM_ORDER,
    quasi_diagram,
    two_by_three_ideal,
    westward_incompatible,
)
from newtondual.helpers.sampling import shifted_diagrams

# x1^2, x1x2, x2^2, x1x3
STABLE_QUADRATIC: list[tuple[int, ...]] = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)]


def test_partition_bounds():
    with pytest.raises(InvalidPartitionException):
        shifted_partition((1,), (1,))
    with pytest.raises(InvalidPartitionException):
        shifted_partition((3, 3), (0, 0))
    with pytest.raises(InvalidPartitionException):
        shifted_partition((3,), (0, 0))


def test_points_and_monomials():
    assert point_monomial(3, (2, 2)) == monomial((0, 2, 0))
    assert monomial_point(monomial((1, 0, 1))) == (1, 3)
    with pytest.raises(InvalidPartitionException):
        monomial_point(monomial((1, 1, 1)))


def test_diagram_from_points():
    diag = diagram_from_points([(1, 2), (1, 3), (2, 2), (2, 3)])
    assert diag.rows == ((1, 3), (1, 3))
    with pytest.raises(InvalidPartitionException):
        diagram_from_points([(2, 1)])
    with pytest.raises(InvalidPartitionException):
        diagram_from_points([(1, 1), (3, 3)])
    with pytest.raises(InvalidPartitionException):
        diagram_from_points([(1, 1), (1, 3)])


def test_disconnected_diagram():
    diag = ShiftedDiagram(((0, 1), (2, 3)))
    assert not is_connected(diag)
    with pytest.raises(DisconnectedDiagramException):
        diagram_ideal(diag)


def test_quasi_diagram_removal_order():
    quasi = quasi_diagram()
    assert len(quasi) == 13
    assert is_connected(quasi)
    assert removal_sequence(quasi) == QUASI_DIAGRAM_ORDER
    assert removal_order(quasi).order == tuple(point_monomial(7, p) for p in QUASI_DIAGRAM_ORDER)
    assert check_prefix_connectivity(quasi) is None


def test_quasi_diagram_is_not_westward():
    quasi = quasi_diagram()
    assert not is_westward(quasi)
    assert not is_compatible_direct(quasi)
    with pytest.raises(IncompatibleDiagramException):
        is_compatible(quasi)


def test_compatible_diagram(unstable_ferrers):
    diag, _ = unstable_ferrers
    assert removal_sequence(diag) == ((1, 2), (1, 3), (2, 2), (2, 3))
    assert is_compatible(diag) and is_compatible_direct(diag)
    assert not is_stable(diagram_ideal(diag))

    moves = good_moves(diag)
    assert len(moves) == 4
    assert check_move_structure(moves)
    assert {(mv.target, mv.axis) for mv in moves_from(moves, (2, 3))} == {((2, 2), "horizontal"), ((1, 3), "vertical")}
    assert all(mv.westward or mv.northward for mv in moves)


def test_westward_but_incompatible():
    diag = westward_incompatible()
    assert is_westward(diag)
    assert not is_compatible(diag)
    assert not is_compatible_direct(diag)


def test_ambient_of_removal_order(unstable_ferrers):
    diag, _ = unstable_ferrers
    assert removal_order(diag, 5).ideal.n == 5


def test_generalized_ferrers_ideal():
    assert generalized_ferrers_ideal((2, 1), (0, 0)) == ideal_from_exponents(
        [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0)]
    )
    assert len(generalized_ferrers_ideal(*FERRERS_443)) == 8
    with pytest.raises(InvalidPartitionException):
        generalized_ferrers_ideal((1, 2), (0, 0))


def test_specialize():
    ferrers = generalized_ferrers_ideal((2, 1), (0, 0))
    assert specialize(ferrers, (2, 2)) == ideal_from_exponents([(2, 0), (1, 1)])
    with pytest.raises(SpecializationException):
        specialize(ferrers, (1, 2))


def test_stable_quadratic_facts():
    ideal = ideal_from_exponents(STABLE_QUADRATIC)
    assert y_sets(ideal) == {1: frozenset({1}), 2: frozenset({1, 2}), 3: frozenset({1})}
    assert check_y_chain(ideal)
    assert check_stable_good_moves(ideal)
    assert is_compatible(diagram_from_ideal(ideal))
    assert betti_w_formula(ideal) == (3, 0)
    assert w_betti(3, 0) == (4, 3, 0)


def test_small_diagrams_are_consistent():
    for diag in shifted_diagrams(5):
        assert check_prefix_connectivity(diag) is None
        if is_westward(diag):
            assert check_move_structure(good_moves(diag))
            assert is_compatible(diag) == is_compatible_direct(diag)


def _ferrers_shapes(max_points: int):
    """Shifted partitions that are also generalized Ferrers data: lam non-increasing, mu non-decreasing."""
    for diag in shifted_diagrams(max_points):
        part = diag.partition
        if all(a >= b for a, b in pairwise(part.lam)) and all(a <= b for a, b in pairwise(part.mu)):
            yield diag, part


def test_specialization_keeps_every_generator():
    swept = 0
    for diag, part in _ferrers_shapes(7):
        special = specialize(generalized_ferrers_ideal(part.lam, part.mu), (part.h, part.lam[0]))
        assert len(special) == sum(part.lam) - sum(part.mu)
        assert special == diagram_ideal(diag)
        swept += 1
    assert swept > 0


def test_specialization_can_merge_generators():
    ideal, blocks = two_by_three_ideal()
    assert len(ideal) == 5
    special = specialize(ideal, blocks)
    assert special == ideal_from_exponents([(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0)])
    assert len(special) == 4


def test_specialization_of_ferrers_443():
    special = specialize(generalized_ferrers_ideal(*FERRERS_443), (3, 4))
    assert special == ideal_from_exponents(
        [
            (2, 0, 0, 0),
            (1, 1, 0, 0),
            (1, 0, 1, 0),
            (1, 0, 0, 1),
            (0, 2, 0, 0),
            (0, 1, 1, 0),
            (0, 1, 0, 1),
            (0, 0, 2, 0),
        ]
    )


def test_stable_shapes_specialize_to_strongly_stable_ideals():
    swept = 0
    for _, part in _ferrers_shapes(8):
        if part.mu != tuple(range(part.h)):
            continue
        special = specialize(generalized_ferrers_ideal(part.lam, part.mu), (part.h, part.lam[0]))
        assert is_strongly_stable(special), part
        swept += 1
    assert swept > 0
