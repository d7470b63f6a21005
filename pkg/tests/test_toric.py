import pytest

from newtondual.core.duals import exponent_bound
from newtondual.core.monomials import ideal_from_exponents
from newtondual.core.toric import (
    ToricRelation,
    check_relation,
    compare_fiber_relations,
    dual_product_identity,
    fiber_relations,
    index_pairs,
    minors2,
    symmetrized_matrix,
    transport_relations,
    verify_specfiber,
)
from newtondual.exceptions import InvalidPartitionException, NotEquigeneratedException, ScaleGuardException
from newtondual.helpers.catalogue import FERRERS_443

VERONESE: list[tuple[int, ...]] = [(2, 0), (1, 1), (0, 2)]
SQUARE: list[tuple[int, ...]] = [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]


def test_veronese_quadric():
    rels = fiber_relations(ideal_from_exponents(VERONESE), 2)
    assert index_pairs(rels) == {((1, 3), (2, 2))}
    assert str(rels[0]) == "T1*T3 - T2^2"
    assert check_relation(ideal_from_exponents(VERONESE).generators, rels[0])


def test_square_quadric():
    # canonical order: x1y1, x2y1, x1y2, x2y2
    rels = fiber_relations(ideal_from_exponents(SQUARE), 2)
    assert index_pairs(rels) == {((1, 4), (2, 3))}


def test_higher_degrees_are_sorted():
    rels = fiber_relations(ideal_from_exponents(VERONESE), 3)
    assert [rel.degree for rel in rels] == sorted(rel.degree for rel in rels)
    assert ToricRelation((1, 1, 3), (1, 2, 2)) in rels


def test_fiber_relation_preconditions():
    with pytest.raises(NotEquigeneratedException):
        fiber_relations(ideal_from_exponents([(1, 0), (0, 2)]), 2)
    with pytest.raises(ValueError):
        fiber_relations(ideal_from_exponents(VERONESE), 1)
    with pytest.raises(ScaleGuardException):
        fiber_relations(ideal_from_exponents(VERONESE), 3, max_products=5)


def test_relations_match_the_dual():
    ideal = ideal_from_exponents(VERONESE)
    bound = exponent_bound((3, 3))
    assert compare_fiber_relations(ideal, bound, 3)
    assert dual_product_identity(bound, ideal.generators, (1, 3))
    assert dual_product_identity(bound, ideal.generators, (2, 2, 3))


def test_transport_keeps_indices():
    rels = fiber_relations(ideal_from_exponents(VERONESE), 2)
    moved = transport_relations(rels)
    assert index_pairs(moved) == index_pairs(rels)
    assert str(moved[0]) == "S1*S3 - S2^2"


def test_symmetrized_matrix():
    matrix = symmetrized_matrix((2, 2), (0, 1))
    assert matrix.entry(1, 2) == matrix.entry(2, 1) == (1, 2)
    assert matrix.entry(2, 2) == (2, 2)
    assert minors2(matrix).binomials == {(((1, 1), (2, 2)), ((1, 2), (1, 2)))}
    with pytest.raises(InvalidPartitionException):
        symmetrized_matrix((2, 2), (0, 0))


def test_special_fiber_relations_are_minors():
    for lam, mu in (((1,), (0,)), ((2, 2), (0, 1)), FERRERS_443):
        report = verify_specfiber(lam, mu)
        assert report.ok, (lam, mu, report.kernel_only, report.minors_only)
