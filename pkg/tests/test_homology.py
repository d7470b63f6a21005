import dataclasses

import pytest

from newtondual.core.betti import betti_table, is_linear_table, projective_dimension, regularity
from newtondual.core.cellres import build_planar_complex
from newtondual.core.duals import newton_dual
from newtondual.core.homology import (
    alternating_sum,
    betti_oracle,
    exact_rank,
    has_linear_resolution,
    is_acyclic_leq,
    lcm_lattice,
    non_acyclic_degrees,
    reduced_homology_dims,
    simplicial_chain_complex,
)
from newtondual.core.monomials import ideal_from_exponents, minimalize, monomial, unit
from newtondual.exceptions import NotEquigeneratedException, ScaleGuardException, TrivialIdealException
from newtondual.helpers.catalogue import stable_not_strongly_stable

HOLLOW_TRIANGLE: list[tuple[int, ...]] = [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[1, 1], [1, -1]]) == 2
    assert exact_rank([[1, 1], [1, -1]], "F2") == 1
    assert exact_rank([]) == 0


def test_reduced_homology_of_triangles():
    assert reduced_homology_dims(simplicial_chain_complex(HOLLOW_TRIANGLE)) == {-1: 0, 0: 0, 1: 1}
    filled = reduced_homology_dims(simplicial_chain_complex([*HOLLOW_TRIANGLE, (0, 1, 2)]))
    assert not any(filled.values())


def test_lcm_lattice():
    assert lcm_lattice([monomial((1, 0)), monomial((0, 1))]) == [
        monomial((1, 0)),
        monomial((0, 1)),
        monomial((1, 1)),
    ]


def test_oracle_on_two_variables():
    table = betti_oracle(ideal_from_exponents([(1, 0), (0, 1)]))
    assert table.entries == (
        (0, monomial((1, 0)), 1),
        (0, monomial((0, 1)), 1),
        (1, monomial((1, 1)), 1),
    )
    assert alternating_sum(table, monomial((1, 1))) == -1


def test_oracle_on_cubic_closure_dual(closure):
    _, dual = newton_dual(closure)
    table = betti_oracle(dual)
    assert table.totals() == (14, 21, 9, 1)
    assert projective_dimension(table) == 3
    assert regularity(table) == 6
    assert is_linear_table(table, 6)
    assert betti_oracle(dual, "F2") == table


def test_oracle_with_workers(closure):
    _, dual = newton_dual(closure)
    assert betti_oracle(dual, workers=2) == betti_oracle(dual)


def test_linear_resolution():
    _, dual = newton_dual(stable_not_strongly_stable())
    assert not has_linear_resolution(dual)
    with pytest.raises(NotEquigeneratedException):
        has_linear_resolution(ideal_from_exponents([(1, 0), (0, 2)]))


def test_oracle_edge_cases(closure):
    assert betti_oracle(minimalize([unit(2)])).totals() == (1,)
    with pytest.raises(TrivialIdealException):
        betti_oracle(minimalize([], 2))
    with pytest.raises(ScaleGuardException):
        betti_oracle(closure, max_generators=5)


def test_planar_complex_is_acyclic(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    assert non_acyclic_degrees(cx) == []
    assert is_acyclic_leq(cx, monomial((3, 4, 1)))
    assert is_acyclic_leq(cx, unit(3))


def test_missing_face_leaves_a_hole(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    square = cx.of_dim(2)[0]
    hollow = dataclasses.replace(
        cx,
        cells=tuple(c for c in cx.cells if c.id != square.id),
        facets={cid: fs for cid, fs in cx.facets.items() if cid != square.id},
    )
    assert non_acyclic_degrees(hollow) == [bound]
    assert not is_acyclic_leq(hollow, bound, "F2")


def test_betti_table_views():
    table = betti_table([(0, monomial((1, 0)), 1), (0, monomial((0, 1)), 1), (1, monomial((1, 1)), 1)])
    assert table.coarse() == {(0, 1): 2, (1, 2): 1}
    assert table.shifted().totals() == (0, 2, 1)
    assert table.get(1, monomial((1, 1))) == 1
    assert table.get(2, monomial((1, 1))) == 0
    with pytest.raises(ValueError):
        betti_table([(0, monomial((1, 0)), -1)])
