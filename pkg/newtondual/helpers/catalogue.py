"""
Worked ideals, diagrams and graphs with known answers. The verification suites
and the test fixtures both start from these.
"""
from newtondual.core.duals import BipartiteGraph, ExponentBound, bipartite_graph, exponent_bound
from newtondual.core.ferrers import ShiftedDiagram, diagram, shifted_partition
from newtondual.core.monomials import MonomialIdeal, ideal_from_exponents, minimalize, monomial
from newtondual.core.stability import OrderedGenerators, ordered


def small_dual_ideal() -> tuple[MonomialIdeal, ExponentBound]:
    """(x^3, x^2 y^2, y^4) with a = (5, 6)."""
    return ideal_from_exponents([(3, 0), (2, 2), (0, 4)]), exponent_bound((5, 6))


def small_dual_expected() -> MonomialIdeal:
    return ideal_from_exponents([(2, 6), (3, 4), (5, 2)])


CUBIC_CLOSURE_ROWS: tuple[tuple[int, ...], ...] = (
    (3, 0, 0, 0),
    (2, 1, 0, 0),
    (1, 2, 0, 0),
    (0, 3, 0, 0),
    (2, 0, 1, 0),
    (1, 1, 1, 0),
    (0, 2, 1, 0),
    (1, 0, 2, 0),
    (0, 1, 2, 0),
    (2, 0, 0, 1),
    (1, 1, 0, 1),
    (0, 2, 0, 1),
    (1, 0, 1, 1),
    (0, 1, 1, 1),
)


def cubic_closure() -> MonomialIdeal:
    """The smallest strongly stable ideal containing x2 x3 x4."""
    return ideal_from_exponents(CUBIC_CLOSURE_ROWS)


def cubic_closure_order() -> OrderedGenerators:
    """f_1 = x1^3, ..., f_14 = x2 x3 x4 as listed."""
    ideal: MonomialIdeal = cubic_closure()
    return ordered(ideal, (monomial(r) for r in CUBIC_CLOSURE_ROWS))


def stable_not_strongly_stable() -> MonomialIdeal:
    """Twelve cubics in four variables, closed under the stable moves only."""
    return ideal_from_exponents(
        [
            (3, 0, 0, 0),
            (2, 1, 0, 0),
            (1, 2, 0, 0),
            (0, 3, 0, 0),
            (2, 0, 1, 0),
            (1, 1, 1, 0),
            (0, 2, 1, 0),
            (1, 0, 2, 0),
            (0, 1, 2, 0),
            (0, 0, 3, 0),
            (1, 1, 0, 1),
            (0, 0, 2, 1),
        ]
    )


def compatible_not_stable() -> tuple[ShiftedDiagram, ExponentBound]:
    """lambda = (3, 3), mu = (1, 1): x1x2, x1x3, x2^2, x2x3 with a = (3, 4, 2)."""
    return diagram(shifted_partition((3, 3), (1, 1))), exponent_bound((3, 4, 2))


def compatible_not_stable_dual() -> MonomialIdeal:
    return ideal_from_exponents([(2, 3, 2), (2, 4, 1), (3, 2, 2), (3, 3, 1)])


def quasi_diagram() -> ShiftedDiagram:
    """lambda = (6, 5, 4, 7), mu = (1, 3, 2, 3): thirteen points over four rows."""
    return diagram(shifted_partition((6, 5, 4, 7), (1, 3, 2, 3)))


QUASI_DIAGRAM_ORDER: tuple[tuple[int, int], ...] = (
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 3),
    (4, 4),
    (4, 5),
    (4, 6),
    (4, 7),
)


def westward_incompatible() -> ShiftedDiagram:
    """lambda = (4, 5), mu = (1, 3): (1, 2) and (2, 4) are in, (2, 3) is not."""
    return diagram(shifted_partition((4, 5), (1, 3)))


def two_by_three_ideal() -> tuple[MonomialIdeal, tuple[int, int]]:
    """x1y1, x1y2, x1y3, x2y1, x2y2 over x1, x2, y1, y2, y3."""
    return (
        ideal_from_exponents(
            [
                (1, 0, 1, 0, 0),
                (1, 0, 0, 1, 0),
                (1, 0, 0, 0, 1),
                (0, 1, 1, 0, 0),
                (0, 1, 0, 1, 0),
            ]
        ),
        (2, 3),
    )


def two_by_three_graph() -> BipartiteGraph:
    return bipartite_graph(2, 3, [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)])


FERRERS_443: tuple[tuple[int, ...], tuple[int, ...]] = ((4, 4, 3), (0, 1, 2))


def counter_example() -> MonomialIdeal:
    """x1y1, x1y2, x2y1, x2y2, y1y2: the underlying graph has a triangle."""
    return ideal_from_exponents([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)])


def counter_example_duals() -> tuple[MonomialIdeal, MonomialIdeal]:
    """(Newton dual, Alexander dual of the complement)."""
    newton: MonomialIdeal = ideal_from_exponents(
        [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0)]
    )
    return newton, minimalize([monomial((1, 0, 0, 0)), monomial((0, 1, 0, 0))], 4)


def four_cycle() -> BipartiteGraph:
    return bipartite_graph(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)])


def four_cycle_duals() -> tuple[MonomialIdeal, MonomialIdeal]:
    """With a = (2, 2, 2, 2): (the a-dual of I(G), the generalized Alexander dual of I(G^c))."""
    newton: MonomialIdeal = ideal_from_exponents([(1, 2, 1, 2), (1, 2, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1)])
    alexander: MonomialIdeal = ideal_from_exponents([(2, 0, 2, 0), (0, 2, 2, 0), (2, 0, 0, 2), (0, 2, 0, 2)])
    return newton, alexander
