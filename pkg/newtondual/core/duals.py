import dataclasses
import logging
from typing import Iterable

import networkx as nx

from newtondual.core.monomials import (
    Monomial,
    MonomialIdeal,
    divides,
    fold_lcm,
    from_support,
    is_squarefree,
    minimalize,
    monomial,
    monomial_div,
    monomial_mul,
    product_ideal,
    require_nontrivial,
    support_stats,
)
from newtondual.exceptions import (
    AmbientMismatchException,
    EmptyGraphException,
    NotDeterminedException,
    NotEquigeneratedException,
    NotSquarefreeException,
    TrivialIdealException,
)

log = logging.getLogger("newtondual")

# The bound a is carried as the monomial x^a.
ExponentBound = Monomial


def exponent_bound(values: Iterable[int]) -> ExponentBound:
    return monomial(values)


def is_a_determined(ideal: MonomialIdeal, bound: ExponentBound) -> bool:
    if ideal.n != bound.n:
        raise AmbientMismatchException(f"Ideal lives in {ideal.n} variables, bound in {bound.n}.")
    return all(divides(g, bound) for g in ideal.generators)


def generalized_dual(ideal: MonomialIdeal, bound: ExponentBound) -> MonomialIdeal:
    """
    The a-dual of an ideal: generated by x^a / f for every minimal generator f.
    The result is automatically minimal, since x^a / f | x^a / g iff g | f.
    """
    if not is_a_determined(ideal, bound):
        raise NotDeterminedException(f"{ideal} is not determined by the bound {bound}.")

    dual: MonomialIdeal = minimalize((monomial_div(bound, g) for g in ideal.generators), ideal.n)
    if len(dual) != len(ideal):
        raise NotDeterminedException(f"The dual of {ideal} lost generators; the input was not minimal.")

    if dual.is_unit:
        log.info("The dual of %s with bound %s is the unit ideal.", ideal, bound)

    return dual


def newton_bound(ideal: MonomialIdeal) -> ExponentBound:
    if ideal.is_zero:
        raise TrivialIdealException("The zero ideal has no Newton bound.")
    return fold_lcm(ideal.generators)


def newton_dual(ideal: MonomialIdeal) -> tuple[ExponentBound, MonomialIdeal]:
    bound: ExponentBound = newton_bound(ideal)
    return bound, generalized_dual(ideal, bound)


def check_product_rule(first: MonomialIdeal, second: MonomialIdeal, bound: ExponentBound) -> bool:
    """The 2a-dual of I*J equals the product of the a-duals, for equigenerated I and J."""
    if not (first.is_equigenerated and second.is_equigenerated):
        raise NotEquigeneratedException("The product rule needs equigenerated ideals.")

    doubled: ExponentBound = monomial_mul(bound, bound)
    lhs: MonomialIdeal = generalized_dual(product_ideal(first, second), doubled)
    rhs: MonomialIdeal = product_ideal(generalized_dual(first, bound), generalized_dual(second, bound))
    return lhs == rhs


def alexander_dual_squarefree(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    Intersection of the primes generated by the supports of the generators, held as
    the minimal transversals of those supports. The zero ideal dualises to the unit
    ideal and the unit ideal to the zero ideal.
    """
    for g in ideal.generators:
        if not is_squarefree(g):
            raise NotSquarefreeException(f"Generator {g} is not squarefree.")

    transversals: MonomialIdeal = minimalize([monomial([0] * ideal.n)], ideal.n)
    for g in ideal.generators:
        support: list[int] = [i for i, e in enumerate(g.exponents, 1) if e]
        expanded: list[Monomial] = []
        for t in transversals.generators:
            if any(t.exponent(i) for i in support):
                expanded.append(t)
                continue
            expanded.extend(monomial_mul(t, from_support(ideal.n, [i])) for i in support)
        transversals = minimalize(expanded, ideal.n)

    return transversals


def substitute_powers(ideal: MonomialIdeal, bound: ExponentBound) -> MonomialIdeal:
    """Apply x_i -> x_i^{a(i)} to every generator."""
    return minimalize(
        (monomial(e * a for e, a in zip(g.exponents, bound.exponents, strict=True)) for g in ideal.generators),
        ideal.n,
    )


def generalized_alexander_dual_squarefree(ideal: MonomialIdeal, bound: ExponentBound) -> MonomialIdeal:
    if not is_a_determined(ideal, bound):
        raise NotDeterminedException(f"{ideal} is not determined by the bound {bound}.")
    return substitute_powers(alexander_dual_squarefree(ideal), bound)


@dataclasses.dataclass(frozen=True)
class BipartiteGraph:
    """Edges (i, j) join x_i (1 <= i <= m) to y_j (1 <= j <= n)."""

    m: int
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i <= self.m and 1 <= j <= self.n):
                raise ValueError(f"Edge {(i, j)} is outside [{self.m}] x [{self.n}].")

    def to_networkx(self) -> nx.Graph:
        """Nodes ("x", i) and ("y", j), with the side stored in the bipartite attribute."""
        graph = nx.Graph()
        graph.add_nodes_from((("x", i) for i in range(1, self.m + 1)), bipartite=0)
        graph.add_nodes_from((("y", j) for j in range(1, self.n + 1)), bipartite=1)
        graph.add_edges_from((("x", i), ("y", j)) for i, j in self.edges)
        return graph


def bipartite_graph(m: int, n: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    return BipartiteGraph(m, n, frozenset((int(i), int(j)) for i, j in edges))


def edge_ideal(graph: BipartiteGraph) -> MonomialIdeal:
    """x_i y_j for each edge, in the ring with x_1..x_m, y_1..y_n (y_j is variable m + j)."""
    ambient: int = graph.m + graph.n
    return minimalize((from_support(ambient, [i, graph.m + j]) for i, j in graph.edges), ambient)


def essential_vertices(graph: BipartiteGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g: nx.Graph = graph.to_networkx()
    g.remove_nodes_from(list(nx.isolates(g)))
    xs: tuple[int, ...] = tuple(sorted(k for side, k in g if side == "x"))
    ys: tuple[int, ...] = tuple(sorted(k for side, k in g if side == "y"))
    return xs, ys


def restrict_to_essential(graph: BipartiteGraph) -> BipartiteGraph:
    """Drop isolated vertices and renumber the remaining ones consecutively."""
    if not graph.edges:
        raise EmptyGraphException("The graph has no edges.")

    xs, ys = essential_vertices(graph)
    x_pos: dict[int, int] = {x: k for k, x in enumerate(xs, 1)}
    y_pos: dict[int, int] = {y: k for k, y in enumerate(ys, 1)}
    return bipartite_graph(len(xs), len(ys), ((x_pos[i], y_pos[j]) for i, j in graph.edges))


def essential_complement(graph: BipartiteGraph) -> BipartiteGraph:
    """Cross edges missing from G, on the non-isolated vertices X_I and Y_I."""
    core: BipartiteGraph = restrict_to_essential(graph)
    complement: nx.Graph = nx.complement(core.to_networkx())
    cross = (sorted((u, v)) for u, v in complement.edges if u[0] != v[0])
    return bipartite_graph(core.m, core.n, ((x[1], y[1]) for x, y in cross))


def ideal_graph(ideal: MonomialIdeal) -> nx.Graph:
    """The simple graph of a squarefree quadratic ideal, on the variables that occur in it."""
    if not all(is_squarefree(g) and g.degree == 2 for g in ideal.generators):
        raise NotSquarefreeException(f"{ideal} is not the edge ideal of a simple graph.")

    graph = nx.Graph()
    graph.add_edges_from(tuple(sorted(support_stats(g).supp)) for g in ideal.generators)
    return graph


def graph_complement_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    Edge ideal of the complement of the graph of a squarefree quadratic ideal, taken
    on the vertices that occur in some generator.
    """
    complement: nx.Graph = nx.complement(ideal_graph(ideal))
    return minimalize((from_support(ideal.n, edge) for edge in complement.edges), ideal.n)


def essential_complement_ideal(graph: BipartiteGraph) -> MonomialIdeal:
    """
    I(G^c) on X_I and Y_I: the complement graph also joins any two vertices of the
    same side, so x_i x_j and y_i y_j are generators next to the missing cross edges.
    """
    return graph_complement_ideal(edge_ideal(restrict_to_essential(graph)))


@dataclasses.dataclass(frozen=True)
class DualComparison:
    equal: bool
    newton_dual: MonomialIdeal
    alexander_dual: MonomialIdeal
    complement: MonomialIdeal


def compare_squarefree_duals(ideal: MonomialIdeal) -> DualComparison:
    """Newton dual of a squarefree quadratic ideal against the Alexander dual of its complement."""
    require_nontrivial(ideal)
    complement: MonomialIdeal = graph_complement_ideal(ideal)
    _, ndual = newton_dual(ideal)
    adual: MonomialIdeal = alexander_dual_squarefree(complement)
    return DualComparison(ndual == adual, ndual, adual, complement)


def verify_alex_dual(graph: BipartiteGraph) -> DualComparison:
    comparison: DualComparison = compare_squarefree_duals(edge_ideal(restrict_to_essential(graph)))
    if not comparison.equal:
        log.error(
            "Newton dual %s differs from Alexander dual %s for graph %s.",
            comparison.newton_dual,
            comparison.alexander_dual,
            sorted(graph.edges),
        )
    return comparison


def check_graph_dual_identity(graph: BipartiteGraph, bound: ExponentBound) -> bool:
    """
    On the essential vertices, the a-dual of I(G) is its Newton dual shifted by
    x^a / (x_1 ... x_m y_1 ... y_n).
    """
    ideal: MonomialIdeal = edge_ideal(restrict_to_essential(graph))
    everything: Monomial = from_support(ideal.n, range(1, ideal.n + 1))
    if not divides(everything, bound):
        raise NotDeterminedException(f"The bound {bound} does not dominate every vertex.")

    _, ndual = newton_dual(ideal)
    shift: Monomial = monomial_div(bound, everything)
    return generalized_dual(ideal, bound) == minimalize((monomial_mul(g, shift) for g in ndual.generators), ideal.n)
