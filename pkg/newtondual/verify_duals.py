import logging
import random

import networkx as nx

from newtondual.core.duals import (
    BipartiteGraph,
    DualComparison,
    ExponentBound,
    alexander_dual_squarefree,
    check_graph_dual_identity,
    check_product_rule,
    compare_squarefree_duals,
    edge_ideal,
    essential_complement_ideal,
    generalized_alexander_dual_squarefree,
    generalized_dual,
    ideal_graph,
    verify_alex_dual,
)
from newtondual.core.monomials import MonomialIdeal, monomial, monomial_lcm
from newtondual.exceptions import NotDeterminedException, NotEquigeneratedException
from newtondual.helpers.catalogue import (
    counter_example,
    counter_example_duals,
    four_cycle,
    four_cycle_duals,
    small_dual_expected,
    small_dual_ideal,
)
from newtondual.helpers.sampling import (
    bipartite_graphs,
    canonical_graph_key,
    random_bound,
    random_ideal,
    squarefree_ideals,
)

log = logging.getLogger("newtondual")


def verify_duals(cfg: dict) -> bool:
    log.info("Verifying generalized duals")
    rng = random.Random(cfg["sweeps"]["seed"])
    sizes: dict = cfg["sweeps"]["sizes"]

    res: bool = True
    res &= _worked_dual()
    res &= _involution(rng, sizes["involution"])
    res &= _product_rule(rng, sizes["product"])
    res &= _alexander_involution(sizes["alexander_variables"])
    res &= _graph_duals(rng, sizes["graph_vertices"])
    res &= _counter_examples()

    if not res:
        log.error("Dual verification failed.")
    return res


def _worked_dual() -> bool:
    ideal, bound = small_dual_ideal()
    if generalized_dual(ideal, bound) != small_dual_expected():
        log.error("The dual of %s with bound %s is %s.", ideal, bound, generalized_dual(ideal, bound))
        return False
    return True


def _involution(rng: random.Random, count: int) -> bool:
    """Double duals give the ideal back, and equigenerated duals sit in degree |a| - d."""
    for _ in range(count):
        n: int = rng.randint(1, 5)
        ideal: MonomialIdeal = random_ideal(rng, n, 8, 4, equigenerated=rng.random() < 0.5)
        bound: ExponentBound = random_bound(rng, ideal)
        dual: MonomialIdeal = generalized_dual(ideal, bound)

        if generalized_dual(dual, bound) != ideal:
            log.error("The double dual of %s with bound %s is not the ideal itself.", ideal, bound)
            return False
        if ideal.is_equigenerated and dual.degree != bound.degree - ideal.degree:
            log.error("The dual of %s has degree %s, expected %s.", ideal, dual.degree, bound.degree - ideal.degree)
            return False
    return True


def _product_rule(rng: random.Random, count: int) -> bool:
    for _ in range(count):
        n: int = rng.randint(1, 4)
        first: MonomialIdeal = random_ideal(rng, n, 4, 3, equigenerated=True)
        second: MonomialIdeal = random_ideal(rng, n, 4, 3, equigenerated=True)
        bound: ExponentBound = monomial_lcm(random_bound(rng, first), random_bound(rng, second))
        try:
            ok: bool = check_product_rule(first, second, bound)
        except (NotDeterminedException, NotEquigeneratedException) as e:
            log.error("Product rule could not be checked for %s and %s: %s", first, second, e)
            return False
        if not ok:
            log.error("Product rule fails for %s and %s with bound %s.", first, second, bound)
            return False
    return True


def _alexander_involution(max_variables: int) -> bool:
    checked: int = 0
    for n in range(1, max_variables + 1):
        for ideal in squarefree_ideals(n):
            if alexander_dual_squarefree(alexander_dual_squarefree(ideal)) != ideal:
                log.error("Alexander duality is not an involution on %s.", ideal)
                return False
            checked += 1
    log.debug("Alexander involution held on %s squarefree ideals.", checked)
    return True


def _graph_duals(rng: random.Random, max_vertices: int) -> bool:
    """Newton dual against Alexander dual of the complement, over every bipartite graph up to relabeling."""
    seen: set[tuple] = set()
    res: bool = True
    for graph in bipartite_graphs(max_vertices):
        key: tuple = canonical_graph_key(graph)
        if key in seen:
            continue
        seen.add(key)

        comparison: DualComparison = verify_alex_dual(graph)
        res &= comparison.equal

        bound: ExponentBound = monomial(rng.randint(1, 3) for _ in range(key[0] + key[1]))
        if not check_graph_dual_identity(graph, bound):
            log.error("The a-dual of %s with bound %s is not the shifted Newton dual.", sorted(graph.edges), bound)
            res = False

    log.info("Compared the duals of %s bipartite graphs.", len(seen))
    return res


def _counter_examples() -> bool:
    res: bool = True

    if nx.is_bipartite(ideal_graph(counter_example())):
        log.error("The graph of %s should contain a triangle.", counter_example())
        res = False

    expected_newton, expected_alexander = counter_example_duals()
    comparison: DualComparison = compare_squarefree_duals(counter_example())
    if comparison.equal or (comparison.newton_dual, comparison.alexander_dual) != (
        expected_newton,
        expected_alexander,
    ):
        log.error("The non-bipartite comparison gave %s and %s.", comparison.newton_dual, comparison.alexander_dual)
        res = False

    graph: BipartiteGraph = four_cycle()
    bound: ExponentBound = monomial((2, 2, 2, 2))
    expected_dual, expected_alex = four_cycle_duals()
    dual: MonomialIdeal = generalized_dual(edge_ideal(graph), bound)
    alex: MonomialIdeal = generalized_alexander_dual_squarefree(essential_complement_ideal(graph), bound)
    if dual != expected_dual or alex != expected_alex or dual == alex:
        log.error("The four-cycle gave %s against %s.", dual, alex)
        res = False

    return res
