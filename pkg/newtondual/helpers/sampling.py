"""
Random and exhaustive generators of test inputs. Every random helper takes its own
random.Random so sweeps are reproducible from the configured seed.
"""
import random
from itertools import combinations, product
from typing import Iterator

from newtondual.core.duals import BipartiteGraph, ExponentBound, bipartite_graph
from newtondual.core.ferrers import ShiftedDiagram, ShiftedPartition, diagram
from newtondual.core.monomials import Monomial, MonomialIdeal, minimalize, monomial
from newtondual.core.stability import Variant, stable_closure


def random_monomial(rng: random.Random, n: int, degree: int) -> Monomial:
    exps: list[int] = [0] * n
    for _ in range(degree):
        exps[rng.randrange(n)] += 1
    return monomial(exps)


def random_ideal(rng: random.Random, n: int, max_gens: int, max_degree: int, equigenerated: bool = False) -> MonomialIdeal:
    degree: int = rng.randint(1, max_degree)
    count: int = rng.randint(1, max_gens)
    gens = [random_monomial(rng, n, degree if equigenerated else rng.randint(1, max_degree)) for _ in range(count)]
    return minimalize(gens, n)


def random_bound(rng: random.Random, ideal: MonomialIdeal, slack: int = 2) -> ExponentBound:
    """A bound dominating the ideal, with up to `slack` extra in each exponent."""
    tops: list[int] = [max(g.exponent(i) for g in ideal.generators) for i in range(1, ideal.n + 1)]
    return monomial(t + rng.randint(0, slack) for t in tops)


def random_closed_ideal(
    rng: random.Random, n: int, degree: int, seeds: int, variant: Variant = "strongly-stable", max_gens: int = 20
) -> MonomialIdeal:
    """The closure of a few random seeds, retried with fewer seeds until it fits max_gens."""
    for _ in range(50):
        ideal: MonomialIdeal = stable_closure([random_monomial(rng, n, degree) for _ in range(seeds)], variant)
        if len(ideal) <= max_gens:
            return ideal
        seeds = max(1, seeds - 1)
    return stable_closure([monomial([degree] + [0] * (n - 1))], variant)


def random_stable_quadratic(rng: random.Random, n: int, seeds: int = 2) -> MonomialIdeal:
    return random_closed_ideal(rng, n, 2, seeds, "stable", max_gens=n * (n + 1) // 2)


def bipartite_graphs(max_vertices: int) -> Iterator[BipartiteGraph]:
    """Every non-empty edge set on [m] x [n], m, n >= 1, m + n <= max_vertices."""
    for m in range(1, max_vertices):
        for n in range(1, max_vertices - m + 1):
            cells: list[tuple[int, int]] = list(product(range(1, m + 1), range(1, n + 1)))
            for mask in range(1, 1 << len(cells)):
                yield bipartite_graph(m, n, (cells[k] for k in range(len(cells)) if mask >> k & 1))


def canonical_graph_key(graph: BipartiteGraph) -> tuple:
    """Edges with isolated vertices dropped and both sides renumbered by first appearance."""
    xs: list[int] = sorted({i for i, _ in graph.edges})
    ys: list[int] = sorted({j for _, j in graph.edges})
    return len(xs), len(ys), tuple(sorted((xs.index(i), ys.index(j)) for i, j in graph.edges))


def shifted_diagrams(max_points: int) -> Iterator[ShiftedDiagram]:
    """All connected shifted quasi-Ferrers diagrams with at most max_points points."""

    def rows_from(i: int, budget: int, above: tuple[int, int]) -> Iterator[list[tuple[int, int]]]:
        yield []
        mu_above, lam_above = above
        # row i must share a column with row i - 1
        for mu in range(i - 1, lam_above):
            for length in range(max(1, mu_above + 1 - mu), budget + 1):
                for rest in rows_from(i + 1, budget - length, (mu, mu + length)):
                    yield [(mu, mu + length), *rest]

    for mu_1 in range(max_points):
        for length in range(1, max_points + 1):
            for rest in rows_from(2, max_points - length, (mu_1, mu_1 + length)):
                rows: list[tuple[int, int]] = [(mu_1, mu_1 + length), *rest]
                yield diagram(ShiftedPartition(tuple(lam for _, lam in rows), tuple(mu for mu, _ in rows)))


def squarefree_ideals(n: int, max_gens: int = 4) -> Iterator[MonomialIdeal]:
    """Squarefree ideals on n variables given by antichains of non-empty supports."""
    supports: list[tuple[int, ...]] = [s for r in range(1, n + 1) for s in combinations(range(1, n + 1), r)]
    found: set[MonomialIdeal] = set()
    for count in range(1, max_gens + 1):
        for chosen in combinations(supports, count):
            gens = [monomial(1 if i in s else 0 for i in range(1, n + 1)) for s in chosen]
            ideal: MonomialIdeal = minimalize(gens, n)
            if len(ideal) == count and ideal not in found:
                found.add(ideal)
                yield ideal
