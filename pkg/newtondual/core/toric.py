import dataclasses
import logging
from collections import defaultdict
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Optional, Sequence

from newtondual.core.duals import ExponentBound, generalized_dual, newton_bound
from newtondual.core.ferrers import generalized_ferrers_ideal, monomial_point, specialize
from newtondual.core.monomials import Monomial, MonomialIdeal, monomial_div, monomial_mul, monomial_pow
from newtondual.exceptions import (
    InvalidPartitionException,
    NotEquigeneratedException,
    ScaleGuardException,
)

log = logging.getLogger("newtondual")

DEFAULT_MAX_PRODUCTS: int = 200_000

Tag = tuple[int, int]
# A binomial read through x_i x_j <-> T_ij: the two monomials as sorted tag tuples, smaller first.
Binomial = tuple[tuple[Tag, ...], tuple[Tag, ...]]


@dataclasses.dataclass(frozen=True, order=True)
class ToricRelation:
    """T_alpha - T_beta for generator index multisets alpha < beta with f_alpha = f_beta."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    symbol: str = dataclasses.field(default="T", compare=False)

    @property
    def degree(self) -> int:
        return len(self.alpha)

    def __str__(self) -> str:
        return f"{_format_term(self.symbol, self.alpha)} - {_format_term(self.symbol, self.beta)}"


def _format_term(symbol: str, indices: tuple[int, ...]) -> str:
    parts: list[str] = []
    for k in sorted(set(indices)):
        e: int = indices.count(k)
        parts.append(f"{symbol}{k}" if e == 1 else f"{symbol}{k}^{e}")
    return "*".join(parts)


def _product(gens: Sequence[Monomial], indices: Iterable[int]) -> Monomial:
    result: Optional[Monomial] = None
    for k in indices:
        result = gens[k - 1] if result is None else monomial_mul(result, gens[k - 1])
    if result is None:
        raise ValueError("Empty product.")
    return result


def fiber_relations(
    ideal: MonomialIdeal,
    r: int,
    order: Optional[Sequence[Monomial]] = None,
    max_products: int = DEFAULT_MAX_PRODUCTS,
) -> tuple[ToricRelation, ...]:
    """
    Every T_alpha - T_beta of degree 2..r with f_alpha = f_beta, found by grouping
    the products of all r-multisets of generators. Generators are numbered 1..nu in
    `order`, or in the ideal's canonical order.
    """
    if not ideal.is_equigenerated:
        raise NotEquigeneratedException(f"{ideal} is not generated in a single degree.")
    if r < 2:
        raise ValueError(f"Degree bound {r} must be at least 2.")

    gens: Sequence[Monomial] = ideal.generators if order is None else order
    nu: int = len(gens)
    total: int = sum(comb(nu + s - 1, s) for s in range(2, r + 1))
    if total > max_products:
        raise ScaleGuardException(f"{total} generator products exceed the limit of {max_products}.")

    relations: list[ToricRelation] = []
    for s in range(2, r + 1):
        fibres: dict[Monomial, list[tuple[int, ...]]] = defaultdict(list)
        for alpha in combinations_with_replacement(range(1, nu + 1), s):
            fibres[_product(gens, alpha)].append(alpha)
        for members in fibres.values():
            relations.extend(ToricRelation(a, b) for a, b in combinations(sorted(members), 2))

    return tuple(sorted(relations, key=lambda rel: (rel.degree, rel.alpha, rel.beta)))


def check_relation(gens: Sequence[Monomial], rel: ToricRelation) -> bool:
    return rel.alpha != rel.beta and _product(gens, rel.alpha) == _product(gens, rel.beta)


def transport_relations(rels: Iterable[ToricRelation], symbol: str = "S") -> tuple[ToricRelation, ...]:
    """T_i -> S_i: the index data is kept as it is."""
    return tuple(ToricRelation(rel.alpha, rel.beta, symbol) for rel in rels)


def index_pairs(rels: Iterable[ToricRelation]) -> frozenset[tuple[tuple[int, ...], tuple[int, ...]]]:
    return frozenset((rel.alpha, rel.beta) for rel in rels)


def compare_fiber_relations(
    ideal: MonomialIdeal, bound: ExponentBound, r: int, max_products: int = DEFAULT_MAX_PRODUCTS
) -> bool:
    """
    Relations of I and of its a-dual agree degree by degree up to r, numbering each
    dual generator x^a / f_k like f_k.
    """
    dual: MonomialIdeal = generalized_dual(ideal, bound)
    dual_order: list[Monomial] = [monomial_div(bound, g) for g in ideal.generators]

    ours = fiber_relations(ideal, r, max_products=max_products)
    theirs = transport_relations(fiber_relations(dual, r, order=dual_order, max_products=max_products))
    if index_pairs(ours) != index_pairs(theirs):
        log.error("Fiber relations of %s and its dual differ up to degree %s.", ideal, r)
        return False
    return True


def dual_product_identity(bound: ExponentBound, gens: Sequence[Monomial], alpha: tuple[int, ...]) -> bool:
    """The dual product over alpha is (x^a)^r / f_alpha."""
    dual_gens: list[Monomial] = [monomial_div(bound, g) for g in gens]
    lhs: Monomial = _product(dual_gens, alpha)
    rhs: Monomial = monomial_div(monomial_pow(bound, len(alpha)), _product(gens, alpha))
    return lhs == rhs


@dataclasses.dataclass(frozen=True)
class SymbolMatrix:
    """n x n matrix whose entry (i, j) is the tag T_ij (i <= j) or None for zero."""

    n: int
    entries: tuple[tuple[Optional[Tag], ...], ...]

    def entry(self, i: int, j: int) -> Optional[Tag]:
        return self.entries[i - 1][j - 1]


def _check_shape(lam: Sequence[int], mu: Sequence[int]) -> None:
    # the Ferrers constraints are checked when the ideal is built
    generalized_ferrers_ideal(lam, mu)
    for i, mu_i in enumerate(mu, 1):
        if mu_i < i - 1:
            raise InvalidPartitionException(f"mu_{i} = {mu_i} is below {i - 1}.")


def symmetrized_matrix(lam: Sequence[int], mu: Sequence[int]) -> SymbolMatrix:
    _check_shape(lam, mu)
    n: int = max(lam)
    rows: list[list[Optional[Tag]]] = [[None] * n for _ in range(n)]
    for i, (lam_i, mu_i) in enumerate(zip(lam, mu, strict=True), 1):
        for j in range(mu_i + 1, lam_i + 1):
            rows[i - 1][j - 1] = (i, j)
            rows[j - 1][i - 1] = (i, j)
    return SymbolMatrix(n, tuple(tuple(row) for row in rows))


def _binomial(first: Sequence[Tag], second: Sequence[Tag]) -> Binomial:
    a: tuple[Tag, ...] = tuple(sorted(first))
    b: tuple[Tag, ...] = tuple(sorted(second))
    return (a, b) if a <= b else (b, a)


@dataclasses.dataclass(frozen=True)
class Minors:
    binomials: frozenset[Binomial]
    # minors with exactly one vanishing product, kept as the surviving monomial
    degenerate: frozenset[tuple[Tag, ...]]


def minors2(matrix: SymbolMatrix) -> Minors:
    binomials: set[Binomial] = set()
    degenerate: set[tuple[Tag, ...]] = set()
    size: range = range(1, matrix.n + 1)
    for i1, i2 in combinations(size, 2):
        for j1, j2 in combinations(size, 2):
            diag_terms = (matrix.entry(i1, j1), matrix.entry(i2, j2))
            anti_terms = (matrix.entry(i1, j2), matrix.entry(i2, j1))
            diag_ok: bool = None not in diag_terms
            anti_ok: bool = None not in anti_terms
            if diag_ok and anti_ok:
                binomials.add(_binomial(diag_terms, anti_terms))  # type: ignore[arg-type]
            elif diag_ok != anti_ok:
                survivor = diag_terms if diag_ok else anti_terms
                degenerate.add(tuple(sorted(survivor)))  # type: ignore[arg-type]
    return Minors(frozenset(binomials), frozenset(degenerate))


@dataclasses.dataclass(frozen=True)
class SpecFiberReport:
    ok: bool
    kernel: frozenset[Binomial]
    minors: frozenset[Binomial]
    degenerate: frozenset[tuple[Tag, ...]]
    kernel_only: frozenset[Binomial]
    minors_only: frozenset[Binomial]


def verify_specfiber(
    lam: Sequence[int], mu: Sequence[int], r: int = 2, bound: Optional[ExponentBound] = None
) -> SpecFiberReport:
    """
    Degree-2 relations of the dual of the specialized Ferrers ideal against the
    binomial 2x2 minors of the symmetrized matrix, matched through x_i x_j <-> T_ij.
    """
    matrix: SymbolMatrix = symmetrized_matrix(lam, mu)
    special: MonomialIdeal = specialize(generalized_ferrers_ideal(lam, mu), (len(lam), lam[0]))
    a: ExponentBound = newton_bound(special) if bound is None else bound

    dual_order: list[Monomial] = [monomial_div(a, g) for g in special.generators]
    tags: list[Tag] = [monomial_point(g) for g in special.generators]
    dual: MonomialIdeal = generalized_dual(special, a)

    kernel: set[Binomial] = set()
    for rel in fiber_relations(dual, r, order=dual_order):
        if rel.degree == 2:
            kernel.add(_binomial([tags[k - 1] for k in rel.alpha], [tags[k - 1] for k in rel.beta]))

    found: Minors = minors2(matrix)
    kernel_set: frozenset[Binomial] = frozenset(kernel)
    report = SpecFiberReport(
        kernel_set == found.binomials,
        kernel_set,
        found.binomials,
        found.degenerate,
        kernel_set - found.binomials,
        found.binomials - kernel_set,
    )
    if not report.ok:
        log.error(
            "Relations and minors disagree for (%s; %s): %s only in the kernel, %s only among the minors.",
            lam,
            mu,
            sorted(report.kernel_only)[:3],
            sorted(report.minors_only)[:3],
        )
    if report.degenerate:
        log.info("%s degenerate minors for (%s; %s) left for review.", len(report.degenerate), lam, mu)
    return report
