import dataclasses
import logging
from collections import deque
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Literal, Optional

from newtondual.core.monomials import (
    Monomial,
    MonomialIdeal,
    colex_key,
    colon_ideal,
    is_generated_by_variables,
    minimalize,
    monomial,
    monomial_div,
    support_stats,
    variable_indices,
)
from newtondual.exceptions import InvalidMoveException, NotEquigeneratedException, NotStableException

log = logging.getLogger("newtondual")

Variant = Literal["stable", "strongly-stable"]
XSetMode = Literal["strict-lower", "any-other"]


def exchange(m: Monomial, into: int, out_of: int) -> Optional[Monomial]:
    """m * x_into / x_out_of, or None if x_out_of does not divide m."""
    if m.exponent(out_of) == 0:
        return None
    exps: list[int] = list(m.exponents)
    exps[out_of - 1] -= 1
    exps[into - 1] += 1
    return Monomial(tuple(exps))


def _stable_moves(m: Monomial) -> Iterator[Monomial]:
    top: int = support_stats(m).max
    for i in range(1, top):
        moved = exchange(m, i, top)
        if moved is not None:
            yield moved


def _strongly_stable_moves(m: Monomial) -> Iterator[Monomial]:
    for i in support_stats(m).supp:
        for j in range(1, i):
            moved = exchange(m, j, i)
            if moved is not None:
                yield moved


def _moves(m: Monomial, variant: Variant) -> Iterator[Monomial]:
    if variant == "stable":
        return _stable_moves(m)
    return _strongly_stable_moves(m)


def _monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    for combo in combinations_with_replacement(range(n), d):
        exps: list[int] = [0] * n
        for c in combo:
            exps[c] += 1
        yield Monomial(tuple(exps))


def _check_exchange_property(ideal: MonomialIdeal, variant: Variant, permissive: bool) -> bool:
    if ideal.is_zero:
        raise NotStableException("The zero ideal carries no stability data.")

    if ideal.is_equigenerated:
        candidates: Iterable[Monomial] = ideal.generators
    elif permissive:
        top: int = max(g.degree for g in ideal.generators)
        candidates = [m for d in range(1, top + 1) for m in _monomials_of_degree(ideal.n, d) if m in ideal]
    else:
        raise NotEquigeneratedException(f"{ideal} is not generated in a single degree.")

    for m in candidates:
        if m.is_unit():
            continue
        for moved in _moves(m, variant):
            if moved not in ideal:
                log.debug("%s fails the %s exchange at %s -> %s.", ideal, variant, m, moved)
                return False
    return True


def is_stable(ideal: MonomialIdeal, permissive: bool = False) -> bool:
    """
    Stable: m * x_i / x_max(m) stays in the ideal for every i < max(m). For an
    equigenerated ideal it is enough to look at the minimal generators; with
    permissive=True a mixed-degree ideal is checked against every monomial of the
    ideal up to the largest generator degree.
    """
    return _check_exchange_property(ideal, "stable", permissive)


def is_strongly_stable(ideal: MonomialIdeal, permissive: bool = False) -> bool:
    return _check_exchange_property(ideal, "strongly-stable", permissive)


def is_closed(ideal: MonomialIdeal, variant: Variant) -> bool:
    if variant == "stable":
        return is_stable(ideal)
    return is_strongly_stable(ideal)


def borel_move(m: Monomial, sigma: Iterable[int]) -> Monomial:
    """m * prod_{i in sigma} x_{i-1} / x_i, for sigma inside supp_1(m)."""
    moves: frozenset[int] = frozenset(sigma)
    if not moves:
        return m

    allowed: frozenset[int] = support_stats(m).supp_1
    if not moves <= allowed:
        raise InvalidMoveException(f"Indices {sorted(moves - allowed)} are not in supp_1({m}).")

    exps: list[int] = list(m.exponents)
    for i in moves:
        exps[i - 1] -= 1
        exps[i - 2] += 1
    return monomial(exps)


@dataclasses.dataclass(frozen=True)
class OrderedGenerators:
    ideal: MonomialIdeal
    order: tuple[Monomial, ...]

    def __post_init__(self):
        if len(self.order) != len(self.ideal.generators) or set(self.order) != set(self.ideal.generators):
            raise ValueError("The order is not a permutation of the minimal generators.")

    def __len__(self) -> int:
        return len(self.order)

    def index(self, m: Monomial) -> int:
        """1-based position of m."""
        return self.order.index(m) + 1


def colex_order(ideal: MonomialIdeal) -> OrderedGenerators:
    return OrderedGenerators(ideal, tuple(sorted(ideal.generators, key=colex_key)))


def ordered(ideal: MonomialIdeal, gens: Iterable[Monomial]) -> OrderedGenerators:
    return OrderedGenerators(ideal, tuple(gens))


def dual_order(og: OrderedGenerators, bound: Monomial) -> OrderedGenerators:
    """The dual generators x^a / f_k, numbered like f_k."""
    gens: tuple[Monomial, ...] = tuple(monomial_div(bound, g) for g in og.order)
    return OrderedGenerators(minimalize(gens, og.ideal.n), gens)


@dataclasses.dataclass(frozen=True)
class LinearQuotientsResult:
    ok: bool
    # colons[k - 2] holds the variable indices of ((f_1..f_{k-1}) : f_k)
    colons: tuple[frozenset[int], ...]
    failed_at: Optional[int] = None
    offending: Optional[Monomial] = None


def check_linear_quotients(og: OrderedGenerators) -> LinearQuotientsResult:
    colons: list[frozenset[int]] = []

    for k in range(2, len(og) + 1):
        prefix: MonomialIdeal = minimalize(og.order[: k - 1], og.ideal.n)
        colon: MonomialIdeal = colon_ideal(prefix, og.order[k - 1])

        if not is_generated_by_variables(colon):
            offending: Monomial = next(g for g in colon.generators if g.degree != 1)
            log.info("Linear quotients fail at step %s: %s is in the colon ideal.", k, offending)
            return LinearQuotientsResult(False, tuple(colons), k, offending)

        colons.append(variable_indices(colon))

    return LinearQuotientsResult(True, tuple(colons))


def x_set(ideal: MonomialIdeal, f: Monomial, mode: XSetMode = "strict-lower") -> frozenset[int]:
    """
    The variables x_j for which some exchange f * x_i / x_j is again a minimal
    generator, with i < j (strict-lower) or any i != j (any-other).
    """
    generators: frozenset[Monomial] = frozenset(ideal.generators)
    if f not in generators:
        raise ValueError(f"{f} is not a minimal generator of {ideal}.")

    found: set[int] = set()
    for j in range(1, ideal.n + 1):
        lower: Iterable[int] = range(1, j) if mode == "strict-lower" else (i for i in range(1, ideal.n + 1) if i != j)
        for i in lower:
            moved = exchange(f, i, j)
            if moved is not None and moved in generators:
                found.add(j)
                break
    return frozenset(found)


def stable_closure(seeds: Iterable[Monomial], variant: Variant = "strongly-stable") -> MonomialIdeal:
    todo: deque[Monomial] = deque(seeds)
    if not todo:
        raise ValueError("The closure needs at least one seed monomial.")
    if len({m.degree for m in todo}) != 1:
        raise NotEquigeneratedException("Seed monomials do not share a degree.")

    n: int = todo[0].n
    seen: set[Monomial] = set(todo)
    while todo:
        m = todo.popleft()
        if m.is_unit():
            continue
        for moved in _moves(m, variant):
            if moved not in seen:
                seen.add(moved)
                todo.append(moved)

    return minimalize(seen, n)


def minimal_closure_generators(ideal: MonomialIdeal, variant: Variant = "strongly-stable") -> frozenset[Monomial]:
    """The generators that no single move from another generator reaches."""
    if not is_closed(ideal, variant):
        raise NotStableException(f"{ideal} is not closed under {variant} moves.")

    reached: set[Monomial] = set()
    for g in ideal.generators:
        if not g.is_unit():
            reached.update(m for m in _moves(g, variant) if m != g)

    return frozenset(g for g in ideal.generators if g not in reached)


def check_truncation_closure(ideal: MonomialIdeal, variant: Variant = "strongly-stable") -> Optional[int]:
    """
    Every co-lex prefix (f_1..f_k) of a closed equigenerated ideal is closed again.
    Returns the first k whose prefix is not, or None.
    """
    order: OrderedGenerators = colex_order(ideal)
    for k in range(1, len(order) + 1):
        if not is_closed(minimalize(order.order[:k], ideal.n), variant):
            return k
    return None
