import logging
import random
from itertools import combinations
from typing import Optional

from newtondual.core.duals import ExponentBound, newton_bound, newton_dual
from newtondual.core.homology import has_linear_resolution
from newtondual.core.monomials import MonomialIdeal, support_stats
from newtondual.core.stability import (
    LinearQuotientsResult,
    OrderedGenerators,
    Variant,
    borel_move,
    check_linear_quotients,
    check_truncation_closure,
    colex_order,
    dual_order,
    is_stable,
    is_strongly_stable,
    minimal_closure_generators,
    stable_closure,
    x_set,
)
from newtondual.helpers.catalogue import cubic_closure, stable_not_strongly_stable
from newtondual.helpers.sampling import random_closed_ideal, random_stable_quadratic

log = logging.getLogger("newtondual")


def verify_stability(cfg: dict) -> bool:
    log.info("Verifying stability and linear quotients")
    rng = random.Random(cfg["sweeps"]["seed"])
    sizes: dict = cfg["sweeps"]["sizes"]
    max_gens: int = cfg["oracle"]["max_generators"]

    res: bool = True
    res &= _worked_closures()

    for _ in range(sizes["borel"]):
        ideal: MonomialIdeal = random_closed_ideal(
            rng, rng.randint(2, 5), rng.randint(1, 4), rng.randint(1, 2), max_gens=max_gens
        )
        res &= _borel_moves_stay(ideal)
        res &= _dual_linear_quotients(ideal, "strongly-stable")
        res &= _closure_round_trip(ideal, "strongly-stable")

    for _ in range(sizes["stable_quadratic"]):
        ideal = random_stable_quadratic(rng, rng.randint(2, 5))
        res &= _dual_linear_quotients(ideal, "stable")
        res &= _closure_round_trip(ideal, "stable")

    res &= _stable_but_not_strongly(cfg)

    if not res:
        log.error("Stability verification failed.")
    return res


def _worked_closures() -> bool:
    ideal: MonomialIdeal = cubic_closure()
    closure: MonomialIdeal = stable_closure([ideal.generators[-1]])
    if closure != ideal or minimal_closure_generators(ideal) != frozenset(ideal.generators[-1:]):
        log.error("The strongly stable closure of %s is %s.", ideal.generators[-1], closure)
        return False
    return True


def _borel_moves_stay(ideal: MonomialIdeal) -> bool:
    generators: frozenset = frozenset(ideal.generators)
    for g in ideal.generators:
        if g.is_unit():
            continue
        supp_1: list[int] = sorted(support_stats(g).supp_1)
        for r in range(1, len(supp_1) + 1):
            for sigma in combinations(supp_1, r):
                if borel_move(g, sigma) not in generators:
                    log.error("Moving %s by %s leaves the generators of %s.", g, sigma, ideal)
                    return False
    return True


def _dual_linear_quotients(ideal: MonomialIdeal, variant: Variant) -> bool:
    """The co-lex ordered dual has linear quotients, with the step-k colon generated by X_k."""
    og: OrderedGenerators = colex_order(ideal)
    bound: ExponentBound = newton_bound(ideal)
    result: LinearQuotientsResult = check_linear_quotients(dual_order(og, bound))

    if not result.ok:
        log.error("The dual of %s fails linear quotients at step %s (%s).", ideal, result.failed_at, result.offending)
        return False

    for k, colon in enumerate(result.colons, 2):
        expected: frozenset[int] = x_set(ideal, og.order[k - 1], "strict-lower")
        if colon != expected:
            log.error("Step %s of the dual of %s has colon %s, expected %s.", k, ideal, sorted(colon), sorted(expected))
            return False

    failed: Optional[int] = check_truncation_closure(ideal, variant)
    if failed is not None:
        log.error("The co-lex prefix of length %s of %s is not %s.", failed, ideal, variant)
        return False
    return True


def _closure_round_trip(ideal: MonomialIdeal, variant: Variant) -> bool:
    seeds: frozenset = minimal_closure_generators(ideal, variant)
    closure: MonomialIdeal = stable_closure(seeds, variant)
    if closure != ideal or stable_closure(closure.generators, variant) != closure:
        log.error("The %s closure of the seeds %s of %s gives %s.", variant, sorted(map(str, seeds)), ideal, closure)
        return False
    return True


def _stable_but_not_strongly(cfg: dict) -> bool:
    ideal: MonomialIdeal = stable_not_strongly_stable()
    if not is_stable(ideal) or is_strongly_stable(ideal):
        log.error("%s should be stable without being strongly stable.", ideal)
        return False

    result: LinearQuotientsResult = check_linear_quotients(dual_order(colex_order(ideal), newton_bound(ideal)))
    if result.ok:
        log.error("The co-lex dual of %s unexpectedly has linear quotients.", ideal)
        return False

    _, dual = newton_dual(ideal)
    if has_linear_resolution(dual, cfg["oracle"]["field"], cfg["oracle"]["workers"]):
        log.error("The dual of %s unexpectedly has a linear resolution.", ideal)
        return False
    return True
