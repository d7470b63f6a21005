import logging
import random
from typing import Optional

from newtondual.core.betti import BettiTable
from newtondual.core.cellres import (
    FreeComplex,
    LabeledCellComplex,
    betti_from_complex,
    build_borel_complex,
    check_incidence,
    check_label_law,
    euler_characteristic,
    free_complex,
    predicted_betti,
)
from newtondual.core.duals import ExponentBound, generalized_dual, newton_bound
from newtondual.core.homology import Field, betti_oracle, non_acyclic_degrees
from newtondual.core.monomials import MonomialIdeal, fold_lcm
from newtondual.exceptions import IncidenceException, NonMinimalException
from newtondual.helpers.catalogue import cubic_closure
from newtondual.helpers.sampling import random_closed_ideal

log = logging.getLogger("newtondual")

CUBIC_CLOSURE_BETTI: tuple[int, ...] = (14, 21, 9, 1)


def verify_borel(cfg: dict) -> bool:
    log.info("Verifying Borel complexes")
    rng = random.Random(cfg["sweeps"]["seed"])
    field: Field = cfg["oracle"]["field"]
    workers: int = cfg["oracle"]["workers"]
    max_gens: int = cfg["oracle"]["max_generators"]

    res: bool = True
    res &= _worked_complex(field, workers)

    for _ in range(cfg["sweeps"]["sizes"]["borel"]):
        ideal: MonomialIdeal = random_closed_ideal(
            rng, rng.randint(2, 5), rng.randint(1, 4), rng.randint(1, 2), max_gens=max_gens
        )
        res &= check_borel_resolution(ideal, field, workers)

    if not res:
        log.error("Borel complex verification failed.")
    return res


def _worked_complex(field: Field, workers: int) -> bool:
    ideal: MonomialIdeal = cubic_closure()
    cx: LabeledCellComplex = build_borel_complex(ideal, newton_bound(ideal))
    if cx.f_vector() != CUBIC_CLOSURE_BETTI or predicted_betti(ideal) != CUBIC_CLOSURE_BETTI:
        log.error("The Borel complex of %s has f-vector %s.", ideal, cx.f_vector())
        return False

    top = cx.of_dim(3)[0]
    if top.label != fold_lcm(ideal.generators):
        log.error("The cube is labeled %s rather than the lcm of the generators.", top.label)
        return False

    return check_borel_resolution(ideal, field, workers)


def check_borel_resolution(
    ideal: MonomialIdeal, field: Field = "Q", workers: int = 1, bound: Optional[ExponentBound] = None
) -> bool:
    """
    The Borel complex of I resolves the dual minimally: both sign and label laws
    hold, every restriction is acyclic and the cellular Betti table is the
    oracle's, multidegree by multidegree. The bound defaults to the Newton bound.
    """
    if bound is None:
        bound = newton_bound(ideal)
    cx: LabeledCellComplex = build_borel_complex(ideal, bound)
    dual: MonomialIdeal = generalized_dual(ideal, bound)

    if not check_label_law(cx) or not check_incidence(cx):
        return False

    try:
        fc: FreeComplex = free_complex(cx)
        cellular: BettiTable = betti_from_complex(fc)
    except (IncidenceException, NonMinimalException) as e:
        log.error("The Borel complex of %s does not give a minimal free complex: %s", ideal, e)
        return False

    if euler_characteristic(cx) != 1:
        log.error("The Borel complex of %s has Euler characteristic %s.", ideal, euler_characteristic(cx))
        return False

    bad = non_acyclic_degrees(cx, field, workers)
    if bad:
        log.error("The Borel complex of %s has homology below %s.", ideal, bad[0])
        return False

    oracle: BettiTable = betti_oracle(dual, field, workers)
    if cellular != oracle:
        log.error("Cellular Betti numbers %s of %s differ from %s.", cellular.totals(), dual, oracle.totals())
        return False

    if cellular.totals() != predicted_betti(ideal):
        log.error("Betti totals %s of %s differ from the count %s.", cellular.totals(), dual, predicted_betti(ideal))
        return False

    return True
