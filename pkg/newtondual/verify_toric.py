import logging
import random

from newtondual.core.duals import ExponentBound
from newtondual.core.monomials import MonomialIdeal, ideal_from_exponents
from newtondual.core.toric import (
    SpecFiberReport,
    ToricRelation,
    compare_fiber_relations,
    dual_product_identity,
    fiber_relations,
    index_pairs,
    verify_specfiber,
)
from newtondual.exceptions import ScaleGuardException
from newtondual.helpers.catalogue import FERRERS_443
from newtondual.helpers.sampling import random_bound, random_ideal

log = logging.getLogger("newtondual")

SPECFIBER_SHAPES: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = (
    ((1,), (0,)),
    ((2, 2), (0, 1)),
    FERRERS_443,
)


def verify_toric(cfg: dict) -> bool:
    log.info("Verifying special fiber relations")
    rng = random.Random(cfg["sweeps"]["seed"])
    degree_cap: int = cfg["toric"]["degree_cap"]
    max_products: int = cfg["toric"]["max_products"]

    res: bool = True
    res &= _worked_relations()

    for lam, mu in SPECFIBER_SHAPES:
        report: SpecFiberReport = verify_specfiber(lam, mu)
        res &= report.ok

    for _ in range(cfg["sweeps"]["sizes"]["fiber"]):
        n: int = rng.randint(1, 4)
        ideal: MonomialIdeal = random_ideal(rng, n, 8, 3, equigenerated=True)
        bound: ExponentBound = random_bound(rng, ideal)
        try:
            res &= compare_fiber_relations(ideal, bound, degree_cap, max_products)
        except ScaleGuardException as e:
            log.warning("Skipped %s: %s", ideal, e)
            continue

        rels: tuple[ToricRelation, ...] = fiber_relations(ideal, degree_cap, max_products=max_products)
        if not all(dual_product_identity(bound, ideal.generators, rel.alpha) for rel in rels):
            log.error("A dual product over %s does not match the bound power.", ideal)
            res = False

    if not res:
        log.error("Toric verification failed.")
    return res


def _worked_relations() -> bool:
    res: bool = True

    veronese: MonomialIdeal = ideal_from_exponents([(2, 0), (1, 1), (0, 2)])
    if index_pairs(fiber_relations(veronese, 2)) != {((1, 3), (2, 2))}:
        log.error("The quadrics of %s are %s.", veronese, fiber_relations(veronese, 2))
        res = False

    square: MonomialIdeal = ideal_from_exponents([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    if index_pairs(fiber_relations(square, 2)) != {((1, 4), (2, 3))}:
        log.error("The quadrics of %s are %s.", square, fiber_relations(square, 2))
        res = False

    return res
