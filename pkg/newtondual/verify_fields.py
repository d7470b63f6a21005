import logging

from newtondual.core.betti import BettiTable
from newtondual.core.cellres import LabeledCellComplex, build_borel_complex, build_planar_complex
from newtondual.core.duals import generalized_dual, newton_dual
from newtondual.core.ferrers import diagram_ideal
from newtondual.core.homology import betti_oracle, non_acyclic_degrees
from newtondual.core.monomials import MonomialIdeal
from newtondual.helpers.catalogue import compatible_not_stable, cubic_closure

log = logging.getLogger("newtondual")


def verify_fields(cfg: dict) -> bool:
    """The worked resolutions give the same Betti tables over the rationals and over GF(2)."""
    log.info("Comparing Betti tables over Q and F2")
    workers: int = cfg["oracle"]["workers"]

    ideal: MonomialIdeal = cubic_closure()
    bound, borel_dual = newton_dual(ideal)
    borel: LabeledCellComplex = build_borel_complex(ideal, bound)

    diag, planar_bound = compatible_not_stable()
    planar_dual: MonomialIdeal = generalized_dual(diagram_ideal(diag, planar_bound.n), planar_bound)
    planar: LabeledCellComplex = build_planar_complex(diag, planar_bound)

    res: bool = True
    for dual, cx in ((borel_dual, borel), (planar_dual, planar)):
        rational: BettiTable = betti_oracle(dual, "Q", workers)
        binary: BettiTable = betti_oracle(dual, "F2", workers)
        if rational != binary:
            log.error("Betti numbers of %s differ: %s over Q, %s over F2.", dual, rational.totals(), binary.totals())
            res = False
        if non_acyclic_degrees(cx, "F2", workers):
            log.error("The complex resolving %s is not acyclic over F2.", dual)
            res = False

    return res
