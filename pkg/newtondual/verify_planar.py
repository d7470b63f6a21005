import logging
import random
from typing import Optional

from newtondual.core.betti import BettiTable
from newtondual.core.cellres import (
    FreeComplex,
    LabeledCellComplex,
    betti_from_complex,
    build_planar_complex,
    check_incidence,
    check_label_law,
    euler_characteristic,
    free_complex,
)
from newtondual.core.duals import ExponentBound, generalized_dual, newton_bound
from newtondual.core.ferrers import (
    ShiftedDiagram,
    betti_w_formula,
    check_move_structure,
    check_prefix_connectivity,
    check_stable_good_moves,
    check_y_chain,
    diagram_from_ideal,
    diagram_ideal,
    good_moves,
    is_compatible,
    is_compatible_direct,
    is_connected,
    is_westward,
    point_monomial,
    removal_order,
    w_betti,
)
from newtondual.core.homology import Field, betti_oracle, non_acyclic_degrees
from newtondual.core.monomials import MonomialIdeal, minimalize
from newtondual.core.stability import (
    LinearQuotientsResult,
    OrderedGenerators,
    check_linear_quotients,
    dual_order,
    x_set,
)
from newtondual.exceptions import IncidenceException, IncompatibleDiagramException, NonMinimalException
from newtondual.helpers.catalogue import (
    QUASI_DIAGRAM_ORDER,
    compatible_not_stable,
    compatible_not_stable_dual,
    quasi_diagram,
    westward_incompatible,
)
from newtondual.helpers.sampling import random_stable_quadratic, shifted_diagrams

log = logging.getLogger("newtondual")


def verify_planar(cfg: dict) -> bool:
    log.info("Verifying planar complexes of shifted diagrams")
    rng = random.Random(cfg["sweeps"]["seed"])
    field: Field = cfg["oracle"]["field"]
    workers: int = cfg["oracle"]["workers"]

    res: bool = True
    res &= _worked_diagrams(field, workers)
    res &= _diagram_sweep(cfg["sweeps"]["max_points"], field, workers)

    for _ in range(cfg["sweeps"]["sizes"]["stable_quadratic"]):
        res &= check_stable_quadratic(random_stable_quadratic(rng, rng.randint(2, 5)), field, workers)

    if not res:
        log.error("Planar complex verification failed.")
    return res


def _worked_diagrams(field: Field, workers: int) -> bool:
    res: bool = True

    quasi: ShiftedDiagram = quasi_diagram()
    expected = tuple(point_monomial(quasi.width, p) for p in QUASI_DIAGRAM_ORDER)
    if not is_connected(quasi) or removal_order(quasi).order != expected:
        log.error("The removal order of %s is not the expected one.", quasi.rows)
        res = False
    res &= check_removal_quotients(quasi)
    try:
        is_compatible(quasi)
        log.error("The diagram %s with an eastward move was accepted.", quasi.rows)
        res = False
    except IncompatibleDiagramException:
        log.debug("The diagram %s is rejected as expected.", quasi.rows)

    diag, bound = compatible_not_stable()
    cx: LabeledCellComplex = build_planar_complex(diag, bound)
    if cx.f_vector() != (4, 4, 1) or generalized_dual(diagram_ideal(diag), bound) != compatible_not_stable_dual():
        log.error("The planar complex of %s has f-vector %s.", diag.rows, cx.f_vector())
        res = False
    res &= check_planar_resolution(diag, bound, field, workers)

    wrong: ShiftedDiagram = westward_incompatible()
    if not is_westward(wrong) or is_compatible(wrong) or is_compatible_direct(wrong):
        log.error("The diagram %s should fail compatibility.", wrong.rows)
        res = False

    return res


def _diagram_sweep(max_points: int, field: Field, workers: int) -> bool:
    """Every connected diagram up to max_points: structural facts, and the full resolution check when compatible."""
    res: bool = True
    counts: dict[str, int] = {"diagrams": 0, "westward": 0, "compatible": 0}

    for diag in shifted_diagrams(max_points):
        counts["diagrams"] += 1
        if check_prefix_connectivity(diag) is not None:
            log.error("A removal prefix of %s is not a connected diagram.", diag.rows)
            res = False
        res &= check_removal_quotients(diag)

        if not is_westward(diag):
            continue
        counts["westward"] += 1

        if not check_move_structure(good_moves(diag)):
            res = False
        compatible: bool = is_compatible(diag)
        if compatible != is_compatible_direct(diag):
            log.error("The two compatibility tests disagree on %s.", diag.rows)
            res = False

        if compatible:
            counts["compatible"] += 1
            res &= check_planar_resolution(diag, newton_bound(diagram_ideal(diag)), field, workers)

    log.info("Swept %(diagrams)s diagrams, %(westward)s westward, %(compatible)s compatible.", counts)
    return res


def check_removal_quotients(diag: ShiftedDiagram, bound: Optional[ExponentBound] = None) -> bool:
    """
    The dual taken in removal order has linear quotients, and the colon at step k is
    generated by the any-other X-set of f_k inside (f_1, ..., f_k). The bound
    defaults to the Newton bound.
    """
    order: OrderedGenerators = removal_order(diag)
    if bound is None:
        bound = newton_bound(order.ideal)

    result: LinearQuotientsResult = check_linear_quotients(dual_order(order, bound))
    if not result.ok:
        log.error("The removal-order dual of %s fails linear quotients at step %s.", diag.rows, result.failed_at)
        return False

    for k in range(2, len(order) + 1):
        prefix: MonomialIdeal = minimalize(order.order[:k], order.ideal.n)
        expected: frozenset[int] = x_set(prefix, order.order[k - 1], "any-other")
        if result.colons[k - 2] != expected:
            log.error(
                "Step %s of %s has colon variables %s, the X-set is %s.",
                k,
                diag.rows,
                sorted(result.colons[k - 2]),
                sorted(expected),
            )
            return False
    return True


def check_planar_resolution(diag: ShiftedDiagram, bound: ExponentBound, field: Field = "Q", workers: int = 1) -> bool:
    cx: LabeledCellComplex = build_planar_complex(diag, bound)
    dual: MonomialIdeal = generalized_dual(diagram_ideal(diag, bound.n), bound)

    if not check_label_law(cx) or not check_incidence(cx):
        return False
    try:
        fc: FreeComplex = free_complex(cx)
        cellular: BettiTable = betti_from_complex(fc)
    except (IncidenceException, NonMinimalException) as e:
        log.error("The planar complex of %s does not give a minimal free complex: %s", diag.rows, e)
        return False

    if euler_characteristic(cx) != 1:
        log.error("The planar complex of %s has Euler characteristic %s.", diag.rows, euler_characteristic(cx))
        return False

    bad = non_acyclic_degrees(cx, field, workers)
    if bad:
        log.error("The planar complex of %s has homology below %s.", diag.rows, bad[0])
        return False

    oracle: BettiTable = betti_oracle(dual, field, workers)
    if cellular != oracle:
        log.error("Cellular Betti numbers %s of %s differ from %s.", cellular.totals(), dual, oracle.totals())
        return False
    return True


def check_stable_quadratic(ideal: MonomialIdeal, field: Field = "Q", workers: int = 1) -> bool:
    """Good move counts, the Y_j chain and the (w1, w2) Betti count against the oracle."""
    if not check_stable_good_moves(ideal) or not check_y_chain(ideal):
        log.error("The good moves or Y_j sets of %s are not as expected.", ideal)
        return False

    diag: ShiftedDiagram = diagram_from_ideal(ideal)
    if not is_compatible(diag):
        log.error("The diagram of the stable ideal %s is not compatible.", ideal)
        return False

    w1, w2 = betti_w_formula(ideal)
    expected: tuple[int, ...] = w_betti(w1, w2)
    while len(expected) > 1 and expected[-1] == 0:
        expected = expected[:-1]

    bound: ExponentBound = newton_bound(ideal)
    oracle: BettiTable = betti_oracle(generalized_dual(ideal, bound), field, workers)
    if oracle.totals() != expected:
        log.error("The dual of %s has Betti numbers %s, the count gives %s.", ideal, oracle.totals(), expected)
        return False
    return True
