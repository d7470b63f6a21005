import dataclasses
import logging
from collections import Counter, defaultdict
from functools import cached_property
from itertools import combinations, pairwise
from math import comb
from typing import Mapping, Optional, Sequence

from newtondual.core.betti import BettiTable, betti_table
from newtondual.core.duals import ExponentBound, is_a_determined
from newtondual.core.ferrers import (
    Point,
    QuasiBorelMove,
    ShiftedDiagram,
    diagram_ideal,
    good_moves,
    is_compatible,
    moves_from,
    removal_sequence,
)
from newtondual.core.monomials import (
    Monomial,
    MonomialIdeal,
    divides,
    fold_lcm,
    from_support,
    monomial_div,
    monomial_mul,
    support_stats,
    unit,
)
from newtondual.core.stability import borel_move, colex_order, is_strongly_stable
from newtondual.exceptions import (
    AmbientMismatchException,
    IncidenceException,
    IncompatibleDiagramException,
    NonMinimalException,
    NotDeterminedException,
    NotStableException,
)

log = logging.getLogger("newtondual")

EMPTY_CELL: int = 0


@dataclasses.dataclass(frozen=True)
class Cell:
    """
    kind is "empty", "borel" (data = (apex, sigma)), "vertex" (data = (point,)),
    "h-edge" / "v-edge" (data = (source, target)), "rectangle" (data = (corner,))
    or "simplex" (data = generator positions).
    """

    id: int
    dim: int
    kind: str
    data: tuple
    label: Monomial
    vertices: frozenset[int]


@dataclasses.dataclass(frozen=True)
class LabeledCellComplex:
    n: int
    cells: tuple[Cell, ...]
    # cell id -> ((facet id, incidence sign), ...)
    facets: Mapping[int, tuple[tuple[int, int], ...]]

    @cached_property
    def by_id(self) -> dict[int, Cell]:
        return {c.id: c for c in self.cells}

    @property
    def dimension(self) -> int:
        return max(c.dim for c in self.cells)

    def of_dim(self, k: int) -> list[Cell]:
        return [c for c in self.cells if c.dim == k]

    def f_vector(self) -> tuple[int, ...]:
        counts: Counter = Counter(c.dim for c in self.cells if c.dim >= 0)
        return tuple(counts[k] for k in range(self.dimension + 1))

    def labels(self) -> list[Monomial]:
        return [c.label for c in self.cells if c.dim >= 0]


def _complex(n: int, cells: list[Cell], facets: dict[int, list[tuple[int, int]]]) -> LabeledCellComplex:
    return LabeledCellComplex(n, tuple(cells), {cid: tuple(fs) for cid, fs in facets.items()})


def _empty_cell(n: int) -> Cell:
    return Cell(EMPTY_CELL, -1, "empty", (), unit(n), frozenset())


def build_borel_complex(ideal: MonomialIdeal, bound: ExponentBound) -> LabeledCellComplex:
    """
    Cells C(m, sigma) for m in G(I) and sigma in supp_1(m): the cube spanned by the
    moves m -> tau, tau inside sigma, labeled (x^a / m) * x^sigma. Vertices carry the
    labels of the dual generators x^a / m.
    """
    if not is_strongly_stable(ideal):
        raise NotStableException(f"{ideal} is not strongly stable.")
    if not is_a_determined(ideal, bound):
        raise NotDeterminedException(f"{ideal} is not determined by the bound {bound}.")

    n: int = ideal.n
    gens: tuple[Monomial, ...] = colex_order(ideal).order
    keyed: list[tuple[int, int, tuple[int, ...], Monomial]] = []
    for pos, g in enumerate(gens):
        supp_1: list[int] = sorted(support_stats(g).supp_1)
        for r in range(len(supp_1) + 1):
            keyed.extend((r, pos, sigma, g) for sigma in combinations(supp_1, r))
    keyed.sort(key=lambda entry: entry[:3])

    cells: list[Cell] = [_empty_cell(n)]
    facets: dict[int, list[tuple[int, int]]] = {}
    ids: dict[tuple[Monomial, tuple[int, ...]], int] = {}
    seen_vertex_sets: dict[frozenset[Monomial], tuple[Monomial, tuple[int, ...]]] = {}
    vertex_ids: dict[Monomial, int] = {}

    for dim, _, sigma, apex in keyed:
        corners: frozenset[Monomial] = frozenset(
            borel_move(apex, tau) for r in range(len(sigma) + 1) for tau in combinations(sigma, r)
        )
        previous = seen_vertex_sets.get(corners)
        if previous is not None:
            raise IncidenceException(f"C{previous} and C{(apex, sigma)} have the same vertices.")
        seen_vertex_sets[corners] = (apex, sigma)

        cid: int = len(cells)
        label: Monomial = monomial_mul(monomial_div(bound, apex), from_support(n, sigma))
        if dim == 0:
            vertex_ids[apex] = cid
            facets[cid] = [(EMPTY_CELL, 1)]
        else:
            cell_facets: list[tuple[int, int]] = []
            for j, i in enumerate(sigma):
                rest: tuple[int, ...] = sigma[:j] + sigma[j + 1 :]
                sign: int = (-1) ** j
                cell_facets.append((ids[(apex, rest)], sign))
                cell_facets.append((ids[(borel_move(apex, [i]), rest)], -sign))
            facets[cid] = cell_facets

        ids[(apex, sigma)] = cid
        cells.append(Cell(cid, dim, "borel", (apex, sigma), label, frozenset(vertex_ids[v] for v in corners)))

    log.debug("Borel complex of %s has f-vector %s.", ideal, Counter(c.dim for c in cells))
    return _complex(n, cells, facets)


def _point_label(bound: ExponentBound, point: Point) -> Monomial:
    i, j = point
    exps: list[int] = list(bound.exponents)
    exps[i - 1] -= 1
    exps[j - 1] -= 1
    return Monomial(tuple(exps))


def _drop(bound: ExponentBound, i: int) -> Monomial:
    exps: list[int] = list(bound.exponents)
    exps[i - 1] -= 1
    return Monomial(tuple(exps))


def build_planar_complex(diag: ShiftedDiagram, bound: ExponentBound) -> LabeledCellComplex:
    """
    Vertices are the diagram points, edges the good moves and 2-cells the unit-width
    rectangles anchored at each point with two good moves leaving it. Edges are
    oriented along their move; rectangles run counterclockwise with rows drawn
    downward.
    """
    if not is_compatible(diag):
        raise IncompatibleDiagramException(f"Diagram with rows {diag.rows} is not compatible.")
    if diag.width > bound.n:
        raise AmbientMismatchException(f"The bound has {bound.n} entries but the diagram reaches column {diag.width}.")

    ideal: MonomialIdeal = diagram_ideal(diag, bound.n)
    if not is_a_determined(ideal, bound):
        raise NotDeterminedException(f"{ideal} is not determined by the bound {bound}.")

    n: int = bound.n
    cells: list[Cell] = [_empty_cell(n)]
    facets: dict[int, list[tuple[int, int]]] = {}

    point_ids: dict[Point, int] = {}
    for p in removal_sequence(diag):
        cid = len(cells)
        point_ids[p] = cid
        cells.append(Cell(cid, 0, "vertex", (p,), _point_label(bound, p), frozenset([cid])))
        facets[cid] = [(EMPTY_CELL, 1)]

    moves: tuple[QuasiBorelMove, ...] = good_moves(diag)
    edge_ids: dict[tuple[Point, Point], int] = {}
    for mv in moves:
        cid = len(cells)
        edge_ids[(mv.source, mv.target)] = cid
        if mv.axis == "horizontal":
            kind, label = "h-edge", _drop(bound, mv.source[0])
        else:
            kind, label = "v-edge", _drop(bound, mv.source[1])
        ends = frozenset([point_ids[mv.source], point_ids[mv.target]])
        cells.append(Cell(cid, 1, kind, (mv.source, mv.target), label, ends))
        facets[cid] = [(point_ids[mv.target], 1), (point_ids[mv.source], -1)]

    for q1 in removal_sequence(diag):
        starting: list[QuasiBorelMove] = moves_from(moves, q1)
        if len(starting) != 2:
            continue

        t1, t2 = q1
        north: QuasiBorelMove = next(mv for mv in starting if mv.axis == "vertical")
        q2: Point = north.target
        t0: int = q2[0]
        west_end: Point = (t1, t2 - 1)
        corner: Point = (t0, t2 - 1)
        walk_rows: list[int] = [r for r in diag.column(t2 - 1) if t0 <= r <= t1]
        if (q1, west_end) not in edge_ids or (q2, corner) not in edge_ids or walk_rows[:1] != [t0]:
            raise IncidenceException(f"The rectangle anchored at {q1} is not closed by good moves.")

        # column t2 - 1 walked north from (t1, t2 - 1) to (t0, t2 - 1)
        walk: list[int] = [
            edge_ids[((lower, t2 - 1), (upper, t2 - 1))] for lower, upper in pairwise(reversed(walk_rows))
        ]

        boundary: list[tuple[int, int]] = [(edge_ids[(q1, q2)], 1), (edge_ids[(q2, corner)], 1)]
        boundary.extend((eid, -1) for eid in walk)
        boundary.append((edge_ids[(q1, west_end)], -1))

        cid = len(cells)
        corners = frozenset(v for eid, _ in boundary for v in cells[eid].vertices)
        cells.append(Cell(cid, 2, "rectangle", (q1,), bound, corners))
        facets[cid] = boundary

    return _complex(n, cells, facets)


def build_taylor_complex(gens: Sequence[Monomial]) -> LabeledCellComplex:
    """The full simplex on a generator list, faces labeled by lcms. Redundant generators are kept."""
    if not gens:
        raise ValueError("The Taylor complex needs at least one generator.")

    n: int = gens[0].n
    cells: list[Cell] = [_empty_cell(n)]
    facets: dict[int, list[tuple[int, int]]] = {}
    ids: dict[tuple[int, ...], int] = {(): EMPTY_CELL}

    for r in range(1, len(gens) + 1):
        for face in combinations(range(len(gens)), r):
            cid = len(cells)
            ids[face] = cid
            label: Monomial = fold_lcm(gens[k] for k in face)
            verts = frozenset(ids[(k,)] for k in face) if r > 1 else frozenset([cid])
            cells.append(Cell(cid, r - 1, "simplex", face, label, verts))
            facets[cid] = [(ids[face[:p] + face[p + 1 :]], (-1) ** p) for p in range(r)]

    return _complex(n, cells, facets)


def check_label_law(cx: LabeledCellComplex) -> bool:
    for c in cx.cells:
        if c.dim < 0:
            continue
        expected: Monomial = fold_lcm(cx.by_id[v].label for v in c.vertices)
        if expected != c.label:
            log.error("Cell %s has label %s, the lcm of its vertices is %s.", c.id, c.label, expected)
            return False
    return True


def check_incidence(cx: LabeledCellComplex) -> bool:
    """For every cell P and every face R two dimensions down, sum_Q e(R, Q) e(Q, P) = 0."""
    for c in cx.cells:
        totals: Counter = Counter()
        for q, s1 in cx.facets.get(c.id, ()):
            for r, s2 in cx.facets.get(q, ()):
                totals[r] += s1 * s2
        if any(totals.values()):
            log.error("Incidence signs of cell %s do not compose to zero: %s.", c.id, dict(totals))
            return False
    return True


def euler_characteristic(cx: LabeledCellComplex) -> int:
    return sum((-1) ** k * count for k, count in enumerate(cx.f_vector()))


def restrict_leq(cx: LabeledCellComplex, beta: Monomial) -> LabeledCellComplex:
    """The subcomplex of faces whose label divides x^beta. The empty face is always kept."""
    kept: list[Cell] = [c for c in cx.cells if divides(c.label, beta)]
    ids: set[int] = {c.id for c in kept}
    facets = {cid: fs for cid, fs in cx.facets.items() if cid in ids}
    return LabeledCellComplex(cx.n, tuple(kept), facets)


Entry = tuple[int, Monomial]


@dataclasses.dataclass(frozen=True)
class FreeComplex:
    """
    generators[k] lists (cell id, multidegree) for the cells of dimension k, the
    empty cell sitting in degree -1 as the ring itself. differentials[k] maps
    (row in degree k - 1, column in degree k) to (sign, monomial).
    """

    n: int
    generators: Mapping[int, tuple[Entry, ...]]
    differentials: Mapping[int, Mapping[tuple[int, int], tuple[int, Monomial]]]

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(self.generators[k]) for k in sorted(self.generators))


def free_complex(cx: LabeledCellComplex) -> FreeComplex:
    by_dim: dict[int, list[Cell]] = defaultdict(list)
    for c in cx.cells:
        by_dim[c.dim].append(c)

    position: dict[int, int] = {}
    generators: dict[int, tuple[Entry, ...]] = {}
    for k in sorted(by_dim):
        generators[k] = tuple((c.id, c.label) for c in by_dim[k])
        position.update({c.id: idx for idx, c in enumerate(by_dim[k])})

    differentials: dict[int, dict[tuple[int, int], tuple[int, Monomial]]] = {}
    for k in sorted(by_dim):
        if k < 0:
            continue
        matrix: dict[tuple[int, int], tuple[int, Monomial]] = {}
        for c in by_dim[k]:
            for q, sign in cx.facets.get(c.id, ()):
                facet: Cell = cx.by_id[q]
                if not divides(facet.label, c.label):
                    raise IncidenceException(f"Facet {q} of cell {c.id} has a label not dividing {c.label}.")
                matrix[(position[q], position[c.id])] = (sign, monomial_div(c.label, facet.label))
        differentials[k] = matrix

    fc = FreeComplex(cx.n, generators, differentials)
    check_composites(fc)
    return fc


def check_composites(fc: FreeComplex) -> None:
    """Consecutive differentials compose to zero, compared as sign-monomial sums."""
    for k, upper in fc.differentials.items():
        lower = fc.differentials.get(k - 1)
        if lower is None:
            continue
        by_col: dict[int, list[tuple[int, tuple[int, Monomial]]]] = defaultdict(list)
        for (row, col), entry in lower.items():
            by_col[col].append((row, entry))

        totals: Counter = Counter()
        for (mid, col), (s1, m1) in upper.items():
            for row, (s2, m2) in by_col.get(mid, []):
                totals[(row, col, monomial_mul(m1, m2))] += s1 * s2

        bad = [key for key, value in totals.items() if value]
        if bad:
            raise IncidenceException(f"The composite of differentials {k} and {k - 1} is nonzero at {bad[0][:2]}.")


def is_minimal(fc: FreeComplex) -> bool:
    """No unit entry between cells; the map onto the ring from the empty cell is left out."""
    return all(m.degree > 0 for k, matrix in fc.differentials.items() if k > 0 for _, m in matrix.values())


def betti_from_complex(fc: FreeComplex) -> BettiTable:
    """Cells of dimension i give beta_i of the ideal at their labels."""
    if not is_minimal(fc):
        raise NonMinimalException("The free complex has a unit entry in a differential.")
    return betti_table((k, label, 1) for k, gens in fc.generators.items() if k >= 0 for _, label in gens)


def predicted_betti(ideal: MonomialIdeal) -> tuple[int, ...]:
    """beta_i of the dual of a strongly stable equigenerated ideal: sum over generators of C(r_k, i)."""
    if not is_strongly_stable(ideal):
        raise NotStableException(f"{ideal} is not strongly stable.")

    sizes: list[int] = [len(support_stats(g).supp_1) if not g.is_unit() else 0 for g in ideal.generators]
    return tuple(sum(comb(r, i) for r in sizes) for i in range(max(sizes) + 1))


def vertex_labels(cx: LabeledCellComplex) -> list[Monomial]:
    return [c.label for c in cx.of_dim(0)]


def complex_label_lcm(cx: LabeledCellComplex) -> Optional[Monomial]:
    labels: list[Monomial] = cx.labels()
    return fold_lcm(labels) if labels else None
