import dataclasses
import logging
from collections import defaultdict
from itertools import pairwise
from typing import Iterable, Literal, Optional, Sequence

from newtondual.core.monomials import Monomial, MonomialIdeal, from_support, minimalize, monomial
from newtondual.core.stability import OrderedGenerators, is_stable, x_set
from newtondual.exceptions import (
    DisconnectedDiagramException,
    IncompatibleDiagramException,
    InvalidPartitionException,
    NotStableException,
    SpecializationException,
)

log = logging.getLogger("newtondual")

Point = tuple[int, int]
Axis = Literal["horizontal", "vertical"]


@dataclasses.dataclass(frozen=True)
class ShiftedPartition:
    """
    Rows i = 1..h with mu_i < j <= lam_i. Row i starts no further left than the
    diagonal, so i - 1 <= mu_i < lam_i.
    """

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        if not self.lam or len(self.lam) != len(self.mu):
            raise InvalidPartitionException(f"lambda {self.lam} and mu {self.mu} must be non-empty and equally long.")
        for i, (lam_i, mu_i) in enumerate(zip(self.lam, self.mu, strict=True), 1):
            if not i - 1 <= mu_i < lam_i:
                raise InvalidPartitionException(f"Row {i} violates {i - 1} <= mu_i < lambda_i: ({lam_i}; {mu_i}).")

    @property
    def h(self) -> int:
        return len(self.lam)


def shifted_partition(lam: Iterable[int], mu: Iterable[int]) -> ShiftedPartition:
    return ShiftedPartition(tuple(lam), tuple(mu))


@dataclasses.dataclass(frozen=True)
class ShiftedDiagram:
    """Lattice points held as row intervals (mu_i, lam_i]."""

    rows: tuple[tuple[int, int], ...]

    @property
    def h(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return max(lam for _, lam in self.rows)

    @property
    def points(self) -> tuple[Point, ...]:
        return tuple((i, j) for i, (mu, lam) in enumerate(self.rows, 1) for j in range(mu + 1, lam + 1))

    @property
    def partition(self) -> ShiftedPartition:
        return ShiftedPartition(tuple(lam for _, lam in self.rows), tuple(mu for mu, _ in self.rows))

    def __contains__(self, point: Point) -> bool:
        i, j = point
        if not 1 <= i <= self.h:
            return False
        mu, lam = self.rows[i - 1]
        return mu < j <= lam

    def __len__(self) -> int:
        return sum(lam - mu for mu, lam in self.rows)

    def column(self, j: int) -> list[int]:
        return [i for i, (mu, lam) in enumerate(self.rows, 1) if mu < j <= lam]


def diagram(partition: ShiftedPartition) -> ShiftedDiagram:
    return ShiftedDiagram(tuple(zip(partition.mu, partition.lam, strict=True)))


def diagram_from_points(points: Iterable[Point]) -> ShiftedDiagram:
    """Rebuild a diagram from a point set, which must fill rows 1..h with intervals."""
    by_row: dict[int, list[int]] = defaultdict(list)
    for i, j in points:
        if not 1 <= i <= j:
            raise InvalidPartitionException(f"Point {(i, j)} is outside the shifted quadrant.")
        by_row[i].append(j)

    if not by_row:
        raise InvalidPartitionException("A diagram needs at least one point.")
    if sorted(by_row) != list(range(1, len(by_row) + 1)):
        raise InvalidPartitionException(f"Rows {sorted(by_row)} are not 1..h.")

    rows: list[tuple[int, int]] = []
    for i in range(1, len(by_row) + 1):
        cols: list[int] = sorted(set(by_row[i]))
        if cols[-1] - cols[0] + 1 != len(cols):
            raise InvalidPartitionException(f"Row {i} is not an interval: {cols}.")
        rows.append((cols[0] - 1, cols[-1]))

    result = ShiftedDiagram(tuple(rows))
    # validates i - 1 <= mu_i < lam_i
    _ = result.partition
    return result


def point_monomial(n: int, point: Point) -> Monomial:
    exps: list[int] = [0] * n
    i, j = point
    exps[i - 1] += 1
    exps[j - 1] += 1
    return monomial(exps)


def monomial_point(m: Monomial) -> Point:
    indices: list[int] = [i for i, e in enumerate(m.exponents, 1) for _ in range(e)]
    if len(indices) != 2:
        raise InvalidPartitionException(f"{m} is not a quadratic monomial.")
    return indices[0], indices[1]


def diagram_from_ideal(ideal: MonomialIdeal) -> ShiftedDiagram:
    return diagram_from_points(monomial_point(g) for g in ideal.generators)


def is_connected(diag: ShiftedDiagram) -> bool:
    """Consecutive rows share a column."""
    return all(max(mu_a, mu_b) < min(lam_a, lam_b) for (mu_a, lam_a), (mu_b, lam_b) in pairwise(diag.rows))


def _require_connected(diag: ShiftedDiagram) -> None:
    if not is_connected(diag):
        raise DisconnectedDiagramException(f"Diagram with rows {diag.rows} is not connected.")


def diagram_ideal(diag: ShiftedDiagram, n: Optional[int] = None) -> MonomialIdeal:
    """The shifted stable ideal generated by x_i x_j for (i, j) in the diagram."""
    _require_connected(diag)
    ambient: int = diag.width if n is None else n
    return minimalize((point_monomial(ambient, p) for p in diag.points), ambient)


def generalized_ferrers_ideal(lam: Sequence[int], mu: Sequence[int]) -> MonomialIdeal:
    """
    x_i y_j for mu_i < j <= lam_i in the ring x_1..x_m, y_1..y_{lam_1}; y_j is
    variable m + j.
    """
    m: int = len(lam)
    if m == 0 or len(mu) != m:
        raise InvalidPartitionException("lambda and mu must be non-empty and equally long.")
    if any(a < b for a, b in pairwise(lam)):
        raise InvalidPartitionException(f"lambda {tuple(lam)} is not non-increasing.")
    if mu[0] < 0 or any(a > b for a, b in pairwise(mu)) or mu[-1] >= lam[-1]:
        raise InvalidPartitionException(f"mu {tuple(mu)} must satisfy 0 <= mu_1 <= ... <= mu_m < lambda_m.")

    ambient: int = m + lam[0]
    return minimalize(
        (from_support(ambient, [i, m + j]) for i in range(1, m + 1) for j in range(mu[i - 1] + 1, lam[i - 1] + 1)),
        ambient,
    )


def specialize(ideal: MonomialIdeal, blocks: tuple[int, int]) -> MonomialIdeal:
    """Substitute y_i -> x_i in an ideal over an x-block of size m and a y-block of size n."""
    m, n = blocks
    if m < 0 or n < 0 or m + n != ideal.n:
        raise SpecializationException(f"Blocks {blocks} do not split {ideal.n} variables.")

    k: int = max(m, n)
    images: list[Monomial] = []
    for g in ideal.generators:
        exps: list[int] = [0] * k
        for i, e in enumerate(g.exponents[:m]):
            exps[i] += e
        for i, e in enumerate(g.exponents[m:]):
            exps[i] += e
        images.append(monomial(exps))

    special: MonomialIdeal = minimalize(images, k)
    if len(special) < len(ideal):
        log.debug("Specialization merged %s generators into %s.", len(ideal), len(special))
    return special


def removal_sequence(diag: ShiftedDiagram) -> tuple[Point, ...]:
    """
    The construction order of a connected diagram: points are peeled off the last
    row one at a time and the sequence is then reversed, so that every prefix is a
    connected diagram again.
    """
    _require_connected(diag)

    rows: list[list[int]] = [[mu, lam] for mu, lam in diag.rows]
    removed: list[Point] = []
    while rows:
        h: int = len(rows)
        mu_h, lam_h = rows[-1]
        if h == 1:
            removed.append((1, lam_h))
            rows[-1][1] -= 1
        else:
            t: int = max(rows[-2][0], mu_h) + 1
            if mu_h == t - 1 and lam_h == t:
                removed.append((h, t))
                rows[-1][1] -= 1
            elif lam_h > t:
                removed.append((h, lam_h))
                rows[-1][1] -= 1
            else:
                removed.append((h, mu_h + 1))
                rows[-1][0] += 1

        if rows[-1][0] >= rows[-1][1]:
            rows.pop()

    return tuple(reversed(removed))


def removal_order(diag: ShiftedDiagram, n: Optional[int] = None) -> OrderedGenerators:
    ideal: MonomialIdeal = diagram_ideal(diag, n)
    return OrderedGenerators(ideal, tuple(point_monomial(ideal.n, p) for p in removal_sequence(diag)))


def check_prefix_connectivity(diag: ShiftedDiagram) -> Optional[int]:
    """Returns the first k whose removal-order prefix is not a connected diagram, or None."""
    sequence: tuple[Point, ...] = removal_sequence(diag)
    for k in range(1, len(sequence) + 1):
        try:
            prefix: ShiftedDiagram = diagram_from_points(sequence[:k])
        except InvalidPartitionException:
            return k
        if not is_connected(prefix):
            return k
    return None


@dataclasses.dataclass(frozen=True)
class QuasiBorelMove:
    source: Point
    target: Point
    axis: Axis
    length: int
    good: bool = True
    minimal: bool = True

    @property
    def westward(self) -> bool:
        return self.axis == "horizontal" and self.target[1] < self.source[1]

    @property
    def northward(self) -> bool:
        return self.axis == "vertical" and self.target[0] < self.source[0]


def minimal_move_pairs(diag: ShiftedDiagram) -> list[tuple[Point, Point, Axis]]:
    """Unordered neighbouring pairs: adjacent points in a row, consecutive points in a column."""
    pairs: list[tuple[Point, Point, Axis]] = []
    for i, (mu, lam) in enumerate(diag.rows, 1):
        pairs.extend(((i, j), (i, j + 1), "horizontal") for j in range(mu + 1, lam))
    for j in range(1, diag.width + 1):
        pairs.extend(((a, j), (b, j), "vertical") for a, b in pairwise(diag.column(j)))
    return pairs


def good_moves(diag: ShiftedDiagram, order: Optional[OrderedGenerators] = None) -> tuple[QuasiBorelMove, ...]:
    """Every minimal move, oriented from the later point to the earlier one in the order."""
    sequence: tuple[Point, ...] = removal_sequence(diag)
    if order is not None:
        expected: OrderedGenerators = removal_order(diag)
        if order.order != expected.order:
            raise ValueError("The order given is not the removal order of the diagram.")

    position: dict[Point, int] = {p: k for k, p in enumerate(sequence, 1)}
    moves: list[QuasiBorelMove] = []
    for a, b, axis in minimal_move_pairs(diag):
        source, target = (a, b) if position[a] > position[b] else (b, a)
        length: int = abs(a[0] - b[0]) + abs(a[1] - b[1])
        moves.append(QuasiBorelMove(source, target, axis, length))

    return tuple(sorted(moves, key=lambda mv: (position[mv.source], mv.axis, mv.target)))


def moves_from(moves: Iterable[QuasiBorelMove], point: Point) -> list[QuasiBorelMove]:
    return [mv for mv in moves if mv.source == point]


def check_move_structure(moves: Sequence[QuasiBorelMove]) -> bool:
    """At most two good moves leave a point; two means one unit horizontal and one vertical."""
    by_source: dict[Point, list[QuasiBorelMove]] = defaultdict(list)
    for mv in moves:
        by_source[mv.source].append(mv)

    for point, starting in by_source.items():
        if len(starting) > 2:
            log.error("%s good moves leave %s.", len(starting), point)
            return False
        if len(starting) == 2:
            axes = sorted(mv.axis for mv in starting)
            horizontal = next(mv for mv in starting if mv.axis == "horizontal") if "horizontal" in axes else None
            if axes != ["horizontal", "vertical"] or horizontal is None or horizontal.length != 1:
                log.error("The two good moves leaving %s are %s.", point, starting)
                return False
    return True


def is_westward(diag: ShiftedDiagram) -> bool:
    return all(mv.westward for mv in good_moves(diag) if mv.axis == "horizontal")


def is_compatible(diag: ShiftedDiagram) -> bool:
    """
    For a connected diagram whose horizontal good moves all point west:
    (i', i) and (i, j) in D with i' < i < j force (i, j - 1) into D.
    """
    _require_connected(diag)
    if not is_westward(diag):
        raise IncompatibleDiagramException(f"Diagram with rows {diag.rows} has eastward horizontal good moves.")

    for i, (mu, lam) in enumerate(diag.rows, 1):
        reached_from_above: bool = any((k, i) in diag for k in range(1, i))
        if not reached_from_above:
            continue
        for j in range(max(mu + 1, i + 1), lam + 1):
            if (i, j - 1) not in diag:
                log.debug("Compatibility fails at row %s, column %s.", i, j)
                return False
    return True


def is_compatible_direct(diag: ShiftedDiagram) -> bool:
    """
    The defining condition: two good moves leave c_k exactly when X_k has two
    elements, where X_k is read against the generators before f_k.
    """
    _require_connected(diag)
    if not is_westward(diag):
        return False

    order: OrderedGenerators = removal_order(diag)
    moves: tuple[QuasiBorelMove, ...] = good_moves(diag)
    points: tuple[Point, ...] = removal_sequence(diag)
    n: int = order.ideal.n

    for k in range(1, len(order) + 1):
        prefix: MonomialIdeal = minimalize(order.order[:k], n)
        earlier: frozenset[int] = x_set(prefix, order.order[k - 1], "any-other")
        two_moves: bool = len(moves_from(moves, points[k - 1])) == 2
        if two_moves != (len(earlier) == 2):
            return False
    return True


def _quadratic_indices(ideal: MonomialIdeal) -> list[Point]:
    if not ideal.is_equigenerated or ideal.degree != 2:
        raise NotStableException(f"{ideal} is not generated in degree 2.")
    return [monomial_point(g) for g in ideal.generators]


def y_sets(ideal: MonomialIdeal) -> dict[int, frozenset[int]]:
    """Y_j = {i <= j : x_i x_j is a minimal generator}, for every j that occurs."""
    found: dict[int, set[int]] = defaultdict(set)
    for i, j in _quadratic_indices(ideal):
        found[j].add(i)
    return {j: frozenset(rows) for j, rows in sorted(found.items())}


def check_y_chain(ideal: MonomialIdeal) -> bool:
    """Y_j = {1..j} up to h, then Y_h contains Y_{h+1} contains ... contains Y_e."""
    points: list[Point] = _quadratic_indices(ideal)
    h: int = max(i for i, _ in points)
    e: int = max(j for _, j in points)
    ys: dict[int, frozenset[int]] = y_sets(ideal)

    if any(ys.get(j, frozenset()) != frozenset(range(1, j + 1)) for j in range(1, h + 1)):
        return False
    return all(ys.get(j, frozenset()) >= ys.get(j + 1, frozenset()) for j in range(h, e))


def betti_w_formula(ideal: MonomialIdeal) -> tuple[int, int]:
    """
    (w1, w2) for a stable ideal of degree 2: w2 generators add a 2-cell and two
    edges, w1 generators add a single edge, and one generator only adds a point.
    """
    if not is_stable(ideal):
        raise NotStableException(f"{ideal} is not stable.")
    if not check_y_chain(ideal):
        raise NotStableException(f"The Y_j sets of {ideal} do not form the expected chain.")

    points: list[Point] = _quadratic_indices(ideal)
    h: int = max(i for i, _ in points)
    e: int = max(j for _, j in points)
    ys: dict[int, frozenset[int]] = y_sets(ideal)

    w2: int = sum(max(0, j - 2) for j in range(1, h + 1)) + sum(len(ys[j]) - 1 for j in range(h + 1, e + 1))
    w1: int = 2 * (h - 1) + (e - h)
    return w1, w2


def w_betti(w1: int, w2: int) -> tuple[int, int, int]:
    """Betti numbers (beta_0, beta_1, beta_2) of the dual implied by (w1, w2)."""
    return 1 + w1 + w2, 2 * w2 + w1, w2


def check_stable_good_moves(ideal: MonomialIdeal) -> bool:
    """
    For a stable quadratic ideal: one northward good move leaves each (i, i) with
    2 <= i <= h; a unit westward move leaves each (i, j) with i < j, plus a
    northward move exactly when |Y_j| >= 2 and i > min(Y_j).
    """
    if not is_stable(ideal):
        raise NotStableException(f"{ideal} is not stable.")

    diag: ShiftedDiagram = diagram_from_ideal(ideal)
    moves: tuple[QuasiBorelMove, ...] = good_moves(diag)
    ys: dict[int, frozenset[int]] = y_sets(ideal)

    for i, j in diag.points:
        starting: list[QuasiBorelMove] = moves_from(moves, (i, j))
        if i == j:
            if i >= 2 and (len(starting) != 1 or not starting[0].northward):
                return False
            continue

        west: list[QuasiBorelMove] = [mv for mv in starting if mv.westward and mv.length == 1]
        north: list[QuasiBorelMove] = [mv for mv in starting if mv.northward]
        expect_north: bool = len(ys[j]) >= 2 and i > min(ys[j])
        if len(west) != 1 or bool(north) != expect_north or len(starting) != 1 + len(north):
            return False
    return True
