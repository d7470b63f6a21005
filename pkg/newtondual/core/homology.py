"""
Exact homology used as ground truth for every constructed resolution. Ranks are
taken with sympy's DomainMatrix, fraction-free over the integers for the rationals
or after reduction modulo two.
"""
import dataclasses
import logging
from itertools import combinations
from typing import Literal, Mapping, Optional, Sequence

from sympy import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from newtondual.core.betti import BettiTable, betti_table, is_linear_table
from newtondual.core.cellres import LabeledCellComplex, restrict_leq, vertex_labels
from newtondual.core.monomials import Monomial, MonomialIdeal, ideal_sort_key, monomial_lcm
from newtondual.exceptions import (
    IncidenceException,
    NotEquigeneratedException,
    ScaleGuardException,
    TrivialIdealException,
)
from newtondual.helpers.utilities import parallelise

log = logging.getLogger("newtondual")

Field = Literal["Q", "F2"]
DEFAULT_MAX_GENERATORS: int = 20


@dataclasses.dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int]

    def to_domain(self) -> DomainMatrix:
        nested: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            if v:
                nested.setdefault(r, {})[c] = ZZ(v)
        return DomainMatrix(nested, (self.rows, self.cols), ZZ)


def dense(rows: Sequence[Sequence[int]]) -> SparseMatrix:
    height: int = len(rows)
    width: int = len(rows[0]) if height else 0
    return SparseMatrix(height, width, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v})


def exact_rank(matrix: SparseMatrix | Sequence[Sequence[int]], field: Field = "Q") -> int:
    if not isinstance(matrix, SparseMatrix):
        matrix = dense(matrix)
    if matrix.rows == 0 or matrix.cols == 0 or not any(matrix.entries.values()):
        return 0

    dm: DomainMatrix = matrix.to_domain()
    if field == "F2":
        return dm.convert_to(GF(2)).rank()

    _, _, pivots = dm.rref_den()
    return len(pivots)


@dataclasses.dataclass(frozen=True)
class ChainComplexQ:
    """
    dims[k] is the basis size in degree k, from -1 upward; boundaries[k] maps
    degree k to degree k - 1.
    """

    dims: Mapping[int, int]
    boundaries: Mapping[int, SparseMatrix]

    def check_composites(self) -> None:
        for k, upper in self.boundaries.items():
            lower: Optional[SparseMatrix] = self.boundaries.get(k - 1)
            if lower is None or not upper.entries or not lower.entries:
                continue
            if not (lower.to_domain() * upper.to_domain()).is_zero_matrix:
                raise IncidenceException(f"Boundaries {k} and {k - 1} do not compose to zero.")


def reduced_homology_dims(cc: ChainComplexQ, field: Field = "Q") -> dict[int, int]:
    cc.check_composites()
    ranks: dict[int, int] = {k: exact_rank(m, field) for k, m in cc.boundaries.items()}
    return {k: d - ranks.get(k, 0) - ranks.get(k + 1, 0) for k, d in sorted(cc.dims.items())}


def simplicial_chain_complex(faces: Sequence[tuple[int, ...]]) -> ChainComplexQ:
    """Faces must be sorted tuples closed under subsets; the empty face sits in degree -1."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for face in faces:
        by_dim.setdefault(len(face) - 1, []).append(face)

    index: dict[tuple[int, ...], int] = {}
    for group in by_dim.values():
        index.update({face: pos for pos, face in enumerate(group)})

    boundaries: dict[int, SparseMatrix] = {}
    for k, group in by_dim.items():
        if k < 0:
            continue
        entries: dict[tuple[int, int], int] = {}
        for col, face in enumerate(group):
            for p in range(len(face)):
                entries[(index[face[:p] + face[p + 1 :]], col)] = (-1) ** p
        boundaries[k] = SparseMatrix(len(by_dim.get(k - 1, [])), len(group), entries)

    return ChainComplexQ({k: len(group) for k, group in by_dim.items()}, boundaries)


def cellular_chain_complex(cx: LabeledCellComplex) -> ChainComplexQ:
    by_dim: dict[int, list[int]] = {}
    for c in cx.cells:
        by_dim.setdefault(c.dim, []).append(c.id)

    position: dict[int, int] = {cid: pos for group in by_dim.values() for pos, cid in enumerate(group)}
    boundaries: dict[int, SparseMatrix] = {}
    for k, group in by_dim.items():
        if k < 0:
            continue
        entries: dict[tuple[int, int], int] = {}
        for col, cid in enumerate(group):
            for q, sign in cx.facets.get(cid, ()):
                if q in position:
                    entries[(position[q], col)] = sign
        boundaries[k] = SparseMatrix(len(by_dim.get(k - 1, [])), len(group), entries)

    return ChainComplexQ({k: len(group) for k, group in by_dim.items()}, boundaries)


def lcm_lattice(gens: Sequence[Monomial]) -> list[Monomial]:
    """All lcms of non-empty generator subsets, in canonical order."""
    lattice: set[Monomial] = set()
    for g in gens:
        lattice |= {g} | {monomial_lcm(m, g) for m in lattice}
    return sorted(lattice, key=ideal_sort_key)


def upper_koszul_faces(ideal: MonomialIdeal, b: Monomial) -> list[tuple[int, ...]]:
    """K^b = {tau in supp(b) : x^(b - tau) in I}."""
    support: list[int] = [i for i, e in enumerate(b.exponents, 1) if e]
    faces: list[tuple[int, ...]] = []
    for r in range(len(support) + 1):
        for tau in combinations(support, r):
            exps: list[int] = list(b.exponents)
            for i in tau:
                exps[i - 1] -= 1
            if Monomial(tuple(exps)) in ideal:
                faces.append(tau)
    return faces


def multidegree_betti(b: Monomial, ideal: MonomialIdeal, field: Field = "Q") -> list[tuple[int, Monomial, int]]:
    """beta_{i,b}(I) = dim H~_{i-1}(K^b)."""
    faces: list[tuple[int, ...]] = upper_koszul_faces(ideal, b)
    if not faces:
        return []
    dims: dict[int, int] = reduced_homology_dims(simplicial_chain_complex(faces), field)
    return [(k + 1, b, value) for k, value in dims.items() if value]


def betti_oracle(
    ideal: MonomialIdeal,
    field: Field = "Q",
    workers: int = 1,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> BettiTable:
    if ideal.is_zero:
        raise TrivialIdealException("The zero ideal has no Betti numbers.")
    if len(ideal) > max_generators:
        raise ScaleGuardException(f"{len(ideal)} generators exceed the oracle limit of {max_generators}.")

    candidates: list[Monomial] = lcm_lattice(ideal.generators)
    log.debug("Betti oracle: %s candidate multidegrees for %s generators.", len(candidates), len(ideal))

    results = parallelise(candidates, multidegree_betti, ideal, field, workers=workers)
    return betti_table(entry for found in results for entry in found)


def has_linear_resolution(ideal: MonomialIdeal, field: Field = "Q", workers: int = 1) -> bool:
    if not ideal.is_equigenerated:
        raise NotEquigeneratedException(f"{ideal} is not generated in a single degree.")
    return is_linear_table(betti_oracle(ideal, field, workers), ideal.degree)


def is_acyclic_leq(cx: LabeledCellComplex, beta: Monomial, field: Field = "Q") -> bool:
    """
    Whether the subcomplex of faces with labels dividing x^beta has vanishing reduced
    homology. A subcomplex without vertices counts as acyclic.
    """
    sub: LabeledCellComplex = restrict_leq(cx, beta)
    if not any(c.dim >= 0 for c in sub.cells):
        return True
    dims: dict[int, int] = reduced_homology_dims(cellular_chain_complex(sub), field)
    return not any(dims.values())


def _acyclic_at(beta: Monomial, cx: LabeledCellComplex, field: Field) -> bool:
    return is_acyclic_leq(cx, beta, field)


def non_acyclic_degrees(cx: LabeledCellComplex, field: Field = "Q", workers: int = 1) -> list[Monomial]:
    """
    Sweeps every lcm of vertex labels and returns the ones where the restriction has
    homology; an empty list means the complex supports a resolution.
    """
    degrees: list[Monomial] = lcm_lattice(vertex_labels(cx))
    verdicts: list[bool] = parallelise(degrees, _acyclic_at, cx, field, workers=workers)
    return [b for b, ok in zip(degrees, verdicts, strict=True) if not ok]


def alternating_sum(table: BettiTable, b: Monomial) -> int:
    """sum_i (-1)^i beta_{i,b}."""
    return sum((-1) ** i * value for i, m, value in table.entries if m == b)
