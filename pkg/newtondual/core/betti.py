import dataclasses
from collections import Counter
from typing import Iterable, Mapping, Optional

from newtondual.core.monomials import Monomial, ideal_sort_key


@dataclasses.dataclass(frozen=True)
class BettiTable:
    """
    Multigraded Betti numbers of an ideal, indexed so that beta_0 counts the minimal
    generators. Entries are (i, b, value) with value > 0, in canonical order.
    """

    entries: tuple[tuple[int, Monomial, int], ...]

    def get(self, i: int, b: Monomial) -> int:
        for k, m, value in self.entries:
            if k == i and m == b:
                return value
        return 0

    def coarse(self) -> dict[tuple[int, int], int]:
        """beta_{i,j}, summing over multidegrees of total degree j."""
        view: Counter = Counter()
        for i, b, value in self.entries:
            view[(i, b.degree)] += value
        return dict(sorted(view.items()))

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top: int = max(i for i, _, _ in self.entries)
        sums: Counter = Counter()
        for i, _, value in self.entries:
            sums[i] += value
        return tuple(sums[i] for i in range(top + 1))

    def shifted(self, by: int = 1) -> "BettiTable":
        """Re-index homologically, e.g. by=1 gives the table of R/I without its beta_0 = 1."""
        return BettiTable(tuple((i + by, b, value) for i, b, value in self.entries))


def betti_table(counts: Mapping[tuple[int, Monomial], int] | Iterable[tuple[int, Monomial, int]]) -> BettiTable:
    items: Iterable[tuple[int, Monomial, int]]
    if isinstance(counts, Mapping):
        items = ((i, b, v) for (i, b), v in counts.items())
    else:
        items = counts

    merged: Counter = Counter()
    for i, b, value in items:
        if value < 0:
            raise ValueError(f"Negative Betti number {value} at ({i}, {b}).")
        merged[(i, b)] += value

    kept = [(i, b, v) for (i, b), v in merged.items() if v > 0]
    kept.sort(key=lambda e: (e[0], ideal_sort_key(e[1])))
    return BettiTable(tuple(kept))


def projective_dimension(table: BettiTable) -> Optional[int]:
    if not table.entries:
        return None
    return max(i for i, _, _ in table.entries)


def regularity(table: BettiTable) -> Optional[int]:
    """max(j - i) over the nonzero coarse Betti numbers of the ideal."""
    if not table.entries:
        return None
    return max(j - i for i, j in table.coarse())


def is_linear_table(table: BettiTable, degree: int) -> bool:
    return all(j == degree + i for i, j in table.coarse())
