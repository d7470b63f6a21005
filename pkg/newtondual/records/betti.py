from typing import Optional, TypedDict

from newtondual.core.betti import BettiTable, projective_dimension, regularity


class BettiEntry(TypedDict):
    i: int
    multidegree: list[int]
    value: int


class BettiDocument(TypedDict):
    convention: str
    betti: list[BettiEntry]
    totals: list[int]
    quotient_totals: list[int]
    coarse: list[list[int]]
    projective_dimension: Optional[int]
    regularity: Optional[int]


def create_betti_document(table: BettiTable) -> BettiDocument:
    """
    Betti numbers are reported for the ideal (beta_0 counts generators); the totals
    of the quotient ring, which start with beta_0 = 1, are given alongside.

    :param table: A multigraded Betti table of an ideal
    :return: A Betti document
    """
    totals: list[int] = list(table.totals())

    d: BettiDocument = {
        "convention": "ideal",
        "betti": [{"i": i, "multidegree": list(b.exponents), "value": v} for i, b, v in table.entries],
        "totals": totals,
        "quotient_totals": [1, *totals],
        "coarse": [[i, j, v] for (i, j), v in table.coarse().items()],
        "projective_dimension": projective_dimension(table),
        "regularity": regularity(table),
    }

    return d


def format_betti_text(table: BettiTable) -> str:
    """Plain table: one line with the totals, then 'i j value' for each coarse entry."""
    lines: list[str] = [" ".join(str(t) for t in table.totals())]
    lines.extend(f"{i} {j} {v}" for (i, j), v in table.coarse().items())
    return "\n".join(lines)
