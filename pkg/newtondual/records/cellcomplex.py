from typing import TypedDict

from newtondual.core.cellres import FreeComplex, LabeledCellComplex


class FacetEntry(TypedDict):
    id: int
    sign: int


class CellEntry(TypedDict):
    id: int
    dim: int
    kind: str
    label: list[int]
    facets: list[FacetEntry]


class DifferentialEntry(TypedDict):
    row: int
    column: int
    sign: int
    monomial: list[int]


class ComplexDocument(TypedDict):
    f_vector: list[int]
    cells: list[CellEntry]
    differentials: dict[str, list[DifferentialEntry]]


def create_complex_document(cx: LabeledCellComplex, fc: FreeComplex) -> ComplexDocument:
    cells: list[CellEntry] = [
        {
            "id": c.id,
            "dim": c.dim,
            "kind": c.kind,
            "label": list(c.label.exponents),
            "facets": [{"id": q, "sign": s} for q, s in cx.facets.get(c.id, ())],
        }
        for c in cx.cells
    ]

    differentials: dict[str, list[DifferentialEntry]] = {
        str(k): [
            {"row": row, "column": col, "sign": sign, "monomial": list(m.exponents)}
            for (row, col), (sign, m) in sorted(matrix.items())
        ]
        for k, matrix in sorted(fc.differentials.items())
    }

    d: ComplexDocument = {
        "f_vector": list(cx.f_vector()),
        "cells": cells,
        "differentials": differentials,
    }

    return d
