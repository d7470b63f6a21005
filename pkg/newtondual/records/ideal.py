import logging
import re
from typing import Optional, TypedDict

import orjson

from newtondual.core.duals import BipartiteGraph, ExponentBound, bipartite_graph, exponent_bound
from newtondual.core.monomials import MonomialIdeal, minimalize, monomial
from newtondual.exceptions import NotSquarefreeException, ParseException

log = logging.getLogger("newtondual")

FACTOR_RE: re.Pattern = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>\d+))?$")


class IdealDocument(TypedDict):
    variables: list[str]
    blocks: Optional[list[int]]
    generators: list[list[int]]
    bound: Optional[list[int]]


def parse_ideal(text: str) -> IdealDocument:
    """
    Reads either the structured document (a JSON object) or the text format:

        vars x y
        blocks 1 1        (optional)
        bound 5 6         (optional, anywhere after vars)
        x^3
        x^2*y^2

    Monomials may also be given as exponent vectors, separated by spaces or commas.
    A lone 1 is the unit monomial; in a single variable the exponent vector (1) is
    written "1," or by name.

    :param text: The document text
    :return: A validated ideal document
    """
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_text(text)


def _parse_structured(text: str) -> IdealDocument:
    try:
        raw = orjson.loads(text)
    except orjson.JSONDecodeError as e:
        raise ParseException(e.msg, e.lineno, e.colno) from e

    if not isinstance(raw, dict) or "variables" not in raw or "generators" not in raw:
        raise ParseException("A structured document needs 'variables' and 'generators'.", 1, 1)

    doc: IdealDocument = {
        "variables": [str(v) for v in raw["variables"]],
        "blocks": raw.get("blocks"),
        "generators": [list(g) for g in raw["generators"]],
        "bound": raw.get("bound"),
    }
    _validate(doc, {})
    return doc


def _parse_text(text: str) -> IdealDocument:
    variables: Optional[list[str]] = None
    blocks: Optional[list[int]] = None
    bound: Optional[list[int]] = None
    generators: list[list[int]] = []
    lines: dict[str, int] = {}

    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line: str = raw_line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        offset: int = len(line) - len(line.lstrip()) + 1
        head, _, rest = line.strip().partition(" ")

        if variables is None:
            if head != "vars" or not rest.strip():
                raise ParseException("The first line must be 'vars <name>...'.", lineno, offset)
            variables = rest.split()
            if len(set(variables)) != len(variables):
                raise ParseException("Variable names repeat.", lineno, offset)
            continue

        if head in ("blocks", "bound"):
            values: list[int] = _integers(rest, lineno, offset + len(head) + 1)
            if head == "blocks":
                blocks = values
            else:
                bound = values
            lines[head] = lineno
            continue

        generators.append(_parse_monomial(line.strip(), variables, lineno, offset))
        lines.setdefault("first", lineno)

    if variables is None:
        raise ParseException("Empty document.", 1, 1)

    doc: IdealDocument = {"variables": variables, "blocks": blocks, "generators": generators, "bound": bound}
    _validate(doc, lines)
    return doc


def _integers(text: str, lineno: int, column: int) -> list[int]:
    values: list[int] = []
    for token in text.replace(",", " ").split():
        if not token.isdigit():
            raise ParseException(f"'{token}' is not a non-negative integer.", lineno, column + text.find(token))
        values.append(int(token))
    return values


def _parse_monomial(text: str, variables: list[str], lineno: int, column: int) -> list[int]:
    n: int = len(variables)
    tokens: list[str] = text.split()
    if len(tokens) > 1 or "," in text or text.isdigit() and text != "1":
        exps: list[int] = _integers(text, lineno, column)
        if len(exps) != n:
            raise ParseException(f"Expected {n} exponents, found {len(exps)}.", lineno, column)
        return exps

    exps = [0] * n
    if text == "1":
        return exps

    position: int = column
    for factor in text.split("*"):
        match: Optional[re.Match] = FACTOR_RE.match(factor.strip())
        if match is None or match["name"] not in variables:
            raise ParseException(f"Cannot read the factor '{factor}'.", lineno, position)
        exps[variables.index(match["name"])] += int(match["exp"] or 1)
        position += len(factor) + 1
    return exps


def _validate(doc: IdealDocument, lines: dict[str, int]) -> None:
    n: int = len(doc["variables"])
    if n == 0:
        raise ParseException("No variables declared.", 1, 1)
    if not doc["generators"]:
        raise ParseException("The generator list is empty.", lines.get("first", 1), 1)

    for k, g in enumerate(doc["generators"], 1):
        if len(g) != n or any(not isinstance(e, int) or e < 0 for e in g):
            raise ParseException(f"Generator {k} is not a vector of {n} non-negative integers.", k, 1)

    blocks = doc["blocks"]
    if blocks is not None and (len(blocks) != 2 or sum(blocks) != n):
        raise ParseException(f"Blocks {blocks} do not split {n} variables.", lines.get("blocks", 1), 1)

    bound = doc["bound"]
    if bound is not None:
        if len(bound) != n:
            raise ParseException(f"The bound has {len(bound)} entries for {n} variables.", lines.get("bound", 1), 1)
        for k, g in enumerate(doc["generators"], 1):
            if any(e > a for e, a in zip(g, bound, strict=True)):
                raise ParseException(f"Generator {k} exceeds the bound {bound}.", lines.get("bound", 1), 1)


def ideal_from_document(doc: IdealDocument) -> MonomialIdeal:
    ideal: MonomialIdeal = minimalize((monomial(g) for g in doc["generators"]), len(doc["variables"]))
    if len(ideal) != len(doc["generators"]):
        log.warning("%s generators given, %s of them are minimal.", len(doc["generators"]), len(ideal))
    return ideal


def bound_from_document(doc: IdealDocument) -> Optional[ExponentBound]:
    return exponent_bound(doc["bound"]) if doc["bound"] is not None else None


def create_ideal_document(
    ideal: MonomialIdeal,
    variables: Optional[list[str]] = None,
    blocks: Optional[list[int]] = None,
    bound: Optional[ExponentBound] = None,
) -> IdealDocument:
    d: IdealDocument = {
        "variables": variables or [f"x{i}" for i in range(1, ideal.n + 1)],
        "blocks": blocks,
        "generators": [list(g.exponents) for g in ideal.generators],
        "bound": list(bound.exponents) if bound is not None else None,
    }
    return d


def serialize_ideal(doc: IdealDocument) -> str:
    return orjson.dumps(doc, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def graph_from_document(doc: IdealDocument) -> BipartiteGraph:
    """Reads the generators as edges x_i y_j, split by the document's blocks."""
    if doc["blocks"] is None:
        raise ParseException("A bipartite graph needs a 'blocks' entry.", 1, 1)

    m, n = doc["blocks"]
    edges: list[tuple[int, int]] = []
    for g in doc["generators"]:
        support: list[int] = [i for i, e in enumerate(g, 1) for _ in range(e)]
        if len(support) != 2 or not support[0] <= m < support[1]:
            raise NotSquarefreeException(f"{g} is not an edge between the blocks {m} and {n}.")
        edges.append((support[0], support[1] - m))

    return bipartite_graph(m, n, edges)
