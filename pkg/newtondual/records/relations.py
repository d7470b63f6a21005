from typing import TypedDict

from newtondual.core.toric import ToricRelation


class RelationEntry(TypedDict):
    alpha: list[int]
    beta: list[int]
    degree: int
    text: str


class RelationsDocument(TypedDict):
    degree_cap: int
    relations: list[RelationEntry]


def create_relations_document(rels: tuple[ToricRelation, ...], degree_cap: int) -> RelationsDocument:
    d: RelationsDocument = {
        "degree_cap": degree_cap,
        "relations": [
            {"alpha": list(rel.alpha), "beta": list(rel.beta), "degree": rel.degree, "text": str(rel)} for rel in rels
        ],
    }

    return d
