"""JSON serialization: rationals as strings, facets always re-derived.

Chain files: {"dim": d, "terms": [{"coeff": int, "vertices": [[rat, ...], ...]}]}
Polytope files: {"dim": d, "vertices": [[rat, ...], ...]}
"""

from __future__ import annotations

import json
from typing import Any

from .exact import format_rational, rational
from .chains import SimplexChain
from .convex import ConvexPolytope, convex_hull
from .geometry import OrientedSimplex, Point


def point_to_list(p: Point) -> list[str]:
    return [format_rational(x) for x in p]


def point_from_list(values) -> Point:
    return tuple(rational(str(v)) for v in values)


def chain_to_dict(c: SimplexChain) -> dict[str, Any]:
    return {
        "dim": c.dim,
        "terms": [
            {"coeff": coeff, "vertices": [point_to_list(v) for v in s.vertices]}
            for coeff, s in c.terms
        ],
    }


def chain_from_dict(data: dict[str, Any]) -> SimplexChain:
    dim = int(data["dim"])
    return SimplexChain.from_terms(
        dim,
        (
            (
                int(term["coeff"]),
                OrientedSimplex(
                    tuple(point_from_list(v) for v in term["vertices"])
                ),
            )
            for term in data["terms"]
        ),
    )


def polytope_to_dict(p: ConvexPolytope) -> dict[str, Any]:
    return {"dim": p.dim, "vertices": [point_to_list(v) for v in p.vertices]}


def polytope_from_dict(data: dict[str, Any]) -> ConvexPolytope:
    vertices = [point_from_list(v) for v in data["vertices"]]
    dim = int(data["dim"])
    if any(len(v) != dim for v in vertices):
        raise ValueError("vertex dimension does not match the declared dim")
    return convex_hull(vertices)


def dumps(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load_document(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def load_chain(path: str) -> SimplexChain:
    return chain_from_dict(load_document(path))


def load_polytope(path: str) -> ConvexPolytope:
    return polytope_from_dict(load_document(path))


def save_chain(c: SimplexChain, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(chain_to_dict(c)))
