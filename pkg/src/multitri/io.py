"""JSON interchange: ``{"n": int, "k": int, "relevant_edges": [[a, b], ...]}``."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .core import GonContext, KTriangulation


def to_dict(T: KTriangulation) -> dict:
    return {"n": T.n, "k": T.k, "relevant_edges": [list(e) for e in T.relevant_edges]}


def dumps(T: KTriangulation) -> str:
    return json.dumps(to_dict(T), separators=(",", ":"))


def from_dict(doc: dict) -> KTriangulation:
    try:
        n, k, edges = doc["n"], doc["k"], doc["relevant_edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"triangulation document needs n, k and relevant_edges: {exc}") from None
    if not all(isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
        raise ValueError("relevant_edges must be a list of [a, b] pairs")
    return KTriangulation(GonContext(int(n), int(k)), tuple((int(a), int(b)) for a, b in edges))


def loads(text: str) -> KTriangulation:
    return from_dict(json.loads(text))


def read_source(source: str) -> str:
    """Text from a path, ``-`` for stdin, or inline JSON starting with ``{``."""
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith("{"):
        return source
    return Path(source).read_text()


def load(source: str) -> KTriangulation:
    return loads(read_source(source))
