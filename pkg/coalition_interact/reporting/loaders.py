"""Game and graph file loaders (JSON)."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from coalition_interact.errors import ParseError, ValidationError
from coalition_interact.games.coalition import Coalition, check_cap
from coalition_interact.games.game import TUGame
from coalition_interact.graphs.graph import CommGraph

logger = logging.getLogger(__name__)


def _read_json(path: Path) -> dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read file: {e.strerror}", path=str(path)) from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, path=str(path), line=e.lineno) from e
    if not isinstance(doc, dict):
        raise ParseError("Expected a JSON object at the top level", path=str(path))
    return doc


def _player_count(doc: dict[str, Any], path: Path) -> int:
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise ParseError(f"'n' must be an integer, got {n!r}", path=str(path), field="n")
    if n < 1:
        raise ParseError(f"'n' must be at least 1, got {n}", path=str(path), field="n")
    return n


def game_from_dict(doc: dict[str, Any], path: str | Path = "<memory>", max_n: int | None = None) -> TUGame:
    """Densify a parsed game document: `n` plus either `dense` or `values`."""
    path = Path(path)
    n = _player_count(doc, path)
    check_cap(n, max_n, "game storage")
    has_dense, has_values = "dense" in doc, "values" in doc
    if has_dense == has_values:
        raise ParseError("Give exactly one of 'dense' or 'values'", path=str(path))

    if has_dense:
        dense = doc["dense"]
        if not isinstance(dense, list) or len(dense) != 1 << n:
            size = len(dense) if isinstance(dense, list) else type(dense).__name__
            raise ParseError(f"'dense' must list 2^{n}={1 << n} numbers, got {size}", path=str(path), field="dense")
        try:
            values = np.array([float(x) for x in dense], dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise ParseError(f"Non-numeric entry in 'dense': {e}", path=str(path), field="dense") from e
        return TUGame(n, values)

    listed = doc["values"]
    if not isinstance(listed, dict):
        raise ParseError("'values' must map coalition keys to numbers", path=str(path), field="values")
    values = np.zeros(1 << n, dtype=np.float64)
    for key, worth in listed.items():
        where = f"values.{key}"
        if not str(key).strip():
            raise ParseError("The empty coalition cannot be listed; v(∅) is always 0", path=str(path), field=where)
        try:
            bits = Coalition.parse(n, key).bits
        except ValidationError as e:
            raise ParseError(str(e), path=str(path), field=where) from e
        if isinstance(worth, bool) or not isinstance(worth, (int, float)):
            raise ParseError(f"Worth must be a number, got {worth!r}", path=str(path), field=where)
        values[bits] = float(worth)
    return TUGame(n, values)


def graph_from_dict(doc: dict[str, Any], path: str | Path = "<memory>") -> CommGraph:
    path = Path(path)
    n = _player_count(doc, path)
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of [i, j] pairs", path=str(path), field="edges")
    pairs = []
    for k, edge in enumerate(edges):
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or not all(isinstance(p, int) and not isinstance(p, bool) for p in edge)
        ):
            raise ParseError(f"Edge {edge!r} is not a pair of player ids", path=str(path), field=f"edges[{k}]")
        pairs.append((edge[0], edge[1]))
    return CommGraph.from_edges(n, pairs)


def parse_game(path: str | Path, max_n: int | None = None) -> TUGame:
    """Load a game file. Validation errors from the game itself propagate unchanged."""
    game = game_from_dict(_read_json(Path(path)), path, max_n)
    logger.debug("Loaded %r from %s", game, path)
    return game


def parse_graph(path: str | Path) -> CommGraph:
    graph = graph_from_dict(_read_json(Path(path)), path)
    logger.debug("Loaded %r from %s", graph, path)
    return graph
