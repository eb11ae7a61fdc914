"""JSON network files.

::

    {
      "name": "triangle",
      "vertices": ["1", "2", "3"],
      "edges": [{"id": "e1", "tail": "1", "head": "2", "resistance": "1"}, ...],
      "rotation": {"1": ["e1:t", "e3:h"], ...}
    }

Resistances are strings in the rational grammar (``3``, ``-2/5``, ``0.25``);
bare JSON integers are tolerated, JSON floats are not.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from dualnet.errors import GraphError, NetworkFileError
from dualnet.exact import format_rational
from dualnet.graph import EmbeddedMultigraph, build_graph


def network_from_dict(data: Any, source: str = "<network>") -> EmbeddedMultigraph:
    if not isinstance(data, dict):
        raise NetworkFileError(f"{source}: top level must be a JSON object")
    for key in ("vertices", "edges", "rotation"):
        if key not in data:
            raise NetworkFileError(f"{source}: missing field {key!r}")
    vertices, edges, rotation = data["vertices"], data["edges"], data["rotation"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise NetworkFileError(f"{source}: 'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise NetworkFileError(f"{source}: 'edges' must be a list")
    records = []
    for k, item in enumerate(edges):
        where = f"{source}: edges[{k}]"
        if not isinstance(item, dict):
            raise NetworkFileError(f"{where} must be an object")
        missing = [f for f in ("id", "tail", "head", "resistance") if f not in item]
        if missing:
            raise NetworkFileError(f"{where} missing field {missing[0]!r}")
        res = item["resistance"]
        if isinstance(res, bool) or not isinstance(res, (str, int)):
            raise NetworkFileError(f"{where}.resistance must be a rational string, got {res!r}")
        records.append((item["id"], item["tail"], item["head"], res))
    if not isinstance(rotation, dict) or not all(isinstance(v, list) for v in rotation.values()):
        raise NetworkFileError(f"{source}: 'rotation' must map vertex ids to dart lists")
    name = data.get("name", "")
    try:
        return build_graph(vertices, records, rotation, name=str(name))
    except GraphError as exc:
        raise type(exc)(f"{source}: {exc}") from None


def load_network(path: str | Path) -> EmbeddedMultigraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise NetworkFileError(f"{path}: cannot read: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkFileError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None
    return network_from_dict(data, str(path))


def network_to_dict(g: EmbeddedMultigraph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [
            {"id": e.id, "tail": e.tail, "head": e.head, "resistance": format_rational(e.resistance)}
            for e in g.edges
        ],
        "rotation": {v: [str(d) for d in g.rotation[v]] for v in g.vertices},
    }


def dumps_network(g: EmbeddedMultigraph) -> str:
    return json.dumps(network_to_dict(g), indent=2) + "\n"


def save_network(g: EmbeddedMultigraph, path: str | Path) -> None:
    Path(path).write_text(dumps_network(g), encoding="utf-8")
