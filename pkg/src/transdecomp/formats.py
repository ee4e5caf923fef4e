"""JSON file formats for graphs, groups, block systems, partitions and spaces.

Every loader raises :class:`InputError` on malformed or inconsistent data.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .decomposition import EdgePartition
from .errors import InputError
from .graph import BlockSystem, Graph, edges_from_pairs
from .permgroup import Permutation, PermGroup
from .pls import PartialLinearSpace

_FLAT_LIST = re.compile(r"\[\s*((?:-?\d+,\s*)*-?\d+)\s*\]")


def dumps(doc: Any) -> str:
    """Indented JSON with integer lists kept on one line; stable across runs."""
    text = json.dumps(doc, indent=2)
    text = _FLAT_LIST.sub(lambda m: "[" + ", ".join(re.split(r",\s*", m.group(1))) + "]", text)
    return text + "\n"


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from None


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def _int_list(xs: Any, what: str) -> list[int]:
    if not isinstance(xs, list):
        raise InputError(f"{what} must be a list, got {xs!r}")
    return [_int(x, what) for x in xs]


def _edge_list(xs: Any, what: str) -> list[list[int]]:
    if not isinstance(xs, list):
        raise InputError(f"{what} must be a list of [u, v] pairs")
    out = []
    for e in xs:
        e = _int_list(e, what)
        if len(e) != 2:
            raise InputError(f"{what}: edge {e} does not have two endpoints")
        out.append(e)
    return out


def _field(doc: Any, key: str, where: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{where}: missing field {key!r}")
    return doc[key]


# -- graphs ------------------------------------------------------------------

def graph_from_json(doc: Any, where: str = "graph") -> Graph:
    n = _int(_field(doc, "n", where), f"{where}.n")
    edges = edges_from_pairs(_edge_list(_field(doc, "edges", where), f"{where}.edges"))
    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise InputError(f"{where}.labels must be a list of strings")
    return Graph(n, edges, tuple(labels) if labels is not None else None)


def graph_to_json(g: Graph) -> dict:
    doc: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


def load_graph(path) -> Graph:
    return graph_from_json(read_json(path), str(path))


# -- groups ------------------------------------------------------------------

def group_from_json(doc: Any, where: str = "group") -> PermGroup:
    n = _int(_field(doc, "degree", where), f"{where}.degree")
    gens_raw = _field(doc, "generators", where)
    if not isinstance(gens_raw, list):
        raise InputError(f"{where}.generators must be a list of image arrays")
    gens = []
    for g in gens_raw:
        images = _int_list(g, f"{where}.generators")
        if len(images) != n:
            raise InputError(f"{where}: generator {images} has length {len(images)}, "
                             f"expected {n}")
        gens.append(Permutation(tuple(images)))
    return PermGroup(gens, degree=n)


def group_to_json(group: PermGroup) -> dict:
    return {"degree": group.degree, "generators": [list(g.images) for g in group.generators]}


def load_group(path) -> PermGroup:
    return group_from_json(read_json(path), str(path))


# -- block systems -----------------------------------------------------------

def blocks_from_json(doc: Any, where: str = "blocks") -> BlockSystem:
    raw = _field(doc, "blocks", where)
    if not isinstance(raw, list):
        raise InputError(f"{where}.blocks must be a list of vertex lists")
    return BlockSystem.from_lists(_int_list(b, f"{where}.blocks") for b in raw)


def blocks_to_json(blocks: BlockSystem) -> dict:
    return {"blocks": [sorted(b) for b in blocks.blocks]}


def load_blocks(path) -> BlockSystem:
    return blocks_from_json(read_json(path), str(path))


# -- edge partitions ---------------------------------------------------------

def partition_from_json(doc: Any, graph: Graph, where: str = "partition") -> EdgePartition:
    raw = _field(doc, "parts", where)
    if not isinstance(raw, list):
        raise InputError(f"{where}.parts must be a list")
    parts, names = [], []
    for i, p in enumerate(raw):
        parts.append(edges_from_pairs(_edge_list(_field(p, "edges", f"{where}.parts[{i}]"),
                                                 f"{where}.parts[{i}].edges")))
        names.append(p.get("name"))
    have = [x is not None for x in names]
    if any(have) and not all(have):
        raise InputError(f"{where}: either every part has a name or none does")
    return EdgePartition(graph, tuple(parts), tuple(names) if all(have) and names else None)


def partition_to_json(partition: EdgePartition) -> dict:
    parts = []
    for i, part in enumerate(partition.parts):
        entry: dict[str, Any] = {}
        if partition.names is not None:
            entry["name"] = partition.names[i]
        entry["edges"] = [list(e) for e in sorted(part)]
        parts.append(entry)
    return {"parts": parts}


def load_partition(path, graph: Graph) -> EdgePartition:
    return partition_from_json(read_json(path), graph, str(path))


# -- partial linear spaces ---------------------------------------------------

def space_from_json(doc: Any, where: str = "space") -> PartialLinearSpace:
    m = _int(_field(doc, "points", where), f"{where}.points")
    raw = _field(doc, "lines", where)
    if not isinstance(raw, list):
        raise InputError(f"{where}.lines must be a list of point lists")
    return PartialLinearSpace(m, tuple(frozenset(_int_list(l, f"{where}.lines")) for l in raw))


def space_to_json(space: PartialLinearSpace) -> dict:
    return {"points": space.points, "lines": space.sorted_lines()}


def load_space(path) -> PartialLinearSpace:
    return space_from_json(read_json(path), str(path))
