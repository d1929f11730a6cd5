"""Text formats for graphs and colored instances.

Two formats are supported, both UTF-8 with LF line endings:

* instance documents: a JSON object with keys in the fixed order
  name, n, edges, k, attackers, colors, preceded by a `#` header comment
  line stating the numbering conventions (vertices 0-based on the wire,
  colors 1-based);
* bare edge lists: a first line "n m" followed by m lines "u v".

Encoding is canonical: the same value always produces the same bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .coloring import Multicoloring
from .constructions import ColoredInstance
from .graph import Graph

HEADER = "# instance document: vertices are 0-based, colors are 1-based"


class CodecError(ValueError):
    """Parse or validation failure with a stable machine-readable code."""

    def __init__(self, code: str, message: str) -> None:
        super().__init__(f"{code}: {message}")
        self.code = code


def instance_object(inst: ColoredInstance) -> dict[str, Any]:
    """The document's JSON object form, keys in canonical order."""
    fields: dict[str, Any] = {}
    if inst.name is not None:
        fields["name"] = inst.name
    fields["n"] = inst.graph.n
    fields["edges"] = [list(e) for e in inst.graph.edges()]
    fields["k"] = inst.coloring.palette_size
    if inst.attackers is not None:
        fields["attackers"] = inst.attackers
    fields["colors"] = [list(s) for s in inst.coloring.sets()]
    return fields


def encode_instance(inst: ColoredInstance) -> str:
    """Canonical document for a colored instance; byte-identical across runs."""
    lines = [HEADER, "{"]
    fields = list(instance_object(inst).items())
    for i, (key, value) in enumerate(fields):
        comma = "," if i + 1 < len(fields) else ""
        lines.append(f'"{key}": {json.dumps(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _strip_comments(text: str) -> str:
    return "\n".join(
        line for line in text.split("\n") if not line.lstrip().startswith("#")
    )


def _require_int(value: Any, field: str) -> int:
    if type(value) is not int:
        raise CodecError("schema", f"field {field!r} must be an integer")
    return value


_KNOWN_KEYS = {"name", "n", "edges", "k", "attackers", "colors"}


def decode_instance(text: str) -> ColoredInstance:
    """Parse and validate an instance document.

    Raises CodecError with one of the codes: syntax, schema, index-range,
    self-loop, duplicate-edge, color-range, color-order, length-mismatch.
    """
    try:
        obj = json.loads(_strip_comments(text))
    except json.JSONDecodeError as exc:
        raise CodecError("syntax", f"invalid document: {exc}") from None
    if not isinstance(obj, dict):
        raise CodecError("schema", "document must be a JSON object")
    unknown = set(obj) - _KNOWN_KEYS
    if unknown:
        raise CodecError("schema", f"unknown field(s): {', '.join(sorted(unknown))}")
    for field in ("n", "edges", "k", "colors"):
        if field not in obj:
            raise CodecError("schema", f"missing field {field!r}")

    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise CodecError("schema", "field 'name' must be a string")
    n = _require_int(obj["n"], "n")
    if n < 0:
        raise CodecError("schema", "field 'n' must be non-negative")
    k = _require_int(obj["k"], "k")
    if k < 1:
        raise CodecError("schema", "field 'k' must be at least 1")
    attackers = obj.get("attackers")
    if attackers is not None:
        attackers = _require_int(attackers, "attackers")
        if attackers < 1:
            raise CodecError("schema", "field 'attackers' must be at least 1")

    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise CodecError("schema", "field 'edges' must be a list of [u, v] pairs")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for pos, e in enumerate(raw_edges):
        if not (isinstance(e, list) and len(e) == 2):
            raise CodecError("schema", f"edge #{pos} must be a [u, v] pair")
        u = _require_int(e[0], f"edges[{pos}][0]")
        v = _require_int(e[1], f"edges[{pos}][1]")
        if not (0 <= u < n and 0 <= v < n):
            raise CodecError(
                "index-range", f"edge #{pos} = [{u}, {v}] out of range 0..{n - 1}"
            )
        if u == v:
            raise CodecError("self-loop", f"edge #{pos} is a self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise CodecError("duplicate-edge", f"edge #{pos} = [{u}, {v}] repeats")
        seen.add(key)
        edges.append((u, v))

    raw_colors = obj["colors"]
    if not isinstance(raw_colors, list):
        raise CodecError("schema", "field 'colors' must be a list of color lists")
    if len(raw_colors) != n:
        raise CodecError(
            "length-mismatch",
            f"'colors' has {len(raw_colors)} entries but n = {n}",
        )
    sets: list[list[int]] = []
    for v, cs in enumerate(raw_colors):
        if not isinstance(cs, list):
            raise CodecError("schema", f"colors[{v}] must be a list")
        vals = [_require_int(c, f"colors[{v}]") for c in cs]
        for c in vals:
            if not 1 <= c <= k:
                raise CodecError(
                    "color-range", f"colors[{v}] contains {c}, outside 1..{k}"
                )
        if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            raise CodecError(
                "color-order",
                f"colors[{v}] must be sorted ascending with no duplicates",
            )
        sets.append(vals)

    graph = Graph(n, edges)
    kappa = Multicoloring.from_sets(k, sets)
    return ColoredInstance(
        name=name, graph=graph, coloring=kappa, attackers=attackers
    )


def decode_edge_list(text: str) -> Graph:
    """Parse a bare graph: first line "n m", then m lines "u v"."""
    lines = [line for line in text.split("\n") if line.strip()]
    if not lines:
        raise CodecError("syntax", "empty edge-list document")
    head = lines[0].split()
    if len(head) != 2:
        raise CodecError("syntax", "first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise CodecError("syntax", "first line must hold two integers") from None
    if n < 0 or m < 0:
        raise CodecError("schema", "counts must be non-negative")
    if len(lines) - 1 != m:
        raise CodecError(
            "syntax", f"expected {m} edge lines, found {len(lines) - 1}"
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise CodecError("syntax", f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise CodecError("syntax", f"line {lineno}: expected two integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise CodecError(
                "index-range", f"line {lineno}: vertex out of range 0..{n - 1}"
            )
        if u == v:
            raise CodecError("self-loop", f"line {lineno}: self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise CodecError("duplicate-edge", f"line {lineno}: edge repeats")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def decode_coloring(text: str) -> Multicoloring:
    """Parse a coloring file: a JSON object {"k": int, "colors": [[...], ...]}.

    Colors are 1-based, sorted ascending per vertex, validated as in
    instance documents.
    """
    try:
        obj = json.loads(_strip_comments(text))
    except json.JSONDecodeError as exc:
        raise CodecError("syntax", f"invalid document: {exc}") from None
    if not isinstance(obj, dict):
        raise CodecError("schema", "document must be a JSON object")
    unknown = set(obj) - {"k", "colors"}
    if unknown:
        raise CodecError("schema", f"unknown field(s): {', '.join(sorted(unknown))}")
    if "k" not in obj or "colors" not in obj:
        raise CodecError("schema", "coloring needs fields 'k' and 'colors'")
    k = _require_int(obj["k"], "k")
    if k < 1:
        raise CodecError("schema", "field 'k' must be at least 1")
    raw_colors = obj["colors"]
    if not isinstance(raw_colors, list):
        raise CodecError("schema", "field 'colors' must be a list of color lists")
    sets: list[list[int]] = []
    for v, cs in enumerate(raw_colors):
        if not isinstance(cs, list):
            raise CodecError("schema", f"colors[{v}] must be a list")
        vals = [_require_int(c, f"colors[{v}]") for c in cs]
        for c in vals:
            if not 1 <= c <= k:
                raise CodecError(
                    "color-range", f"colors[{v}] contains {c}, outside 1..{k}"
                )
        if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            raise CodecError(
                "color-order",
                f"colors[{v}] must be sorted ascending with no duplicates",
            )
        sets.append(vals)
    return Multicoloring.from_sets(k, sets)
