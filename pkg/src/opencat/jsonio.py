"""JSON encodings, canonical serialization and DOT export.

Formats (all indices dense, starting at 0):

* finite set ``{"n": k}``
* function ``{"dom": k, "cod": m, "map": [...]}``
* graph ``{"v": k, "e": m, "src": [...], "tgt": [...]}``
* cospan of finite sets ``{"footL", "apex", "footR", "legL", "legR"}``
* open graph ``{"footL": k, "footR": m, "graph": {...}, "legL": [...], "legR": [...]}``
  with legs given on vertices (the feet are discrete graphs)
* decorated cospan: cospan fields plus ``{"decoration": {"edges": [[s, t], ...]}}``

:func:`dumps` writes the canonical form (sorted keys, two-space indent, final
newline), so parsing and re-serializing a canonical file reproduces it byte
for byte.
"""
from __future__ import annotations

import json

from .cospan import Cospan
from .errors import BoundaryError
from .fincolim import FinFunction, FinSet, Graph, GraphHom, discrete
from .grothendieck import GrothPro
from .structured import SCSP_DISCRETE

__all__ = [
    "dumps", "loads", "finset_to_json", "finset_from_json", "function_to_json",
    "function_from_json", "graph_to_json", "graph_from_json", "cospan_to_json",
    "cospan_from_json", "open_graph_to_json", "open_graph_from_json",
    "decorated_to_json", "decorated_from_json", "to_dot",
]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BoundaryError(f"invalid JSON: {exc}") from exc


def _field(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise BoundaryError(f"missing field {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise BoundaryError(f"field {key!r} should be {kind.__name__}")
    return value


def _nat(data, key) -> int:
    v = _field(data, key, int)
    if isinstance(v, bool) or v < 0:
        raise BoundaryError(f"field {key!r} must be non-negative")
    return v


def _ints(data, key) -> tuple:
    v = _field(data, key, list)
    if not all(isinstance(i, int) and not isinstance(i, bool) for i in v):
        raise BoundaryError(f"field {key!r} must be a list of integers")
    return tuple(v)


def finset_to_json(a: FinSet) -> dict:
    return {"n": a.size}


def finset_from_json(data) -> FinSet:
    return FinSet(_nat(data, "n"))


def function_to_json(f: FinFunction) -> dict:
    return {"dom": f.dom.size, "cod": f.cod.size, "map": list(f.table)}


def function_from_json(data) -> FinFunction:
    dom, cod = _nat(data, "dom"), _nat(data, "cod")
    return FinFunction(FinSet(dom), FinSet(cod), _ints(data, "map"))


def graph_to_json(g: Graph) -> dict:
    return {"v": g.vertices.size, "e": g.edges.size, "src": list(g.src.table),
            "tgt": list(g.tgt.table)}


def graph_from_json(data) -> Graph:
    v, e = _nat(data, "v"), _nat(data, "e")
    src, tgt = _ints(data, "src"), _ints(data, "tgt")
    if len(src) != e or len(tgt) != e:
        raise BoundaryError(f"graph declares {e} edges but lists {len(src)} sources "
                            f"and {len(tgt)} targets")
    return Graph.from_edges(v, list(zip(src, tgt)))


def cospan_to_json(m: Cospan) -> dict:
    return {"footL": finset_to_json(m.foot_l), "apex": finset_to_json(m.apex),
            "footR": finset_to_json(m.foot_r), "legL": function_to_json(m.leg_l),
            "legR": function_to_json(m.leg_r)}


def cospan_from_json(data) -> Cospan:
    a, x, b = (finset_from_json(_field(data, k)) for k in ("footL", "apex", "footR"))
    l, r = function_from_json(_field(data, "legL")), function_from_json(_field(data, "legR"))
    if l.dom != a or l.cod != x:
        raise BoundaryError(f"legL has type {l.dom.size} -> {l.cod.size}, "
                            f"expected {a.size} -> {x.size}")
    if r.dom != b or r.cod != x:
        raise BoundaryError(f"legR has type {r.dom.size} -> {r.cod.size}, "
                            f"expected {b.size} -> {x.size}")
    return Cospan(a, x, b, l, r)


def open_graph_to_json(m: Cospan) -> dict:
    return {"footL": m.foot_l.size, "footR": m.foot_r.size, "graph": graph_to_json(m.apex),
            "legL": list(m.leg_l.vmap.table), "legR": list(m.leg_r.vmap.table)}


def _vertex_leg(foot: FinSet, g: Graph, table) -> GraphHom:
    if len(table) != foot.size:
        raise BoundaryError(f"leg lists {len(table)} vertices for a foot of size {foot.size}")
    return GraphHom(discrete(foot), g, FinFunction(foot, g.vertices, tuple(table)),
                    FinFunction(FinSet(0), g.edges, ()))


def open_graph_from_json(data) -> Cospan:
    a, b = FinSet(_nat(data, "footL")), FinSet(_nat(data, "footR"))
    g = graph_from_json(_field(data, "graph"))
    return SCSP_DISCRETE.cospan(a, g, b, _vertex_leg(a, g, _ints(data, "legL")),
                                _vertex_leg(b, g, _ints(data, "legR")))


def decorated_to_json(p: GrothPro) -> dict:
    out = cospan_to_json(p.base)
    out["decoration"] = {"edges": [list(e) for e in p.dec.edge_list]}
    return out


def decorated_from_json(data) -> GrothPro:
    m = cospan_from_json(data)
    edges = _field(_field(data, "decoration", dict), "edges", list)
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(v, int) and 0 <= v < m.apex.size for v in e)):
            raise BoundaryError(f"decoration edge {e!r} is not a pair of apex elements")
    return GrothPro(m, Graph.from_edges(m.apex.size, [tuple(e) for e in edges]))


def to_dot(m: Cospan, name: str = "open") -> str:
    """DOT text for an open graph: the apex graph plus both feet as clusters.

    Foot elements are drawn inside labelled clusters with dashed arrows to
    the apex vertices they are sent to.
    """
    g = m.apex
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for side, foot, leg in (("L", m.foot_l, m.leg_l), ("R", m.foot_r, m.leg_r)):
        lines.append(f"  subgraph cluster_{side} {{")
        lines.append(f'    label="foot{side}"; style=filled; color=lightgrey;')
        for i in range(foot.size):
            lines.append(f'    {side.lower()}{i} [label="{i}", shape=box];')
        lines.append("  }")
    lines.append("  subgraph cluster_apex {")
    lines.append('    label="apex";')
    for v in range(g.vertices.size):
        lines.append(f'    v{v} [label="{v}"];')
    lines.append("  }")
    for e, (s, t) in enumerate(g.edge_list):
        lines.append(f'  v{s} -> v{t} [label="e{e}"];')
    for side, foot, leg in (("l", m.foot_l, m.leg_l), ("r", m.foot_r, m.leg_r)):
        for i in range(foot.size):
            lines.append(f"  {side}{i} -> v{leg.vmap(i)} [style=dashed, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
