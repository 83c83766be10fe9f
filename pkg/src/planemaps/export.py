"""Text, JSON and DOT renderings of catalogs."""

from __future__ import annotations

import json

from .canon import Rooting
from .enumeration import Catalog, CatalogEntry
from .maps import CombinatorialMap, faces, vertices


def cycle_string(cycles) -> str:
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def entry_record(x: CatalogEntry) -> dict:
    rep = x.representative
    rec = {
        "code": str(x.code),
        "V": x.summary.V,
        "E": x.summary.E,
        "F": x.summary.F,
        "vertex_degrees": list(x.summary.vertex_degrees),
        "face_degrees": list(x.summary.face_degrees),
    }
    if x.outer_face is not None:
        outer = faces(rep)[x.outer_face]
        rec["outer_face_degree"] = len(outer)
        rec["parent_sphere_code"] = str(x.parent_code)
        rec["face_orbit_index"] = x.face_orbit_index
        rec["flow"] = {
            "sources": x.flow.sources,
            "saddles": x.flow.saddles,
            "sinks": x.flow.sinks,
            "euler_check": x.flow.euler_check,
        }
        rec["outer_face"] = list(outer)
    else:
        rec["face_orbits"] = [list(o) for o in x.face_orbits]
    rec["sigma"] = list(rep.sigma)
    return rec


def catalog_json(cat: Catalog) -> str:
    doc = {
        "edge_count": cat.edge_count,
        "surface": cat.surface.value,
        "mode": cat.mode.value,
        "total": len(cat.entries),
        "entries": [entry_record(x) for x in cat.entries],
    }
    return json.dumps(doc, indent=2) + "\n"


def entry_line(x: CatalogEntry) -> str:
    s = x.summary
    parts = [
        str(x.code),
        f"V={s.V} E={s.E} F={s.F}",
        "vdeg=" + ",".join(map(str, s.vertex_degrees)),
        "fdeg=" + ",".join(map(str, s.face_degrees)),
        "sigma=" + cycle_string(vertices(x.representative)),
    ]
    if x.outer_face is None:
        parts.append(f"orbits={len(x.face_orbits)}")
    else:
        outer = faces(x.representative)[x.outer_face]
        f = x.flow
        parts.append(f"outer={cycle_string([outer])}")
        parts.append(f"flow={f.sources}/{f.saddles}/{f.sinks}")
    return "  ".join(parts)


def catalog_text(cat: Catalog) -> str:
    """One line per class, in code order."""
    return "".join(entry_line(x) + "\n" for x in cat.entries)


def map_dot(m: CombinatorialMap, name: str, label: str, outer=None, indent: str = "  ") -> str:
    """
    DOT subgraph for one map.

    DOT cannot hold an embedding, so the rotation system and outer face go
    into comments; edges on the outer face are drawn bold.
    """
    vs = vertices(m)
    vid = {d: i for i, c in enumerate(vs) for d in c}
    on_outer = set(outer or ())
    lines = [f"{indent}subgraph cluster_{name} {{", f'{indent}  label="{label}";',
             f"{indent}  // rotation: {cycle_string(vs)}"]
    if outer is not None:
        lines.append(f"{indent}  // outer face: {cycle_string([outer])}")
    for i in range(len(vs)):
        lines.append(f'{indent}  {name}_v{i} [label="v{i}"];')
    for k in range(m.edge_count):
        a, b = 2 * k, 2 * k + 1
        attrs = f'label="{a}/{b}"'
        if a in on_outer or b in on_outer:
            attrs += ", penwidth=2"
        lines.append(f"{indent}  {name}_v{vid[a]} -- {name}_v{vid[b]} [{attrs}];")
    lines.append(f"{indent}}}")
    return "\n".join(lines)


def catalog_dot(cat: Catalog) -> str:
    out = [f"graph E{cat.edge_count}_{cat.surface.value}_{cat.mode.value} {{",
           f"  // {len(cat.entries)} classes"]
    for i, x in enumerate(cat.entries):
        outer = faces(x.representative)[x.outer_face] if cat.surface is Rooting.PLANE else None
        out.append(map_dot(x.representative, f"g{i}", str(x.code), outer))
    out.append("}")
    return "\n".join(out) + "\n"


FORMATTERS = {"text": catalog_text, "json": catalog_json, "dot": catalog_dot}
