"""
Exhaustive census of spherical maps and plane graphs.

Every rotation ``sigma`` on ``2e`` darts is visited (the edge pairing is
fixed), connected genus-0 maps are kept and deduplicated by canonical code.
Plane graphs come from choosing an outer face on each spherical class, one
per automorphism orbit of faces; a second construction dedups every
(map, face) rooting directly and must agree.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .canon import (
    CanonicalCode,
    Mode,
    PlaneGraph,
    Rooting,
    automorphism_face_orbits,
    canonical_code_plane,
    canonical_code_sphere,
    is_isomorphic,
    map_from_code,
    _traverse,
)
from .maps import CombinatorialMap, MapSummary, faces, perm_invert, perm_num_cycles, summary
from .morse import FlowSummary, flow_summary

MAX_EDGES = 6
NAIVE_MAX_EDGES = 4


class ResourceGuardError(ValueError):
    """Requested edge count is outside what brute force can handle."""


class CatalogMismatchError(RuntimeError):
    """Two independent constructions of a catalog disagree."""


@dataclass(frozen=True)
class CatalogEntry:
    code: CanonicalCode
    summary: MapSummary
    representative: CombinatorialMap
    # sphere entries: orbits of face indices under automorphisms
    face_orbits: tuple[tuple[int, ...], ...] = ()
    # plane entries only
    outer_face: Optional[int] = None
    parent_code: Optional[CanonicalCode] = None
    face_orbit_index: Optional[int] = None
    flow: Optional[FlowSummary] = None

    @property
    def plane(self) -> PlaneGraph:
        if self.outer_face is None:
            raise ValueError("not a plane entry")
        return PlaneGraph.rooted_at(self.representative, self.outer_face)


@dataclass(frozen=True)
class Catalog:
    edge_count: int
    surface: Rooting
    mode: Mode
    entries: tuple[CatalogEntry, ...]
    stats: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        return len(self.entries)

    def codes(self) -> list[CanonicalCode]:
        return [x.code for x in self.entries]

    def find(self, code: CanonicalCode) -> Optional[CatalogEntry]:
        for x in self.entries:
            if x.code == code:
                return x
        return None


def check_guard(e: int, limit: int = MAX_EDGES):
    if not isinstance(e, int) or e < 1 or e > limit:
        raise ResourceGuardError(f"edge count must be an integer in [1, {limit}], got {e!r}")


def _mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


def _sweep(args):
    """Canonical codes of all connected genus-0 rotations with ``sigma[0] == first``."""
    e, mode, first = args
    n = 2 * e
    orientations = mode.orientations
    rest = [d for d in range(n) if d != first]
    seen = set()   # every traversal code of every class found so far
    found = set()
    stats = Counter()
    for tail in itertools.permutations(rest):
        sigma = (first,) + tail
        stats["candidates"] += 1
        res = _traverse(sigma, 0)
        if res is None:
            stats["disconnected"] += 1
            continue
        phi = [sigma[d ^ 1] for d in range(n)]
        if perm_num_cycles(sigma) + perm_num_cycles(phi) != e + 2:
            stats["positive_genus"] += 1
            continue
        stats["spherical"] += 1
        if res[0] in seen:
            continue
        codes = []
        for o in orientations:
            s = sigma if o == 1 else perm_invert(sigma)
            codes.extend(_traverse(s, r)[0] for r in range(n))
        seen.update(codes)
        found.add(min(codes))
    return found, stats


def _sphere_codes(e: int, mode: Mode, jobs: int):
    n = 2 * e
    tasks = [(e, mode, first) for first in range(n)]
    if jobs <= 1:
        results = list(map(_sweep, tasks))
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as ex:
            results = list(ex.map(_sweep, tasks))
    codes = set()
    stats = Counter()
    for found, st in results:
        codes |= found
        stats.update(st)
    return sorted(codes), dict(stats)


def default_jobs() -> int:
    return os.cpu_count() or 1


def enumerate_spherical(e: int, mode: Mode = Mode.FULL, jobs: int = 1) -> Catalog:
    """All connected maps with ``e`` edges on the sphere, one per isomorphism class."""
    check_guard(e)
    mode = _mode(mode)
    codes, stats = _sphere_codes(e, mode, jobs)
    entries = []
    for c in codes:
        rep = map_from_code(c)
        code = canonical_code_sphere(rep, mode)
        assert code.code == c
        entries.append(CatalogEntry(
            code=code,
            summary=summary(rep),
            representative=rep,
            face_orbits=tuple(automorphism_face_orbits(rep, mode)),
        ))
    stats["classes"] = len(entries)
    return Catalog(e, Rooting.SPHERE, mode, tuple(entries), stats)


def _plane_entry(plane: PlaneGraph, mode: Mode, parent: CanonicalCode, orbit_index: int) -> CatalogEntry:
    code = canonical_code_plane(plane, mode)
    rep = map_from_code(code.code)
    # the root of the minimal traversal is on the outer face and becomes dart 0
    rep_plane = PlaneGraph(rep, next(f for f in faces(rep) if 0 in f))
    return CatalogEntry(
        code=code,
        summary=summary(rep),
        representative=rep,
        outer_face=rep_plane.outer_face_index,
        parent_code=parent,
        face_orbit_index=orbit_index,
        flow=flow_summary(rep_plane),
    )


def plane_codes_direct(sphere: Catalog, exhaustive: bool = False) -> set[CanonicalCode]:
    """
    Plane codes of every face rooting, deduplicated as a set.

    With ``exhaustive`` every labeled spherical rotation is rooted at every
    face, not just the catalog representatives.
    """
    mode = sphere.mode
    if exhaustive:
        e = sphere.edge_count
        n = 2 * e
        maps = []
        for sigma in itertools.permutations(range(n)):
            if _traverse(sigma, 0) is None:
                continue
            phi = [sigma[d ^ 1] for d in range(n)]
            if perm_num_cycles(sigma) + perm_num_cycles(phi) == e + 2:
                maps.append(CombinatorialMap(sigma))
    else:
        maps = [x.representative for x in sphere.entries]
    out = set()
    for m in maps:
        for f in faces(m):
            out.add(canonical_code_plane(PlaneGraph(m, f), mode))
    return out


def enumerate_plane(e: int, mode: Mode = Mode.FULL, jobs: int = 1,
                    sphere: Optional[Catalog] = None) -> Catalog:
    """Plane graphs with ``e`` edges: every spherical class with each face-orbit made outer."""
    check_guard(e)
    mode = _mode(mode)
    if sphere is None:
        sphere = enumerate_spherical(e, mode, jobs)
    elif (sphere.edge_count, sphere.surface, sphere.mode) != (e, Rooting.SPHERE, mode):
        raise ValueError("sphere catalog does not match the requested edge count and mode")

    entries = []
    for parent in sphere.entries:
        for k, orbit in enumerate(parent.face_orbits):
            plane = PlaneGraph.rooted_at(parent.representative, orbit[0])
            entries.append(_plane_entry(plane, mode, parent.code, k))
    entries.sort(key=lambda x: x.code)

    by_orbits = [x.code for x in entries]
    direct = sorted(plane_codes_direct(sphere))
    if by_orbits != direct:
        raise CatalogMismatchError(
            f"face-orbit plane catalog ({len(by_orbits)} entries) differs from "
            f"direct dedup ({len(direct)} classes) at e={e}, mode={mode.value}")
    stats = dict(sphere.stats)
    stats["classes"] = len(entries)
    stats["sphere_classes"] = len(sphere.entries)
    return Catalog(e, Rooting.PLANE, mode, tuple(entries), stats)


def decomposition_table(e: int, mode: Mode = Mode.FULL, jobs: int = 1,
                        sphere: Optional[Catalog] = None) -> dict[int, int]:
    """Histogram: number of face orbits -> number of spherical classes."""
    if sphere is None:
        sphere = enumerate_spherical(e, mode, jobs)
    hist = Counter(len(x.face_orbits) for x in sphere.entries)
    return dict(sorted(hist.items()))


def naive_oracle_spherical(e: int, mode: Mode = Mode.FULL) -> Catalog:
    """
    Spherical census deduplicated by pairwise isomorphism tests.

    No canonical codes are used to decide equivalence; codes are attached
    afterwards only so the result can be compared with the fast census.
    """
    check_guard(e, NAIVE_MAX_EDGES)
    mode = _mode(mode)
    n = 2 * e
    reps: dict[tuple, list[CombinatorialMap]] = {}
    for sigma in itertools.permutations(range(n)):
        if _traverse(sigma, 0) is None:
            continue
        m = CombinatorialMap(sigma)
        s = summary(m)
        if s.genus != 0:
            continue
        # cheap isomorphism invariants only narrow the candidates
        key = (s.vertex_degrees, s.face_degrees)
        bucket = reps.setdefault(key, [])
        if not any(is_isomorphic(r, m, mode) for r in bucket):
            bucket.append(m)
    entries = []
    for key in sorted(reps):
        for m in reps[key]:
            entries.append(CatalogEntry(code=canonical_code_sphere(m, mode), summary=summary(m),
                                        representative=m))
    entries.sort(key=lambda x: x.code)
    return Catalog(e, Rooting.SPHERE, mode, tuple(entries), {"classes": len(entries)})
