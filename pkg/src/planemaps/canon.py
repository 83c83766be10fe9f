"""
Canonical codes for spherical maps and plane graphs.

A traversal from a root dart relabels darts in first-visit order (rotation
successor before edge partner).  The relabeled map, written as the sequence
``(sigma'(0), alpha'(0), sigma'(1), alpha'(1), ...)``, is the traversal code.
Two connected maps are isomorphic iff they share a traversal code for some
choice of roots, so the least code over all admissible roots is a complete
invariant.  Admissible roots are all darts for spheres and darts on the outer
face for plane graphs; FULL mode also admits traversals of the mirror image.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .maps import (
    CombinatorialMap,
    Cycle,
    face_index,
    faces,
    genus,
    is_connected,
    perm_invert,
)


class Mode(str, enum.Enum):
    ORIENTED = "oriented"
    FULL = "full"

    @property
    def orientations(self) -> tuple[int, ...]:
        return (1,) if self is Mode.ORIENTED else (1, -1)

    @property
    def letter(self) -> str:
        return "O" if self is Mode.ORIENTED else "F"


class Rooting(str, enum.Enum):
    SPHERE = "sphere"
    PLANE = "plane"

    @property
    def letter(self) -> str:
        return "S" if self is Rooting.SPHERE else "P"


_MODE_BY_LETTER = {m.letter: m for m in Mode}
_ROOTING_BY_LETTER = {r.letter: r for r in Rooting}


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Catalog key; serialized as ``E<edges>:<S|P>:<O|F>:<i.j.k...>``."""

    edge_count: int
    code: tuple[int, ...]
    mode: Mode
    rooting: Rooting

    def __str__(self):
        body = ".".join(map(str, self.code))
        return f"E{self.edge_count}:{self.rooting.letter}:{self.mode.letter}:{body}"

    @classmethod
    def parse(cls, text: str) -> CanonicalCode:
        try:
            head, rooting, mode, body = text.strip().split(":")
            if not head.startswith("E"):
                raise ValueError
            e = int(head[1:])
            code = tuple(int(x) for x in body.split("."))
            result = cls(e, code, _MODE_BY_LETTER[mode], _ROOTING_BY_LETTER[rooting])
        except (ValueError, KeyError):
            raise ValueError(f"malformed canonical code: {text!r}") from None
        if e < 1 or len(code) != 4 * e:
            raise ValueError(f"malformed canonical code: {text!r}")
        return result


def _oriented_sigma(m: CombinatorialMap, orientation: int) -> tuple[int, ...]:
    if orientation == 1:
        return m.sigma
    if orientation == -1:
        return perm_invert(m.sigma)
    raise ValueError(f"orientation must be +1 or -1, got {orientation}")


def _traverse(s: Sequence[int], root: int):
    """First-visit traversal under ``s`` and the edge pairing; ``None`` if disconnected."""
    n = len(s)
    labels = [-1] * n
    labels[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        x = s[d]
        if labels[x] < 0:
            labels[x] = len(order)
            order.append(x)
        x = d ^ 1
        if labels[x] < 0:
            labels[x] = len(order)
            order.append(x)
    if len(order) < n:
        return None
    code = []
    for d in order:
        code.append(labels[s[d]])
        code.append(labels[d ^ 1])
    return tuple(code), order


def traversal_code(m: CombinatorialMap, root: int, orientation: int = 1) -> tuple[int, ...]:
    """
    Relabel ``m`` by first-visit order from ``root`` and return the relabeled
    ``(sigma, alpha)`` pairs.  ``orientation=-1`` traverses the mirror map.
    """
    if not 0 <= root < m.num_darts:
        raise ValueError(f"root {root} out of range")
    res = _traverse(_oriented_sigma(m, orientation), root)
    if res is None:
        raise ValueError("traversal_code needs a connected map")
    return res[0]


def _min_traversals(m: CombinatorialMap, mode: Mode, roots_by_orientation):
    """Least code and every (root, orientation, visit order) achieving it."""
    best = None
    hits = []
    for o in mode.orientations:
        s = _oriented_sigma(m, o)
        for r in roots_by_orientation(o):
            res = _traverse(s, r)
            if res is None:
                raise ValueError("map is not connected")
            code, order = res
            if best is None or code < best:
                best = code
                hits = [(r, o, order)]
            elif code == best:
                hits.append((r, o, order))
    return best, hits


def _require_sphere(m: CombinatorialMap):
    if not is_connected(m):
        raise ValueError("map is not connected")
    g = genus(m)
    if g != 0:
        raise ValueError(f"map has genus {g}; only spherical maps are catalogued")


def canonical_code_sphere(m: CombinatorialMap, mode: Mode = Mode.FULL) -> CanonicalCode:
    _require_sphere(m)
    darts = range(m.num_darts)
    best, _ = _min_traversals(m, mode, lambda o: darts)
    return CanonicalCode(m.edge_count, best, mode, Rooting.SPHERE)


@dataclass(frozen=True)
class PlaneGraph:
    """A spherical map with one face chosen as the outer (unbounded) face."""

    map: CombinatorialMap
    outer_face: Cycle

    def __post_init__(self):
        _require_sphere(self.map)
        target = frozenset(self.outer_face)
        for f in faces(self.map):
            if frozenset(f) == target:
                object.__setattr__(self, "outer_face", f)
                return
        raise ValueError(f"{self.outer_face} is not a face of {self.map!r}")

    @classmethod
    def rooted_at(cls, m: CombinatorialMap, face: int) -> PlaneGraph:
        """Plane graph whose outer face is ``faces(m)[face]``."""
        return cls(m, faces(m)[face])

    @property
    def outer_face_index(self) -> int:
        return faces(self.map).index(self.outer_face)


def reflect(plane: PlaneGraph) -> PlaneGraph:
    m = CombinatorialMap(perm_invert(plane.map.sigma))
    return PlaneGraph(m, tuple(d ^ 1 for d in plane.outer_face))


def canonical_code_plane(plane: PlaneGraph, mode: Mode = Mode.FULL) -> CanonicalCode:
    outer = plane.outer_face
    # traversing sigma^-1 is traversing reflect(plane), whose outer face is alpha(outer)
    mirrored = tuple(d ^ 1 for d in outer)
    best, _ = _min_traversals(plane.map, mode, lambda o: outer if o == 1 else mirrored)
    return CanonicalCode(plane.map.edge_count, best, mode, Rooting.PLANE)


def automorphisms(m: CombinatorialMap, mode: Mode = Mode.FULL) -> list[tuple[tuple[int, ...], int]]:
    """
    All automorphisms of ``m`` as ``(dart bijection, orientation)`` pairs.

    An orientation of ``-1`` marks a reversing automorphism: it conjugates
    ``sigma`` to ``sigma^-1`` while commuting with the edge pairing.
    """
    _require_sphere(m)
    darts = range(m.num_darts)
    _, hits = _min_traversals(m, mode, lambda o: darts)
    _, o0, base = hits[0]
    out = []
    for _, o, order in hits:
        g = [0] * m.num_darts
        for a, b in zip(base, order):
            g[a] = b
        out.append((tuple(g), o * o0))
    return out


def automorphism_face_orbits(m: CombinatorialMap, mode: Mode = Mode.FULL) -> list[tuple[int, ...]]:
    """
    Partition of face indices (into ``faces(m)``) by the automorphism group.

    Each orbit gives exactly one plane graph up to isomorphism.
    """
    fidx = face_index(m)
    nf = max(fidx) + 1
    parent = list(range(nf))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g, o in automorphisms(m, mode):
        for d in range(m.num_darts):
            # a reversing automorphism sends the face of d to the face of alpha(g(d))
            image = g[d] if o == 1 else g[d] ^ 1
            a, b = find(fidx[d]), find(fidx[image])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(nf):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(g) for g in groups.values())


def is_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap, mode: Mode = Mode.FULL) -> bool:
    """
    Direct isomorphism test by propagating a root correspondence.

    Independent of traversal codes; used as an oracle.
    """
    if m1.num_darts != m2.num_darts:
        return False
    n = m1.num_darts
    s1 = m1.sigma
    for o in mode.orientations:
        s2 = _oriented_sigma(m2, o)
        for r in range(n):
            f = [-1] * n
            f[0] = r
            stack = [0]
            ok = True
            while stack and ok:
                d = stack.pop()
                for x, y in ((s1[d], s2[f[d]]), (d ^ 1, f[d] ^ 1)):
                    if f[x] < 0:
                        f[x] = y
                        stack.append(x)
                    elif f[x] != y:
                        ok = False
                        break
            if ok and -1 not in f and len(set(f)) == n:
                return True
    return False


def map_from_code(code: Iterable[int]) -> CombinatorialMap:
    """
    Rebuild a map from a traversal code.

    Traversal labels are renumbered so edges are consecutive dart pairs, in
    order of first visit; the root (label 0) becomes dart 0.
    """
    code = tuple(code)
    n = len(code) // 2
    if n == 0 or len(code) != 2 * n or n % 2:
        raise ValueError("code length must be a positive multiple of 4")
    s = code[0::2]
    a = code[1::2]
    if sorted(s) != list(range(n)) or sorted(a) != list(range(n)):
        raise ValueError("code does not describe permutations")
    if any(a[a[x]] != x or a[x] == x for x in range(n)):
        raise ValueError("code does not describe a fixed-point-free involution")
    new = [-1] * n
    k = 0
    for x in range(n):
        if new[x] < 0:
            new[x] = 2 * k
            new[a[x]] = 2 * k + 1
            k += 1
    sigma = [0] * n
    for x in range(n):
        sigma[new[x]] = new[s[x]]
    return CombinatorialMap(tuple(sigma))
