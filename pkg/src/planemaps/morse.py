"""
Plane graphs as distinguished graphs of Morse flows on the disk.

For a flow on the 2-disk transversal to the boundary, sources sit at the
graph vertices, each saddle contributes one edge (its two unstable
separatrices), and each bounded face holds exactly one sink.  The outer face
is the collar along the boundary and carries no singular point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import Mode, PlaneGraph
from .maps import summary


@dataclass(frozen=True)
class FlowSummary:
    sources: int
    saddles: int
    sinks: int
    euler_check: bool

    @property
    def euler_characteristic(self) -> int:
        return self.sources - self.saddles + self.sinks


def flow_summary(plane: PlaneGraph) -> FlowSummary:
    s = summary(plane.map)
    sources, saddles, sinks = s.V, s.E, s.F - 1
    ok = sources - saddles + sinks == 1
    assert ok, f"disk Euler characteristic violated by {plane!r}"
    return FlowSummary(sources, saddles, sinks, ok)


def flow_structure_count(e: int, mode: Mode = Mode.FULL, jobs: int = 1) -> int:
    """Number of flow structures on the disk with ``e`` saddles."""
    from .enumeration import enumerate_plane

    return len(enumerate_plane(e, mode, jobs=jobs).entries)
