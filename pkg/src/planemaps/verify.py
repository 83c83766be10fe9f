"""Compare computed census counts with the published ones, in both modes."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .canon import Mode
from .enumeration import decomposition_table, enumerate_plane, enumerate_spherical
from .expected import default_expectations


@dataclass
class Row:
    edges: int
    surface: str
    mode: Mode
    actual: int
    expected: Optional[int]
    seconds: float
    breakdown: dict = field(default_factory=dict)   # (V, F) -> classes

    @property
    def checked(self) -> bool:
        return self.expected is not None

    @property
    def ok(self) -> bool:
        return self.expected is None or self.actual == self.expected


@dataclass
class DecompositionRow:
    edges: int
    mode: Mode
    actual: dict
    expected: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.expected is None or self.actual == self.expected


@dataclass
class VerificationReport:
    max_edges: int
    rows: list[Row]
    decompositions: list[DecompositionRow]

    def mode_rows(self, mode: Mode):
        return [r for r in self.rows if r.mode is mode]

    def mode_passes(self, mode: Mode) -> bool:
        return (all(r.ok for r in self.mode_rows(mode))
                and all(d.ok for d in self.decompositions if d.mode is mode))

    def mode_score(self, mode: Mode) -> tuple[int, int]:
        checks = [r.ok for r in self.mode_rows(mode) if r.checked]
        checks += [d.ok for d in self.decompositions if d.mode is mode and d.expected is not None]
        return sum(checks), len(checks)

    @property
    def passed(self) -> bool:
        return any(self.mode_passes(m) for m in Mode)

    @property
    def adopted_mode(self) -> Mode:
        """The mode that reproduces the published counts, else the one matching most of them."""
        passing = [m for m in (Mode.FULL, Mode.ORIENTED) if self.mode_passes(m)]
        if passing:
            return passing[0]
        return max((Mode.FULL, Mode.ORIENTED), key=lambda m: self.mode_score(m)[0])

    def differing_rows(self) -> list[tuple[int, str]]:
        """(edges, surface) where the two modes give different counts."""
        by = {(r.edges, r.surface, r.mode): r.actual for r in self.rows}
        out = []
        for r in self.mode_rows(Mode.FULL):
            if by[(r.edges, r.surface, Mode.ORIENTED)] != r.actual:
                out.append((r.edges, r.surface))
        return out

    def render(self) -> str:
        lines = [f"census verification, edges 1..{self.max_edges}", ""]
        lines.append(f"{'e':>2} {'surface':<7} {'mode':<9} {'actual':>6} {'expected':>8} {'result':<6} {'time':>7}")
        for r in self.rows:
            exp = "-" if r.expected is None else str(r.expected)
            res = "-" if not r.checked else ("ok" if r.ok else "FAIL")
            lines.append(f"{r.edges:>2} {r.surface:<7} {r.mode.value:<9} {r.actual:>6} {exp:>8} "
                         f"{res:<6} {r.seconds:>6.2f}s")
        if self.decompositions:
            lines.append("")
            lines.append("face-orbit decomposition (orbits: spherical classes)")
            for d in self.decompositions:
                exp = "-" if d.expected is None else _hist(d.expected)
                res = "-" if d.expected is None else ("ok" if d.ok else "FAIL")
                lines.append(f"  e={d.edges} {d.mode.value:<9} actual {_hist(d.actual)}  "
                             f"expected {exp}  {res}")
        lines.append("")
        for m in (Mode.FULL, Mode.ORIENTED):
            hit, total = self.mode_score(m)
            lines.append(f"mode {m.value:<9} {'PASS' if self.mode_passes(m) else 'FAIL'} "
                         f"({hit}/{total} published figures matched)")
        diff = self.differing_rows()
        if diff:
            lines.append("modes differ at: " + ", ".join(f"e={e} {s}" for e, s in diff))
        else:
            lines.append("modes agree on every count")
        adopted = self.adopted_mode
        if self.passed:
            lines.append(f"adopted mode: {adopted.value} (reproduces every published figure)")
        else:
            lines.append(f"adopted mode: {adopted.value} (closest; no mode reproduces every figure)")
            lines.append("")
            lines.append(f"mismatches in mode {adopted.value}:")
            for r in self.mode_rows(adopted):
                if not r.ok:
                    lines.append(f"  e={r.edges} {r.surface}: expected {r.expected}, found {r.actual} "
                                 f"({r.actual - r.expected:+d})")
                    lines.append("    classes by (V, F): " + ", ".join(
                        f"{v},{f}: {n}" for (v, f), n in sorted(r.breakdown.items())))
            for d in self.decompositions:
                if d.mode is adopted and not d.ok:
                    lines.append(f"  e={d.edges} decomposition: expected {_hist(d.expected)}, "
                                 f"found {_hist(d.actual)}")
        lines.append("")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _hist(h: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(h.items())) + "}"


def _breakdown(cat) -> dict:
    return dict(Counter((x.summary.V, x.summary.F) for x in cat.entries))


def run_verification(max_edges: int = 4, expectations: Optional[dict] = None,
                     jobs: int = 1) -> VerificationReport:
    exp = default_expectations() if expectations is None else expectations
    rows = []
    decs = []
    for mode in (Mode.FULL, Mode.ORIENTED):
        for e in range(1, max_edges + 1):
            t = time.perf_counter()
            sphere = enumerate_spherical(e, mode, jobs)
            t_sphere = time.perf_counter() - t
            t = time.perf_counter()
            plane = enumerate_plane(e, mode, sphere=sphere)
            t_plane = time.perf_counter() - t
            rows.append(Row(e, "sphere", mode, len(sphere), exp["sphere"].get(e), t_sphere,
                            _breakdown(sphere)))
            rows.append(Row(e, "plane", mode, len(plane), exp["plane"].get(e), t_plane,
                            _breakdown(plane)))
            if e in exp["decomposition"]:
                decs.append(DecompositionRow(e, mode, decomposition_table(e, mode, sphere=sphere),
                                             exp["decomposition"][e]))
    return VerificationReport(max_edges, rows, decs)
