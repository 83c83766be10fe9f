"""Command line: ``planemaps enum | verify | show``."""

from __future__ import annotations

import argparse
import sys

from .canon import (
    CanonicalCode,
    Mode,
    PlaneGraph,
    Rooting,
    automorphism_face_orbits,
    canonical_code_plane,
    canonical_code_sphere,
    map_from_code,
)
from .enumeration import MAX_EDGES, ResourceGuardError, default_jobs, enumerate_plane, enumerate_spherical
from .expected import load_expectations
from .export import FORMATTERS, cycle_string, map_dot
from .maps import edges, faces, summary, vertices
from .morse import flow_summary
from .verify import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD, EXIT_UNKNOWN = 0, 1, 2, 3, 4


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_enum(args) -> int:
    try:
        if args.surface == "sphere":
            cat = enumerate_spherical(args.edges, Mode(args.mode), args.jobs)
        else:
            cat = enumerate_plane(args.edges, Mode(args.mode), args.jobs)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    _write(FORMATTERS[args.format](cat), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.max_edges <= MAX_EDGES:
        print(f"error: --max-edges must be in [1, {MAX_EDGES}]", file=sys.stderr)
        return EXIT_GUARD
    expectations = load_expectations(args.expected) if args.expected else None
    report = run_verification(args.max_edges, expectations, args.jobs)
    _write(report.render(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def resolve_code(text: str):
    """Parse a catalog key into its representative map and, for plane keys, plane graph."""
    code = CanonicalCode.parse(text)
    m = map_from_code(code.code)
    if code.rooting is Rooting.SPHERE:
        if canonical_code_sphere(m, code.mode) != code:
            raise ValueError("not a canonical sphere code")
        return code, m, None
    plane = PlaneGraph(m, next(f for f in faces(m) if 0 in f))
    if canonical_code_plane(plane, code.mode) != code:
        raise ValueError("not a canonical plane code")
    return code, m, plane


def cmd_show(args) -> int:
    try:
        code, m, plane = resolve_code(args.code)
    except ValueError as exc:
        print(f"error: unknown code {args.code!r}: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    if args.format == "dot":
        outer = plane.outer_face if plane else None
        _write("graph show {\n" + map_dot(m, "g0", str(code), outer) + "\n}\n", args.out)
        return EXIT_OK
    s = summary(m)
    fs = faces(m)
    orbits = automorphism_face_orbits(m, code.mode)
    lines = [
        f"code     {code}",
        f"sigma    {cycle_string(vertices(m))}",
        f"alpha    {cycle_string(edges(m))}",
        f"summary  V={s.V} E={s.E} F={s.F} genus={s.genus}",
        f"degrees  vertices {list(s.vertex_degrees)}  faces {list(s.face_degrees)}",
        "faces    " + "  ".join(f"{i}:{cycle_string([f])}" for i, f in enumerate(fs)),
        f"orbits   {len(orbits)}: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in orbits),
    ]
    if plane is not None:
        lines.append(f"outer    face {plane.outer_face_index} {cycle_string([plane.outer_face])}")
        roots = [plane]
    else:
        roots = [PlaneGraph.rooted_at(m, o[0]) for o in orbits]
    for p in roots:
        f = flow_summary(p)
        lines.append(f"flow     outer face {p.outer_face_index}: sources {f.sources}, "
                     f"saddles {f.saddles}, sinks {f.sinks}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planemaps",
                                description="Census of spherical maps and plane graphs with few edges.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", default=None, help="output path (default: standard output)")

    def jobs(sp):
        sp.add_argument("--jobs", type=int, default=default_jobs(),
                        help="worker processes (default: all cores)")

    sp = sub.add_parser("enum", help="enumerate a catalog")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--surface", choices=["sphere", "plane"], default="plane")
    sp.add_argument("--mode", choices=[m.value for m in Mode], default="full")
    common(sp, ["text", "json", "dot"])
    jobs(sp)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("verify", help="check counts against the published census")
    sp.add_argument("--max-edges", type=int, default=4)
    sp.add_argument("--expected", default=None, help="JSON expectation file overriding the built-in table")
    sp.add_argument("--out", default=None)
    jobs(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("show", help="describe one catalog entry")
    sp.add_argument("code")
    common(sp, ["text", "dot"])
    sp.set_defaults(func=cmd_show)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
