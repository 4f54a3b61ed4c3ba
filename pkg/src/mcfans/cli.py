"""Command-line interface.

Subcommands: enumerate, mgs, fans, walls, render, dilog, verify. JSON goes
to stdout, SVG to the --out file, log lines to stderr. Exit codes: 0 success,
1 a verification/domain failure, 2 a usage problem. Numeric flags beat the
MCF_NODE_CAP / MCF_SAMPLES environment variables, which beat the defaults.
"""

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .dilog import dt_invariant_check
from .enumeration import (enumerate_mgs, exchange_graph, fan_components,
                          graph_to_json, longest_mgs, mgs_to_json)
from .errors import McfError
from .fans import configuration_of_state, horizontal_algebra, vertical_algebra
from .finrep import indecomposables, wall_of
from .mutation import MutationContext
from .render import DEFAULT_SAMPLES, build_scene, render_picture, scene_stats
from .seed import preset
from .verify import format_report, run_verification

log = logging.getLogger("mcfans")


def _env_int(name, parser):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        parser.error(f"environment variable {name}={raw!r} is not an integer")


def _resolve_int(flag_value, env_name, default, parser):
    if flag_value is not None:
        return flag_value
    env = _env_int(env_name, parser)
    return default if env is None else env


def _parse_pole(text, parser):
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        parser.error(f"--pole needs three comma-separated rationals, got {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        parser.error(f"--pole components must be rationals, got {text!r}")


def _context(args, parser):
    try:
        q = preset(args.quiver)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return MutationContext(q, args.m)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(payload):
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# --- subcommand handlers ----------------------------------------------------

def _cmd_enumerate(args, parser):
    ctx = _context(args, parser)
    cap = _resolve_int(args.node_cap, "MCF_NODE_CAP", None, parser)
    graph = exchange_graph(ctx, node_cap=cap)
    log.info("enumerated %d states for %s m=%d", len(graph), args.quiver, args.m)
    _emit({"quiver": args.quiver, "m": args.m, "count": len(graph),
           "edge_count": len(graph.edges), "graph": graph_to_json(graph)})
    return 0


def _cmd_mgs(args, parser):
    ctx = _context(args, parser)
    if args.longest:
        cap = _resolve_int(args.node_cap, "MCF_NODE_CAP", None, parser)
        length = longest_mgs(ctx, node_cap=cap)
        _emit({"quiver": args.quiver, "m": args.m, "longest": length})
        return 0
    if args.depth_cap is None:
        parser.error("mgs needs --depth-cap (or --longest)")
    result = enumerate_mgs(ctx, args.depth_cap)
    log.info("found %d sequences (truncated=%s)", len(result), result.truncated)
    payload = {"quiver": args.quiver, "m": args.m, "count": len(result)}
    payload.update(mgs_to_json(result))
    _emit(payload)
    return 0


def _one_parity(graph, parity):
    comps = fan_components(graph, parity)
    algebra_fn = (horizontal_algebra if parity == "horizontal"
                  else vertical_algebra)
    out = []
    for comp in comps:
        rep = graph.nodes[comp[0]]
        alg = algebra_fn(configuration_of_state(rep))
        out.append({"size": len(comp), "states": list(comp),
                    "algebra": alg.to_json()})
    return {"count": len(comps), "components": out}


def _cmd_fans(args, parser):
    ctx = _context(args, parser)
    cap = _resolve_int(args.node_cap, "MCF_NODE_CAP", None, parser)
    graph = exchange_graph(ctx, node_cap=cap)
    payload = {"quiver": args.quiver, "m": args.m}
    parities = [args.parity] if args.parity else ["horizontal", "vertical"]
    for parity in parities:
        payload[parity] = _one_parity(graph, parity)
    _emit(payload)
    return 0


def _cmd_walls(args, parser):
    try:
        q = preset(args.quiver)
    except ValueError as exc:
        parser.error(str(exc))
    walls = [wall_of(r) for r in indecomposables(q).reps]
    _emit({"quiver": args.quiver, "count": len(walls),
           "walls": [w.to_json() for w in walls]})
    return 0


def _cmd_render(args, parser):
    try:
        q = preset(args.quiver)
    except ValueError as exc:
        parser.error(str(exc))
    samples = _resolve_int(args.samples, "MCF_SAMPLES", DEFAULT_SAMPLES, parser)
    pole = _parse_pole(args.pole, parser)
    walls = [wall_of(r) for r in indecomposables(q).reps]
    options = {"samples": samples, "pole": pole}
    if args.format == "stats":
        _emit(scene_stats(build_scene(walls, options)))
        return 0
    if args.out is None:
        parser.error("render needs --out for SVG output (or --format stats)")
    svg = render_picture(walls, options)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    log.info("wrote %s (%d bytes)", args.out, len(svg))
    return 0


def _cmd_dilog(args, parser):
    ctx = _context(args, parser)
    result = enumerate_mgs(ctx, args.depth_cap)
    if not result.records:
        parser.error("no green sequences found within the depth cap")
    report = dt_invariant_check(ctx, result.records, args.truncate)
    payload = {
        "quiver": args.quiver, "m": args.m, "truncation": args.truncate,
        "count": len(result.records), "ok": report.ok,
        "mismatches": list(report.mismatches),
    }
    if report.ok:
        payload["series"] = report.series.to_json()
    _emit(payload)
    return 0 if report.ok else 1


def _cmd_verify(args, parser):
    rows, all_ok = run_verification()
    sys.stdout.write(format_report(rows) + "\n")
    return 0 if all_ok else 1


# --- parser -----------------------------------------------------------------

def _add_quiver_m(sub, default_m=1):
    sub.add_argument("--quiver", required=True,
                     help="preset name: a2, a3, a2tilde, a_n:<orientation>")
    sub.add_argument("--m", type=int, default=default_m,
                     help=f"slope ceiling (default {default_m})")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcfans",
        description="Slope-graded mutation, green sequences, stability fans "
                    "and dilogarithm identities in exact arithmetic.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("enumerate", help="exchange graph of a quiver/level")
    _add_quiver_m(p)
    p.add_argument("--node-cap", type=int, help="abort past this many states")
    p.set_defaults(fn=_cmd_enumerate)

    p = subs.add_parser("mgs", help="maximal green sequences")
    _add_quiver_m(p)
    p.add_argument("--depth-cap", type=int, help="search depth bound")
    p.add_argument("--longest", action="store_true",
                   help="emit only the longest sequence length")
    p.add_argument("--node-cap", type=int, help="abort past this many states")
    p.set_defaults(fn=_cmd_mgs)

    p = subs.add_parser("fans", help="fan components with their algebras")
    _add_quiver_m(p)
    p.add_argument("--parity", choices=("horizontal", "vertical"),
                   help="restrict to one parity (default: both)")
    p.add_argument("--node-cap", type=int, help="abort past this many states")
    p.set_defaults(fn=_cmd_fans)

    p = subs.add_parser("walls", help="brick walls of a quiver")
    p.add_argument("--quiver", required=True,
                   help="preset name: a2, a3, a_n:<orientation>")
    p.set_defaults(fn=_cmd_walls)

    p = subs.add_parser("render", help="SVG picture of the brick walls")
    p.add_argument("--quiver", required=True,
                   help="preset name with 2 or 3 vertices")
    p.add_argument("--out", help="SVG output path")
    p.add_argument("--pole", help="projection pole, e.g. 3/13,4/13,12/13")
    p.add_argument("--samples", type=int,
                   help=f"great-circle samples (default {DEFAULT_SAMPLES})")
    p.add_argument("--format", choices=("svg", "stats"), default="svg",
                   help="svg writes --out; stats prints scene counts")
    p.set_defaults(fn=_cmd_render)

    p = subs.add_parser("dilog", help="wall-crossing series product report")
    _add_quiver_m(p)
    p.add_argument("--truncate", type=int, default=8,
                   help="series truncation order (default 8)")
    p.add_argument("--depth-cap", type=int, default=10,
                   help="green-sequence search bound (default 10)")
    p.set_defaults(fn=_cmd_dilog)

    p = subs.add_parser("verify", help="run the full acceptance battery")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, parser)
    except McfError as exc:
        sys.stderr.write(f"mcfans: {type(exc).__name__}: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"mcfans: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
