"""Command line interface: ``homhom <subcommand> ...``.

Exit status is 0 on success, 1 when a yes/no subcommand answers "no"
(``check`` on a graph that is not HH, ``witness`` on an HH graph) and 2 on
any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import caps as _caps
from .census import PREDICATES, CliConfig, run_census
from .classifier import classify_ph_finite, describe, label_to_dict
from .configurations import graph_from_name
from .errors import HomhomError
from .graph import blowup, direct_power
from .homogeneity import compute_core, core_vertices, find_witness, is_ph_up_to
from .localorder import decode, encode
from .ogr import format_ogr, read_ogr

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _check(args) -> int:
    g = read_ogr(args.file)
    caps = _caps.current_caps()
    w = find_witness(g, caps.general)
    hh = w is None
    # a finite graph that is not HH cannot have HH powers (it is a retract of each)
    ph = hh and is_ph_up_to(g, args.ph_n, caps.power)
    core = core_vertices(g, caps.general)
    doc = {
        "order": g.order,
        "arcs": len(g.arcs),
        "hh": hh,
        "witness": None if hh else w.to_dict(),
        "ph_up_to": {"n": args.ph_n, "holds": ph},
        "core_order": len(core),
        "core_vertices": list(core),
    }
    label = classify_ph_finite(g, caps.general) if args.explain else None
    if label is not None:
        doc["label"] = label_to_dict(label)
        doc["explanation"] = describe(label)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"graph: {g.order} vertices, {len(g.arcs)} arcs")
        print(f"HH: {'yes' if hh else 'no'}")
        if not hh:
            print(f"witness: A={list(w.A)} B={list(w.B)} h={w.h.as_dict()} v={w.v}")
        print(f"PH up to power {args.ph_n}: {'yes' if ph else 'no'}")
        print(f"core order: {len(core)} (vertices {list(core)})")
        if label is not None:
            print(f"label: {doc['explanation']}")
    return EXIT_OK if hh else EXIT_NO


def _census(args) -> int:
    preds = tuple(p.strip() for p in args.predicates.split(",") if p.strip())
    cfg = CliConfig(nmax=args.nmax, predicates=preds, out=Path(args.out) if args.out else None,
                    format=args.format, workers=args.workers)
    report = run_census(cfg)
    if cfg.out is None:
        sys.stdout.write(report.render(cfg.format))
    return EXIT_OK


def _power(args) -> int:
    g = read_ogr(args.file)
    sys.stdout.write(format_ogr(direct_power(g, args.n), f"power {args.n} of {args.file}"))
    return EXIT_OK


def _blowup(args) -> int:
    g = read_ogr(args.file)
    try:
        m = [int(x) for x in args.multiplicities.split(",")]
    except ValueError:
        raise ValueError(f"bad multiplicity list {args.multiplicities!r}") from None
    sys.stdout.write(format_ogr(blowup(g, m)))
    return EXIT_OK


def _core(args) -> int:
    g = read_ogr(args.file)
    sys.stdout.write(format_ogr(compute_core(g), f"core of {args.file}"))
    return EXIT_OK


def _witness(args) -> int:
    w = find_witness(read_ogr(args.file))
    if w is None:
        print("no witness: the graph is homomorphism homogeneous")
        return EXIT_NO
    print(json.dumps(w.to_dict()) if args.json else f"A={list(w.A)} B={list(w.B)} h={w.h.as_dict()} v={w.v}")
    return EXIT_OK


def _encode(args) -> int:
    print(encode(read_ogr(args.file)))
    return EXIT_OK


def _decode(args) -> int:
    sys.stdout.write(format_ogr(decode(args.word)))
    return EXIT_OK


def _config(args) -> int:
    sys.stdout.write(format_ogr(graph_from_name(args.name), args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homhom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"homhom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="HH verdict, witness, bounded PH check and core order")
    p.add_argument("file")
    p.add_argument("--explain", action="store_true", help="add the classifier label and certificate")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ph-n", type=int, default=2, help="largest power checked (default 2)")
    p.set_defaults(func=_check)

    p = sub.add_parser("census", help="tabulate predicates over all graphs up to nmax vertices")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--predicates", default="hh", help=f"comma separated subset of {','.join(PREDICATES)}")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_census)

    p = sub.add_parser("power", help="direct power as .ogr")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.set_defaults(func=_power)

    p = sub.add_parser("blowup", help="blow-up with the given multiplicities")
    p.add_argument("file")
    p.add_argument("multiplicities", help="comma separated, one per vertex")
    p.set_defaults(func=_blowup)

    p = sub.add_parser("core", help="core as .ogr")
    p.add_argument("file")
    p.set_defaults(func=_core)

    p = sub.add_parser("witness", help="first witness against HH")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_witness)

    p = sub.add_parser("encode", help="word or sigma word of a local order or its blow-up")
    p.add_argument("file")
    p.set_defaults(func=_encode)

    p = sub.add_parser("decode", help="graph of a word or sigma word")
    p.add_argument("word", help="e.g. 0101 or '0:1 1:2'")
    p.set_defaults(func=_decode)

    p = sub.add_parser("config", help="named configuration or family member")
    p.add_argument("name", help="P2, L1, ..., X5, C3, An:k, Bn:k, S:m, Ln:k or I:k")
    p.set_defaults(func=_config)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HomhomError, ValueError, OSError) as exc:
        print(f"homhom: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
