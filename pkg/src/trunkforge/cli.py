"""``trunkforge`` command-line interface.

Exit codes: 0 success, 1 a reproduce-paper check failed, 2 input error,
3 multi-component input without ``--allow-links``, 4 search/orbit budget
cap hit (with ``--strict`` for ``search``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import default_catalog
from .compose import stack
from .errors import (
    CatalogError,
    FrontierCapError,
    InvalidDecompositionError,
    InvalidProfileError,
    LinkRejectedError,
    TrunkforgeError,
    WordSyntaxError,
    WordValidationError,
)
from .invariants import (
    ThickThinDecomposition,
    bridge_direct,
    bridge_ss,
    expand,
    report,
    report_from_profile,
    width_direct,
    width_ss,
)
from .morse import MorseWord, WidthProfile, parse_word, realize_profile
from .moves import format_trace, perturb
from .render import render_ascii, render_svg
from .search import Objective, SearchConfig, Strategy, orbit_min, search

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_LINK = 3
EXIT_BUDGET = 4


class InputError(TrunkforgeError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _csv(xs) -> str:
    return ",".join(map(str, xs))


def emit(doc: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return
    for key, value in doc.items():
        if isinstance(value, (list, tuple)):
            value = _csv(value)
        out.write(f"{key}={value}\n")


def _report_doc(r) -> dict:
    d = r.as_dict()
    return {k: d[k] for k in ("width", "bridge", "trunk", "thick", "thin", "profile")}


def resolve_knot(spec: str) -> MorseWord:
    """A catalog name with a stored word, or else an inline word."""
    cat = default_catalog()
    if spec in cat:
        entry = cat.get(spec)
        if entry.word is None:
            raise InputError(f"catalog entry {spec!r} has no Morse word (level data or facts only)")
        return entry.word
    return parse_word(spec)


def _add_knot_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("-w", "--word", help="inline Morse word, e.g. 'u1 u2 n1 n1'")
    g.add_argument("-c", "--catalog", metavar="NAME", help="catalog entry name")
    g.add_argument("-f", "--file", metavar="PATH", help="file holding a Morse word ('-' for stdin)")
    p.add_argument("--allow-links", action="store_true", help="accept multi-component words")


def _read_knot(args) -> MorseWord:
    if args.word is not None:
        word = parse_word(args.word)
    elif args.catalog is not None:
        entry = default_catalog().get(args.catalog)
        if entry.word is None:
            raise InputError(f"catalog entry {args.catalog!r} has no Morse word")
        word = entry.word
    else:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
        word = parse_word(text)
    if not getattr(args, "allow_links", False) and word.components != 1:
        raise LinkRejectedError(word.components)
    return word


def _decomposition(args) -> ThickThinDecomposition | None:
    if args.thick is None and args.thin is None:
        return None
    if args.thick is None:
        raise InputError("--thin needs --thick")
    return ThickThinDecomposition(args.thick, args.thin or ())


def cmd_invariants(args) -> int:
    d = _decomposition(args)
    if d is not None:
        r = report_from_profile(expand(d))
    elif args.profile is not None:
        r = report_from_profile(WidthProfile(args.profile))
    elif args.catalog is not None and default_catalog().get(args.catalog).word is None:
        entry = default_catalog().get(args.catalog)
        if entry.decomposition is None:
            raise InputError(f"catalog entry {args.catalog!r} records facts only")
        r = report_from_profile(expand(entry.decomposition))
    else:
        if args.word is None and args.catalog is None and args.file is None:
            raise InputError("give a knot (-w/-c/-f), --thick/--thin, or --profile")
        word = _read_knot(args)
        r = report(word, allow_links=args.allow_links)
    emit(_report_doc(r), args.format)
    return EXIT_OK


def cmd_stack(args) -> int:
    k1, k2 = resolve_knot(args.bottom), resolve_knot(args.top)
    word = stack(k1, k2)
    emit({"word": str(word), **_report_doc(report(word))}, args.format)
    return EXIT_OK


def cmd_expand(args) -> int:
    d = ThickThinDecomposition(args.thick, args.thin or ())
    prof = expand(d)
    emit(
        {"profile": list(prof), "width": width_direct(prof), "bridge": bridge_direct(prof)},
        args.format,
    )
    return EXIT_OK


def cmd_realize(args) -> int:
    if args.profile is not None:
        prof = WidthProfile(args.profile)
    else:
        if args.thick is None:
            raise InputError("give --profile or --thick/--thin")
        prof = expand(ThickThinDecomposition(args.thick, args.thin or ()))
    word = realize_profile(prof)
    emit({"word": str(word), **_report_doc(report(word))}, args.format)
    return EXIT_OK


def cmd_search(args) -> int:
    word = _read_knot(args)
    config = SearchConfig(
        objective=args.objective,
        strategy=args.strategy,
        depth=args.depth,
        max_steps=args.max_steps,
        steps=args.steps,
        t_start=args.t_start,
        t_end=args.t_end,
        seed=args.seed,
        allow_inserts=args.allow_inserts,
        max_frontier=args.max_frontier,
    )
    start = word
    if args.perturb:
        start, _ = perturb(word, args.perturb, random.Random(args.seed))
    result = search(start, config)
    if args.trace:
        Path(args.trace).write_text(format_trace(result.trace))
    doc = {
        "start_word": str(start),
        "start_width": result.start_report.width,
        "start_bridge": result.start_report.bridge,
        "start_trunk": result.start_report.trunk,
        "word": str(result.best),
        **_report_doc(result.report),
        "moves": len(result.trace),
        "exhausted": str(result.exhausted).lower(),
    }
    if args.format == "json":
        doc["exhausted"] = result.exhausted
        doc["trace"] = [str(m) for m in result.trace]
    emit(doc, args.format)
    if args.strict and result.exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_orbit_min(args) -> int:
    word = _read_knot(args)
    try:
        value = orbit_min(word, args.depth, args.objective, max_frontier=args.max_frontier)
    except FrontierCapError as exc:
        print(f"trunkforge: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    emit({"objective": args.objective, "depth": args.depth, "orbit_min": value}, args.format)
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = default_catalog()
    if not args.name:
        for entry in cat:
            sys.stdout.write(entry.name + "\n")
        return EXIT_OK
    entry = cat.get(args.name)
    doc: dict = {"name": entry.name}
    if entry.word is not None:
        doc["word"] = str(entry.word)
    if entry.decomposition is not None:
        doc["thick"] = list(entry.decomposition.thick)
        doc["thin"] = list(entry.decomposition.thin)
    for f in entry.facts:
        doc[f"fact_{f.invariant}"] = f.value
    for key, value in entry.computed().items():
        doc[f"computed_{key}"] = value
    if entry.notes:
        doc["notes"] = entry.notes
    emit(doc, args.format)
    return EXIT_OK


def cmd_render(args) -> int:
    word = _read_knot(args)
    text = render_svg(word) if args.format == "svg" else render_ascii(word)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def reproduction_checks() -> list[tuple[str, str, str, bool]]:
    """(label, expected, got, ok) rows covering the stacking example and the template table."""
    cat = default_catalog()
    rows = []

    def check(label, expected, got):
        rows.append((label, str(expected), str(got), expected == got))

    for name, bwt in (("4_1", (2, 8, 4)), ("8_5", (3, 18, 6))):
        r = report(cat.get(name).word)
        check(f"{name} (b,w,tr)", bwt, (r.bridge, r.width, r.trunk))
    s = report(stack(cat.get("4_1").word, cat.get("8_5").word))
    check("stack(4_1,8_5) (b,w,tr)", (4, 24, 6), (s.bridge, s.width, s.trunk))

    table = {
        "k_2_1_3_7": (16, 206, 13),
        "k'_2_1_3_7": (14, 208, 12),
        "k_4_1_3_3": (12, 222, 15),
        "k'_4_1_3_3": (14, 216, 14),
    }
    for name, trwb in table.items():
        d = cat.get(name).decomposition
        check(f"{name} (tr,w,b) levels formula", trwb, (max(d.thick), width_ss(d), bridge_ss(d)))
        prof = expand(d)
        check(
            f"{name} (tr,w,b) expanded profile",
            trwb,
            (max(prof), width_direct(prof), bridge_direct(prof)),
        )
    return rows


def cmd_reproduce_paper(args) -> int:
    t0 = time.perf_counter()
    rows = reproduction_checks()
    if args.format == "json":
        doc = {
            "checks": [
                {"check": label, "expected": exp, "got": got, "pass": ok} for label, exp, got, ok in rows
            ],
            "all_pass": all(r[3] for r in rows),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        width = max(len(r[0]) for r in rows)
        for label, exp, got, ok in rows:
            print(f"{'PASS' if ok else 'FAIL'}  {label.ljust(width)}  expected {exp}  got {got}")
        print(f"{sum(r[3] for r in rows)}/{len(rows)} passed in {time.perf_counter() - t0:.3f}s")
    return EXIT_OK if all(r[3] for r in rows) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trunkforge",
        description="Width, bridge number and trunk of knot embeddings given as Morse words.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json"), default="text"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("invariants", help="width, bridge number, trunk and thick/thin levels")
    _add_knot_input(p, required=False)
    p.add_argument("--thick", type=_int_list, help="thick level widths, e.g. 8,16,16,8")
    p.add_argument("--thin", type=_int_list, help="thin level widths, e.g. 4,14,4")
    p.add_argument("--profile", type=_int_list, help="level widths, e.g. 2,4,2")
    fmt(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("stack", help="stack TOP on BOTTOM (connected sum)")
    p.add_argument("bottom", help="catalog name or inline word")
    p.add_argument("top", help="catalog name or inline word")
    fmt(p)
    p.set_defaults(func=cmd_stack)

    p = sub.add_parser("expand", help="level widths from thick/thin widths")
    p.add_argument("--thick", type=_int_list, required=True)
    p.add_argument("--thin", type=_int_list, default=())
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("realize", help="crossing-free unknot word with given level widths")
    p.add_argument("--profile", type=_int_list)
    p.add_argument("--thick", type=_int_list)
    p.add_argument("--thin", type=_int_list, default=())
    fmt(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("search", help="heuristic minimisation over rewriting moves")
    _add_knot_input(p)
    p.add_argument("--objective", choices=[o.value for o in Objective], default="width")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="greedy")
    p.add_argument("--depth", type=int, default=4, help="bfs depth")
    p.add_argument("--max-steps", type=int, default=1000, help="greedy step budget")
    p.add_argument("--steps", type=int, default=2000, help="annealing step budget")
    p.add_argument("--t-start", type=float, default=2.0)
    p.add_argument("--t-end", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-inserts", action="store_true", default=None,
                   help="let bfs/greedy use insert moves (annealing always may)")
    p.add_argument("--max-frontier", type=int, default=200_000)
    p.add_argument("--perturb", type=int, default=0, metavar="N",
                   help="apply N seeded random insert moves before searching")
    p.add_argument("--trace", metavar="PATH", help="write the move trace here")
    p.add_argument("--strict", action="store_true", help="exit 4 if a budget cap was hit")
    fmt(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("orbit-min", help="exact minimum over a bounded move orbit")
    _add_knot_input(p)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--objective", choices=[o.value for o in Objective], default="trunk")
    p.add_argument("--max-frontier", type=int, default=200_000)
    fmt(p)
    p.set_defaults(func=cmd_orbit_min)

    p = sub.add_parser("catalog", help="list catalog entries or show one")
    p.add_argument("name", nargs="?")
    fmt(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("render", help="draw a word as ASCII or SVG")
    _add_knot_input(p)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("reproduce-paper", help="recompute the published example values")
    fmt(p)
    p.set_defaults(func=cmd_reproduce_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LinkRejectedError as exc:
        print(f"trunkforge: {exc}", file=sys.stderr)
        return EXIT_LINK
    except WordValidationError as exc:
        print(f"trunkforge: invalid word: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (
        WordSyntaxError,
        InvalidProfileError,
        InvalidDecompositionError,
        CatalogError,
        InputError,
        OSError,
        ValueError,
    ) as exc:
        print(f"trunkforge: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
