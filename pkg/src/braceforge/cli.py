"""Command line front end: validation, reports, series, solutions,
enumeration, and the law harness over JSON table files.

Exit codes: 0 success / all laws pass, 1 validation or law failure (also
bad files), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .brace import SkewBrace, classify
from .constructions import (
    HARD_ENUMERATION_CAP,
    brace_from_cocycle,
    enumerate_braces,
    z_window_check,
)
from .errors import BraceForgeError
from .groups import FiniteGroup, nilpotency_analysis
from .io import (
    brace_payload,
    detect_kind,
    load_any,
    load_brace,
    load_cocycle,
    load_payload,
    save_payload,
    solution_payload,
)
from .laws import run_laws, standard_corpus
from .series import (
    left_series,
    nilpotency_report,
    right_series,
    socle_series_and_mpl,
    strong_series,
)
from .substructure import fix, ker_lambda, socle
from .ybe import Solution, orbits, restrict_solution, solution_from_brace, validate_solution

DEFAULT_CAP = 8


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _type_word(A: SkewBrace) -> str:
    if A.add.is_abelian:
        return "abelian"
    if nilpotency_analysis(A.add).nilpotent:
        return "nilpotent"
    return "non-nilpotent"


def _brace_line(A: SkewBrace) -> str:
    return f"valid skew left brace, order {A.order}, {_type_word(A)} type"


def _signature(A: SkewBrace) -> dict:
    """Isomorphism-invariant fingerprint used in enumeration manifests."""
    cls = classify(A)
    return {
        "order": A.order,
        "add_orders": sorted(A.add.element_orders),
        "circle_orders": sorted(A.circle.element_orders),
        "trivial": cls.trivial,
        "abelian_type": cls.abelian_type,
        "nilpotent_type": cls.nilpotent_type,
        "two_sided": cls.two_sided,
        "socle_size": len(socle(A)),
        "fix_size": len(fix(A)),
        "ker_lambda_size": len(ker_lambda(A)),
        "star_zero_pairs": int((A.star == 0).sum()),
    }


# ---------------------------------------------------------------- commands


def _cmd_validate(args) -> int:
    kind, obj = load_any(args.file)
    if kind == "cocycle":
        obj = brace_from_cocycle(obj)
        kind = "brace"
    if kind == "brace":
        _emit(args, {"valid": True, "kind": "brace", "order": obj.order,
                     "type": _type_word(obj)}, [_brace_line(obj)])
        return 0
    if kind == "group":
        word = "abelian" if obj.is_abelian else "non-abelian"
        _emit(args, {"valid": True, "kind": "group", "order": obj.order,
                     "abelian": obj.is_abelian}, [f"valid group, order {obj.order}, {word}"])
        return 0
    rep = validate_solution(obj)
    payload = {"valid": rep.valid, "kind": "solution", "size": obj.size,
               "ybe": rep.ybe, "nondegenerate": rep.nondegenerate,
               "involutive": rep.involutive}
    word = "involutive" if rep.involutive else "non-involutive"
    if rep.valid:
        _emit(args, payload, [f"valid solution, size {obj.size}, nondegenerate, {word}"])
        return 0
    _emit(args, payload, [f"invalid solution: ybe={rep.ybe} "
                          f"(witness {rep.braid_witness}), "
                          f"nondegenerate={rep.nondegenerate} "
                          f"(witness {rep.degenerate_witness})"])
    return 1


def _cmd_info(args) -> int:
    A = load_brace(args.file)
    cls = classify(A)
    soc, fx, ker = socle(A), fix(A), ker_lambda(A)
    nilp = nilpotency_report(A)
    srep = socle_series_and_mpl(A)
    payload = {
        "order": A.order,
        "trivial": cls.trivial,
        "abelian_type": cls.abelian_type,
        "nilpotent_type": cls.nilpotent_type,
        "two_sided": cls.two_sided,
        "socle": list(soc.members),
        "fix": list(fx.members),
        "ker_lambda": list(ker.members),
        "left_nilpotent": nilp.left,
        "right_nilpotent": nilp.right,
        "strongly_nilpotent": nilp.strong,
        "mpl": srep.mpl,
        "stall_index": srep.stall_index,
        "mpl_convention": srep.convention,
    }

    def yn(v: bool) -> str:
        return "yes" if v else "no"

    mpl_line = (
        f"mpl: {srep.mpl}" if srep.mpl is not None
        else f"mpl: none (socle series stalls at index {srep.stall_index})"
    )
    lines = [
        f"order {A.order}",
        f"trivial: {yn(cls.trivial)}   abelian type: {yn(cls.abelian_type)}   "
        f"nilpotent type: {yn(cls.nilpotent_type)}   two-sided: {yn(cls.two_sided)}",
        f"socle size {len(soc)}, fix size {len(fx)}, ker lambda size {len(ker)}",
        f"left nilpotent: {yn(nilp.left)}   right nilpotent: {yn(nilp.right)}   "
        f"strongly nilpotent: {yn(nilp.strong)}",
        mpl_line,
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_series(args) -> int:
    A = load_brace(args.file)
    if args.kind == "socle":
        rep = socle_series_and_mpl(A)
        sizes = [len(t) for t in rep.terms]
        payload = {
            "kind": "socle",
            "sizes": sizes,
            "terms": [list(t.members) for t in rep.terms],
            "has_s_series": rep.has_s_series,
            "mpl": rep.mpl,
            "stall_index": rep.stall_index,
            "convention": rep.convention,
        }
        mpl_line = (
            f"mpl: {rep.mpl}" if rep.mpl is not None
            else f"mpl: none (stalls at index {rep.stall_index})"
        )
        _emit(args, payload, [
            "term sizes " + ",".join(str(s) for s in sizes), mpl_line,
        ])
        return 0
    series = {"left": left_series, "right": right_series, "strong": strong_series}
    rep = series[args.kind](A)
    sizes = [len(t) for t in rep.terms]
    payload = {
        "kind": rep.kind,
        "sizes": sizes,
        "terms": [list(t.members) for t in rep.terms],
        "stabilized": rep.stabilized,
        "reaches_zero": rep.reaches_zero,
        "length": rep.length,
    }
    _emit(args, payload, [
        "term sizes " + ",".join(str(s) for s in sizes),
        f"reaches zero: {'yes' if rep.reaches_zero else 'no'}",
    ])
    return 0


def _load_solution_like(path: str) -> Solution:
    kind, obj = load_any(path)
    if kind == "brace":
        return solution_from_brace(obj)
    if kind == "solution":
        return obj
    raise BraceForgeError(f"{path}: expected a brace or solution file, got {kind}")


def _cmd_ybe(args) -> int:
    s = _load_solution_like(args.file)
    rep = validate_solution(s)
    payload = solution_payload(s)
    payload["report"] = {
        "ybe": rep.ybe,
        "nondegenerate": rep.nondegenerate,
        "involutive": rep.involutive,
        "braid_witness": rep.braid_witness,
        "degenerate_witness": rep.degenerate_witness,
    }
    lines = [
        f"size {s.size}",
        f"ybe: {'yes' if rep.ybe else 'no'}",
        f"nondegenerate: {'yes' if rep.nondegenerate else 'no'}",
        f"involutive: {'yes' if rep.involutive else 'no'}",
    ]
    if not rep.ybe:
        lines.append(f"braid relation fails at {rep.braid_witness}")
    if not rep.nondegenerate:
        lines.append(f"degenerate map: {rep.degenerate_witness}")
    _emit(args, payload, lines)
    return 0 if rep.valid else 1


def _cmd_orbits(args) -> int:
    s = _load_solution_like(args.file)
    orbs = orbits(s)
    payload = {"orbits": [list(o) for o in orbs], "indecomposable": len(orbs) == 1}
    word = "indecomposable" if len(orbs) == 1 else "decomposable"
    lines = [
        "orbits: " + "  ".join("{" + ",".join(map(str, o)) + "}" for o in orbs),
        word,
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_restrict(args) -> int:
    s = _load_solution_like(args.file)
    try:
        subset = [int(v) for v in args.subset.split(",") if v.strip() != ""]
    except ValueError:
        print(f"--subset must be a comma list of integers, got {args.subset!r}",
              file=sys.stderr)
        return 2
    r = restrict_solution(s, subset)
    rep = validate_solution(r)
    payload = solution_payload(r)
    payload["valid"] = rep.valid
    _emit(args, payload, [
        f"restriction to {sorted(set(subset))}: size {r.size}, "
        f"{'valid' if rep.valid else 'INVALID'}",
    ])
    return 0 if rep.valid else 1


def _enumeration_cap(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get("BRACEFORGE_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        parser.error(f"BRACEFORGE_CAP must be an integer, got {raw!r}")
    if cap < 1:
        parser.error(f"BRACEFORGE_CAP must be positive, got {cap}")
    return min(cap, HARD_ENUMERATION_CAP)


def _cmd_enumerate(args, parser) -> int:
    cap = _enumeration_cap(parser)
    additive = None
    if args.additive is not None:
        kind, obj = load_any(args.additive)
        if kind != "group":
            raise BraceForgeError(f"{args.additive}: --additive wants a group file")
        additive = obj
    braces = enumerate_braces(args.order, additive=additive, cap=cap)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    entries = []
    for i, A in enumerate(braces):
        entry = {"seq": i, "signature": _signature(A)}
        if args.out:
            name = f"brace_{args.order}_{i}.json"
            save_payload(os.path.join(args.out, name), brace_payload(A))
            entry["file"] = name
        else:
            entry["brace"] = brace_payload(A)
        entries.append(entry)
    manifest = {"order": args.order, "count": len(braces), "braces": entries}
    if args.out:
        save_payload(os.path.join(args.out, "manifest.json"), manifest)
    lines = [f"{len(braces)} brace(s) of order {args.order}"]
    if args.out:
        lines.append(f"wrote brace files and manifest.json to {args.out}")
    else:
        for i, A in enumerate(braces):
            lines.append(f"#{i}: {_brace_line(A)}")
    _emit(args, manifest, lines)
    return 0


def _cmd_cocycle(args) -> int:
    datum = load_cocycle(args.file)
    A = brace_from_cocycle(datum)
    _emit(args, brace_payload(A), [_brace_line(A)])
    return 0


def _cmd_window(args) -> int:
    rep = z_window_check(args.kind, args.n)
    payload = {
        "kind": rep.kind,
        "window": rep.window,
        "triples_checked": rep.triples_checked,
        "failures": [list(f) for f in rep.failures],
        "ok": rep.ok,
    }
    lines = [
        f"{rep.kind}: window {rep.window}, {rep.triples_checked} triples checked, "
        f"{len(rep.failures)} failure(s)",
    ]
    for f in rep.failures:
        lines.append(f"  {f}")
    _emit(args, payload, lines)
    return 0 if rep.ok else 1


def _parse_orders(spec: str, parser) -> list[int]:
    try:
        if ".." in spec:
            lo, hi = spec.split("..")
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(v) for v in spec.split(",")]
    except ValueError:
        parser.error(f"--orders wants N, N..M, or a comma list, got {spec!r}")
    if not out or min(out) < 1:
        parser.error(f"--orders values must be positive, got {spec!r}")
    return out


def _cmd_laws(args, parser) -> int:
    cap = _enumeration_cap(parser)
    labeled = []
    desc = []
    if args.dir is not None:
        names = sorted(
            f for f in os.listdir(args.dir)
            if f.endswith(".json") and f != "manifest.json"
        )
        if not names:
            raise BraceForgeError(f"{args.dir}: no .json brace files found")
        for name in names:
            labeled.append((name, load_brace(os.path.join(args.dir, name))))
        desc.append(f"directory {args.dir} ({len(names)} files)")
    else:
        orders = _parse_orders(args.orders, parser)
        labeled = standard_corpus(orders, cap=max([cap] + orders))
        desc.append(f"enumerated orders {args.orders} ({len(labeled)} braces)")
    rep = run_laws(labeled, corpus="; ".join(desc), scan_questions=args.scan_questions)
    if args.json:
        print(json.dumps(rep.to_payload()))
    else:
        print(f"corpus: {rep.corpus}")
        for r in rep.results:
            mark = "ok  " if r.ok else "FAIL"
            print(f"{mark} {r.name:45s} checked {r.checked:4d} "
                  f"passed {r.passed:4d} skipped {r.skipped:4d}")
            for f in r.failures:
                detail = {k: v for k, v in f.items() if k != "brace"}
                print(f"      witness: {detail}")
        for line in rep.notes:
            print(f"note: {line}")
        for line in rep.questions:
            print(f"question: {line}")
        print("all laws pass" if rep.ok else "LAW FAILURES PRESENT")
    return 0 if rep.ok else 1


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braceforge",
        description="skew brace construction, verification, and Yang-Baxter tools",
    )
    parser.add_argument("--json", action="store_true",
                        help="machine-readable JSON on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a brace/group/solution/cocycle file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("info", help="classification and structure report for a brace")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("series", help="left/right/strong/socle series of a brace")
    p.add_argument("--kind", required=True, choices=["left", "right", "strong", "socle"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("ybe", help="derive (from a brace) or check a solution")
    p.add_argument("file")
    p.set_defaults(func=_cmd_ybe)

    p = sub.add_parser("orbits", help="orbit decomposition of a solution")
    p.add_argument("file")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("restrict", help="restrict a solution to an invariant subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True, help="comma list, e.g. 0,3")
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("enumerate", help="all braces of one order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--additive", help="group file: fix the additive group")
    p.add_argument("--out", help="directory for brace files plus manifest.json")
    p.set_defaults(func=_cmd_enumerate, needs_parser=True)

    p = sub.add_parser("cocycle", help="build a brace from a bijective 1-cocycle file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_cocycle)

    p = sub.add_parser("window", help="exact checks of brace structures on Z")
    p.add_argument("--kind", required=True, choices=["rump", "rump_cyclic", "dihedral", "dihedral_Z"])
    p.add_argument("--n", type=int, required=True, help="window radius")
    p.set_defaults(func=_cmd_window)

    p = sub.add_parser("laws", help="run every law suite over a corpus")
    p.add_argument("--orders", default="1..6", help="N, N..M, or comma list")
    p.add_argument("--dir", help="directory of brace files instead of enumeration")
    p.add_argument("--scan-questions", action="store_true",
                   help="also report open-question candidate counterexamples")
    p.set_defaults(func=_cmd_laws, needs_parser=True)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if getattr(args, "needs_parser", False):
            return args.func(args, parser)
        return args.func(args)
    except SystemExit as e:  # parser.error inside a command
        return int(e.code or 0)
    except BraceForgeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
