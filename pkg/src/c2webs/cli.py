"""Command line interface.

Verbs:

    homdim W U              intertwiner space dimension
    enumerate WORD          dominant subsequences, multiplicities, #S
    lightladder WORD --seq  one light ladder, as slices and optionally matrix
    doubleladders W U       the full double ladder list
    eval                    evaluate a diagram given as text or JSON
    check-relations         verify the defining relations
    triangularity WORD      triangularity + upside-down expansion checks
    basis-check [W U]       rank/independence of evaluated double ladders
    cellularity W U         random re-expansion and composition closure
    selftest                the whole battery at desk scale

Exit status: 0 all good, 1 a check failed (witnesses printed), 2 bad usage.
Fields: --field Qq (symbolic, default), QQ (--q rational), Fp (--p, --q).
WEBS_SEED sets the default seed for randomised checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import ladders, reps, webs, weights
from .ring import InvalidSpecialization, field_from_args


class UsageError(Exception):
    pass


def _field_of(args):
    name = getattr(args, "field", "Qq")
    p = getattr(args, "p", None)
    q = getattr(args, "q", None)
    if q is not None and name == "Fp":
        q = int(q)
    try:
        return field_from_args(name, p, q)
    except InvalidSpecialization as exc:
        raise UsageError(str(exc)) from exc


def _maybe_fraction(text):
    from fractions import Fraction

    return Fraction(text)


def parse_seq(text):
    """Parse "1,0;-1,1" into ((1, 0), (-1, 1))."""
    out = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        a, _, b = part.partition(",")
        try:
            out.append((int(a), int(b)))
        except ValueError as exc:
            raise UsageError(f"bad weight {part!r}") from exc
    return tuple(out)


def parse_lambda(text):
    pair = parse_seq(text)
    if len(pair) != 1:
        raise UsageError(f"expected one weight, got {text!r}")
    return pair[0]


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        out = json.dumps(payload, indent=2, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    dest = getattr(args, "out", None)
    if dest:
        with open(dest, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def cmd_homdim(args):
    dim = weights.hom_dim(args.bottom, args.top)
    _emit(
        args,
        {"bottom": args.bottom, "top": args.top, "hom_dim": dim},
        [str(dim)],
    )
    return 0


def cmd_enumerate(args):
    word = args.word
    if args.lam is not None:
        lam = parse_lambda(args.lam)
        seqs = weights.enumerate_E_lambda(word, lam)
    else:
        seqs = weights.enumerate_E(word)
    mult = weights.weight_multiplicities(word)
    payload = {
        "word": word,
        "sequences": [weights.seq_to_jsonable(s) for s in seqs],
        "count": len(seqs),
        "weight_multiplicities": {
            weights.weight_to_str(k): v for k, v in sorted(mult.items())
        },
        "tensor_basis_size": weights.subsequence_space_size(word),
    }
    lines = [f"E({word}) has {len(seqs)} member(s):"]
    for s in seqs:
        lam = weights.word_weight(word, s)
        lines.append(
            "  " + " ".join(weights.weight_to_str(m) for m in s)
            + f"   -> {weights.weight_to_str(lam)}"
        )
    lines.append(f"#S({word}) = {weights.subsequence_space_size(word)}")
    _emit(args, payload, lines)
    return 0


def cmd_lightladder(args):
    seq = parse_seq(args.seq)
    try:
        d = ladders.light_ladder(args.word, seq)
    except ladders.NotADominantSubsequence as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "word": args.word,
        "seq": weights.seq_to_jsonable(seq),
        "diagram": d.to_jsonable(),
        "text": d.format_text(),
    }
    lines = [
        f"light ladder {args.word} -> {d.target}",
        d.format_text() or "(identity)",
    ]
    if args.matrix:
        m = webs.eval_diagram(d, _field_of(args) if args.field != "Qq"
                              else None)
        if isinstance(m, reps.LinMap):
            payload["matrix"] = m.to_jsonable()
            lines += [json.dumps(m.to_jsonable())]
        else:
            payload["matrix"] = {
                str(j): {str(i): str(c) for i, c in col.items()}
                for j, col in m.items()
            }
            lines += [json.dumps(payload["matrix"])]
    _emit(args, payload, lines)
    return 0


def cmd_doubleladders(args):
    dls = ladders.double_ladders(args.bottom, args.top)
    payload = {
        "bottom": args.bottom,
        "top": args.top,
        "count": len(dls),
        "hom_dim": weights.hom_dim(args.bottom, args.top),
        "ladders": [
            dict(dl.label(), text=dl.diagram.format_text()) for dl in dls
        ],
    }
    lines = [f"{len(dls)} double ladder(s) {args.bottom} -> {args.top}"]
    for dl in dls:
        lines.append(
            f"  lam={weights.weight_to_str(dl.lam)}"
            f" bottom={' '.join(map(weights.weight_to_str, dl.bottom_seq))}"
            f" top={' '.join(map(weights.weight_to_str, dl.top_seq))}"
        )
    _emit(args, payload, lines)
    return 0


def cmd_eval(args):
    if args.file:
        with open(args.file) as fh:
            data = json.load(fh)
        d = webs.Diagram.from_jsonable(data)
    elif args.diagram is not None:
        try:
            d = webs.Diagram.parse(args.diagram, args.source)
        except (webs.BoundaryMismatch, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("eval needs --diagram or --file")
    m = webs.eval_diagram(d)
    payload = {"diagram": d.to_jsonable()}
    if args.field == "Qq" and args.q is None:
        payload["matrix"] = m.to_jsonable()
        lines = [json.dumps(payload["matrix"], indent=2)]
    else:
        field = _field_of(args)
        cols = m.specialize(field)
        payload["field"] = field.describe()
        payload["matrix"] = {
            str(j): {str(i): str(c) for i, c in col.items()}
            for j, col in cols.items()
        }
        lines = [json.dumps(payload["matrix"], indent=2)]
    _emit(args, payload, lines)
    return 0


def _report_lines(report):
    lines = [f"{report['check']}: {'ok' if report['verdict'] else 'FAIL'}"]
    for w in report.get("witnesses", []):
        lines.append(f"  witness: {json.dumps(w, default=str)}")
    return lines


def cmd_check_relations(args):
    field = None if args.field == "Qq" and args.q is None else _field_of(args)
    report = webs.relation_suite(field)
    report["tetravalent_probe"] = webs.tetravalent_probe()
    lines = []
    for r in report["results"]:
        lines.append(f"{r['check']}: {'ok' if r['verdict'] else 'FAIL'}")
    lines += [f"relation suite: {'ok' if report['verdict'] else 'FAIL'}"]
    _emit(args, report, lines)
    return 0 if report["verdict"] else 1


def cmd_triangularity(args):
    field = None if args.field == "Qq" and args.q is None else _field_of(args)
    rep1 = ladders.triangularity_check(args.word, field)
    rep2 = ladders.upside_down_check(args.word)
    payload = {"triangularity": rep1, "upside_down": rep2}
    lines = _report_lines(rep1) + _report_lines(rep2)
    _emit(args, payload, lines)
    return 0 if rep1["verdict"] and rep2["verdict"] else 1


def _basis_task(task):
    w, u, fname, p, q = task
    field = field_from_args(fname, p, q)
    return ladders.basis_check(w, u, field)


def _all_words(max_len):
    out = []
    for n in range(max_len + 1):
        level = [""]
        for _ in range(n):
            level = [w + c for w in level for c in "12"]
        out += [w for w in level if len(w) == n]
    return out


def cmd_basis_check(args):
    field = _field_of(args)
    if args.bottom is not None and args.top is not None:
        reports = [ladders.basis_check(args.bottom, args.top, field)]
    elif args.max_len is not None:
        words = _all_words(args.max_len)
        pairs = [
            (w, u) for w in words for u in words
            if weights.hom_dim(w, u) > 0
        ]
        tasks = [
            (w, u, args.field, getattr(args, "p", None),
             getattr(args, "q", None))
            for w, u in pairs
        ]
        if args.jobs and args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_basis_task, tasks))
        else:
            reports = [_basis_task(t) for t in tasks]
    else:
        raise UsageError("basis-check needs BOTTOM TOP or --max-len")
    ok = all(r["verdict"] for r in reports)
    lines = []
    for r in reports:
        lines.append(
            f"{r['params']['bottom']!r} -> {r['params']['top']!r}: "
            f"rank {r['rank']} of {r['hom_dim']} "
            f"{'ok' if r['verdict'] else 'FAIL'}"
        )
    payload = {"reports": reports, "verdict": ok}
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_cellularity(args):
    field = _field_of(args)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("WEBS_SEED", "0"))
    report = ladders.cellularity_sweep(
        args.bottom, args.top, field, seed=seed, trials=args.trials
    )
    _emit(args, report, _report_lines(report))
    return 0 if report["verdict"] else 1


def cmd_selftest(args):
    from . import selftest

    report = selftest.run(verbose=not getattr(args, "json", False))
    if getattr(args, "json", False):
        _emit(args, report, [])
    return 0 if report["verdict"] else 1


def _add_field_args(sp):
    sp.add_argument("--field", choices=("Qq", "QQ", "Fp"), default="Qq")
    sp.add_argument("--p", type=int, default=None, help="prime for Fp")
    sp.add_argument(
        "--q", type=_maybe_fraction, default=None,
        help="value of q (rational for QQ, residue for Fp)",
    )


def _add_io_args(sp):
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", default=None, help="write output to a file")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="c2webs",
        description="Exact web calculus for two fundamental modules "
        "(4- and 5-dimensional) of a divided-powers quantum symplectic "
        "group in rank two.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("homdim", help="intertwiner space dimension")
    sp.add_argument("bottom")
    sp.add_argument("top")
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_homdim)

    sp = sub.add_parser("enumerate", help="dominant subsequences of a word")
    sp.add_argument("word")
    sp.add_argument("--lam", "--lambda", dest="lam", default=None,
                    help='total weight filter "a,b"')
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("lightladder", help="build one light ladder")
    sp.add_argument("word")
    sp.add_argument("--seq", required=True, help='weights "a,b;a,b;..."')
    sp.add_argument("--matrix", action="store_true",
                    help="also print the evaluated matrix")
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_lightladder)

    sp = sub.add_parser("doubleladders", help="list double ladders")
    sp.add_argument("bottom")
    sp.add_argument("top")
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_doubleladders)

    sp = sub.add_parser("eval", help="evaluate a diagram to a matrix")
    sp.add_argument("--diagram", default=None,
                    help='slices as text, e.g. "Cup1 | Id1 Id1"')
    sp.add_argument("--source", default=None,
                    help="source word (for identity or as a cross-check)")
    sp.add_argument("--file", default=None, help="diagram as JSON file")
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("check-relations", help="verify defining relations")
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_check_relations)

    sp = sub.add_parser("triangularity",
                        help="triangularity and upside-down expansion")
    sp.add_argument("word")
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_triangularity)

    sp = sub.add_parser("basis-check", help="double ladder basis rank")
    sp.add_argument("bottom", nargs="?", default=None)
    sp.add_argument("top", nargs="?", default=None)
    sp.add_argument("--max-len", type=int, default=None,
                    help="check all word pairs up to this length")
    sp.add_argument("--jobs", type=int, default=1)
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_basis_check)

    sp = sub.add_parser("cellularity", help="cellular re-expansion checks")
    sp.add_argument("bottom")
    sp.add_argument("top")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--trials", type=int, default=6)
    _add_field_args(sp)
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_cellularity)

    sp = sub.add_parser("selftest", help="run the whole desk-scale battery")
    _add_io_args(sp)
    sp.set_defaults(fn=cmd_selftest)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (webs.BoundaryMismatch, weights.WeightNotInModule,
            weights.MismatchedWords, weights.NotDominant,
            InvalidSpecialization) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
