"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (disagreement, failed identity,
input outside a map's domain), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections, sequences, verify
from .config import load_config
from .errors import UnknownIdentity, UnsupportedVariant, VacTabError
from .partitions import is_partition, partitions_up_to
from .serialize import (
    ParseError,
    canonical_dumps,
    di_from_json,
    di_to_json,
    psi_from_json,
    psi_to_json,
    setpart_from_json,
    setpart_to_json,
    tableau_from_json,
    value_to_json,
    walk_from_json,
    walk_to_json,
)
from .walks import count_dp, count_formula, enumerate_walks, normalize_variant

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_shape(text: str) -> tuple[int, ...]:
    """``"2,1"`` -> ``(2, 1)``; ``""`` and ``"0"`` are the empty shape."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}; use comma-separated parts like 2,1") from None
    if not is_partition(parts):
        raise argparse.ArgumentTypeError(f"{text!r} is not a weakly decreasing list of positive parts")
    return parts


def _fmt_shape(mu) -> str:
    return "∅" if not mu else ",".join(map(str, mu))


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(canonical_dumps(payload))
    else:
        print(text)


# count


def _count_methods(variant: str, method: str) -> list[str]:
    if method == "all":
        return ["dp", "enumerate"] + ([] if variant == "nvac" else ["formula"])
    if method == "formula" and variant == "nvac":
        raise UsageError("n-vacillating walks have no closed form; use --method dp or enumerate")
    return [method or ("dp" if variant == "nvac" else "formula")]


def _counts_by(method: str, variant: str, k: int, half: bool, n, shapes) -> dict:
    if method == "dp":
        dp = count_dp(variant, k, half=half, n=n)
        return {mu: dp.get(mu, 0) for mu in shapes}
    if method == "enumerate":
        tally: dict = {}
        for w in enumerate_walks(variant, k, half=half, n=n):
            tally[w.final_shape] = tally.get(w.final_shape, 0) + 1
        return {mu: tally.get(mu, 0) for mu in shapes}
    return {mu: count_formula(variant, k, half, mu) for mu in shapes}


def cmd_count(args) -> int:
    try:
        variant = normalize_variant(args.variant)
    except UnsupportedVariant as exc:
        raise UsageError(str(exc)) from exc
    if variant == "nvac" and args.n is None:
        raise UsageError("--n is required for the nvac variant")
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    n = args.n if variant == "nvac" else None
    methods = _count_methods(variant, args.method)
    if args.shape is not None:
        shapes = [args.shape]
    elif variant == "nvac":
        shapes = list(count_dp(variant, args.k, half=args.half, n=n))
    else:
        shapes = [mu for mu in partitions_up_to(args.k + 1) if count_formula(variant, args.k, args.half, mu)]
    results = {m: _counts_by(m, variant, args.k, args.half, n, shapes) for m in methods}
    agree = all(results[m] == results[methods[0]] for m in methods)
    payload = {
        "variant": variant,
        "k": args.k,
        "half": args.half,
        "counts": {m: value_to_json(r) for m, r in results.items()},
        "agree": agree,
    }
    if n is not None:
        payload["n"] = n
    if len(methods) == 1 and len(shapes) == 1:
        text = str(results[methods[0]][shapes[0]])
    else:
        lines = []
        for mu in shapes:
            cells = "  ".join(f"{m}={results[m][mu]}" for m in methods) if len(methods) > 1 else str(
                results[methods[0]][mu]
            )
            lines.append(f"{_fmt_shape(mu):>12}  {cells}")
        if not agree:
            lines.append("DISAGREEMENT between methods")
        text = "\n".join(lines)
    _emit(args, payload, text)
    return EXIT_OK if agree else EXIT_FAIL


# biject


def _read_input(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _half_k(ground_size: int, half: bool) -> int:
    return ground_size - 1 if half else ground_size


def _field(data, key):
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f"input needs a {key!r} field")
    return data[key]


def _biject(args, data):
    """Returns (output JSON, round-trip ok or None)."""
    name = args.map
    if name == "psi":
        w = walk_from_json(data)
        trace = [] if args.trace else None
        img = bijections.psi_forward(w, trace)
        out = psi_to_json(img)
        if trace is not None:
            out = {"image": out, "trace": [{"step": r["step"], "E": r["E"], "T": r["T"]} for r in trace]}
        ok = None
        if args.round_trip:
            ok = bijections.psi_backward(w.k, img, w.variant, w.half) == w
        return out, ok
    if name == "psi-inv":
        img = psi_from_json(data)
        variant = normalize_variant(args.variant or "simplified")
        k = _half_k(len(img.marked.partition.ground), args.half)
        w = bijections.psi_backward(k, img, variant, args.half)
        return walk_to_json(w), (bijections.psi_forward(w) == img) if args.round_trip else None
    if name == "di":
        n, seq = int(_field(data, "n")), [int(x) for x in _field(data, "sequence")]
        img = bijections.di_forward(n, seq)
        return di_to_json(img), (bijections.di_backward(n, img) == seq) if args.round_trip else None
    if name == "di-inv":
        img = di_from_json(data)
        n = img.walk.n
        seq = bijections.di_backward(n, img)
        return {"n": n, "sequence": seq}, (bijections.di_forward(n, seq) == img) if args.round_trip else None
    if args.round_trip:
        raise UsageError(f"--round-trip is not available for {name}")
    if name == "glue-symmetric-even":
        return setpart_to_json(bijections.glue_symmetric_even(psi_from_json(data))), None
    if name == "glue-symmetric-odd":
        return setpart_to_json(bijections.glue_symmetric_odd(psi_from_json(data))), None
    if name == "glue-odd-pair":
        a, b = psi_from_json(_field(data, "first")), psi_from_json(_field(data, "second"))
        return setpart_to_json(bijections.glue_odd_pair(a, b)), None
    if name == "glue-connecting":
        first, second = _field(data, "first"), _field(data, "second")
        out = bijections.glue_connecting(
            setpart_from_json(_field(first, "partition")),
            tableau_from_json(_field(first, "tableau")),
            setpart_from_json(_field(second, "partition")),
            tableau_from_json(_field(second, "tableau")),
        )
        return setpart_to_json(out), None
    if name == "glue-type-b":
        bp = setpart_from_json(_field(data, "partition"))
        return setpart_to_json(bijections.type_b_from(bp, [int(x) for x in _field(data, "involution")])), None
    if name == "glue-collapse":
        b = setpart_from_json(_field(data, "partition"))
        bp, sigma, star = bijections.collapse_block(b, [int(x) for x in _field(data, "involution")])
        return {"partition": setpart_to_json(bp), "involution": list(sigma), "star": star}, None
    raise UsageError(f"unknown map {name!r}")


BIJECT_MAPS = (
    "psi",
    "psi-inv",
    "di",
    "di-inv",
    "glue-symmetric-even",
    "glue-symmetric-odd",
    "glue-odd-pair",
    "glue-connecting",
    "glue-type-b",
    "glue-collapse",
)


def cmd_biject(args) -> int:
    data = _read_input(args.input)
    out, ok = _biject(args, data)
    print(canonical_dumps(out))
    if ok is False:
        print("round trip FAILED", file=sys.stderr)
        return EXIT_FAIL
    if ok:
        print("round trip ok", file=sys.stderr)
    return EXIT_OK


# verify


def _params_from_args(args) -> dict:
    keys = {"n": args.n, "k": args.k, "k1": args.k1, "k2": args.k2, "m": args.m, "max_k": args.max_k}
    p = {k: v for k, v in keys.items() if v is not None}
    if args.shape is not None:
        p["shape"] = args.shape
    return p


def _plain(v) -> str:
    return str(v) if isinstance(v, int) else canonical_dumps(value_to_json(v))


def _report_line(r: verify.VerificationReport) -> str:
    params = " ".join(f"{k}={_fmt_shape(v) if k == 'shape' else v}" for k, v in r.params.items())
    line = f"{r.status.upper():5} {r.id} {params}".rstrip()
    if isinstance(r.lhs, int) or r.status != "pass":
        line += f"  lhs={_plain(r.lhs)} rhs={_plain(r.rhs)}"
    if r.detail:
        line += f"  ({r.detail})"
    return line


def cmd_verify(args, cfg) -> int:
    budget = args.budget_ms if args.budget_ms is not None else cfg.time_budget_ms
    given = _params_from_args(args)
    if args.all:
        if given:
            raise UsageError("range flags apply to --identity only")
        summary = verify.run_all(budget)
        reports = summary.reports
    else:
        entry = verify.get(args.identity)
        if given:
            base = {k: v for k, v in entry.fixtures[0].items() if k in entry.params}
            base.update(given)
            reports = [verify.run(entry.id, base)]
        else:
            reports, _ = verify.run_entry(entry.id, budget)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(canonical_dumps([r.to_json() for r in reports]))
    elif args.all:
        by_id: dict = {}
        for r in reports:
            by_id.setdefault(r.id, []).append(r)
        for iid, rs in by_id.items():
            bad = [r for r in rs if not r.passed]
            print(f"{'PASS' if not bad else 'FAIL':5} {iid}  ({len(rs) - len(bad)}/{len(rs)} instances)")
            for r in bad:
                print("      " + _report_line(r))
    else:
        for r in reports:
            print(_report_line(r))
    return EXIT_OK if ok else EXIT_FAIL


# sequence


def cmd_sequence(args) -> int:
    names = sequences.NAMES if args.name == "all" else [sequences.normalize_name(args.name)]
    tables = [sequences.generate(n, args.terms) for n in names]
    if args.format == "json":
        if len(tables) == 1:
            print(canonical_dumps([str(x) for x in tables[0].terms]))
        else:
            print(canonical_dumps({t.name: [str(x) for x in t.terms] for t in tables}))
    elif len(tables) == 1 and not args.label:
        print(" ".join(map(str, tables[0].terms)))
    else:
        for t in tables:
            print(f"{t.name:<8} {t.oeis:<12} {' '.join(map(str, t.terms))}")
    return EXIT_OK


# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vactab", description="Exact enumeration of vacillating tableaux.")
    ap.add_argument("--format", choices=("text", "json"), default=None, help="output format")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count walks by final shape")
    c.add_argument("--variant", required=True, help="svt, lvt or nvac (long names also accepted)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--half", action="store_true", help="odd length 2k+1")
    c.add_argument("--n", type=int)
    c.add_argument("--shape", type=parse_shape)
    c.add_argument("--method", choices=("formula", "dp", "enumerate", "all"))

    b = sub.add_parser("biject", help="apply a bijection or gluing map to a JSON input")
    b.add_argument("map", choices=BIJECT_MAPS)
    b.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    b.add_argument("--round-trip", action="store_true", help="apply the inverse and check identity")
    b.add_argument("--trace", action="store_true", help="psi only: include per-step states")
    b.add_argument("--variant", help="psi-inv: target variant (default simplified)")
    b.add_argument("--half", action="store_true", help="psi-inv: odd-length walk")

    v = sub.add_parser("verify", help="check catalogued identities")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity")
    g.add_argument("--all", action="store_true")
    for flag in ("--n", "--k", "--k1", "--k2", "--m", "--max-k"):
        v.add_argument(flag, type=int)
    v.add_argument("--shape", type=parse_shape)
    v.add_argument("--budget-ms", type=float, help="per-identity time budget")

    s = sub.add_parser("sequence", help="print the named sequences")
    s.add_argument("name", help=f"one of {', '.join(sequences.NAMES)} (dashes allowed), or all")
    s.add_argument("--terms", type=int, default=10)
    s.add_argument("--label", action="store_true", help="prefix the name and OEIS label")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config()
    except (ValueError, OSError) as exc:
        print(f"error: bad configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format is None:
        args.format = cfg.output_format
    try:
        if args.command == "count":
            return cmd_count(args)
        if args.command == "biject":
            return cmd_biject(args)
        if args.command == "verify":
            return cmd_verify(args, cfg)
        return cmd_sequence(args)
    except (UsageError, ParseError, UnknownIdentity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VacTabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
