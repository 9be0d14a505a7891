"""
Batch command surface: deterministic JSON/CSV tables for the enumeration,
intersection-point, counting and homology operations, plus a ``verify`` mode
that replays the oracle cross-checks.

Exit codes: 0 success, 2 configuration error, 3 verification failure.
Output depends only on the arguments and ``--seed``; the environment
variable FLAGSLICE_THREADS caps worker parallelism (evaluation is
sequential, so any positive cap yields identical bytes).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import checks, homology, slmh, slnr, supq
from .permutations import (classify_symmetry, format_word, inversion_length,
                           parse_dims, word_text)

FORMS = ("slnr", "slmh", "supq")


class ConfigError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagslice",
        description="Schubert varieties meeting base cycles in flag domains: "
                    "enumeration, intersection points, counts, homology, verification.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("enumerate", "list the Schubert words meeting the cycle(s)"),
        ("points", "list the varieties with their intersection flags"),
        ("count", "print the number of varieties"),
        ("homology", "print the cycle class expansion"),
        ("verify", "run the exact-geometry cross-check suites"),
    ):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("--form", choices=FORMS, help="real form")
        cmd.add_argument("--n", type=int, help="ambient dimension (slnr, slmh)")
        cmd.add_argument("--p", type=int, help="positive signature size (supq)")
        cmd.add_argument("--q", type=int, help="negative signature size (supq)")
        cmd.add_argument("--dims", help="dimension sequence, e.g. 2,4,3")
        cmd.add_argument("--orbit", help="sign sequence, e.g. '(-+)(-+++)(-++)'")
        cmd.add_argument("--format", choices=("json", "csv"), default="json")
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--out", help="write output to a file instead of stdout")
        if name == "verify":
            cmd.add_argument("--samples", type=int, default=20,
                             help="sampling trials per cell (escalates x5 before failing)")
            cmd.add_argument("--fast", action="store_true",
                             help="skip the randomized sampling checks")
    return parser


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def _threads_cap() -> int:
    raw = os.environ.get("FLAGSLICE_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"FLAGSLICE_THREADS must be a positive integer, got {raw!r}")
    _require(value >= 1, f"FLAGSLICE_THREADS must be a positive integer, got {value}")
    return value


def _resolved_dims(args, n: int):
    if args.dims is None:
        return None
    dims = parse_dims(args.dims)
    _require(sum(dims) == n, f"--dims {args.dims} must sum to the ambient dimension {n}")
    return dims


def _resolved_orbit(args, dims):
    """An --orbit value is either a sign sequence or block counts in the
    form ``a=3,1;b=2,5``; both name the same open orbit."""
    raw = args.orbit
    if raw is None:
        return None
    if "a=" in raw or "b=" in raw:
        pieces = dict(part.split("=", 1) for part in raw.split(";") if part)
        _require(set(pieces) == {"a", "b"},
                 "--orbit counts need the form a=...;b=...")
        a = tuple(int(x) for x in pieces["a"].split(","))
        b = tuple(int(x) for x in pieces["b"].split(","))
        desc = supq.OrbitDescriptor(args.p, args.q, a, b)
        _require(dims is None or desc.dims == dims,
                 "--orbit block counts disagree with --dims")
        return supq.sign_sequence_of(desc)
    return supq.parse_sign_sequence(raw)


def _ambient(args) -> int:
    if args.form == "supq":
        _require(args.p is not None and args.q is not None,
                 "supq needs --p and --q")
        _require(args.p >= args.q >= 1, "supq requires p >= q >= 1")
        return args.p + args.q
    _require(args.n is not None, f"{args.form} needs --n")
    _require(args.n >= 1, "--n must be positive")
    if args.form == "slmh":
        _require(args.n % 2 == 0, "slmh requires even n")
    return args.n


def _word_row(word, dims) -> dict:
    row = {
        "word": word_text(word),
        "display": format_word(word, dims=dims),
        "length": inversion_length(word),
    }
    if dims is not None:
        row["blocks"] = [list(b) for b in _blocks(word, dims)]
    return row


def _blocks(word, dims):
    out = []
    start = 0
    for d in dims:
        out.append(word[start:start + d])
        start += d
    return out


def _enumerate_words(args):
    n = _ambient(args)
    dims = _resolved_dims(args, n)
    if args.form == "slnr":
        if dims is None or dims == (1,) * n:
            return slnr.enumerate_gb(n), dims
        if classify_symmetry(dims).is_symmetric:
            return slnr.enumerate_measurable(dims), dims
        return slnr.enumerate_nonmeasurable(dims), dims
    if args.form == "slmh":
        if dims is None or dims == (1,) * n:
            return slmh.enumerate_gb_h(n // 2), dims
        if classify_symmetry(dims).is_symmetric:
            return slmh.enumerate_measurable_h(dims), dims
        return slmh.enumerate_nonmeasurable_h(dims), dims
    # supq
    if args.orbit is None:
        _require(dims is None or dims == (1,) * n,
                 "supq partial-flag enumeration needs --orbit")
        return supq.enumerate_i_pq(args.p, args.q), dims
    alpha = _resolved_orbit(args, dims)
    if dims is None or dims == (1,) * n:
        return [w for w, _ in supq.enumerate_for_orbit(alpha, args.p, args.q)], dims
    desc = supq.orbit_from_signs(args.p, args.q, alpha, dims)
    return [w for w, _ in supq.enumerate_for_orbit_gp(desc)], dims


def cmd_enumerate(args) -> dict:
    words, dims = _enumerate_words(args)
    return {"command": "enumerate", "config": _config_echo(args),
            "rows": [_word_row(w, dims) for w in words]}


def cmd_count(args) -> dict:
    words, _ = _enumerate_words(args)
    return {"command": "count", "config": _config_echo(args),
            "rows": [{"count": len(words)}]}


def cmd_points(args) -> dict:
    n = _ambient(args)
    dims = _resolved_dims(args, n)
    rows = []
    if args.form == "slnr":
        _require(dims is None or dims == (1,) * n,
                 "slnr intersection points are computed for complete flags only")
        from .geometry import orientation_class
        for word in slnr.enumerate_gb(n):
            points = slnr.intersection_points_gb(word)
            row = _word_row(word, None)
            row["points"] = [pt.to_json() for pt in points]
            if n % 2 == 0:
                row["orientations"] = [orientation_class(pt) for pt in points]
            rows.append(row)
    elif args.form == "slmh":
        if dims is None or dims == (1,) * n:
            for word in slmh.enumerate_gb_h(n // 2):
                row = _word_row(word, None)
                row["points"] = [slmh.intersection_point_h(word).to_json()]
                rows.append(row)
        else:
            _require(classify_symmetry(dims).is_symmetric,
                     "slmh intersection points need a symmetric dimension sequence")
            for word in slmh.enumerate_measurable_h(dims):
                row = _word_row(word, dims)
                row["points"] = [slmh.intersection_point_measurable_h(word, dims).to_json()]
                rows.append(row)
    else:
        from .geometry import orbit_label_su
        if args.orbit is None:
            _require(dims is None or dims == (1,) * n,
                     "supq partial-flag points need --orbit")
            for word in supq.enumerate_i_pq(args.p, args.q):
                row = _word_row(word, None)
                flags = supq.t_w(word, args.p, args.q)
                row["points"] = [f.to_json() for f in flags]
                row["orbits"] = [orbit_label_su(f, args.p, args.q) for f in flags]
                rows.append(row)
        else:
            alpha = _resolved_orbit(args, dims)
            if dims is None or dims == (1,) * n:
                pairs = supq.enumerate_for_orbit(alpha, args.p, args.q)
                block_dims = None
            else:
                desc = supq.orbit_from_signs(args.p, args.q, alpha, dims)
                pairs = supq.enumerate_for_orbit_gp(desc)
                block_dims = dims
            for word, flag in pairs:
                row = _word_row(word, block_dims)
                row["points"] = [flag.to_json()]
                rows.append(row)
    return {"command": "points", "config": _config_echo(args), "rows": rows}


def cmd_homology(args) -> dict:
    n = _ambient(args)
    dims = _resolved_dims(args, n)
    if args.form == "supq":
        if args.orbit is None:
            _require(dims is None or dims == (1,) * n,
                     "supq partial-flag homology needs --orbit")
            expansion = homology.total_cycle_class_su(args.p, args.q)
        else:
            expansion = homology.base_cycle_class(
                "supq", p=args.p, q=args.q, dims=dims,
                orbit=_resolved_orbit(args, dims))
    else:
        expansion = homology.base_cycle_class(args.form, n=n, dims=dims)
    return {"command": "homology", "config": _config_echo(args),
            "rows": [expansion.to_json()]}


def cmd_verify(args) -> tuple[dict, int]:
    escalation = args.samples * 5
    if args.fast:
        results = checks.fast_suite()
    else:
        results = checks.full_suite(seed=args.seed, samples=args.samples,
                                    escalation=escalation)
    rows = [{"check": r.name, "scope": r.scope,
             "status": "pass" if r.passed else "fail", "detail": r.detail}
            for r in results]
    failed = sum(1 for r in results if not r.passed)
    payload = {"command": "verify", "config": _config_echo(args), "rows": rows,
               "summary": {"passed": len(results) - failed, "failed": failed}}
    return payload, (3 if failed else 0)


def _config_echo(args) -> dict:
    echo = {"form": args.form, "seed": args.seed}
    for key in ("n", "p", "q", "dims", "orbit"):
        value = getattr(args, key, None)
        if value is not None:
            echo[key] = value
    if args.command == "verify":
        echo["samples"] = getattr(args, "samples", None)
        echo["fast"] = getattr(args, "fast", False)
    return echo


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    rows = payload.get("rows", [])
    buffer = io.StringIO()
    if rows:
        keys = sorted({k for row in rows for k in row})
        writer = csv.DictWriter(buffer, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            flat = {k: json.dumps(v, sort_keys=True) if isinstance(v, (list, dict))
                    else v for k, v in row.items()}
            writer.writerow(flat)
    return buffer.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_cap()
        if args.command == "verify":
            payload, code = cmd_verify(args)
        elif args.command == "enumerate":
            _require(args.form in FORMS, "--form is required")
            payload, code = cmd_enumerate(args), 0
        elif args.command == "count":
            _require(args.form in FORMS, "--form is required")
            payload, code = cmd_count(args), 0
        elif args.command == "points":
            _require(args.form in FORMS, "--form is required")
            payload, code = cmd_points(args), 0
        elif args.command == "homology":
            _require(args.form in FORMS, "--form is required")
            payload, code = cmd_homology(args), 0
        else:  # pragma: no cover - argparse enforces the choices
            raise ConfigError(f"unknown command {args.command}")
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
