"""agflag command line: curve-info, hstar, flag-check, reproduce-example.

Exit codes: 0 ok, 2 bad config, 3 precondition, 4 internal disagreement,
5 golden mismatch.  Output is deterministic JSON (sorted keys) or CSV.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import sys
import time
from pathlib import Path

from .errors import (
    AgflagError,
    ArityMismatch,
    CardinalityMismatch,
    ConfigError,
    PreconditionViolated,
    RangeError,
    RouteDisagreement,
)
from .golden import EXAMPLE_CASES, HERMITIAN16, builtin_config, full_set
from .isodual import flag_report
from .kummer import build_curve
from .semigroups import METHODS, PMode, jump_set

EXIT_OK, EXIT_CONFIG, EXIT_PRECONDITION, EXIT_DISAGREE, EXIT_GOLDEN = 0, 2, 3, 4, 5


class Disagreement(AgflagError):
    pass


def load_curve(spec: str):
    """A path to a JSON config, or the name of a bundled one (hermitian16, c7)."""
    path = Path(spec)
    if path.is_file():
        return build_curve(path)
    cfg = builtin_config(path.name)
    if cfg is None:
        raise ConfigError(f"no curve config at {spec}")
    return build_curve(cfg)


def parse_beta(text: str | None) -> tuple:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"--beta must be comma-separated integers, got {text!r}") from exc


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _members_csv(per_method: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "member"])
    for method, members in per_method.items():
        for a in members:
            w.writerow([method, a])
    return buf.getvalue().rstrip("\n")


def _flat_csv(d: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k in sorted(d):
        w.writerow([k, _dumps(d[k]) if isinstance(d[k], (dict, list)) else d[k]])
    return buf.getvalue().rstrip("\n")


# -- subcommands -------------------------------------------------------------

def cmd_curve_info(args) -> int:
    curve = load_curve(args.curve)
    info = {
        "q": curve.q,
        "m": curve.m,
        "r": curve.r,
        "g": curve.genus,
        "r_tilde": curve.r_tilde,
        "split_lines": list(curve.split_lines),
        "split_line_count": len(curve.split_lines),
        "rational_places": curve.place_count,
        "n": {str(t): curve.n_for(t) for t in range(1, curve.r + 1)},
    }
    _emit(_dumps(info) if args.format == "json" else _flat_csv(info), args.out)
    return EXIT_OK


def _flag_args(args, curve):
    beta = parse_beta(args.beta)
    mode = PMode(args.p_place)
    t = args.t if args.t is not None else (len(beta) if mode == PMode.INFINITY else len(beta) + 1)
    return t, mode, beta


def cmd_hstar(args) -> int:
    curve = load_curve(args.curve)
    t, mode, beta = _flag_args(args, curve)
    methods = METHODS if args.method == "all" else (args.method,)
    sets = {meth: jump_set(curve, t, mode, beta, meth) for meth in methods}
    first = sets[methods[0]]
    agree = all(s.members == first.members for s in sets.values())
    out = first.to_dict()
    if args.method == "all":
        out["methods"] = {meth: list(s.members) for meth, s in sets.items()}
        out["agree"] = agree
    if args.format == "json":
        text = _dumps(out)
    else:
        text = _members_csv({meth: s.members for meth, s in sets.items()})
    _emit(text, args.out)
    if not agree:
        raise Disagreement("jump-set methods disagree")
    return EXIT_OK


def cmd_flag_check(args) -> int:
    curve = load_curve(args.curve)
    t, mode, beta = _flag_args(args, curve)
    report = flag_report(curve, t, mode, beta, oracle=not args.no_oracle).to_dict()
    _emit(_dumps(report) if args.format == "json" else _flat_csv(report), args.out)
    return EXIT_OK


def _golden_lines(cases) -> list[str]:
    lines = []
    for case in cases:
        lines.append(f"t={case['t']} beta={','.join(map(str, case['beta']))} a0={case['a0']}")
        lines.append("  set=" + ",".join(map(str, case["set"])))
    return lines


def cmd_reproduce_example(args) -> int:
    golden = EXAMPLE_CASES
    if args.golden:
        try:
            golden = json.loads(Path(args.golden).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read golden file {args.golden}: {exc}") from exc
    curve = build_curve(HERMITIAN16)
    expected, got, matches = [], [], 0
    start = time.perf_counter()
    for case in golden:
        want = {"t": case["t"], "beta": case["beta"], "a0": case["a0"], "set": full_set(case)}
        js = jump_set(curve, case["t"], PMode.INFINITY, case["beta"], args.method)
        have = {"t": case["t"], "beta": case["beta"], "a0": js.a0, "set": list(js.members)}
        expected.append(want)
        got.append(have)
        matches += want == have
    elapsed = time.perf_counter() - start
    sys.stderr.write(f"{args.method}: {elapsed:.2f}s\n")
    if matches != len(golden):
        diff = difflib.unified_diff(_golden_lines(expected), _golden_lines(got),
                                    "golden", f"computed ({args.method})", lineterm="")
        sys.stdout.write("\n".join(diff) + "\n")
        sys.stdout.write(f"{matches}/{len(golden)} match\n")
        return EXIT_GOLDEN
    sys.stdout.write(f"{matches}/{len(golden)} match\n")
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def _add_common(sp, flag_args: bool) -> None:
    sp.add_argument("--curve", required=True, help="curve JSON config, or bundled name hermitian16 / c7")
    if flag_args:
        sp.add_argument("--t", type=int, help="D omits Q_1..Q_t (default: inferred from --beta)")
        sp.add_argument("--p-place", choices=[m.value for m in PMode], default="infinity")
        sp.add_argument("--beta", help="comma-separated integers; write --beta=-3,-3,7 for a leading minus")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="agflag", description="Flags of AG codes on Kummer curves")
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("curve-info", help="genus, places and code lengths of a curve")
    _add_common(sp, False)
    sp.set_defaults(func=cmd_curve_info)
    sp = sub.add_parser("hstar", help="jump set of the flag aP + G_beta")
    _add_common(sp, True)
    sp.add_argument("--method", choices=[*METHODS, "all"], default="closed")
    sp.set_defaults(func=cmd_hstar)
    sp = sub.add_parser("flag-check", help="isometry-dual verdicts from every route")
    _add_common(sp, True)
    sp.add_argument("--no-oracle", action="store_true", help="skip the generator-matrix route")
    sp.set_defaults(func=cmd_flag_check)
    sp = sub.add_parser("reproduce-example", help="recompute the five Hermitian F_16 jump sets")
    sp.add_argument("--method", choices=list(METHODS), default="closed")
    sp.add_argument("--golden", help="JSON list overriding the embedded golden cases")
    sp.set_defaults(func=cmd_reproduce_example)
    return p


def _glue_negative_beta(argv: list[str]) -> list[str]:
    # argparse reads "-3,-3,7" as an option, so "--beta -3,..." becomes "--beta=-3,..."
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--beta" and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"--beta={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_beta(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RouteDisagreement, CardinalityMismatch, Disagreement) as exc:
        sys.stderr.write(f"agflag: internal disagreement: {exc}\n")
        return EXIT_DISAGREE
    except (PreconditionViolated, RangeError, ArityMismatch) as exc:
        sys.stderr.write(f"agflag: precondition: {exc}\n")
        return EXIT_PRECONDITION
    except ConfigError as exc:
        sys.stderr.write(f"agflag: config: {exc}\n")
        return EXIT_CONFIG
    except ValueError as exc:
        sys.stderr.write(f"agflag: config: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
