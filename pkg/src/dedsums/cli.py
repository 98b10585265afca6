"""Command-line front end: compute sums, verify identities, run sweeps.

Subcommands
-----------
``sum FAMILY ...``      evaluate one sum exactly; prints a rational literal.
``verify IDENTITY ...`` check one identity instance; prints a report.
``sweep IDENTITY ...``  grid and/or seeded-random verification sweeps.
``analytic TARGET ...`` run one floating-point truncation check.

Exit codes: 0 when everything passed, 1 when any residual or tolerance
check failed, 2 on usage errors or violated hypotheses.

Rational arguments use the exact literal grammar (``-7/3``, ``5``); decimal
points are rejected so no input is silently approximated.  Integer range
arguments for ``sweep`` accept comma-separated items and ``lo..hi`` spans
(``-3..-1,1..3``); rational list arguments are comma-separated literals.

Output is byte-deterministic: identical invocations print identical bytes,
sweep cases are emitted in lexicographic grid order (random cases after the
grid, in generation order) regardless of the worker count.  The worker
count defaults to the ``DEDSUMS_WORKERS`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .analytic import fourier_partial, lemma24_check, lemma27_check, zeta_even_check
from .exact import format_rational, parse_rational
from .reciprocity import (
    IDENTITIES,
    HypothesisError,
    IdentityReport,
    random_case,
    run_case,
)
from .sums import SUM_FAMILIES, SumRequest, _FAMILY_SPECS

__all__ = ["main", "SweepSpec"]


@dataclass(frozen=True)
class SweepSpec:
    """One verification sweep: an identity, its grids, and the random tail.

    ``grids`` maps every declared parameter to its value list (empty when
    the sweep is random-only); grid cases enumerate lexicographically in
    declared parameter order, then ``random_count`` seeded tuples follow.
    The seed fully determines the random sequence.
    """

    identity: str
    grids: dict[str, list] = field(default_factory=dict)
    random_count: int = 0
    seed: int = 0
    flags: tuple[str, ...] = ()

    def cases(self) -> list[dict]:
        spec = IDENTITIES[self.identity]
        out: list[dict] = []
        if self.grids:
            missing = [n for n in spec.param_order if n not in self.grids]
            if missing:
                raise ValueError(
                    f"sweep grid missing parameter(s): {', '.join(missing)}")
            pending: list[dict] = [{}]
            for name in spec.param_order:
                pending = [{**prefix, name: v}
                           for prefix in pending for v in self.grids[name]]
            out.extend(pending)
        if self.random_count:
            rng = random.Random(self.seed)
            out.extend(random_case(self.identity, rng)
                       for _ in range(self.random_count))
        if not out:
            raise ValueError("sweep needs a full grid and/or a random count")
        for params in out:
            for flag in self.flags:
                params[flag] = True
        return out


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that accepts negative rational literals as values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Stock argparse only lets plain negative numbers through as option
        # values; no option here starts with a digit, so treat every token
        # beginning '-<digit>' as a value ('-7/3', '-3..-1,1..2', ...).
        self._negative_number_matcher = re.compile(r"^-\d")


def _int_range(text: str) -> list[int]:
    """Parse '1..3', '-3..-1,1..3', '2,5,7' into an integer list."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            values.extend(range(lo, hi + 1))
        elif part:
            values.append(int(part))
    if not values:
        raise ValueError(f"empty integer range: {text!r}")
    return values


def _rational_list(text: str) -> list[Fraction]:
    values = [parse_rational(part.strip()) for part in text.split(",") if part.strip()]
    if not values:
        raise ValueError(f"empty rational list: {text!r}")
    return values


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DEDSUMS_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> _Parser:
    top = _Parser(prog="dedsums", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # sum ------------------------------------------------------------------
    p_sum = sub.add_parser("sum", help="evaluate one sum exactly")
    fam_sub = p_sum.add_subparsers(dest="family", required=True, metavar="FAMILY")
    for family in SUM_FAMILIES:
        order_names, mod_names, shift_names, _ = _FAMILY_SPECS[family]
        fp = fam_sub.add_parser(family)
        for name in order_names:
            fp.add_argument(f"-{name}", type=int, required=True)
        for name in mod_names:
            fp.add_argument(f"-{name}", type=int, required=True)
        for name in shift_names:
            fp.add_argument(f"-{name}", type=parse_rational, required=True)
        fp.add_argument("--format", choices=("plain", "json"), default="plain")

    # verify ----------------------------------------------------------------
    p_verify = sub.add_parser("verify", help="verify one identity instance")
    ver_sub = p_verify.add_subparsers(dest="identity", required=True, metavar="IDENTITY")
    for name, spec in IDENTITIES.items():
        vp = ver_sub.add_parser(name)
        for pname in spec.int_params:
            vp.add_argument(f"-{pname}", type=int, required=True)
        for pname in spec.rat_params:
            vp.add_argument(f"-{pname}", type=parse_rational, required=True)
        for flag in spec.flags:
            vp.add_argument(f"--{flag}", action="store_true")
        vp.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    # sweep -----------------------------------------------------------------
    p_sweep = sub.add_parser("sweep", help="verify an identity over a grid")
    sw_sub = p_sweep.add_subparsers(dest="identity", required=True, metavar="IDENTITY")
    for name, spec in IDENTITIES.items():
        sp = sw_sub.add_parser(name)
        for pname in spec.int_params:
            sp.add_argument(f"-{pname}", type=_int_range, metavar="RANGE")
        for pname in spec.rat_params:
            sp.add_argument(f"-{pname}", type=_rational_list, metavar="LIST")
        for flag in spec.flags:
            sp.add_argument(f"--{flag}", action="store_true")
        sp.add_argument("--random", type=int, default=0, metavar="N",
                        help="append N seeded random hypothesis-respecting tuples")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--workers", type=int, default=_default_workers())
        sp.add_argument("--format", choices=("json", "csv", "plain"), default="json")

    # analytic ---------------------------------------------------------------
    p_an = sub.add_parser("analytic", help="run one truncation check")
    an_sub = p_an.add_subparsers(dest="target", required=True, metavar="TARGET")
    ap = an_sub.add_parser("fourier")
    ap.add_argument("-n", type=int, required=True)
    ap.add_argument("-x", type=parse_rational, required=True)
    ap.add_argument("-K", type=int, required=True)
    ap = an_sub.add_parser("lemma24")
    ap.add_argument("-j", type=int, required=True)
    ap.add_argument("-b", type=int, required=True)
    ap.add_argument("-r", type=int, required=True)
    ap.add_argument("-K", type=int, required=True)
    ap = an_sub.add_parser("lemma27")
    ap.add_argument("-j", type=int, required=True)
    ap.add_argument("-b", type=int, required=True)
    ap.add_argument("-r", type=int, required=True)
    ap.add_argument("-x", type=parse_rational, required=True)
    ap.add_argument("-K", type=int, required=True)
    ap = an_sub.add_parser("zeta-even")
    ap.add_argument("-j", type=int, required=True)
    ap.add_argument("-K", type=int, required=True)
    for name in ("fourier", "lemma24", "lemma27", "zeta-even"):
        an_sub.choices[name].add_argument(
            "--format", choices=("json", "csv", "plain"), default="json")

    return top


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------

def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _identity_csv_header(spec) -> str:
    names = list(spec.param_order) + list(spec.flags)
    return ",".join(["identity"] + names + ["lhs", "rhs", "residual", "pass", "counter"])


def _identity_csv_row(spec, report: IdentityReport | None,
                      params: dict, error: str | None) -> str:
    names = list(spec.param_order) + list(spec.flags)
    cells = [spec.name]
    for n in names:
        cells.append(_fmt_value(params[n]) if n in params else "")
    if report is not None:
        cells += [format_rational(report.lhs), format_rational(report.rhs),
                  format_rational(report.residual), str(report.passed).lower(),
                  "" if report.counter is None else str(report.counter)]
    else:
        cells += ["", "", "", "invalid", ""]
    return ",".join(cells)


def _identity_plain(report: IdentityReport) -> str:
    kv = " ".join(f"{n}={_fmt_value(v)}" for n, v in report.case.params)
    line = (f"{'PASS' if report.passed else 'FAIL'} {report.case.identity} {kv} "
            f"residual={format_rational(report.residual)}")
    if report.counter is not None:
        line += f" counter={report.counter}"
    return line


def _invalid_json(identity: str, params: dict, clause: str) -> str:
    spec = IDENTITIES[identity]
    enc = {}
    for n in spec.param_order + spec.flags:
        if n in params:
            enc[n] = _fmt_value(params[n]) if isinstance(params[n], Fraction) else params[n]
    return json.dumps({"identity": identity, "params": enc, "error": clause})


def _invalid_plain(identity: str, params: dict, clause: str) -> str:
    kv = " ".join(f"{n}={_fmt_value(v)}" for n, v in params.items())
    return f"INVALID {identity} {kv} ({clause})"


# ---------------------------------------------------------------------------
# Subcommand drivers
# ---------------------------------------------------------------------------

def _cmd_sum(args) -> int:
    order_names, mod_names, shift_names, _ = _FAMILY_SPECS[args.family]
    request = SumRequest(
        family=args.family,
        orders=tuple(getattr(args, n) for n in order_names),
        moduli=tuple(getattr(args, n) for n in mod_names),
        shifts=tuple(getattr(args, n) for n in shift_names),
    )
    try:
        value = request.evaluate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps({"request": request.to_json_dict(),
                          "value": format_rational(value)}))
    else:
        print(format_rational(value))
    return 0


def _collect_params(args, spec) -> dict:
    params: dict = {}
    for name in spec.param_order:
        params[name] = getattr(args, name)
    for flag in spec.flags:
        if getattr(args, flag, False):
            params[flag] = True
    return params


def _cmd_verify(args) -> int:
    spec = IDENTITIES[args.identity]
    params = _collect_params(args, spec)
    try:
        report = run_case(args.identity, params)
    except HypothesisError as exc:
        if args.format == "plain":
            print(_invalid_plain(args.identity, params, exc.clause))
        else:
            print(_invalid_json(args.identity, params, exc.clause))
        return 2
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(_identity_csv_header(spec))
        print(_identity_csv_row(spec, report, params, None))
    else:
        print(_identity_plain(report))
    return 0 if report.passed else 1


def _sweep_case(case: tuple[str, dict]):
    identity, params = case
    try:
        return run_case(identity, params), None
    except HypothesisError as exc:
        return None, exc.clause


def _cmd_sweep(args) -> int:
    spec = IDENTITIES[args.identity]
    grids = {name: getattr(args, name) for name in spec.param_order
             if getattr(args, name) is not None}
    flags = tuple(f for f in spec.flags if getattr(args, f, False))
    sweep = SweepSpec(identity=args.identity, grids=grids,
                      random_count=args.random, seed=args.seed, flags=flags)
    try:
        cases = [(args.identity, params) for params in sweep.cases()]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    workers = max(1, args.workers)
    if workers > 1 and len(cases) > 1:
        chunk = max(1, len(cases) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_case, cases, chunksize=chunk))
    else:
        results = [_sweep_case(c) for c in cases]

    passes = failures = invalid = 0
    if args.format == "csv":
        print(_identity_csv_header(spec))
    for (identity, params), (report, clause) in zip(cases, results):
        if report is None:
            invalid += 1
            if args.format == "json":
                print(_invalid_json(identity, params, clause))
            elif args.format == "csv":
                print(_identity_csv_row(spec, None, params, clause))
            else:
                print(_invalid_plain(identity, params, clause))
            continue
        if report.passed:
            passes += 1
        else:
            failures += 1
        if args.format == "json":
            print(report.to_json())
        elif args.format == "csv":
            print(_identity_csv_row(spec, report, params, None))
        else:
            print(_identity_plain(report))
    summary = {"cases": len(cases), "passes": passes,
               "failures": failures, "invalid": invalid}
    if args.format == "json":
        print(json.dumps(summary))
    elif args.format == "csv":
        print("# " + " ".join(f"{k}={v}" for k, v in summary.items()))
    else:
        print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return 0 if failures == 0 and invalid == 0 else 1


def _cmd_analytic(args) -> int:
    try:
        if args.target == "fourier":
            report = fourier_partial(args.n, args.x, args.K)
        elif args.target == "lemma24":
            report = lemma24_check(args.j, args.b, args.r, args.K)
        elif args.target == "lemma27":
            report = lemma27_check(args.j, args.b, args.r, args.x, args.K)
        else:
            report = zeta_even_check(args.j, args.K)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "plain":
        print(f"{'PASS' if report.passed else 'FAIL'} {report.target} "
              + " ".join(f"{n}={_fmt_value(v)}" for n, v in report.params)
              + f" K={report.K} abs_error={report.abs_error!r} "
              + f"tolerance={report.tolerance!r}")
    elif args.format == "csv":
        names = [n for n, _ in report.params]
        data = report.to_json_dict()

        def cell(v):
            return f"{v[0]!r};{v[1]!r}" if isinstance(v, list) else \
                (repr(v) if isinstance(v, float) else str(v))
        print(",".join(["target"] + names
                       + ["K", "approx", "reference", "abs_error", "tolerance", "pass"]))
        print(",".join([report.target]
                       + [str(data["params"][n]) for n in names]
                       + [str(report.K), cell(data["approx"]), cell(data["reference"]),
                          repr(report.abs_error), repr(report.tolerance),
                          str(report.passed).lower()]))
    else:
        print(report.to_json())
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sum":
        return _cmd_sum(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    return _cmd_analytic(args)


if __name__ == "__main__":
    sys.exit(main())
