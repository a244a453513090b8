"""Command-line interface.

    qcasimir central --N 3 --m 2 --format json
    qcasimir verify oracle --N 2 --m 2 --rep tensor:2
    qcasimir verify scalar --N 3 --m 2 --rep sym
    qcasimir eigenvalue --N 3 --m 2 --weight 2,0,0,0

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .expressions import central_element, serialize
from .fusion import (
    drinfeld_central,
    fused_r,
    fused_tensor,
    intertwining_defects,
)
from .representations import make_rep
from .scalars import format_scalar, latex_scalar
from .verification import (
    WEIGHT_CONVENTIONS,
    VerificationReport,
    _entry_witness,
    all_passed,
    check_centrality,
    transfer_examples,
    transfer_suite,
    eigenvalue_formula,
    exrep_suite,
    lowering_suite,
    slot_exchange_suite,
    relation_suite,
    scalar_report,
    sorted_reports,
    well_definedness_suite,
)

VERIFY_CHECKS = ("centrality", "scalar", "oracle", "relations", "intertwining", "basis")
FORMATS = ("text", "latex", "json")

# flags that a config file may set, with their fallback values
DEFAULTS = {
    "N": None,
    "m": 1,
    "k": None,
    "rep": None,
    "format": "text",
    "weight_convention": "highest",
    "weight": None,
    "out": None,
    "verbose": False,
    "literal": False,
}


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    N: int
    m: int
    k: Optional[int]
    rep: Optional[str]
    format: str
    weight_convention: str
    weight: Optional[List[int]]
    out: Optional[str]
    verbose: bool
    literal: bool
    check: Optional[str] = None

    def validate(self) -> None:
        if self.N is None or self.N < 1:
            raise UsageError("--N must be an integer >= 1")
        if self.m < 1:
            raise UsageError("--m must be an integer >= 1")
        if self.k is not None and self.k < 1:
            raise UsageError("--k must be an integer >= 1")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.weight_convention not in WEIGHT_CONVENTIONS:
            raise UsageError(f"--weight-convention must be one of {', '.join(WEIGHT_CONVENTIONS)}")


def _parse_weight(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"malformed weight {text!r}: expected comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=None, help="rank parameter: the algebra is U_q(gl(N+1))")
    common.add_argument("--m", type=int, default=None, help="index of the central element C_m")
    common.add_argument("--k", type=int, default=None, help="tensor degree for relation checks")
    common.add_argument("--rep", default=None, help="tensor:k | sym[:k] | exrep[:k]")
    common.add_argument("--format", default=None, help="text | latex | json")
    common.add_argument("--weight-convention", dest="weight_convention", default=None, help="highest | lowest")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--verbose", action="store_true", default=None, help="include every failing witness")
    common.add_argument("--config", default=None, help="JSON file whose keys mirror the flags")

    parser = argparse.ArgumentParser(prog="qcasimir", description="Central elements of U_q(gl(N+1)).")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("central", parents=[common], help="print the closed-form central element C_m")
    verify = sub.add_parser("verify", parents=[common], help="run exact verification checks")
    verify.add_argument("check", choices=VERIFY_CHECKS)
    verify.add_argument(
        "--literal", action="store_true", default=None, help="basis: also test the uncorrected printed statements"
    )
    eig = sub.add_parser("eigenvalue", parents=[common], help="eigenvalue of C_m on a highest weight module")
    eig.add_argument("--weight", default=None, help="comma-separated integers (Lambda_0, ..., Lambda_N)")
    return parser


def make_config(args: argparse.Namespace) -> JobConfig:
    values = dict(DEFAULTS)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
        for key, val in data.items():
            key = key.replace("-", "_")
            if key not in values:
                raise UsageError(f"unknown config key {key!r}")
            values[key] = val
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            values[key] = val
    weight = values["weight"]
    if isinstance(weight, str):
        weight = _parse_weight(weight)
    return JobConfig(
        command=args.command,
        N=values["N"],
        m=values["m"],
        k=values["k"],
        rep=values["rep"],
        format=values["format"],
        weight_convention=values["weight_convention"],
        weight=weight,
        out=values["out"],
        verbose=bool(values["verbose"]),
        literal=bool(values["literal"]),
        check=getattr(args, "check", None),
    )


# ------------------------------------------------------------------ commands


def cmd_central(cfg: JobConfig) -> str:
    return serialize(central_element(cfg.m, cfg.N), cfg.format)


def _rep(cfg: JobConfig, default: str):
    try:
        return make_rep(cfg.rep or default, cfg.N, cfg.m)
    except ValueError as exc:
        raise UsageError(str(exc))


def _intertwining_reports(cfg: JobConfig) -> List[VerificationReport]:
    W = _rep(cfg, "tensor:1")
    reports = []
    for transposed in (False, True):
        for quantum in ("tensor", "sym"):
            op = fused_tensor(W, cfg.m, transposed) if quantum == "tensor" else fused_r(W, cfg.m, transposed)
            bad = intertwining_defects(op, W, transposed)
            params = {"N": cfg.N, "m": cfg.m, "rep": cfg.rep or "tensor:1", "transposed": transposed, "quantum": quantum}
            witness = None
            if bad:
                sym, (r, c, a, b) = bad[0]
                witness = {"generator": repr(sym), "row": r, "col": c, "lhs": format_scalar(a), "rhs": format_scalar(b)}
            reports.append(VerificationReport("intertwining", params, not bad, witness))
    return reports


def cmd_verify(cfg: JobConfig) -> List[VerificationReport]:
    check = cfg.check
    if check == "centrality":
        rep = _rep(cfg, "tensor:1")
        return [check_centrality(rep.evaluate(central_element(cfg.m, cfg.N)), rep, cfg.m, cfg.N)]
    if check == "scalar":
        rep = _rep(cfg, "sym")
        params = {"m": cfg.m, "N": cfg.N, "rep": cfg.rep or "sym"}
        return [scalar_report(rep.evaluate(central_element(cfg.m, cfg.N)), params)]
    if check == "oracle":
        W = _rep(cfg, "tensor:1")
        lhs, rhs = drinfeld_central(W, cfg.m), W.evaluate(central_element(cfg.m, cfg.N))
        w = _entry_witness(lhs, rhs)
        return [VerificationReport("oracle", {"m": cfg.m, "N": cfg.N, "rep": cfg.rep or "tensor:1"}, w is None, w)]
    if check == "relations":
        return relation_suite(cfg.N, cfg.k or 2)
    if check == "intertwining":
        return _intertwining_reports(cfg)
    if check == "basis":
        reports = [lowering_suite(cfg.m, cfg.N), transfer_examples()]
        reports += exrep_suite(cfg.m, cfg.N)
        reports += slot_exchange_suite(cfg.m, cfg.N, literal=False)
        reports += transfer_suite(cfg.m, cfg.N)
        if cfg.literal:
            reports += slot_exchange_suite(cfg.m, cfg.N, literal=True)
            reports += well_definedness_suite(cfg.m, cfg.N, exponent="printed")
        return sorted_reports(reports)
    raise UsageError(f"unknown check {check!r}")


def cmd_eigenvalue(cfg: JobConfig) -> str:
    if cfg.weight is None:
        raise UsageError("--weight is required")
    if len(cfg.weight) != cfg.N + 1:
        raise UsageError(f"--weight needs {cfg.N + 1} entries, got {len(cfg.weight)}")
    val = eigenvalue_formula(cfg.m, cfg.N, cfg.weight, cfg.weight_convention)
    if cfg.format == "json":
        return json.dumps(val.to_json(), sort_keys=True)
    if cfg.format == "latex":
        return latex_scalar(val) or "1"
    return format_scalar(val)


# ---------------------------------------------------------------------- main


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(args)
        cfg.validate()
        if cfg.command == "central":
            _emit(cmd_central(cfg), cfg.out)
            return 0
        if cfg.command == "eigenvalue":
            _emit(cmd_eigenvalue(cfg), cfg.out)
            return 0
        reports = cmd_verify(cfg)
    except UsageError as exc:
        sys.stderr.write(f"qcasimir: error: {exc}\n")
        return 2
    _emit("\n".join(r.json_line(cfg.verbose) for r in reports), cfg.out)
    if all_passed(reports):
        return 0
    first = next(r for r in reports if not r.passed)
    sys.stderr.write(f"qcasimir: {first.check} failed: {json.dumps(first.witness, ensure_ascii=False)}\n")
    return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
