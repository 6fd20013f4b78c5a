"""Command-line interface: enumerate, verify, chern, emit.

Exit codes: 0 success, 1 verification failure or engine error, 2 usage error
(argparse).  All table output is byte-deterministic UTF-8 with LF newlines.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .chern_calculus import (
    SurfaceBundleData,
    antican_cube_divisor_in_p2_bundle,
    antican_cube_p1_bundle_over_surface,
    antican_sq_dot_exceptional,
    BlowupData,
    blowup_exceptional_cube,
    conic_bundle_ksq_dot_pullback,
    genus_from_blowup,
    xi_square_on_curve,
)
from .enumerator import enumerate_all
from .errors import FanoEngineError
from .ray_constraints import RayType
from .table_oracle import diff, emit, ground_truth, record_to_row

__all__ = ["CliConfig", "build_parser", "run", "main"]


@dataclass(frozen=True)
class CliConfig:
    """Resolved invocation: one subcommand plus its effective options."""

    command: str
    rho: Optional[int] = None
    primitive_only: bool = False
    pair: Optional[tuple[str, ...]] = None
    fmt: str = "markdown"
    source: str = "truth"
    out: Optional[str] = None
    formula: Optional[str] = None
    values: tuple[int, ...] = ()


def _chern_p1_bundle(c1_sq: int, c2: int, ky_sq: int) -> int:
    return antican_cube_p1_bundle_over_surface(
        SurfaceBundleData(c1_sq=c1_sq, c2=c2, Ky_sq=ky_sq)
    )


def _chern_divisor_p2_bundle(
    c1_sq: int, c2: int, ky_sq: int, c1_f: int, c1_ky: int, f_ky: int, f_sq: int
) -> int:
    return antican_cube_divisor_in_p2_bundle(
        SurfaceBundleData(
            c1_sq=c1_sq,
            c2=c2,
            Ky_sq=ky_sq,
            c1_dot_F=c1_f,
            c1_dot_Ky=c1_ky,
            F_dot_Ky=f_ky,
            F_sq=f_sq,
        )
    )


def _chern_exceptional_cube(deg_conormal: int) -> int:
    return blowup_exceptional_cube(BlowupData(deg_conormal=deg_conormal))


def _chern_antican_sq(ky_dot_c: int, genus: int) -> int:
    return antican_sq_dot_exceptional(BlowupData(ky_dot_C=ky_dot_c, genus=genus))


# name -> (callable, argument names)
_CHERN_FORMULAS = {
    "antican-cube-p1-bundle": (_chern_p1_bundle, ("c1_sq", "c2", "Ky_sq")),
    "xi-square": (xi_square_on_curve, ("deg_E",)),
    "antican-cube-divisor-p2-bundle": (
        _chern_divisor_p2_bundle,
        ("c1_sq", "c2", "Ky_sq", "c1.F", "c1.Ky", "F.Ky", "F_sq"),
    ),
    "exceptional-cube": (_chern_exceptional_cube, ("deg_conormal",)),
    "antican-sq-dot-exceptional": (_chern_antican_sq, ("Ky.C", "genus")),
    "conic-ksq-pullback": (conic_bundle_ksq_dot_pullback, ("Ks.D", "Delta.D")),
    "genus-from-blowup": (genus_from_blowup, ("kx3", "ky3", "r", "degB")),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoenum",
        description=(
            "Enumerate rank-2 and primitive rank-3 Fano threefold families by "
            "exact integer arithmetic and compare against the embedded table."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="solve and print the families")
    p_enum.add_argument("--rho", type=int, choices=(2, 3), default=2)
    p_enum.add_argument(
        "--pair",
        help="restrict to one ray pairing, e.g. E1,C2 (E3/E4 spelled E3E4)",
    )
    p_enum.add_argument(
        "--primitive",
        action="store_true",
        help="only families without an E1 blowup ray (rank 2)",
    )
    p_enum.add_argument(
        "--format",
        dest="fmt",
        choices=_EMIT_CHOICES,
        default="markdown",
    )

    p_verify = sub.add_parser(
        "verify", help="diff computed families against the embedded table"
    )
    p_verify.add_argument("--rho", type=int, choices=(2, 3))

    p_chern = sub.add_parser("chern", help="evaluate one Chern-class formula")
    p_chern.add_argument("formula", choices=sorted(_CHERN_FORMULAS))
    p_chern.add_argument("values", type=int, nargs="+")

    p_emit = sub.add_parser("emit", help="export a table to a file or stdout")
    p_emit.add_argument("--rho", type=int, choices=(2, 3), default=2)
    p_emit.add_argument("--format", dest="fmt", choices=_EMIT_CHOICES, default="json")
    p_emit.add_argument("--source", choices=("truth", "computed"), default="truth")
    p_emit.add_argument("--out", help="output path (default: stdout)")
    return parser


_EMIT_CHOICES = ("markdown", "json", "csv")


def _parse_pair(parser: argparse.ArgumentParser, text: str) -> tuple[str, ...]:
    try:
        tags = tuple(RayType.parse(token).value for token in text.split(","))
    except FanoEngineError as exc:
        parser.error(str(exc))
    if len(tags) < 2:
        parser.error("--pair needs at least two comma-separated ray types")
    return tuple(sorted(tags))


def _computed_rows(rho: int, primitive_only: bool):
    return tuple(
        record_to_row(record)
        for record in enumerate_all(rho, primitive_only=primitive_only)
    )


def _write_payload(payload: bytes, out: Optional[str]) -> None:
    if out:
        Path(out).write_bytes(payload)
        return
    sys.stdout.buffer.write(payload)
    if not payload.endswith(b"\n"):
        sys.stdout.buffer.write(b"\n")
    sys.stdout.buffer.flush()


def _run_enumerate(config: CliConfig) -> int:
    primitive_only = config.primitive_only or config.rho == 3
    rows = _computed_rows(config.rho, primitive_only)
    if config.pair is not None:
        rows = tuple(r for r in rows if tuple(sorted(r.ray_types)) == config.pair)
    _write_payload(emit(rows, config.fmt), None)
    return 0


def _run_verify(config: CliConfig) -> int:
    status = 0
    rhos = (config.rho,) if config.rho else (2, 3)
    for rho in rhos:
        primitive_only = rho == 3
        records = enumerate_all(rho, primitive_only=primitive_only)
        truth = ground_truth(rho, primitive_only=primitive_only)
        report = diff(records, truth)
        if report:
            print(f"rho={rho}: differences found")
            print(report.render())
            status = 1
        else:
            print(f"rho={rho}: all {len(truth)} rows match")
    return status


def _run_chern(config: CliConfig) -> int:
    func, names = _CHERN_FORMULAS[config.formula]
    if len(config.values) != len(names):
        raise SystemExit(2)  # guarded earlier via parser.error; defensive
    print(func(*config.values))
    return 0


def _run_emit(config: CliConfig) -> int:
    primitive_only = config.rho == 3
    if config.source == "computed":
        rows = _computed_rows(config.rho, primitive_only)
    else:
        rows = ground_truth(config.rho, primitive_only=primitive_only)
    _write_payload(emit(rows, config.fmt), config.out)
    return 0


def _resolve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> CliConfig:
    if args.command == "enumerate":
        pair = _parse_pair(parser, args.pair) if args.pair else None
        return CliConfig(
            command="enumerate",
            rho=args.rho,
            primitive_only=args.primitive,
            pair=pair,
            fmt=args.fmt,
        )
    if args.command == "verify":
        return CliConfig(command="verify", rho=args.rho)
    if args.command == "chern":
        names = _CHERN_FORMULAS[args.formula][1]
        if len(args.values) != len(names):
            parser.error(
                f"{args.formula} takes {len(names)} integers: {' '.join(names)}"
            )
        return CliConfig(command="chern", formula=args.formula, values=tuple(args.values))
    if args.command == "emit":
        return CliConfig(
            command="emit",
            rho=args.rho,
            fmt=args.fmt,
            source=args.source,
            out=args.out,
        )
    parser.error(f"unknown command {args.command!r}")  # pragma: no cover
    raise AssertionError  # pragma: no cover


_RUNNERS = {
    "enumerate": _run_enumerate,
    "verify": _run_verify,
    "chern": _run_chern,
    "emit": _run_emit,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = build_parser()
    config = _resolve(parser, parser.parse_args(argv))
    try:
        return _RUNNERS[config.command](config)
    except FanoEngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
