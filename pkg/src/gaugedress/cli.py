"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 input error.  Reports go to
stdout as JSON; diagnostics go to stderr.  The environment variable
GFLD_TOL_SCALE multiplies every tolerance (default 1).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import dressing as dr
from . import gauge as gg
from . import liegroup as lg
from . import reduction as rd
from .errors import GaugedressError
from .fieldfile import read_field, write_field
from .lattice import FieldKind, Lattice, LatticeField, convergence_order, field_difference
from .report import CheckResult, Report
from .verify import SUITE_NAMES, offset_scalar_field, h_valued_group_field, run_suites
from .lattice import random_smooth_field


def _env_tol_scale() -> float:
    return float(os.environ.get("GFLD_TOL_SCALE", "1"))


def _load_connection(path: str) -> LatticeField:
    field = read_field(path)
    if field.kind is not FieldKind.ONE_FORM:
        raise GaugedressError(f"{path}: expected a connection file, got kind {field.kind.value}")
    return field


def cmd_curvature(args) -> int:
    A = _load_connection(args.input)
    write_field(gg.curvature(A), args.output)
    return 0


def cmd_transform(args) -> int:
    A = _load_connection(args.input)
    f = read_field(args.gauge)
    write_field(gg.gauge_transform_connection(A, f), args.output)
    return 0


def _dressing_from_file(A: LatticeField, scalar_path: str) -> dr.DressingField:
    phi = read_field(scalar_path)
    if phi.kind is not FieldKind.SCALAR:
        raise GaugedressError(f"{scalar_path}: expected a scalar doublet file")
    A.same_geometry(phi)
    return dr.dressing_from_scalar(phi)


def cmd_dress(args) -> int:
    A = _load_connection(args.input)
    u = _dressing_from_file(A, args.scalar)
    write_field(dr.dress_connection(A, u), args.output)
    return 0


def cmd_reduce(args) -> int:
    A = _load_connection(args.input)
    if A.spec.id is not lg.GroupId.SU2xU1:
        raise GaugedressError("reduce expects an su2xu1 connection")
    u = _dressing_from_file(A, args.scalar)
    reduced = rd.delta_connection(A, u)
    j_idx = list(A.spec.product_split.j_indices)
    u1_field = LatticeField(A.lattice, lg.u1(), FieldKind.ONE_FORM, reduced.data[..., j_idx])
    write_field(u1_field, args.output)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    sizes = tuple(int(s) for s in args.sizes.split(","))
    scale = args.tol_scale * _env_tol_scale()
    report = run_suites(names, seed=args.seed, sizes=sizes, tol_scale=scale)
    sys.stdout.write(report.to_json())
    return 0 if report.overall_pass else 1


def _demo_h_invariance_order(seed: int, size: int, spec) -> CheckResult:
    samples = []
    for n in (size, 2 * size):
        la = Lattice((n, n))
        A = random_smooth_field(la, spec, FieldKind.ONE_FORM, seed + 10, 1, 0.7)
        phi = offset_scalar_field(la, seed + 11)
        u = dr.dressing_from_scalar(phi)
        gm = h_valued_group_field(la, seed + 12)
        lhs = dr.dress_connection(gg.gauge_transform_connection(A, gm), dr.dressing_transform(u, gm))
        rhs = dr.dress_connection(A, u)
        samples.append((la.spacing[0], field_difference(lhs, rhs)))
    est = convergence_order(samples)
    # two-point fit; slightly wider window than the three-point suites
    return CheckResult("demo/h-invariance-order", abs(est - 2.0), 0.4, abs(est - 2.0) <= 0.4,
                       order_estimate=est)


def cmd_demo_electroweak(args) -> int:
    spec = lg.su2xu1()
    scale = _env_tol_scale()
    lat = Lattice((args.size, args.size))
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    A = random_smooth_field(lat, spec, FieldKind.ONE_FORM, args.seed, 1, 0.7)
    phi = offset_scalar_field(lat, args.seed + 1)
    u = dr.dressing_from_scalar(phi)
    dressed = dr.dress_connection(A, u)
    reduced = rd.delta_connection(A, u)
    pair = rd.make_config_pair(A)
    red_pair = rd.zeta(pair, u)

    write_field(A, outdir / "connection.gfld")
    write_field(phi, outdir / "scalar.gfld")
    write_field(u.field, outdir / "dressing.gfld")
    write_field(dressed, outdir / "dressed.gfld")
    write_field(reduced, outdir / "reduced.gfld")
    write_field(red_pair.F, outdir / "reduced_curvature.gfld")

    report = Report(command="demo-electroweak", seed=args.seed,
                    group=spec.id.value, dims=list(lat.sizes))

    norm = dr.scalar_norm(phi)
    eta = np.zeros(lat.sizes + (2,), dtype=complex)
    eta[..., 1] = norm
    block = u.field.data[..., :2, :2]
    res = float(np.abs(np.einsum("...ij,...j->...i", block, eta) - phi.data).max())
    report.add(CheckResult("demo/dressing-defining-equation", res, 1e-12 * scale, res <= 1e-12 * scale))

    gram = np.conj(np.swapaxes(block, -1, -2)) @ block
    det = block[..., 0, 0] * block[..., 1, 1] - block[..., 0, 1] * block[..., 1, 0]
    res = max(float(np.abs(gram - np.eye(2)).max()), float(np.abs(det - 1.0).max()))
    report.add(CheckResult("demo/dressing-unitarity", res, 1e-12 * scale, res <= 1e-12 * scale))

    gamma = h_valued_group_field(lat, args.seed + 2)
    lhs = dr.dressing_from_scalar(gg.scalar_gauge_transform(phi, gamma))
    rhs = dr.dressing_transform(u, gamma)
    res = float(np.abs(lhs.field.data - rhs.field.data).max())
    report.add(CheckResult("demo/equivariance-chain", res, 1e-12 * scale, res <= 1e-12 * scale))

    report.add(_demo_h_invariance_order(args.seed, args.size, spec))

    lhsF = rd.delta_ad(gg.curvature(dressed))
    res = field_difference(lhsF, red_pair.F)
    report.add(CheckResult("demo/zeta-consistency", res, 1e-12 * scale, res <= 1e-12 * scale))

    chk = rd.reduced_lagrangian_check(pair, u, tolerance=1e-10 * scale, name="demo/reduced-lagrangian")
    report.add(chk)

    sys.stdout.write(report.to_json())
    return 0 if report.overall_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaugedress",
        description="Gauge fields, dressing transformations and symmetry reduction on a periodic lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="curvature of a connection file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("transform", help="gauge-transform a connection file")
    p.add_argument("--input", required=True)
    p.add_argument("--gauge", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("dress", help="dress a connection with the scalar-built dressing field")
    p.add_argument("--input", required=True)
    p.add_argument("--scalar", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_dress)

    p = sub.add_parser("reduce", help="dress and project onto the residual u1 connection")
    p.add_argument("--input", required=True)
    p.add_argument("--scalar", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run identity suites and print a JSON report")
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="16,32,64")
    p.add_argument("--tol-scale", type=float, default=1.0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo-electroweak", help="end-to-end electroweak reduction demo")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--size", type=int, default=16)
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_demo_electroweak)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GaugedressError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
