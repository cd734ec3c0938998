"""Reduction onto the residual J factor: projections of ad-valued fields,
connections, configuration pairs and momenta, and the demonstrator Lagrangian.

All projections are coefficient-space: pr_j zeroes the h coefficients.  For a
direct product (su2xu1) this commutes with the adjoint action of the group
element's own J part, so the projections descend to well-defined maps on the
reduced bundle data; for the affine group (a semidirect product with the
scaling factor dressed away) the same identity fails, and the verification
suite logs an explicit violating sample rather than pretending otherwise.

The reduced connection is obtained by dressing first and projecting second:
delta(A, u) = pr_j(A^u).  It depends on the dressing field, and a J-principal
connection must be j-valued, which is what the projection enforces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gauge as gg
from . import liegroup as lg
from .dressing import DressingField, dress_connection
from .errors import NoSplitError, SpecMismatch
from .lattice import FieldKind, LatticeField
from .report import CheckResult


def _split_indices(spec: lg.GroupSpec) -> tuple[list[int], list[int]]:
    if spec.product_split is None:
        raise NoSplitError(f"group {spec.id.value} has no h x j split")
    return list(spec.product_split.h_indices), list(spec.product_split.j_indices)


# ---------------------------------------------------------------------------
# configuration pairs and momenta


@dataclass(frozen=True, eq=False)
class ConfigPair:
    """A connection together with a curvature field over the same lattice."""

    A: LatticeField
    F: LatticeField
    from_connection: bool = False  # True when F was computed from A

    def __post_init__(self):
        if self.A.kind is not FieldKind.ONE_FORM or self.F.kind is not FieldKind.TWO_FORM:
            raise SpecMismatch("config pair needs a one-form and a two-form")
        self.A.same_geometry(self.F)


def make_config_pair(A: LatticeField) -> ConfigPair:
    return ConfigPair(A, gg.curvature(A), from_connection=True)


@dataclass(frozen=True, eq=False)
class MomentumSample:
    """Pointwise dual coefficients p_a^{ij}, antisymmetric in (i, j).

    Serialized momenta carry the implicit density weight of one unit cell
    (h_1 ... h_m); the pairing below is pure coordinate contraction.
    """

    spec: lg.GroupSpec
    x: tuple[float, ...]
    p: np.ndarray  # (m, m, d)

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        if not np.array_equal(p, -np.swapaxes(p, 0, 1)):
            raise SpecMismatch("momentum sample must be exactly antisymmetric")
        object.__setattr__(self, "p", p)


def pairing(p: MomentumSample, F_value: np.ndarray) -> float:
    """<p, F> = sum over a and i<j of p_a^{ij} F^a_{ij}."""
    m = p.p.shape[0]
    total = 0.0
    for i in range(m):
        for j in range(i + 1, m):
            total += float(np.dot(p.p[i, j], F_value[i, j]))
    return total


# ---------------------------------------------------------------------------
# the reduction maps


def delta_ad(field: LatticeField) -> LatticeField:
    """Componentwise projection of an ad-valued field onto the j factor."""
    if field.kind not in (FieldKind.ALGEBRA, FieldKind.ONE_FORM, FieldKind.TWO_FORM, FieldKind.MOMENTUM):
        raise SpecMismatch("delta_ad acts on algebra-coefficient fields")
    _, j_idx = _split_indices(field.spec)
    out = np.zeros_like(field.data)
    out[..., j_idx] = field.data[..., j_idx]
    return LatticeField(field.lattice, field.spec, field.kind, out)


def delta_connection(A: LatticeField, u: DressingField) -> LatticeField:
    """Reduced connection pr_j(A^u): dress, then project."""
    return delta_ad(dress_connection(A, u))


def zeta(pair: ConfigPair, u: DressingField) -> ConfigPair:
    """Reduce a configuration pair: (A, F) -> (pr_j A^u, curvature(pr_j A^u))."""
    reduced = delta_connection(pair.A, u)
    return ConfigPair(reduced, gg.curvature(reduced), from_connection=True)


def delta_momentum(p: MomentumSample) -> MomentumSample:
    """Restrict the dual coefficients to the j factor (zero the h rows)."""
    _, j_idx = _split_indices(p.spec)
    out = np.zeros_like(p.p)
    out[..., j_idx] = p.p[..., j_idx]
    return MomentumSample(p.spec, p.x, out)


# ---------------------------------------------------------------------------
# demonstrator Lagrangian


def yang_mills_density(pair: ConfigPair) -> np.ndarray:
    """L(A, F) = -1/4 sum_{a, i<j} (F^a_ij)^2, sitewise.

    Gauge invariant for the unitary groups because the fixed bases are
    orthogonal under the trace form, which the adjoint action preserves.
    """
    F = pair.F.data
    m = F.shape[-3]
    total = np.zeros(F.shape[: -3])
    for i in range(m):
        for j in range(i + 1, m):
            total += np.sum(F[..., i, j, :] ** 2, axis=-1)
    return -0.25 * total


def _density_on_j(pair: ConfigPair) -> np.ndarray:
    """Yang-Mills density restricted to the j coefficients of F."""
    _, j_idx = _split_indices(pair.A.spec)
    F = pair.F.data[..., j_idx]
    m = pair.F.data.shape[-3]
    total = np.zeros(F.shape[: -3])
    for i in range(m):
        for j in range(i + 1, m):
            total += np.sum(F[..., i, j, :] ** 2, axis=-1)
    return -0.25 * total


def reduced_lagrangian_check(
    pair: ConfigPair, u: DressingField, tolerance: float = 1e-10, name: str = "reduced-lagrangian"
) -> CheckResult:
    """Factorisation through the reduction: the j-restricted density of the
    dressed pair must equal the full density of the reduced pair, sitewise."""
    dressed = make_config_pair(dress_connection(pair.A, u))
    lhs = _density_on_j(dressed)
    rhs = yang_mills_density(zeta(pair, u))
    residual = float(np.abs(lhs - rhs).max())
    return CheckResult(name, residual, tolerance, residual <= tolerance)
