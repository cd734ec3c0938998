"""Dressing fields and the dressed connection.

A dressing field u takes values in the su2 subgroup H of su2xu1 (or in all of
su2 when working over the plain su2 group) and transforms under an H-valued
gauge map gamma as u -> gamma^-1 u, the *left* action.  That is the opposite
variance of a gauge transformation, and it is what makes the dressed
connection

    A^u = Ad_{u^-1} A + u^-1 du

invariant under H: transforming A by gamma while replacing u by gamma^-1 u
reproduces A^u on the nose.  The arithmetic is the same as a gauge
transformation; the semantics are not, since u -> gamma^-1 u is not the
action that connections pull back along, and A^u generally leaves the gauge
orbit of A.

The electroweak construction builds u from a nowhere-vanishing scalar doublet:
u is the unique su2 element aligning the reference vacuum (0, |phi|) with phi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gauge as gg
from . import liegroup as lg
from .errors import SpecMismatch, VacuumZeroError
from .lattice import FieldKind, LatticeField
from .report import CheckResult

VACUUM_EPS = 1e-8
_H_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DressingField:
    """Group-valued lattice field constrained to the H factor."""

    field: LatticeField

    def __post_init__(self):
        if self.field.kind is not FieldKind.GROUP:
            raise SpecMismatch("dressing field must be group valued")
        _check_h_valued(self.field)

    @property
    def spec(self):
        return self.field.spec

    @property
    def lattice(self):
        return self.field.lattice


def _check_h_valued(field: LatticeField) -> None:
    if field.spec.id is lg.GroupId.SU2xU1:
        off = np.abs(field.data[..., 2, 2] - 1.0).max()
        if off > _H_TOL:
            raise SpecMismatch(f"values leave the su2 block by {off:.3e}")
    elif field.spec.id not in (lg.GroupId.SU2, lg.GroupId.AFFINE):
        raise SpecMismatch(f"no dressing subgroup for {field.spec.id.value}")


def scalar_norm(phi: LatticeField) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(phi.data) ** 2, axis=-1))


def dressing_from_scalar(phi: LatticeField) -> DressingField:
    """Sitewise unique u in SU(2) with u . (0, |phi|)^T = phi.

    Closed form u = (1/|phi|) [[conj(phi_2), phi_1], [-conj(phi_1), phi_2]].
    Depends only on the direction phi/|phi|.
    """
    if phi.kind is not FieldKind.SCALAR:
        raise SpecMismatch("expected a scalar doublet field")
    if phi.spec.id is not lg.GroupId.SU2xU1:
        raise SpecMismatch("the electroweak dressing needs the su2xu1 group")
    norm = scalar_norm(phi)
    if norm.min() <= VACUUM_EPS:
        raise VacuumZeroError(
            f"scalar doublet norm drops to {norm.min():.3e}; dressing undefined"
        )
    p1, p2 = phi.data[..., 0], phi.data[..., 1]
    data = np.zeros(phi.lattice.sizes + (3, 3), dtype=complex)
    data[..., 0, 0] = np.conj(p2) / norm
    data[..., 0, 1] = p1 / norm
    data[..., 1, 0] = -np.conj(p1) / norm
    data[..., 1, 1] = p2 / norm
    data[..., 2, 2] = 1.0
    return DressingField(LatticeField(phi.lattice, phi.spec, FieldKind.GROUP, data))


def dressing_transform(u: DressingField, gamma: LatticeField) -> DressingField:
    """Left action u -> gamma^-1 u for an H-valued gauge map gamma."""
    if gamma.kind is not FieldKind.GROUP:
        raise SpecMismatch("gamma must be group valued")
    u.field.same_geometry(gamma)
    _check_h_valued(gamma)
    ginv = lg.inverse_many(gamma.spec, gamma.data)
    return DressingField(
        LatticeField(u.lattice, u.spec, FieldKind.GROUP, ginv @ u.field.data)
    )


def dress_connection(A: LatticeField, u: DressingField) -> LatticeField:
    """A^u = Ad_{u^-1} A + u^-1 du.

    Same arithmetic as a gauge transformation, but u is not a gauge map: the
    result is H-invariant rather than H-equivariant.
    """
    return gg.gauge_transform_connection(A, u.field)


# ---------------------------------------------------------------------------
# point-frame (exact) versions


def dress_frame(frame: gg.PointFrame) -> tuple[lg.AlgebraVector, ...]:
    """Dressed connection entries of a frame carrying u, du; exact."""
    if frame.u is None:
        raise SpecMismatch("frame carries no dressing data")
    return gg.transform_point_connection(frame.spec, frame.A, frame.u, frame.du)


def h_transform_frame(frame: gg.PointFrame, gamma: lg.GroupElement, dgamma: tuple[np.ndarray, ...]) -> gg.PointFrame:
    """Simultaneous H-gauge change: A by the gauge rule, u by the left action."""
    staged = gg.frame_with_transformer(frame, gamma, dgamma)
    return gg.pointframe_transform(staged)


# ---------------------------------------------------------------------------
# residual (J) symmetry check


def adjoint_transform_dressing(
    u: DressingField, eta: LatticeField
) -> DressingField:
    """The adjoint rule u -> eta^-1 u eta used by the residual symmetry check."""
    u.field.same_geometry(eta)
    einv = lg.inverse_many(eta.spec, eta.data)
    data = einv @ u.field.data @ eta.data
    return DressingField(LatticeField(u.lattice, u.spec, FieldKind.GROUP, data))


def residual_transform_check(
    A: LatticeField,
    u: DressingField,
    eta: LatticeField,
    tolerance: float,
    name: str = "residual-symmetry",
) -> CheckResult:
    """Does the dressed field transform as a J-gauge field under eta?

    Assumes the adjoint rule for u.  Compares dress(A^eta, eta^-1 u eta)
    against Ad_{eta^-1} dress(A, u) + eta^-1 d eta; the right hand side is
    exactly a gauge transformation of the dressed connection.
    """
    u_eta = adjoint_transform_dressing(u, eta)
    lhs = dress_connection(gg.gauge_transform_connection(A, eta), u_eta)
    rhs = gg.gauge_transform_connection(dress_connection(A, u), eta)
    residual = float(np.abs(lhs.data - rhs.data).max())
    return CheckResult(name, residual, tolerance, residual <= tolerance)


def residual_transform_frame(
    frame: gg.PointFrame, eta: lg.GroupElement, deta: tuple[np.ndarray, ...]
) -> float:
    """Exact point version of the residual symmetry identity; returns the residual."""
    if frame.u is None:
        raise SpecMismatch("frame carries no dressing data")
    spec = frame.spec
    einv = eta.inverse()
    # u^eta = eta^-1 u eta with the product rule on du
    u_eta = (einv @ frame.u) @ eta
    du_eta = tuple(
        -einv.matrix @ de @ einv.matrix @ frame.u.matrix @ eta.matrix
        + einv.matrix @ du @ eta.matrix
        + einv.matrix @ frame.u.matrix @ de
        for de, du in zip(deta, frame.du)
    )
    A_eta = gg.transform_point_connection(spec, frame.A, eta, deta)
    lhs = gg.transform_point_connection(spec, A_eta, u_eta, du_eta)
    dressed = gg.transform_point_connection(spec, frame.A, frame.u, frame.du)
    rhs = gg.transform_point_connection(spec, dressed, eta, deta)
    return max(
        float(np.abs(a.coeffs - b.coeffs).max()) for a, b in zip(lhs, rhs)
    )
