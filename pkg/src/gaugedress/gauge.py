"""Connections, curvature and gauge transformations in a local trivialisation.

Conventions
-----------
A connection field stores coefficients A^a_i(x); its curvature is returned as
the two-form coefficient array

    F^a_ij = (1/2) (d_i A^a_j - d_j A^a_i + c^a_mn A^m_i A^n_j),

i.e. the components of F = F_ij dx^i (x) dx^j as an antisymmetric tensor.
This normalisation is the one under which the jet-space projection onto the
curvature factor reproduces F exactly, with shared finite-difference inputs
(see :mod:`gaugedress.jets`).

A gauge transformation f acts from the right:

    A^f_i = Ad_{f^-1} A_i + (f^-1 d_i f),   (A^f)^g = A^{fg}.

On the lattice the inhomogeneous term is discretised through link logarithms:
the log of f(x)^-1 f(x + h e_i) is exactly algebra valued, the symmetric
average of the two links adjacent to x is O(h^2) accurate, and for abelian
components the resulting term is an exact discrete gradient, which makes
abelian curvature covariance hold to rounding rather than to O(h^2).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import liegroup as lg
from .errors import AlgebraProjectionError, BranchCutError, ConsistencyError, SpecMismatch
from .lattice import FieldKind, Lattice, LatticeField, central_diff

_FRAME_TOL = 1e-10


# ---------------------------------------------------------------------------
# batched adjoint on coefficient arrays


def _adjoint_on_coeffs(spec: lg.GroupSpec, fmats: np.ndarray, coeffs: np.ndarray, n_form_axes: int) -> np.ndarray:
    """Apply Ad_{f^-1} sitewise to a coefficient array (..., [form axes], d)."""
    mats = np.einsum("...a,aij->...ij", coeffs, spec.basis)
    finv = lg.inverse_many(spec, fmats)
    for _ in range(n_form_axes):
        fmats = fmats[..., None, :, :]
        finv = finv[..., None, :, :]
    conj = finv @ mats @ fmats
    out, _ = lg.project_coeffs_many(spec, conj)
    return out


# ---------------------------------------------------------------------------
# curvature


def connection_derivatives(A: LatticeField) -> np.ndarray:
    """Stack dA[..., j, k, a] = central difference along axis j of A^a_k."""
    if A.kind is not FieldKind.ONE_FORM:
        raise SpecMismatch("expected a connection (one-form) field")
    m = A.lattice.dim
    layers = [central_diff(A.data, j, A.lattice.spacing[j]) for j in range(m)]
    return np.stack(layers, axis=-3)


def curvature(A: LatticeField) -> LatticeField:
    """Curvature two-form of a connection field (exactly antisymmetric)."""
    dA = connection_derivatives(A)
    c = lg.structure_constants(A.spec)
    quad = np.einsum("amn,...im,...jn->...ija", c, A.data, A.data)
    half = 0.5 * dA + 0.25 * quad
    F = half - np.swapaxes(half, -3, -2)
    return LatticeField(A.lattice, A.spec, FieldKind.TWO_FORM, F)


# ---------------------------------------------------------------------------
# lattice gauge transformations


def _link_logs(f: LatticeField, axis: int) -> np.ndarray:
    finv = lg.inverse_many(f.spec, f.data)
    links = finv @ np.roll(f.data, -1, axis=axis)
    try:
        return lg.log_many(f.spec, links)
    except BranchCutError as exc:
        raise AlgebraProjectionError(
            f"gauge field varies too fast along axis {axis} for a principal "
            f"link logarithm; not a smooth lattice gauge transformation ({exc})"
        ) from exc


def inhomogeneous_term(f: LatticeField) -> np.ndarray:
    """Symmetric link-log discretisation of f^-1 d_i f, shape (*grid, m, d)."""
    if f.kind is not FieldKind.GROUP:
        raise SpecMismatch("expected a group-valued field")
    cols = []
    for i in range(f.lattice.dim):
        z = _link_logs(f, i)
        cols.append((z + np.roll(z, 1, axis=i)) / (2.0 * f.lattice.spacing[i]))
    return np.stack(cols, axis=-2)


def gauge_transform_connection(A: LatticeField, f: LatticeField) -> LatticeField:
    """A -> Ad_{f^-1} A + f^-1 df, the right action of gauge transformations."""
    if A.kind is not FieldKind.ONE_FORM or f.kind is not FieldKind.GROUP:
        raise SpecMismatch("need a connection field and a group-valued field")
    A.same_geometry(f)
    rotated = _adjoint_on_coeffs(A.spec, f.data, A.data, n_form_axes=1)
    return LatticeField(A.lattice, A.spec, FieldKind.ONE_FORM, rotated + inhomogeneous_term(f))


def gauge_transform_curvature(F: LatticeField, f: LatticeField) -> LatticeField:
    """F -> Ad_{f^-1} F sitewise; the output is re-antisymmetrised exactly."""
    if F.kind is not FieldKind.TWO_FORM or f.kind is not FieldKind.GROUP:
        raise SpecMismatch("need a curvature field and a group-valued field")
    F.same_geometry(f)
    rotated = _adjoint_on_coeffs(F.spec, f.data, F.data, n_form_axes=2)
    out = 0.5 * (rotated - np.swapaxes(rotated, -3, -2))
    return LatticeField(F.lattice, F.spec, FieldKind.TWO_FORM, out)


# ---------------------------------------------------------------------------
# the C^2 representation of su2xu1 (scalar doublets)


def rho_many(spec: lg.GroupSpec, gmats: np.ndarray) -> np.ndarray:
    """rho(b, a) = a * b as 2x2 matrices, batched."""
    if spec.id is not lg.GroupId.SU2xU1:
        raise SpecMismatch("the doublet representation needs the su2xu1 group")
    return gmats[..., 2, 2][..., None, None] * gmats[..., :2, :2]


def rho_algebra_many(spec: lg.GroupSpec, coeffs: np.ndarray) -> np.ndarray:
    """Induced algebra representation: X -> X_su2 + i X^3 * I."""
    if spec.id is not lg.GroupId.SU2xU1:
        raise SpecMismatch("the doublet representation needs the su2xu1 group")
    su2_basis = lg.su2().basis
    out = np.einsum("...a,aij->...ij", coeffs[..., :3], su2_basis)
    return out + 1j * coeffs[..., 3][..., None, None] * np.eye(2)


def scalar_gauge_transform(phi: LatticeField, f: LatticeField) -> LatticeField:
    """phi -> rho(f^-1) phi sitewise."""
    if phi.kind is not FieldKind.SCALAR:
        raise SpecMismatch("expected a scalar doublet field")
    phi.same_geometry(f)
    rep = rho_many(f.spec, lg.inverse_many(f.spec, f.data))
    return LatticeField(phi.lattice, phi.spec, FieldKind.SCALAR,
                        np.einsum("...ij,...j->...i", rep, phi.data))


def covariant_derivative(phi: LatticeField, A: LatticeField) -> tuple[LatticeField, ...]:
    """(D_i phi) = d_i phi + rho'(A_i) phi, one scalar field per direction."""
    if phi.kind is not FieldKind.SCALAR or A.kind is not FieldKind.ONE_FORM:
        raise SpecMismatch("need a scalar doublet and a connection field")
    phi.same_geometry(A)
    out = []
    for i in range(phi.lattice.dim):
        rep = rho_algebra_many(A.spec, A.data[..., i, :])
        term = np.einsum("...ij,...j->...i", rep, phi.data)
        grad = central_diff(phi.data, i, phi.lattice.spacing[i])
        out.append(LatticeField(phi.lattice, phi.spec, FieldKind.SCALAR, grad + term))
    return tuple(out)


# ---------------------------------------------------------------------------
# point frames: exact one-point identities


@dataclass(frozen=True, eq=False)
class PointFrame:
    """One-point sample with independently supplied differentials.

    Lattice finite differences break the Leibniz rule at O(h^2); a frame
    carries exact tangent data instead, so every continuum identity can be
    checked to machine precision.  ``df[i]`` is the matrix value of the i-th
    partial of f, and must satisfy f^-1 df_i in the algebra.
    """

    spec: lg.GroupSpec
    A: tuple[lg.AlgebraVector, ...]
    f: lg.GroupElement
    df: tuple[np.ndarray, ...]
    u: lg.GroupElement | None = None
    du: tuple[np.ndarray, ...] | None = None
    phi: np.ndarray | None = None
    dphi: tuple[np.ndarray, ...] | None = None

    def __post_init__(self):
        if len(self.df) != len(self.A):
            raise ConsistencyError("need one df per direction")
        _check_algebra_tangent(self.spec, self.f, self.df, "f")
        if (self.u is None) != (self.du is None):
            raise ConsistencyError("u and du must be supplied together")
        if self.u is not None:
            _check_algebra_tangent(self.spec, self.u, self.du, "u")

    @property
    def dim(self) -> int:
        return len(self.A)


def _check_algebra_tangent(spec, g, dg, name):
    ginv = lg.inverse_many(spec, g.matrix[None])[0]
    for i, d in enumerate(dg):
        _, residual = lg.project_coeffs_many(spec, (ginv @ d)[None])
        if residual > _FRAME_TOL:
            raise ConsistencyError(
                f"{name}^-1 d{name}_{i} is {residual:.3e} away from the algebra"
            )


def transform_point_connection(
    spec: lg.GroupSpec,
    A: tuple[lg.AlgebraVector, ...],
    g: lg.GroupElement,
    dg: tuple[np.ndarray, ...],
) -> tuple[lg.AlgebraVector, ...]:
    ginv = g.inverse()
    out = []
    for Ai, dgi in zip(A, dg):
        rotated = lg.adjoint_algebra(ginv, Ai)
        inhom = lg.algebra_from_matrix(spec, ginv.matrix @ dgi)
        out.append(lg.AlgebraVector(spec, rotated.coeffs + inhom.coeffs))
    return tuple(out)


def pointframe_transform(frame: PointFrame) -> PointFrame:
    """Apply the gauge change recorded in the frame and consume it.

    The connection entries transform by the usual rule, the dressing entry by
    the left action u -> f^-1 u with the product rule on du, and the doublet
    by rho(f^-1).  The returned frame carries f = identity, df = 0.
    """
    spec, f, df = frame.spec, frame.f, frame.df
    finv = f.inverse()
    A_new = transform_point_connection(spec, frame.A, f, df)

    u_new = du_new = None
    if frame.u is not None:
        u_new = finv @ frame.u
        du_new = tuple(
            -finv.matrix @ dfi @ finv.matrix @ frame.u.matrix + finv.matrix @ dui
            for dfi, dui in zip(df, frame.du)
        )

    phi_new = dphi_new = None
    if frame.phi is not None:
        rep = rho_many(spec, finv.matrix[None])[0]
        phi_new = rep @ frame.phi
        if frame.dphi is not None:
            # d(rho(f^-1)) phi + rho(f^-1) dphi, with d(f^-1) = -f^-1 df f^-1
            dphi_new = tuple(
                rho_many(spec, (-finv.matrix @ dfi @ finv.matrix)[None])[0] @ frame.phi
                + rep @ dphii
                for dfi, dphii in zip(df, frame.dphi)
            )

    zero = tuple(np.zeros((spec.rep_dim, spec.rep_dim), dtype=complex) for _ in df)
    return PointFrame(spec, A_new, lg.identity(spec), zero, u_new, du_new, phi_new, dphi_new)


def frame_with_transformer(frame: PointFrame, g: lg.GroupElement, dg: tuple[np.ndarray, ...]) -> PointFrame:
    """Copy of the frame carrying (g, dg) as its pending gauge change."""
    return replace(frame, f=g, df=dg)


def product_differential(
    f: lg.GroupElement, df: tuple[np.ndarray, ...], g: lg.GroupElement, dg: tuple[np.ndarray, ...]
) -> tuple[np.ndarray, ...]:
    """d(fg)_i = df_i g + f dg_i."""
    return tuple(dfi @ g.matrix + f.matrix @ dgi for dfi, dgi in zip(df, dg))
