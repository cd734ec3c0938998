"""Matrix Lie groups: U(1), SU(2), SU(2)xU(1) and the affine ax+b group.

Everything is concrete.  A group is a :class:`GroupSpec` holding the defining
complex matrix representation and a fixed algebra basis; a group element is a
matrix; an algebra element is its real coefficient vector in that basis.

Fixed bases:

* ``u1``      1x1 matrices, basis ``(i)``.
* ``su2``     2x2 special unitary, basis ``e_a = -(i/2) sigma_a`` so that
              ``[e_1, e_2] = e_3`` and cyclic (structure constants are the
              Levi-Civita symbol).
* ``su2xu1``  block diagonal 3x3: a 2x2 su2 block plus a 1x1 u1 block, with
              the product split h = su2 (indices 0..2), j = u1 (index 3).
* ``affine``  real upper triangular ``[[a, b], [0, 1]]`` with a > 0.  Its
              split is h = scalings, j = translations; the two factors do not
              commute, which is exactly what the reduction counterexample
              needs.

The private ``*_many`` helpers are vectorised over arbitrary leading axes and
are reused by the lattice layer; the public operations work on single
elements.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .errors import AlgebraProjectionError, BranchCutError, NoSplitError, SpecMismatch

_BRANCH_TOL = 1e-12  # reject principal logs this close to the cut
_UNITARY_TOL = 1e-10

_SIGMA = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


class GroupId(str, enum.Enum):
    U1 = "u1"
    SU2 = "su2"
    SU2xU1 = "su2xu1"
    AFFINE = "affine"


@dataclass(frozen=True, eq=False)
class ProductSplit:
    """Index split of the algebra basis into the h and j factors."""

    h_indices: tuple[int, ...]
    j_indices: tuple[int, ...]
    h_id: GroupId
    j_id: GroupId


@dataclass(frozen=True, eq=False)
class GroupSpec:
    id: GroupId
    rep_dim: int
    algebra_dim: int
    basis: np.ndarray  # (algebra_dim, rep_dim, rep_dim) complex
    unitary: bool
    product_split: ProductSplit | None = None

    def __repr__(self):
        return f"GroupSpec({self.id.value})"


@functools.lru_cache(maxsize=None)
def u1() -> GroupSpec:
    basis = np.array([[[1j]]])
    return GroupSpec(GroupId.U1, 1, 1, basis, unitary=True)


@functools.lru_cache(maxsize=None)
def su2() -> GroupSpec:
    basis = -0.5j * _SIGMA
    return GroupSpec(GroupId.SU2, 2, 3, basis, unitary=True)


@functools.lru_cache(maxsize=None)
def su2xu1() -> GroupSpec:
    basis = np.zeros((4, 3, 3), dtype=complex)
    basis[:3, :2, :2] = -0.5j * _SIGMA
    basis[3, 2, 2] = 1j
    split = ProductSplit((0, 1, 2), (3,), GroupId.SU2, GroupId.U1)
    return GroupSpec(GroupId.SU2xU1, 3, 4, basis, unitary=True, product_split=split)


@functools.lru_cache(maxsize=None)
def affine_plus() -> GroupSpec:
    # e_0 generates scalings (the h factor), e_1 translations (the j factor).
    basis = np.zeros((2, 2, 2), dtype=complex)
    basis[0, 0, 0] = 1.0
    basis[1, 0, 1] = 1.0
    split = ProductSplit((0,), (1,), GroupId.AFFINE, GroupId.AFFINE)
    return GroupSpec(GroupId.AFFINE, 2, 2, basis, unitary=False, product_split=split)


_FACTORIES = {
    GroupId.U1: u1,
    GroupId.SU2: su2,
    GroupId.SU2xU1: su2xu1,
    GroupId.AFFINE: affine_plus,
}


def get_group(name: str | GroupId) -> GroupSpec:
    try:
        return _FACTORIES[GroupId(name)]()
    except ValueError:
        raise SpecMismatch(f"unknown group {name!r}") from None


# ---------------------------------------------------------------------------
# elements and algebra vectors


@dataclass(frozen=True, eq=False)
class GroupElement:
    spec: GroupSpec
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", np.asarray(self.matrix, dtype=complex))
        check_membership_many(self.spec, self.matrix[None])

    def inverse(self) -> "GroupElement":
        return GroupElement(self.spec, inverse_many(self.spec, self.matrix[None])[0])

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if other.spec is not self.spec:
            raise SpecMismatch("cannot multiply elements of different groups")
        return GroupElement(self.spec, self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class AlgebraVector:
    spec: GroupSpec
    coeffs: np.ndarray  # (algebra_dim,) real

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (self.spec.algebra_dim,):
            raise SpecMismatch(
                f"expected {self.spec.algebra_dim} coefficients, got shape {c.shape}"
            )
        object.__setattr__(self, "coeffs", c)

    def to_matrix(self) -> np.ndarray:
        return np.einsum("a,aij->ij", self.coeffs, self.spec.basis)

    def norm_inf(self) -> float:
        return float(np.abs(self.coeffs).max())


def identity(spec: GroupSpec) -> GroupElement:
    return GroupElement(spec, np.eye(spec.rep_dim, dtype=complex))


def zero_algebra(spec: GroupSpec) -> AlgebraVector:
    return AlgebraVector(spec, np.zeros(spec.algebra_dim))


# ---------------------------------------------------------------------------
# basis projection


@functools.lru_cache(maxsize=None)
def _basis_pinv(spec: GroupSpec) -> np.ndarray:
    # All supported bases are orthogonal in the Frobenius inner product, so
    # the pseudoinverse is conj(e_a)/||e_a||^2 row by row; building it this
    # way keeps the entries exact binary floats (pinv leaves ~1e-16 junk).
    flat = spec.basis.reshape(spec.algebra_dim, -1)
    norms = np.sum(np.abs(flat) ** 2, axis=1)
    return np.conj(flat) / norms[:, None]  # (algebra_dim, rep_dim^2)


def project_coeffs_many(spec: GroupSpec, mats: np.ndarray) -> tuple[np.ndarray, float]:
    """Least-squares coefficients of ``mats`` in the algebra basis.

    Returns ``(coeffs, residual)`` where residual is the sup norm of the
    non-algebra remainder over the whole batch.
    """
    flat = mats.reshape(mats.shape[:-2] + (-1,))
    cplx = np.einsum("ak,...k->...a", _basis_pinv(spec), flat)
    coeffs = cplx.real
    rebuilt = np.einsum("...a,aij->...ij", coeffs, spec.basis)
    residual = float(np.abs(mats - rebuilt).max()) if mats.size else 0.0
    return coeffs, residual


def algebra_from_matrix(spec: GroupSpec, mat: np.ndarray, atol: float | None = None) -> AlgebraVector:
    coeffs, residual = project_coeffs_many(spec, np.asarray(mat, dtype=complex)[None])
    if atol is not None and residual > atol:
        raise AlgebraProjectionError(
            f"matrix lies {residual:.3e} away from the {spec.id.value} algebra"
        )
    return AlgebraVector(spec, coeffs[0])


# ---------------------------------------------------------------------------
# membership / inverses (vectorised over leading axes)


def check_membership_many(spec: GroupSpec, mats: np.ndarray, tol: float = _UNITARY_TOL) -> None:
    if mats.shape[-2:] != (spec.rep_dim, spec.rep_dim):
        raise SpecMismatch(
            f"expected {spec.rep_dim}x{spec.rep_dim} matrices for {spec.id.value}"
        )
    if spec.unitary:
        eye = np.eye(spec.rep_dim)
        gram = np.conj(np.swapaxes(mats, -1, -2)) @ mats
        err = np.abs(gram - eye).max()
        if err > tol:
            raise SpecMismatch(f"matrix not unitary to tolerance ({err:.3e})")
        if spec.id in (GroupId.SU2, GroupId.SU2xU1):
            block = mats[..., :2, :2]
            det = block[..., 0, 0] * block[..., 1, 1] - block[..., 0, 1] * block[..., 1, 0]
            err = np.abs(det - 1.0).max()
            if err > tol:
                raise SpecMismatch(f"su2 block determinant off by {err:.3e}")
        if spec.id is GroupId.SU2xU1:
            off = max(
                np.abs(mats[..., :2, 2]).max(),
                np.abs(mats[..., 2, :2]).max(),
            )
            if off > tol:
                raise SpecMismatch(f"matrix not block diagonal ({off:.3e})")
    else:  # affine: [[a, b], [0, 1]], a > 0, real entries
        if np.abs(mats.imag).max() > tol:
            raise SpecMismatch("affine element must be real")
        bottom = np.abs(mats[..., 1, 0]).max()
        unit = np.abs(mats[..., 1, 1] - 1.0).max()
        if max(bottom, unit) > tol:
            raise SpecMismatch("affine element must have bottom row (0, 1)")
        if mats[..., 0, 0].real.min() <= 0:
            raise SpecMismatch("affine element must have positive scaling entry")


def inverse_many(spec: GroupSpec, mats: np.ndarray) -> np.ndarray:
    if spec.unitary:
        return np.conj(np.swapaxes(mats, -1, -2))
    out = np.zeros_like(mats)
    a = mats[..., 0, 0]
    out[..., 0, 0] = 1.0 / a
    out[..., 0, 1] = -mats[..., 0, 1] / a
    out[..., 1, 1] = 1.0
    return out


# ---------------------------------------------------------------------------
# exponential / logarithm (closed forms, vectorised)


def _exp_su2_many(coeffs: np.ndarray) -> np.ndarray:
    theta = np.linalg.norm(coeffs, axis=-1)
    half = 0.5 * theta
    # sin(theta/2)/theta with the theta -> 0 limit 1/2
    sinc_half = 0.5 * np.sinc(theta / (2.0 * np.pi))
    sigma_dot = np.einsum("...a,aij->...ij", coeffs, _SIGMA)
    eye = np.eye(2)
    return np.cos(half)[..., None, None] * eye - 1j * sinc_half[..., None, None] * sigma_dot


def _log_su2_many(mats: np.ndarray) -> np.ndarray:
    anti = 0.5 * (mats - np.conj(np.swapaxes(mats, -1, -2)))
    # mats = cos(t/2) I - i sin(t/2) n.sigma, so  i*tr(anti@sigma_a)/2 = sin(t/2) n_a
    s_vec = np.real(1j * np.einsum("...ij,aji->...a", anti, _SIGMA) / 2.0)
    s = np.linalg.norm(s_vec, axis=-1)
    c = np.real(np.trace(mats, axis1=-2, axis2=-1)) / 2.0
    half = np.arctan2(s, c)
    if np.any(np.pi - half <= _BRANCH_TOL):
        raise BranchCutError("su2 logarithm at the branch boundary (trace -2)")
    factor = np.where(s < 1e-12, 2.0, 2.0 * half / np.where(s < 1e-12, 1.0, s))
    return factor[..., None] * s_vec


def _log_u1_many(entries: np.ndarray) -> np.ndarray:
    ang = np.angle(entries)
    if np.any(np.pi - np.abs(ang) <= _BRANCH_TOL):
        raise BranchCutError("u1 logarithm at the branch boundary (phase -1)")
    return ang


def _affine_phi(alpha: np.ndarray) -> np.ndarray:
    # (e^alpha - 1)/alpha with the alpha -> 0 limit 1
    small = np.abs(alpha) < 1e-8
    safe = np.where(small, 1.0, alpha)
    return np.where(small, 1.0 + alpha / 2.0, np.expm1(safe) / safe)


def exp_many(spec: GroupSpec, coeffs: np.ndarray) -> np.ndarray:
    """Matrix exponential of ``sum_a coeffs^a e_a`` over leading axes."""
    coeffs = np.asarray(coeffs, dtype=float)
    lead = coeffs.shape[:-1]
    if spec.id is GroupId.U1:
        out = np.zeros(lead + (1, 1), dtype=complex)
        out[..., 0, 0] = np.exp(1j * coeffs[..., 0])
        return out
    if spec.id is GroupId.SU2:
        return _exp_su2_many(coeffs)
    if spec.id is GroupId.SU2xU1:
        out = np.zeros(lead + (3, 3), dtype=complex)
        out[..., :2, :2] = _exp_su2_many(coeffs[..., :3])
        out[..., 2, 2] = np.exp(1j * coeffs[..., 3])
        return out
    # affine
    alpha, beta = coeffs[..., 0], coeffs[..., 1]
    out = np.zeros(lead + (2, 2), dtype=complex)
    out[..., 0, 0] = np.exp(alpha)
    out[..., 0, 1] = beta * _affine_phi(alpha)
    out[..., 1, 1] = 1.0
    return out


def log_many(spec: GroupSpec, mats: np.ndarray) -> np.ndarray:
    """Principal logarithm coefficients; raises BranchCutError at the cut."""
    mats = np.asarray(mats, dtype=complex)
    lead = mats.shape[:-2]
    if spec.id is GroupId.U1:
        return _log_u1_many(mats[..., 0, 0])[..., None]
    if spec.id is GroupId.SU2:
        return _log_su2_many(mats)
    if spec.id is GroupId.SU2xU1:
        out = np.zeros(lead + (4,))
        out[..., :3] = _log_su2_many(mats[..., :2, :2])
        out[..., 3] = _log_u1_many(mats[..., 2, 2])
        return out
    a = mats[..., 0, 0].real
    alpha = np.log(a)
    beta = mats[..., 0, 1].real / _affine_phi(alpha)
    return np.stack([alpha, beta], axis=-1)


def exp_map(X: AlgebraVector) -> GroupElement:
    return GroupElement(X.spec, exp_many(X.spec, X.coeffs[None])[0])


def log_map(g: GroupElement) -> AlgebraVector:
    return AlgebraVector(g.spec, log_many(g.spec, g.matrix[None])[0])


# ---------------------------------------------------------------------------
# adjoint actions, brackets, structure constants


def adjoint_coeffs_many(spec: GroupSpec, gmats: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficients of ``g X g^-1`` for batched g and X."""
    mats = np.einsum("...a,aij->...ij", coeffs, spec.basis)
    ginv = inverse_many(spec, gmats)
    conj = gmats @ mats @ ginv
    out, _ = project_coeffs_many(spec, conj)
    return out


def adjoint_algebra(g: GroupElement, X: AlgebraVector) -> AlgebraVector:
    if g.spec is not X.spec:
        raise SpecMismatch("adjoint_algebra: group and algebra specs differ")
    return AlgebraVector(g.spec, adjoint_coeffs_many(g.spec, g.matrix[None], X.coeffs[None])[0])


def adjoint_group(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.spec is not h.spec:
        raise SpecMismatch("adjoint_group: specs differ")
    ginv = inverse_many(g.spec, g.matrix[None])[0]
    return GroupElement(g.spec, g.matrix @ h.matrix @ ginv)


def bracket(X: AlgebraVector, Y: AlgebraVector) -> AlgebraVector:
    if X.spec is not Y.spec:
        raise SpecMismatch("bracket: specs differ")
    a, b = X.to_matrix(), Y.to_matrix()
    return algebra_from_matrix(X.spec, a @ b - b @ a)


@functools.lru_cache(maxsize=None)
def structure_constants(spec: GroupSpec) -> np.ndarray:
    """Tensor c[a, b, c] with [e_b, e_c] = sum_a c[a, b, c] e_a."""
    d = spec.algebra_dim
    c = np.zeros((d, d, d))
    for b in range(d):
        for k in range(d):
            comm = spec.basis[b] @ spec.basis[k] - spec.basis[k] @ spec.basis[b]
            coeffs, _ = project_coeffs_many(spec, comm[None])
            c[:, b, k] = coeffs[0]
    return c


# ---------------------------------------------------------------------------
# product splits


def _require_split(spec: GroupSpec) -> ProductSplit:
    if spec.product_split is None:
        raise NoSplitError(f"group {spec.id.value} has no h x j split")
    return spec.product_split


def project_subalgebra(X: AlgebraVector, part: str) -> AlgebraVector:
    """Zero out the coefficients of the complementary factor ('h' or 'j')."""
    split = _require_split(X.spec)
    keep = split.h_indices if part == "h" else split.j_indices if part == "j" else None
    if keep is None:
        raise ValueError("part must be 'h' or 'j'")
    out = np.zeros_like(X.coeffs)
    out[list(keep)] = X.coeffs[list(keep)]
    return AlgebraVector(X.spec, out)


def group_split(g: GroupElement) -> tuple[GroupElement, GroupElement]:
    """Unique factorisation g = j @ h with h in H and j in J (embedded).

    For the direct product su2xu1 the factors commute; for the affine group
    they do not, and only g = j @ h is guaranteed.
    """
    spec = g.spec
    _require_split(spec)
    if spec.id is GroupId.SU2xU1:
        h = np.eye(3, dtype=complex)
        h[:2, :2] = g.matrix[:2, :2]
        j = np.eye(3, dtype=complex)
        j[2, 2] = g.matrix[2, 2]
        return GroupElement(spec, h), GroupElement(spec, j)
    # affine: [[a, b], [0, 1]] = [[1, b], [0, 1]] @ [[a, 0], [0, 1]]
    a = g.matrix[0, 0].real
    b = g.matrix[0, 1].real
    h = np.array([[a, 0.0], [0.0, 1.0]], dtype=complex)
    j = np.array([[1.0, b], [0.0, 1.0]], dtype=complex)
    return GroupElement(spec, h), GroupElement(spec, j)


# ---------------------------------------------------------------------------
# seeded generators


def random_algebra(spec: GroupSpec, seed: int, scale: float = 1.0) -> AlgebraVector:
    rng = np.random.default_rng(seed)
    return AlgebraVector(spec, scale * rng.standard_normal(spec.algebra_dim))


def random_group_element(spec: GroupSpec, seed: int, scale: float = 1.0) -> GroupElement:
    return exp_map(random_algebra(spec, seed, scale))
