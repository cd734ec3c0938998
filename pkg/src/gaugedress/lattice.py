"""Periodic lattice over the flat torus and the fields living on it.

Coordinates are x^i = 2*pi*k/n_i, k = 0..n_i-1, so every field is periodic by
construction and central differences wrap around.  Field data is stored as one
numpy array per field with the grid axes first:

* group      (*grid, rep_dim, rep_dim)   complex
* algebra    (*grid, d)                  real coefficients
* one_form   (*grid, m, d)               A^a_i, direction axis then algebra
* two_form   (*grid, m, m, d)            antisymmetric in the two form axes
* scalar     (*grid, 2)                  complex doublet
* momentum   (*grid, m, m, d)            dual coefficients, antisymmetric
* matrix     (*grid, rep_dim, rep_dim)   derivative of a group field; not a
                                         group element anymore
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from . import liegroup as lg
from .errors import BandLimitError, DegenerateFit, SpecMismatch


class FieldKind(str, enum.Enum):
    GROUP = "group"
    ALGEBRA = "algebra"
    ONE_FORM = "one_form"
    TWO_FORM = "two_form"
    SCALAR = "scalar"
    MOMENTUM = "momentum"
    MATRIX = "matrix"


@dataclass(frozen=True, eq=False)
class Lattice:
    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not 2 <= len(sizes) <= 4:
            raise ValueError("base dimension must be between 2 and 4")
        if any(n < 4 for n in sizes):
            raise ValueError("need at least 4 sites per axis")

    @property
    def dim(self) -> int:
        return len(self.sizes)

    @property
    def spacing(self) -> tuple[float, ...]:
        return tuple(2.0 * np.pi / n for n in self.sizes)

    def axis_coords(self, i: int) -> np.ndarray:
        return np.arange(self.sizes[i]) * self.spacing[i]

    def meshgrid(self) -> list[np.ndarray]:
        return np.meshgrid(*(self.axis_coords(i) for i in range(self.dim)), indexing="ij")

    def site_coords(self, site: tuple[int, ...]) -> tuple[float, ...]:
        return tuple(site[i] * self.spacing[i] for i in range(self.dim))


def _expected_shape(lattice: Lattice, spec: lg.GroupSpec, kind: FieldKind) -> tuple[int, ...]:
    g, m, d, r = lattice.sizes, lattice.dim, spec.algebra_dim, spec.rep_dim
    return {
        FieldKind.GROUP: g + (r, r),
        FieldKind.MATRIX: g + (r, r),
        FieldKind.ALGEBRA: g + (d,),
        FieldKind.ONE_FORM: g + (m, d),
        FieldKind.TWO_FORM: g + (m, m, d),
        FieldKind.MOMENTUM: g + (m, m, d),
        FieldKind.SCALAR: g + (2,),
    }[kind]


@dataclass(frozen=True, eq=False)
class LatticeField:
    lattice: Lattice
    spec: lg.GroupSpec
    kind: FieldKind
    data: np.ndarray

    def __post_init__(self):
        want_complex = self.kind in (FieldKind.GROUP, FieldKind.MATRIX, FieldKind.SCALAR)
        data = np.asarray(self.data, dtype=complex if want_complex else float)
        object.__setattr__(self, "data", data)
        shape = _expected_shape(self.lattice, self.spec, self.kind)
        if data.shape != shape:
            raise SpecMismatch(f"{self.kind.value} field shape {data.shape}, expected {shape}")
        if self.kind is FieldKind.GROUP:
            lg.check_membership_many(self.spec, data)
        if self.kind in (FieldKind.TWO_FORM, FieldKind.MOMENTUM):
            if not np.array_equal(data, -np.swapaxes(data, -3, -2)):
                raise SpecMismatch(f"{self.kind.value} field must be exactly antisymmetric")

    def same_geometry(self, other: "LatticeField") -> None:
        if self.lattice is not other.lattice and self.lattice.sizes != other.lattice.sizes:
            raise SpecMismatch("fields live on different lattices")
        if self.spec is not other.spec:
            raise SpecMismatch("fields live over different groups")


def zero_field(lattice: Lattice, spec: lg.GroupSpec, kind: FieldKind) -> LatticeField:
    shape = _expected_shape(lattice, spec, kind)
    if kind is FieldKind.GROUP:
        data = np.zeros(shape, dtype=complex)
        data[...] = np.eye(spec.rep_dim)
        return LatticeField(lattice, spec, kind, data)
    return LatticeField(lattice, spec, kind, np.zeros(shape))


# ---------------------------------------------------------------------------
# finite differences


def central_diff(data: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(data, -1, axis=axis) - np.roll(data, 1, axis=axis)) / (2.0 * h)


def partial_derivative(field: LatticeField, direction: int) -> LatticeField:
    """Componentwise second-order central difference along a lattice axis."""
    h = field.lattice.spacing[direction]
    out = central_diff(field.data, direction, h)
    kind = FieldKind.MATRIX if field.kind is FieldKind.GROUP else field.kind
    return LatticeField(field.lattice, field.spec, kind, out)


# ---------------------------------------------------------------------------
# norms


def sup_norm(field: LatticeField | np.ndarray) -> float:
    data = field.data if isinstance(field, LatticeField) else np.asarray(field)
    return float(np.abs(data).max()) if data.size else 0.0


def l2_norm(field: LatticeField | np.ndarray) -> float:
    data = field.data if isinstance(field, LatticeField) else np.asarray(field)
    return float(np.sqrt(np.mean(np.abs(data) ** 2))) if data.size else 0.0


def field_difference(a: LatticeField, b: LatticeField) -> float:
    a.same_geometry(b)
    return float(np.abs(a.data - b.data).max())


# ---------------------------------------------------------------------------
# band-limited random fields


def _mode_list(m: int, max_mode: int) -> list[tuple[int, ...]]:
    """Zero mode plus lexicographically positive modes with |k|_inf <= max_mode."""
    modes = [(0,) * m]
    for k in itertools.product(range(-max_mode, max_mode + 1), repeat=m):
        nz = next((v for v in k if v != 0), 0)
        if nz > 0:
            modes.append(k)
    return modes


def _smooth_components(
    lattice: Lattice, rng: np.random.Generator, n_components: int, max_mode: int, amplitude: float
) -> np.ndarray:
    """n_components real trig polynomials sampled on the grid, shape (*grid, n)."""
    modes = _mode_list(lattice.dim, max_mode)
    grids = lattice.meshgrid()
    norm = amplitude / np.sqrt(len(modes))
    out = np.zeros(lattice.sizes + (n_components,))
    for comp in range(n_components):
        acc = np.zeros(lattice.sizes)
        for k in modes:
            a, b = rng.standard_normal(2)
            phase = sum(k[i] * grids[i] for i in range(lattice.dim))
            acc += a * np.cos(phase) + b * np.sin(phase)
        out[..., comp] = norm * acc
    return out


def random_smooth_field(
    lattice: Lattice,
    spec: lg.GroupSpec,
    kind: FieldKind,
    seed: int,
    max_mode: int = 2,
    amplitude: float = 1.0,
) -> LatticeField:
    """Deterministic band-limited field; the same seed re-evaluates the same
    continuum function on any grid (mode coefficients do not depend on sizes)."""
    if max_mode < 0 or max_mode > min(lattice.sizes) // 4:
        raise BandLimitError(
            f"max_mode {max_mode} outside [0, min(n)/4] for sizes {lattice.sizes}"
        )
    rng = np.random.default_rng(seed)
    m, d = lattice.dim, spec.algebra_dim

    if kind is FieldKind.ALGEBRA:
        return LatticeField(lattice, spec, kind, _smooth_components(lattice, rng, d, max_mode, amplitude))
    if kind is FieldKind.GROUP:
        coeffs = _smooth_components(lattice, rng, d, max_mode, amplitude)
        return LatticeField(lattice, spec, kind, lg.exp_many(spec, coeffs))
    if kind is FieldKind.ONE_FORM:
        flat = _smooth_components(lattice, rng, m * d, max_mode, amplitude)
        return LatticeField(lattice, spec, kind, flat.reshape(lattice.sizes + (m, d)))
    if kind in (FieldKind.TWO_FORM, FieldKind.MOMENTUM):
        pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
        flat = _smooth_components(lattice, rng, len(pairs) * d, max_mode, amplitude)
        flat = flat.reshape(lattice.sizes + (len(pairs), d))
        data = np.zeros(lattice.sizes + (m, m, d))
        for idx, (i, j) in enumerate(pairs):
            data[..., i, j, :] = flat[..., idx, :]
            data[..., j, i, :] = -flat[..., idx, :]
        return LatticeField(lattice, spec, kind, data)
    if kind is FieldKind.SCALAR:
        comps = _smooth_components(lattice, rng, 4, max_mode, amplitude)
        data = comps[..., 0] + 1j * comps[..., 1], comps[..., 2] + 1j * comps[..., 3]
        return LatticeField(lattice, spec, kind, np.stack(data, axis=-1))
    raise SpecMismatch(f"cannot generate fields of kind {kind.value}")


# ---------------------------------------------------------------------------
# convergence-order regression


def convergence_order(samples: list[tuple[float, float]]) -> float:
    """Least-squares slope of log(error) against log(h)."""
    if len(samples) < 2:
        raise DegenerateFit("need at least two (h, error) samples")
    h = np.array([s[0] for s in samples], dtype=float)
    e = np.array([s[1] for s in samples], dtype=float)
    if len(set(h.tolist())) < 2:
        raise DegenerateFit("spacings must be distinct")
    if np.any(h <= 0) or np.any(e <= 0):
        raise DegenerateFit("spacings and errors must be positive")
    slope = np.polyfit(np.log(h), np.log(e), 1)[0]
    return float(slope)
