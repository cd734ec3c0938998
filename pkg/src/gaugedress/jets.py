"""First-jet fiber coordinates of a connection and their canonical splitting.

A jet sample holds (x, A^a_j, A^a_jk) where dA[j][k][a] = A^a_jk is the
derivative *along axis j* of the component A^a_k.  The fiber splits into a
curvature part and its complement:

    pr2_jk = (1/2) (A_jk - A_kj + c^l_ab A^a_j A^b_k)
    pr1_jk = (1/2) (A_jk + A_kj - c^l_ab A^a_j A^b_k)

so pr1 + pr2 = dA identically, pr2 is antisymmetric in (j, k), and pr2 of the
jet of a lattice connection equals the stored curvature array at that site
(both sides are built from the same central differences).  The index
convention dA[j][k] = d_j A_k is forced by that last identity: with the
opposite placement pr2 picks up the wrong sign on the quadratic term and is
neither flat on pure gauges nor gauge covariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gauge as gg
from . import liegroup as lg
from .errors import NoSplitError, SpecMismatch
from .lattice import FieldKind, LatticeField


@dataclass(frozen=True, eq=False)
class JetSample:
    spec: lg.GroupSpec
    x: tuple[float, ...]
    A: np.ndarray   # (m, d)
    dA: np.ndarray  # (m, m, d), no symmetry assumed

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        dA = np.asarray(self.dA, dtype=float)
        m, d = A.shape
        if dA.shape != (m, m, d) or d != self.spec.algebra_dim:
            raise SpecMismatch(f"jet shapes A {A.shape}, dA {dA.shape} inconsistent")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "dA", dA)

    @property
    def dim(self) -> int:
        return self.A.shape[0]


def jet_of_connection(A: LatticeField, site: tuple[int, ...]) -> JetSample:
    """Sample the first jet of a connection field at a lattice site."""
    if A.kind is not FieldKind.ONE_FORM:
        raise SpecMismatch("expected a connection field")
    full = gg.connection_derivatives(A)
    return JetSample(A.spec, A.lattice.site_coords(site), A.data[site], full[site])


def _quad(jet: JetSample) -> np.ndarray:
    c = lg.structure_constants(jet.spec)
    return np.einsum("lab,ja,kb->jkl", c, jet.A, jet.A)


def pr2(jet: JetSample) -> np.ndarray:
    """Curvature coordinates of the jet, antisymmetric (m, m, d)."""
    return 0.5 * (jet.dA - np.swapaxes(jet.dA, 0, 1) + _quad(jet))


def pr1(jet: JetSample) -> np.ndarray:
    """Complementary (second-jet) coordinates; pr1 + pr2 = dA exactly.

    Symmetric in (j, k) only when the quadratic term vanishes (abelian
    groups, or A = 0): the quadratic correction is antisymmetric and is what
    makes the projection intrinsic rather than a plain symmetrisation.
    """
    return 0.5 * (jet.dA + np.swapaxes(jet.dA, 0, 1) - _quad(jet))


def jet_delta(jet: JetSample) -> JetSample:
    """Project every fiber coordinate onto the j factor of the algebra."""
    split = jet.spec.product_split
    if split is None:
        raise NoSplitError(f"group {jet.spec.id.value} has no h x j split")
    keep = list(split.j_indices)
    A = np.zeros_like(jet.A)
    dA = np.zeros_like(jet.dA)
    A[..., keep] = jet.A[..., keep]
    dA[..., keep] = jet.dA[..., keep]
    return JetSample(jet.spec, jet.x, A, dA)


def jet_to_dict(jet: JetSample) -> dict:
    """JSON-ready form; dA serialised row major as dA[j][k][a]."""
    return {
        "x": list(jet.x),
        "A": jet.A.tolist(),
        "dA": jet.dA.tolist(),
    }
