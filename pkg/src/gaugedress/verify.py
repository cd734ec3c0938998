"""Machine-checkable identity suites behind `gaugedress verify`.

Each suite returns a list of CheckResults.  Exact identities carry absolute
tolerances; discretisation identities are measured as convergence orders over
a size ladder and recorded as residual = |order - 2| against a 0.2 window.
Witness checks assert that an identity *fails* by at least the tolerance
(pass means the violation was observed); they keep the negative results
honest instead of silently skipping them.

All randomness is drawn from numpy Generators seeded from the suite seed, so
a report is a pure function of (suite, seed, sizes, tol scale).
"""

from __future__ import annotations

import numpy as np

from . import dressing as dr
from . import gauge as gg
from . import jets as jt
from . import liegroup as lg
from . import reduction as rd
from .lattice import (
    FieldKind,
    Lattice,
    LatticeField,
    central_diff,
    convergence_order,
    field_difference,
    random_smooth_field,
    sup_norm,
    zero_field,
)
from .report import CheckResult, Report

SUITE_NAMES = ("liegroup", "lattice", "gauge", "dressing", "jets", "reduction")

# field parameters for the order checks: single-mode content keeps n = 16
# inside the asymptotic O(h^2) regime
_ORDER_MODE = 1
_ORDER_AMP = 0.7


def _exact(name: str, residual: float, tol: float) -> CheckResult:
    return CheckResult(name, float(residual), tol, residual <= tol)


def _witness(name: str, violation: float, bound: float) -> CheckResult:
    return CheckResult(name, float(violation), bound, violation >= bound)


def _order(name: str, samples: list[tuple[float, float]], window: float) -> CheckResult:
    est = convergence_order(samples)
    return CheckResult(name, abs(est - 2.0), window, abs(est - 2.0) <= window, order_estimate=est)


# ---------------------------------------------------------------------------
# helpers shared by suites and tests


def h_valued_group_field(lattice: Lattice, seed: int, max_mode: int = _ORDER_MODE,
                         amplitude: float = _ORDER_AMP) -> LatticeField:
    """Random smooth su2xu1 gauge field constrained to the su2 block."""
    spec = lg.su2xu1()
    f = random_smooth_field(lattice, spec, FieldKind.GROUP, seed, max_mode, amplitude)
    data = f.data.copy()
    data[..., 2, 2] = 1.0
    return LatticeField(lattice, spec, FieldKind.GROUP, data)


def j_valued_group_field(lattice: Lattice, seed: int, max_mode: int = _ORDER_MODE,
                         amplitude: float = _ORDER_AMP) -> LatticeField:
    """Random smooth su2xu1 gauge field constrained to the u1 block."""
    spec = lg.su2xu1()
    f = random_smooth_field(lattice, spec, FieldKind.GROUP, seed, max_mode, amplitude)
    data = f.data.copy()
    data[..., :2, :2] = np.eye(2)
    return LatticeField(lattice, spec, FieldKind.GROUP, data)


def offset_scalar_field(lattice: Lattice, seed: int, max_mode: int = _ORDER_MODE,
                        amplitude: float = 0.5, offset: float = 2.0) -> LatticeField:
    """Smooth doublet bounded away from zero (vacuum at (0, offset))."""
    spec = lg.su2xu1()
    phi = random_smooth_field(lattice, spec, FieldKind.SCALAR, seed, max_mode, amplitude)
    return LatticeField(lattice, spec, FieldKind.SCALAR, phi.data + np.array([0.0, offset]))


def random_frame(spec: lg.GroupSpec, seed: int, dim: int = 2, with_u: bool = False,
                 with_phi: bool = False) -> gg.PointFrame:
    """Random point frame; differentials are exact by construction
    (df_i = f W_i with W_i in the algebra)."""
    rng = np.random.default_rng(seed)
    d = spec.algebra_dim

    def alg_mat():
        return np.einsum("a,aij->ij", rng.standard_normal(d), spec.basis)

    A = tuple(lg.AlgebraVector(spec, rng.standard_normal(d)) for _ in range(dim))
    f = lg.exp_map(lg.AlgebraVector(spec, 0.7 * rng.standard_normal(d)))
    df = tuple(f.matrix @ alg_mat() for _ in range(dim))
    u = du = phi = dphi = None
    if with_u:
        u = lg.exp_map(lg.AlgebraVector(spec, 0.7 * rng.standard_normal(d)))
        du = tuple(u.matrix @ alg_mat() for _ in range(dim))
    if with_phi:
        phi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        dphi = tuple(rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(dim))
    return gg.PointFrame(spec, A, f, df, u, du, phi, dphi)


def frame_transformer(spec: lg.GroupSpec, seed: int, dim: int = 2,
                      subgroup: str | None = None) -> tuple[lg.GroupElement, tuple[np.ndarray, ...]]:
    """Random (g, dg) pair with g^-1 dg exactly in the algebra; optionally
    constrained to the h or j factor of a split group."""
    rng = np.random.default_rng(seed)
    d = spec.algebra_dim
    mask = np.ones(d)
    if subgroup is not None:
        split = spec.product_split
        keep = split.h_indices if subgroup == "h" else split.j_indices
        mask = np.zeros(d)
        mask[list(keep)] = 1.0
    g = lg.exp_map(lg.AlgebraVector(spec, 0.7 * mask * rng.standard_normal(d)))
    dg = tuple(
        g.matrix @ np.einsum("a,aij->ij", mask * rng.standard_normal(d), spec.basis)
        for _ in range(dim)
    )
    return g, dg


# ---------------------------------------------------------------------------
# liegroup suite


def _roundtrip_residual(seed: int, n_samples: int = 1000) -> float:
    rng = np.random.default_rng(seed)
    specs = (lg.u1(), lg.su2(), lg.su2xu1(), lg.affine_plus())
    worst = 0.0
    per = n_samples // len(specs)
    for spec in specs:
        coeffs = rng.uniform(-1.0, 1.0, size=(per, spec.algebra_dim))
        back = lg.log_many(spec, lg.exp_many(spec, coeffs))
        worst = max(worst, float(np.abs(back - coeffs).max()))
    return worst


def _affine_equivariance_violation(seed: int, n_samples: int = 50) -> float:
    rng = np.random.default_rng(seed)
    spec = lg.affine_plus()
    worst = 0.0
    for _ in range(n_samples):
        g = lg.exp_map(lg.AlgebraVector(spec, rng.standard_normal(2)))
        X = lg.AlgebraVector(spec, rng.standard_normal(2))
        _, j = lg.group_split(g)
        lhs = lg.project_subalgebra(lg.adjoint_algebra(g.inverse(), X), "j")
        rhs = lg.adjoint_algebra(j.inverse(), lg.project_subalgebra(X, "j"))
        worst = max(worst, float(np.abs(lhs.coeffs - rhs.coeffs).max()))
    return worst


def suite_liegroup(seed: int, sizes=None, tol_scale: float = 1.0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = [_exact("liegroup/exp-log-roundtrip", _roundtrip_residual(seed), 1e-10 * tol_scale)]

    worst_hom = worst_jac = worst_rec = 0.0
    for spec in (lg.u1(), lg.su2(), lg.su2xu1(), lg.affine_plus()):
        c = lg.structure_constants(spec)
        for _ in range(25):
            g = lg.exp_map(lg.AlgebraVector(spec, rng.standard_normal(spec.algebra_dim)))
            h = lg.exp_map(lg.AlgebraVector(spec, rng.standard_normal(spec.algebra_dim)))
            X = lg.AlgebraVector(spec, rng.standard_normal(spec.algebra_dim))
            Y = lg.AlgebraVector(spec, rng.standard_normal(spec.algebra_dim))
            Z = lg.AlgebraVector(spec, rng.standard_normal(spec.algebra_dim))
            lhs = lg.adjoint_algebra(g @ h, X)
            rhs = lg.adjoint_algebra(g, lg.adjoint_algebra(h, X))
            worst_hom = max(worst_hom, float(np.abs(lhs.coeffs - rhs.coeffs).max()))
            jac = (
                lg.bracket(X, lg.bracket(Y, Z)).coeffs
                + lg.bracket(Y, lg.bracket(Z, X)).coeffs
                + lg.bracket(Z, lg.bracket(X, Y)).coeffs
            )
            worst_jac = max(worst_jac, float(np.abs(jac).max()))
            rec = np.einsum("abc,b,c->a", c, X.coeffs, Y.coeffs)
            worst_rec = max(worst_rec, float(np.abs(rec - lg.bracket(X, Y).coeffs).max()))
    out.append(_exact("liegroup/ad-homomorphism", worst_hom, 1e-12 * tol_scale))
    out.append(_exact("liegroup/jacobi", worst_jac, 1e-12 * tol_scale))
    out.append(_exact("liegroup/structure-constants-reconstruct", worst_rec, 1e-12 * tol_scale))

    eps = np.zeros((3, 3, 3))
    for a, b, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[k, a, b], eps[k, b, a] = 1.0, -1.0
    out.append(_exact("liegroup/su2-structure-constants-exact",
                      float(np.abs(lg.structure_constants(lg.su2()) - eps).max()), 0.0))

    spec = lg.su2xu1()
    worst = 0.0
    for _ in range(200):
        g = lg.exp_map(lg.AlgebraVector(spec, rng.standard_normal(4)))
        X = lg.AlgebraVector(spec, rng.standard_normal(4))
        _, j = lg.group_split(g)
        lhs = lg.project_subalgebra(lg.adjoint_algebra(g.inverse(), X), "j")
        rhs = lg.adjoint_algebra(j.inverse(), lg.project_subalgebra(X, "j"))
        worst = max(worst, float(np.abs(lhs.coeffs - rhs.coeffs).max()))
    out.append(_exact("liegroup/split-equivariance-su2xu1", worst, 1e-12 * tol_scale))
    out.append(_witness("liegroup/split-equivariance-affine-witness",
                        _affine_equivariance_violation(seed + 1), 0.1))
    return out


# ---------------------------------------------------------------------------
# lattice suite


def suite_lattice(seed: int, sizes=(16, 32, 64), tol_scale: float = 1.0) -> list[CheckResult]:
    out = []
    lat = Lattice((16, 16))
    field = random_smooth_field(lat, lg.su2(), FieldKind.ALGEBRA, seed, 2, 1.0)
    d01 = central_diff(central_diff(field.data, 0, lat.spacing[0]), 1, lat.spacing[1])
    d10 = central_diff(central_diff(field.data, 1, lat.spacing[1]), 0, lat.spacing[0])
    out.append(_exact("lattice/fd-commutation", float(np.abs(d01 - d10).max()), 1e-13 * tol_scale))

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        x1 = la.meshgrid()[0]
        data = np.sin(x1)[..., None]
        f = LatticeField(la, lg.u1(), FieldKind.ALGEBRA, data)
        from .lattice import partial_derivative

        err = sup_norm(partial_derivative(f, 0).data - np.cos(x1)[..., None])
        samples.append((la.spacing[0], err))
    out.append(_order("lattice/derivative-order", samples, 0.2 * tol_scale))

    two = random_smooth_field(lat, lg.su2xu1(), FieldKind.TWO_FORM, seed + 1, 2, 1.0)
    anti = float(np.abs(two.data + np.swapaxes(two.data, -3, -2)).max())
    out.append(_exact("lattice/two-form-antisymmetry", anti, 0.0))

    a = random_smooth_field(lat, lg.su2xu1(), FieldKind.ONE_FORM, seed + 2, 2, 1.0)
    b = random_smooth_field(lat, lg.su2xu1(), FieldKind.ONE_FORM, seed + 2, 2, 1.0)
    identical = a.data.tobytes() == b.data.tobytes()
    out.append(_exact("lattice/generator-determinism", 0.0 if identical else 1.0, 0.0))
    return out


# ---------------------------------------------------------------------------
# gauge suite


def suite_gauge(seed: int, sizes=(16, 32, 64), tol_scale: float = 1.0) -> list[CheckResult]:
    out = []
    spec = lg.su2()

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        A = random_smooth_field(la, spec, FieldKind.ONE_FORM, seed, _ORDER_MODE, _ORDER_AMP)
        f = random_smooth_field(la, spec, FieldKind.GROUP, seed + 1, _ORDER_MODE, _ORDER_AMP)
        lhs = gg.curvature(gg.gauge_transform_connection(A, f))
        rhs = gg.gauge_transform_curvature(gg.curvature(A), f)
        samples.append((la.spacing[0], field_difference(lhs, rhs)))
    out.append(_order("gauge/curvature-covariance-order", samples, 0.2 * tol_scale))

    la = Lattice((16, 16))
    A = random_smooth_field(la, lg.u1(), FieldKind.ONE_FORM, seed + 2, 2, 1.0)
    f = random_smooth_field(la, lg.u1(), FieldKind.GROUP, seed + 3, 2, 1.0)
    res = field_difference(gg.curvature(gg.gauge_transform_connection(A, f)), gg.curvature(A))
    out.append(_exact("gauge/curvature-covariance-u1-exact", res, 1e-12 * tol_scale))

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        f = random_smooth_field(la, spec, FieldKind.GROUP, seed + 4, _ORDER_MODE, _ORDER_AMP)
        A0 = zero_field(la, spec, FieldKind.ONE_FORM)
        F = gg.curvature(gg.gauge_transform_connection(A0, f))
        samples.append((la.spacing[0], sup_norm(F)))
    out.append(_order("gauge/pure-gauge-flatness-order", samples, 0.2 * tol_scale))

    frame = random_frame(spec, seed + 5)
    g2, dg2 = frame_transformer(spec, seed + 6)
    once = gg.pointframe_transform(frame)
    twice = gg.pointframe_transform(gg.frame_with_transformer(once, g2, dg2))
    fused = gg.pointframe_transform(
        gg.frame_with_transformer(
            frame, frame.f @ g2, gg.product_differential(frame.f, frame.df, g2, dg2)
        )
    )
    res = max(
        float(np.abs(a.coeffs - b.coeffs).max()) for a, b in zip(twice.A, fused.A)
    )
    out.append(_exact("gauge/composition-frame", res, 1e-12 * tol_scale))

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        A = random_smooth_field(la, spec, FieldKind.ONE_FORM, seed + 7, _ORDER_MODE, _ORDER_AMP)
        f = random_smooth_field(la, spec, FieldKind.GROUP, seed + 8, _ORDER_MODE, _ORDER_AMP)
        g = random_smooth_field(la, spec, FieldKind.GROUP, seed + 9, _ORDER_MODE, _ORDER_AMP)
        two = gg.gauge_transform_connection(gg.gauge_transform_connection(A, f), g)
        fg = LatticeField(la, spec, FieldKind.GROUP, f.data @ g.data)
        samples.append((la.spacing[0], field_difference(two, gg.gauge_transform_connection(A, fg))))
    out.append(_order("gauge/composition-lattice-order", samples, 0.2 * tol_scale))

    ew = lg.su2xu1()
    samples = []
    for n in sizes:
        la = Lattice((n, n))
        A = random_smooth_field(la, ew, FieldKind.ONE_FORM, seed + 10, _ORDER_MODE, _ORDER_AMP)
        f = random_smooth_field(la, ew, FieldKind.GROUP, seed + 11, _ORDER_MODE, _ORDER_AMP)
        phi = random_smooth_field(la, ew, FieldKind.SCALAR, seed + 12, _ORDER_MODE, _ORDER_AMP)
        lhs = gg.covariant_derivative(gg.scalar_gauge_transform(phi, f),
                                      gg.gauge_transform_connection(A, f))
        rhs = [gg.scalar_gauge_transform(D, f) for D in gg.covariant_derivative(phi, A)]
        err = max(field_difference(a, b) for a, b in zip(lhs, rhs))
        samples.append((la.spacing[0], err))
    out.append(_order("gauge/covariant-derivative-covariance-order", samples, 0.2 * tol_scale))
    return out


# ---------------------------------------------------------------------------
# dressing suite


def suite_dressing(seed: int, sizes=(16, 32, 64), tol_scale: float = 1.0) -> list[CheckResult]:
    out = []
    spec = lg.su2xu1()
    lat = Lattice((16, 16))

    phi = offset_scalar_field(lat, seed)
    u = dr.dressing_from_scalar(phi)
    norm = dr.scalar_norm(phi)
    eta_vec = np.zeros(lat.sizes + (2,), dtype=complex)
    eta_vec[..., 1] = norm
    block = u.field.data[..., :2, :2]
    res = float(np.abs(np.einsum("...ij,...j->...i", block, eta_vec) - phi.data).max())
    out.append(_exact("dressing/defining-equation", res, 1e-12 * tol_scale))

    gram = np.conj(np.swapaxes(block, -1, -2)) @ block
    det = block[..., 0, 0] * block[..., 1, 1] - block[..., 0, 1] * block[..., 1, 0]
    res = max(float(np.abs(gram - np.eye(2)).max()), float(np.abs(det - 1.0).max()))
    out.append(_exact("dressing/unitarity", res, 1e-12 * tol_scale))

    gamma = h_valued_group_field(lat, seed + 1)
    lhs = dr.dressing_from_scalar(gg.scalar_gauge_transform(phi, gamma))
    rhs = dr.dressing_transform(u, gamma)
    res = float(np.abs(lhs.field.data - rhs.field.data).max())
    out.append(_exact("dressing/equivariance-chain", res, 1e-12 * tol_scale))

    frame = random_frame(spec, seed + 2, with_u=True)
    gamma_el, dgamma = frame_transformer(spec, seed + 3, subgroup="h")
    before = dr.dress_frame(frame)
    moved = dr.h_transform_frame(frame, gamma_el, dgamma)
    after = dr.dress_frame(moved)
    res = max(float(np.abs(a.coeffs - b.coeffs).max()) for a, b in zip(before, after))
    out.append(_exact("dressing/h-invariance-frame", res, 1e-12 * tol_scale))

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        A = random_smooth_field(la, spec, FieldKind.ONE_FORM, seed + 4, _ORDER_MODE, _ORDER_AMP)
        ph = offset_scalar_field(la, seed + 5)
        uu = dr.dressing_from_scalar(ph)
        gm = h_valued_group_field(la, seed + 6)
        lhs = dr.dress_connection(gg.gauge_transform_connection(A, gm), dr.dressing_transform(uu, gm))
        rhs = dr.dress_connection(A, uu)
        samples.append((la.spacing[0], field_difference(lhs, rhs)))
    out.append(_order("dressing/h-invariance-order", samples, 0.2 * tol_scale))

    # electroweak u does not follow the adjoint rule under the residual u1
    rng = np.random.default_rng(seed + 7)
    worst = 0.0
    for _ in range(20):
        theta = rng.uniform(0.3, 2.0)
        eta = np.eye(3, dtype=complex)
        eta[2, 2] = np.exp(1j * theta)
        eta_field = LatticeField(lat, spec, FieldKind.GROUP,
                                 np.broadcast_to(eta, lat.sizes + (3, 3)).copy())
        twisted = dr.dressing_from_scalar(gg.scalar_gauge_transform(phi, eta_field))
        adjoint = dr.adjoint_transform_dressing(u, eta_field)
        worst = max(worst, float(np.abs(twisted.field.data - adjoint.field.data).max()))
    out.append(_witness("dressing/adjoint-rule-violation-witness", worst, 1e-3))

    s2 = lg.su2()
    frame = random_frame(s2, seed + 8, with_u=True)
    eta_el, deta = frame_transformer(s2, seed + 9)
    res = dr.residual_transform_frame(frame, eta_el, deta)
    out.append(_exact("dressing/residual-symmetry-frame", res, 1e-12 * tol_scale))

    samples = []
    for n in sizes:
        la = Lattice((n, n))
        A = random_smooth_field(la, s2, FieldKind.ONE_FORM, seed + 10, _ORDER_MODE, _ORDER_AMP)
        uu = dr.DressingField(random_smooth_field(la, s2, FieldKind.GROUP, seed + 11, _ORDER_MODE, _ORDER_AMP))
        et = random_smooth_field(la, s2, FieldKind.GROUP, seed + 12, _ORDER_MODE, _ORDER_AMP)
        chk = dr.residual_transform_check(A, uu, et, tolerance=np.inf)
        samples.append((la.spacing[0], chk.residual))
    out.append(_order("dressing/residual-symmetry-order", samples, 0.2 * tol_scale))

    A = random_smooth_field(lat, spec, FieldKind.ONE_FORM, seed + 13, _ORDER_MODE, _ORDER_AMP)
    eta_field = j_valued_group_field(lat, seed + 14)
    chk = dr.residual_transform_check(A, u, eta_field, 1e-12 * tol_scale,
                                      name="dressing/residual-symmetry-product-exact")
    out.append(chk)
    return out


# ---------------------------------------------------------------------------
# jets suite


def suite_jets(seed: int, sizes=None, tol_scale: float = 1.0) -> list[CheckResult]:
    out = []
    spec = lg.su2xu1()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        jet = jt.JetSample(spec, (0.0, 0.0), rng.standard_normal((2, 4)),
                           rng.standard_normal((2, 2, 4)))
        worst = max(worst, float(np.abs(jt.pr1(jet) + jt.pr2(jet) - jet.dA).max()))
    out.append(_exact("jets/splitting-completeness", worst, 1e-14 * tol_scale))

    lat = Lattice((16, 16))
    A = random_smooth_field(lat, spec, FieldKind.ONE_FORM, seed + 1, 2, 1.2)
    F = gg.curvature(A)
    worst = 0.0
    for site in ((0, 0), (3, 5), (10, 12), (15, 15)):
        jet = jt.jet_of_connection(A, site)
        worst = max(worst, float(np.abs(jt.pr2(jet) - F.data[site]).max()))
    out.append(_exact("jets/pr2-curvature-consistency", worst, 1e-12 * tol_scale))

    worst = 0.0
    for _ in range(200):
        jet = jt.JetSample(spec, (0.0, 0.0), rng.standard_normal((2, 4)),
                           rng.standard_normal((2, 2, 4)))
        red = jt.jet_delta(jet)
        keep = list(spec.product_split.j_indices)
        pr2_then = np.zeros_like(jet.dA)
        pr2_then[..., keep] = jt.pr2(jet)[..., keep]
        worst = max(worst, float(np.abs(jt.pr2(red) - pr2_then).max()))
        pr1_then = np.zeros_like(jet.dA)
        pr1_then[..., keep] = jt.pr1(jet)[..., keep]
        worst = max(worst, float(np.abs(jt.pr1(red) - pr1_then).max()))
    out.append(_exact("jets/delta-commutation", worst, 1e-12 * tol_scale))
    return out


# ---------------------------------------------------------------------------
# reduction suite


def suite_reduction(seed: int, sizes=(16, 32, 64), tol_scale: float = 1.0) -> list[CheckResult]:
    out = []
    spec = lg.su2xu1()
    lat = Lattice((16, 16))

    X = random_smooth_field(lat, spec, FieldKind.ONE_FORM, seed, 2, 1.0)
    once = rd.delta_ad(X)
    res = field_difference(rd.delta_ad(once), once)
    out.append(_exact("reduction/delta-idempotent", res, 0.0))

    rng = np.random.default_rng(seed + 1)
    worst = 0.0
    for _ in range(1000):
        g = lg.exp_map(lg.AlgebraVector(spec, rng.standard_normal(4)))
        x = lg.AlgebraVector(spec, rng.standard_normal(4))
        _, j = lg.group_split(g)
        lhs = lg.project_subalgebra(lg.adjoint_algebra(g.inverse(), x), "j")
        rhs = lg.adjoint_algebra(j.inverse(), lg.project_subalgebra(x, "j"))
        worst = max(worst, float(np.abs(lhs.coeffs - rhs.coeffs).max()))
    out.append(_exact("reduction/delta-equivariance", worst, 1e-12 * tol_scale))
    out.append(_witness("reduction/delta-equivariance-affine-witness",
                        _affine_equivariance_violation(seed + 2), 0.1))

    phi = offset_scalar_field(lat, seed + 3)
    u = dr.dressing_from_scalar(phi)
    A = random_smooth_field(lat, spec, FieldKind.ONE_FORM, seed + 4, 2, 1.0)
    lhs = rd.delta_connection(A, u)
    rhs = rd.delta_ad(dr.dress_connection(A, u))
    out.append(_exact("reduction/delta-factorization", field_difference(lhs, rhs), 1e-15 * tol_scale))

    pair = rd.make_config_pair(A)
    red = rd.zeta(pair, u)
    lhsF = rd.delta_ad(gg.curvature(dr.dress_connection(A, u)))
    out.append(_exact("reduction/zeta-consistency", field_difference(lhsF, red.F), 1e-12 * tol_scale))

    f = random_smooth_field(lat, spec, FieldKind.GROUP, seed + 5, _ORDER_MODE, _ORDER_AMP)
    moved = rd.ConfigPair(gg.gauge_transform_connection(pair.A, f),
                          gg.gauge_transform_curvature(pair.F, f))
    res = float(np.abs(rd.yang_mills_density(moved) - rd.yang_mills_density(pair)).max())
    out.append(_exact("reduction/ym-gauge-invariance", res, 1e-10 * tol_scale))

    chk = rd.reduced_lagrangian_check(pair, u, tolerance=1e-10 * tol_scale,
                                      name="reduction/reduced-lagrangian")
    out.append(chk)

    rng2 = np.random.default_rng(seed + 6)
    worst = 0.0
    for _ in range(100):
        raw = rng2.standard_normal((2, 2, 4))
        p = rd.MomentumSample(spec, (0.0, 0.0), raw - np.swapaxes(raw, 0, 1))
        Fv = rng2.standard_normal((2, 2, 4))
        Fv = Fv - np.swapaxes(Fv, 0, 1)
        Fj = np.zeros_like(Fv)
        Fj[..., list(spec.product_split.j_indices)] = Fv[..., list(spec.product_split.j_indices)]
        Fh = Fv - Fj
        lhs = rd.pairing(rd.delta_momentum(p), Fj)
        worst = max(worst, abs(lhs - rd.pairing(p, Fj)))
        worst = max(worst, abs(rd.pairing(rd.delta_momentum(p), Fv)
                               - (rd.pairing(p, Fv) - rd.pairing(p, Fh))))
    out.append(_exact("reduction/momentum-pairing", worst, 1e-13 * tol_scale))
    return out


_SUITES = {
    "liegroup": suite_liegroup,
    "lattice": suite_lattice,
    "gauge": suite_gauge,
    "dressing": suite_dressing,
    "jets": suite_jets,
    "reduction": suite_reduction,
}


def run_suites(names, seed: int, sizes=(16, 32, 64), tol_scale: float = 1.0) -> Report:
    report = Report(command="verify", seed=seed, group="all", dims=list(sizes))
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES} or 'all'")
        report.extend(_SUITES[name](seed, sizes=tuple(sizes), tol_scale=tol_scale))
    return report
