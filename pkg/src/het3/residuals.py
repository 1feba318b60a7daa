"""Residual evaluation of the 3D Heterotic soliton system.

A scenario is a homogeneous model plus a contorsion, a positive constant
h (the Hodge dual of the torsion 3-form H = h vol), a frame-constant closed
1-form phi, and the coupling kappa.  The equations evaluated here are

    Einstein:    Ric^g + nabla^g phi - (h^2/2) g + kappa R^D o_g R^D = 0
    Yang-Mills:  d*_D R^D + phi . R^D = 0
    dilaton:     delta phi + |phi|^2 - h^2 + kappa |R^D|^2 = 0
    Maxwell:     d h = h phi   (frame-constant h: residual -h phi)

together with the kappa-independent trace identity
s = 3 delta phi + 2|phi|^2 - h^2/2 and, for skew torsion, the recombined
identity obtained by subtracting the trace identity from the trace of the
Einstein equation.

Sign convention for the divergence: (d*_D R)(X) = -(D_{e_i} R)_{e_i, X},
which reproduces the skew-torsion specialization
d^{nabla} Ric(X) + 3 alpha * Ric_0(X) componentwise (the sign of the
alpha-odd term goes with the fixed 2-form action convention).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import geometry, torsion
from .errors import NonPositiveKappa, NotSkewTorsion, ScenarioValidationError
from .frame import CurvatureOperator, Form2, as_vec, curv_compose, curv_norm_sq

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SolitonScenario:
    """One candidate Heterotic soliton on a homogeneous 3D model."""

    model: geometry.StructureConstants
    contorsion: torsion.Contorsion
    h: float
    kappa: float
    phi: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "phi", as_vec(self.phi))

    @classmethod
    def from_params(
        cls,
        model: geometry.StructureConstants,
        params: torsion.ReducibleTorsionParams,
        h: float,
        kappa: float,
        phi=None,
    ) -> "SolitonScenario":
        if abs(params.beta) > 0:
            raise ScenarioValidationError(
                "beta != 0 is excluded: on a compact model delta xi = 2 beta "
                "forces beta = 0"
            )
        return cls(
            model=model,
            contorsion=torsion.build_reducible(params),
            h=h,
            kappa=kappa,
            phi=np.zeros(3) if phi is None else phi,
        )


def validate_scenario(sc: SolitonScenario, tol: float = 1e-10) -> None:
    """Structural checks: model validity, kappa > 0, h > 0, beta = 0, phi closed."""
    geometry.validate(sc.model)
    if not sc.kappa > 0:
        raise NonPositiveKappa(f"kappa = {sc.kappa:g} must be positive")
    if not sc.h > 0:
        raise ScenarioValidationError(f"h = {sc.h:g} must be positive")
    zeta = sc.contorsion.skew_vector
    if float(np.max(np.abs(zeta))) > tol:
        raise ScenarioValidationError(
            "contorsion has a skew component (beta != 0 along the axis), "
            "excluded on compact models since delta xi = 2 beta"
        )
    # closedness of a frame-constant 1-form: phi([e_i, e_j]) = 0
    dphi = np.einsum("ijk,k->ij", sc.model.c, sc.phi)
    if float(np.max(np.abs(dphi))) > tol:
        raise ScenarioValidationError("phi is not closed: phi([e_i,e_j]) != 0")


def connection(sc: SolitonScenario) -> torsion.TorsionConnection:
    return torsion.connection_with_torsion(sc.model, sc.contorsion)


def grad_phi(sc: SolitonScenario) -> np.ndarray:
    """(nabla^g phi)[i, j] = -phi(nabla_{e_i} e_j) for frame-constant phi."""
    gamma = geometry.levi_civita(sc.model)
    return -np.einsum("ijm,m->ij", gamma, sc.phi)


def delta_phi(sc: SolitonScenario) -> float:
    """Codifferential delta^g phi = -trace(nabla phi)."""
    return -float(np.trace(grad_phi(sc)))


def ric_gH(model: geometry.StructureConstants, h: float) -> np.ndarray:
    """Symmetric part of Ric^{g,H} for H = h vol with frame-constant h.

    H o_g H = h^2 g in 3D and the delta H term drops, leaving
    Ric^g - (h^2/2) g.
    """
    data = geometry.curvature(model, geometry.levi_civita(model))
    return data.ricci - 0.5 * h * h * np.eye(3)


def einstein_residual(sc: SolitonScenario) -> np.ndarray:
    """Full (possibly non-symmetric) grid of the first soliton equation."""
    data = geometry.curvature(sc.model, geometry.levi_civita(sc.model))
    r_d = torsion.curvature_D(sc.model, connection(sc))
    return (
        data.ricci
        + grad_phi(sc)
        - 0.5 * sc.h * sc.h * np.eye(3)
        + sc.kappa * curv_compose(r_d, r_d)
    )


def yang_mills_residual(sc: SolitonScenario) -> np.ndarray:
    """General divergence path: rows are the dual components of the 2-form
    (d*_D R^D + phi . R^D)(e_x)."""
    conn = connection(sc)
    r_d = torsion.curvature_D(sc.model, conn)
    rform = geometry.endo_from_operator(r_d)
    dr = torsion.covariant_derivative(conn.total, rform)
    out = np.zeros((3, 3))
    eye = np.eye(3)
    for x in range(3):
        # divergence: -(sum_i (D_{e_i} R)[e_i, e_x, ., .])
        div = -np.einsum("iikl->kl", dr[:, :, x, :, :])
        # phi contraction in the first factor: R_{phi, e_x}
        out[x, :] = _grid_to_form(div).dual + r_d.first_factor(sc.phi, eye[x]).dual
    return out


def _grid_to_form(grid: np.ndarray) -> Form2:
    """Dual components of a skew 3x3 grid grid[k, l] = omega(e_k, e_l)."""
    return Form2(np.array([grid[1, 2], grid[2, 0], grid[0, 1]]))


def yang_mills_skew_path(sc: SolitonScenario) -> np.ndarray:
    """Skew-torsion specialization of the Yang-Mills residual.

    Requires contorsion alpha g; equals
    d^{nabla} Ric(X) + 3 alpha * Ric_0(X) + R^g_{phi,X} + alpha^2 phi ^ X
    (the +3 alpha sign goes with the fixed 2-form action convention).
    """
    ct = sc.contorsion
    if not ct.is_pure_skew_torsion(tol=1e-10):
        raise NotSkewTorsion("contorsion is not of the form alpha * g")
    alpha = ct.trace_part
    gamma = geometry.levi_civita(sc.model)
    data = geometry.curvature(sc.model, gamma)
    ric0 = data.ricci - (data.scalar / 3.0) * np.eye(3)
    dric = torsion.covariant_derivative(gamma, data.ricci)
    eye = np.eye(3)
    out = np.zeros((3, 3))
    for x in range(3):
        dual = np.zeros(3)
        for j in range(3):
            dual += np.cross(eye[j], dric[j, x, :])
        dual += 3.0 * alpha * (ric0 @ eye[x])
        dual += data.riemann.first_factor(sc.phi, eye[x]).dual
        dual += alpha * alpha * np.cross(sc.phi, eye[x])
        out[x, :] = dual
    return out


def dilaton_residual(sc: SolitonScenario) -> float:
    r_d = torsion.curvature_D(sc.model, connection(sc))
    return (
        delta_phi(sc)
        + float(sc.phi @ sc.phi)
        - sc.h * sc.h
        + sc.kappa * curv_norm_sq(r_d)
    )


def maxwell_residual(sc: SolitonScenario) -> np.ndarray:
    """Residual of d h = h phi; frame-constant h gives -h phi."""
    return -sc.h * sc.phi


def trace_identity_residual(sc: SolitonScenario) -> float:
    """Residual of s = 3 delta phi + 2 |phi|^2 - h^2/2 (kappa-independent)."""
    data = geometry.curvature(sc.model, geometry.levi_civita(sc.model))
    return (
        data.scalar
        - 3.0 * delta_phi(sc)
        - 2.0 * float(sc.phi @ sc.phi)
        + 0.5 * sc.h * sc.h
    )


def remark_identity_residual(sc: SolitonScenario) -> float:
    """Skew-torsion recombination:
    2k|Ric_0|^2 + 2|phi|^2 - 2h^2 + (k/6)(s - 6a^2)^2 + 2 delta phi.

    Equals trace(einstein_residual) - trace_identity_residual.
    """
    ct = sc.contorsion
    if not ct.is_pure_skew_torsion(tol=1e-10):
        raise NotSkewTorsion("contorsion is not of the form alpha * g")
    alpha = ct.trace_part
    data = geometry.curvature(sc.model, geometry.levi_civita(sc.model))
    ric0 = data.ricci - (data.scalar / 3.0) * np.eye(3)
    s = data.scalar
    return (
        2.0 * sc.kappa * float(np.sum(ric0 * ric0))
        + 2.0 * float(sc.phi @ sc.phi)
        - 2.0 * sc.h * sc.h
        + (sc.kappa / 6.0) * (s - 6.0 * alpha * alpha) ** 2
        + 2.0 * delta_phi(sc)
    )


@dataclass(frozen=True)
class ResidualReport:
    """All residuals of a scenario plus their norms and the verdict."""

    einstein_sym: np.ndarray
    einstein_skew: np.ndarray
    yang_mills: np.ndarray
    dilaton: float
    maxwell: np.ndarray
    trace_identity: float
    remark_identity: float | None
    norms: dict
    tolerance: float
    verdict: str

    @property
    def is_solution(self) -> bool:
        return self.verdict == "SOLUTION"


def full_report(sc: SolitonScenario, tol: float = DEFAULT_TOL) -> ResidualReport:
    """Evaluate every equation of the system and aggregate a verdict."""
    validate_scenario(sc)
    ein = einstein_residual(sc)
    ein_sym = 0.5 * (ein + ein.T)
    ein_skew = 0.5 * (ein - ein.T)
    ym = yang_mills_residual(sc)
    dil = dilaton_residual(sc)
    mx = maxwell_residual(sc)
    tr_id = trace_identity_residual(sc)
    try:
        rem = remark_identity_residual(sc)
    except NotSkewTorsion:
        rem = None
    norms = {
        "einstein": float(np.linalg.norm(ein_sym)),
        "einstein_skew": float(np.linalg.norm(ein_skew)),
        "yang_mills": float(np.linalg.norm(ym)),
        "dilaton": abs(dil),
        "maxwell": float(np.linalg.norm(mx)),
    }
    verdict = "SOLUTION" if max(norms.values()) <= tol else "NOT_SOLUTION"
    return ResidualReport(
        einstein_sym=ein_sym,
        einstein_skew=ein_skew,
        yang_mills=ym,
        dilaton=dil,
        maxwell=mx,
        trace_identity=tr_id,
        remark_identity=rem,
        norms=norms,
        tolerance=tol,
        verdict=verdict,
    )
