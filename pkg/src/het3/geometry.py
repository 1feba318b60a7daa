"""Homogeneous 3D models: structure constants, Levi-Civita connection, curvature.

A homogeneous model is encoded by the bracket coefficients c_{ijk} of a
global orthonormal frame, [e_i, e_j] = sum_k c_{ijk} e_k.  Connection
coefficients are stored as gamma[i, j, k] = <nabla_{e_i} e_j, e_k>.

Curvature convention: R_{X,Y} Z = D_X D_Y Z - D_Y D_X Z - D_{[X,Y]} Z, and
the identification of the curvature with a section of Lambda^2 x Lambda^2
pairs the cyclic 2-form basis with the endomorphism components
<R_{e_i, e_j} e_k, e_l>.  Under this convention the hyperbolic model of
sectional curvature -1 has operator grid +Id (R_{X,Y} = X ^ Y).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AntisymmetryViolation, JacobiViolation, TraceMismatch
from .frame import _PAIRS, CurvatureOperator

STRUCT_TOL = 1e-12


@dataclass(frozen=True)
class StructureConstants:
    """Dense bracket coefficients c[i, j, k], antisymmetric in (i, j)."""

    c: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.c, dtype=float)
        if a.shape != (3, 3, 3):
            raise ValueError("structure constants must be a 3x3x3 grid")
        object.__setattr__(self, "c", a)

    @classmethod
    def from_entries(cls, entries) -> "StructureConstants":
        """Build from sparse (i, j, k, value) entries with 0-based i < j."""
        c = np.zeros((3, 3, 3))
        for i, j, k, v in entries:
            c[i, j, k] += v
            c[j, i, k] -= v
        return cls(c)

    def bracket(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(x, float), np.asarray(y, float), self.c)

    def ad_trace(self) -> np.ndarray:
        """Trace of ad: the unimodularity obstruction, tr(ad_{e_i}) per i."""
        return np.einsum("ijj->i", self.c)


def abelian() -> StructureConstants:
    return StructureConstants(np.zeros((3, 3, 3)))


def heisenberg(lam: float) -> StructureConstants:
    """Nilpotent model [e1, e2] = lam * e3."""
    return StructureConstants.from_entries([(0, 1, 2, lam)])


def hyperbolic_model(a: float) -> StructureConstants:
    """Solvable model [e1, e2] = a e2, [e1, e3] = a e3; curvature -a^2."""
    return StructureConstants.from_entries([(0, 1, 1, a), (0, 2, 2, a)])


def milnor(l1: float, l2: float, l3: float) -> StructureConstants:
    """Unimodular normal form [e2,e3] = l1 e1, [e3,e1] = l2 e2, [e1,e2] = l3 e3."""
    return StructureConstants.from_entries(
        [(1, 2, 0, l1), (2, 0, 1, l2), (0, 1, 2, l3)]
    )


def jacobi_defect(sc: StructureConstants) -> float:
    """Max-norm of the cyclic Jacobi sum over all index triples."""
    c = sc.c
    # [[e_i,e_j],e_k] contributes c_{ijm} c_{mkl}
    t = np.einsum("ijm,mkl->ijkl", c, c)
    cyc = t + np.einsum("jkil->ijkl", t) + np.einsum("kijl->ijkl", t)
    return float(np.max(np.abs(cyc)))


def validate(sc: StructureConstants, tol: float = STRUCT_TOL) -> None:
    """Raise unless c is antisymmetric in (i, j) and satisfies Jacobi."""
    anti = np.max(np.abs(sc.c + np.transpose(sc.c, (1, 0, 2))))
    if anti > tol:
        raise AntisymmetryViolation(f"c_ijk + c_jik deviates by {anti:g}")
    defect = jacobi_defect(sc)
    if defect > tol:
        raise JacobiViolation(f"Jacobi identity violated by {defect:g}")


def levi_civita(sc: StructureConstants) -> np.ndarray:
    """Koszul formula in an orthonormal frame: 2 gamma_ijk = c_ijk - c_jki + c_kij."""
    c = sc.c
    return 0.5 * (c - np.einsum("jki->ijk", c) + np.einsum("kij->ijk", c))


def curvature_endo(sc: StructureConstants, gamma: np.ndarray) -> np.ndarray:
    """Endomorphism components R[i,j,k,l] = <R_{e_i,e_j} e_k, e_l>."""
    r = (
        np.einsum("jkm,iml->ijkl", gamma, gamma)
        - np.einsum("ikm,jml->ijkl", gamma, gamma)
        - np.einsum("ijm,mkl->ijkl", sc.c, gamma)
    )
    return r


def operator_from_endo(rendo: np.ndarray) -> CurvatureOperator:
    """Collapse endomorphism components onto the dual 2-form basis."""
    k = np.zeros((3, 3))
    for a, (i, j) in enumerate(_PAIRS):
        for b, (p, q) in enumerate(_PAIRS):
            k[a, b] = rendo[i, j, p, q]
    return CurvatureOperator(k)


def endo_from_operator(r: CurvatureOperator) -> np.ndarray:
    """Expand the dual grid back to full endomorphism components."""
    out = np.zeros((3, 3, 3, 3))
    eye = np.eye(3)
    for i in range(3):
        for j in range(3):
            dual = np.cross(eye[i], eye[j]) @ r.entries
            for b, (p, q) in enumerate(_PAIRS):
                out[i, j, p, q] = dual[b]
                out[i, j, q, p] = -dual[b]
    return out


@dataclass(frozen=True)
class CurvatureData:
    """Riemann operator, Ricci tensor, and scalar curvature of a model."""

    riemann: CurvatureOperator
    ricci: np.ndarray
    scalar: float


def curvature(sc: StructureConstants, gamma: np.ndarray) -> CurvatureData:
    """Curvature of a metric-compatible frame-constant connection."""
    rendo = curvature_endo(sc, gamma)
    # Ric(Y, Z) = sum_i <R_{e_i, Y} Z, e_i>
    ric = np.einsum("ijki->jk", rendo)
    return CurvatureData(
        riemann=operator_from_endo(rendo),
        ricci=ric,
        scalar=float(np.trace(ric)),
    )


def curvature_via_ricci(ricci, s: float, tol: float = 1e-9) -> CurvatureOperator:
    """Reconstruct the 3D Riemann operator from Ricci and scalar curvature.

    R_{X,Y} = (s/2) X ^ Y + Y ^ Ric(X) + Ric(Y) ^ X.
    """
    ric = np.asarray(ricci, dtype=float)
    if abs(np.trace(ric) - s) > tol:
        raise TraceMismatch(f"trace(ricci) = {np.trace(ric):g} but s = {s:g}")
    k = np.zeros((3, 3))
    eye = np.eye(3)
    for a, (i, j) in enumerate(_PAIRS):
        dual = (
            0.5 * s * np.cross(eye[i], eye[j])
            + np.cross(eye[j], ric @ eye[i])
            + np.cross(ric @ eye[j], eye[i])
        )
        k[a, :] = dual
    return CurvatureOperator(k)


def ricci_square_identity(ricci, s: float, tol: float = 1e-9) -> np.ndarray:
    """3D closed form: R o_g R = -Ric.Ric + s Ric + (|Ric|^2 - s^2/2) g."""
    ric = np.asarray(ricci, dtype=float)
    if abs(np.trace(ric) - s) > tol:
        raise TraceMismatch(f"trace(ricci) = {np.trace(ric):g} but s = {s:g}")
    ric_sq = float(np.sum(ric * ric))
    return -ric @ ric + s * ric + (ric_sq - 0.5 * s * s) * np.eye(3)
