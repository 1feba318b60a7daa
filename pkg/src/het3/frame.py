"""Exterior algebra of an oriented 3D orthonormal frame.

Everything lives in a single global orthonormal frame e1, e2, e3 with the
metric equal to the identity, so vectors and 1-forms share the same three
components.  2-forms are stored through the Hodge duality Lambda^2 = Lambda^1:
a 2-form is represented by its coefficients in the basis (*e1, *e2, *e3),
with the orientation fixed by *e1 = e2 ^ e3 (cyclic).

Inner products on Lambda^k use the determinant convention, under which the
basis (*e1, *e2, *e3) is orthonormal and the dual-component dot product is
the 2-form inner product.

Sign convention for the interior product: (v . w)(u) = w(v, u), which in dual
components reads interior(v, w) = cross(w.dual, v).  This is the adjoint of
the wedge product: <u ^ v, w> = <v, u . w>.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Cyclic index pairs: *e_a = e_i ^ e_j for (i, j) = _PAIRS[a].
_PAIRS = ((1, 2), (2, 0), (0, 1))


def as_vec(v) -> np.ndarray:
    """Coerce to a float vector of shape (3,)."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {a.shape}")
    return a


def as_grid(m) -> np.ndarray:
    """Coerce to a float grid of shape (3, 3)."""
    a = np.asarray(m, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 grid, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class Form2:
    """A 2-form, stored by its dual components in the basis (*e1, *e2, *e3)."""

    dual: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dual", as_vec(self.dual))

    def __call__(self, x, y) -> float:
        """Evaluate the 2-form on a pair of vectors."""
        return float(self.dual @ np.cross(as_vec(x), as_vec(y)))

    def norm_sq(self) -> float:
        return float(self.dual @ self.dual)


@dataclass(frozen=True)
class CurvatureOperator:
    """A section of Lambda^2 x Lambda^2 stored as a 3x3 dual-coefficient grid.

    entries[a, b] is the pairing of the tensor with *e_a in the first
    Lambda^2 factor and *e_b in the second.  Evaluating the first factor on a
    frame pair (e_i, e_j) yields the 2-form whose dual components are
    cross(e_i, e_j) @ entries.
    """

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", as_grid(self.entries))

    def first_factor(self, x, y) -> Form2:
        """The 2-form R_{X,Y}: evaluation of X, Y in the first factor."""
        return Form2(np.cross(as_vec(x), as_vec(y)) @ self.entries)

    def __add__(self, other: "CurvatureOperator") -> "CurvatureOperator":
        return CurvatureOperator(self.entries + other.entries)

    def __sub__(self, other: "CurvatureOperator") -> "CurvatureOperator":
        return CurvatureOperator(self.entries - other.entries)


ZERO_CURVATURE = CurvatureOperator(np.zeros((3, 3)))


def hodge_star(v) -> Form2:
    """Hodge star of a vector/1-form; *e1 = e2 ^ e3 cyclically."""
    return Form2(as_vec(v).copy())


def hodge_star_inv(w: Form2) -> np.ndarray:
    """Inverse Hodge star; exact involution, ** = Id."""
    return w.dual.copy()


def wedge(u, v) -> Form2:
    """Wedge product of two vectors; dual components are the cross product."""
    return Form2(np.cross(as_vec(u), as_vec(v)))


def interior(v, w: Form2) -> np.ndarray:
    """Interior product (v . w)(u) = w(v, u); adjoint of wedge by v."""
    return np.cross(w.dual, as_vec(v))


def curv_compose(r1: CurvatureOperator, r2: CurvatureOperator) -> np.ndarray:
    """The symmetric bilinear form (R1 o_g R2)(X, Y) = <X . R1, Y . R2>.

    With r1 = r2 this is the curvature quadratic sourcing the Einstein
    equation; it is then symmetric positive semidefinite.
    """
    k1, k2 = r1.entries, r2.entries
    out = np.zeros((3, 3))
    eye = np.eye(3)
    for p in range(3):
        for q in range(3):
            acc = 0.0
            for i in range(3):
                a = np.cross(eye[p], eye[i]) @ k1
                b = np.cross(eye[q], eye[i]) @ k2
                acc += a @ b
            out[p, q] = acc
    return out


def curv_norm_sq(r: CurvatureOperator) -> float:
    """|R|^2 = (1/2) tr(R o_g R); equals the Frobenius norm^2 of the grid."""
    return float(np.sum(r.entries * r.entries))


def curv_wedge_trace(r: CurvatureOperator) -> float:
    """Coefficient of the 4-form <R ^ R>; identically zero on a 3-manifold."""
    return 0.0


def frame_vector(i: int) -> np.ndarray:
    """The i-th frame vector (0-based)."""
    e = np.zeros(3)
    e[i] = 1.0
    return e


def star_matrix(zeta) -> np.ndarray:
    """The 2-form *zeta as a skew 3x3 grid: (*zeta)_{ij} = eps_{ijk} zeta_k."""
    z = as_vec(zeta)
    return np.array(
        [
            [0.0, z[2], -z[1]],
            [-z[2], 0.0, z[0]],
            [z[1], -z[0], 0.0],
        ]
    )
