"""Contorsion decomposition, torsion connections, closed-form curvature lemmas."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import model_corpus, random_model
from het3 import frame, geometry, torsion
from het3.errors import NonUnitAxis

grid3 = arrays(
    np.float64, (3, 3), elements=st.floats(min_value=-10, max_value=10, allow_nan=False)
)

AXIS = np.array([0.0, 0.0, 1.0])


class TestDecompose:
    def test_identity(self):
        alpha, theta, zeta = torsion.decompose(np.eye(3))
        assert alpha == 1.0
        assert np.all(theta == 0.0)
        assert np.all(zeta == 0.0)

    def test_pure_skew(self):
        alpha, theta, zeta = torsion.decompose(frame.star_matrix([0, 0, 1]))
        assert alpha == 0.0
        assert np.all(theta == 0.0)
        np.testing.assert_array_equal(zeta, [0.0, 0.0, 1.0])

    def test_projection_oracle(self):
        a = np.eye(3) + np.outer(AXIS, AXIS)
        alpha, theta, zeta = torsion.decompose(a)
        assert alpha == pytest.approx(4.0 / 3.0)
        np.testing.assert_allclose(theta, np.outer(AXIS, AXIS) - np.eye(3) / 3.0)
        assert np.all(zeta == 0.0)

    @given(grid3)
    def test_reconstruction(self, a):
        alpha, theta, zeta = torsion.decompose(a)
        np.testing.assert_allclose(torsion.reconstruct(alpha, theta, zeta), a, atol=1e-14)
        assert abs(np.trace(theta)) < 1e-13
        # components are mutually orthogonal in the tensor inner product
        assert abs(np.sum((alpha * np.eye(3)) * theta)) < 1e-12
        assert abs(np.sum(theta * frame.star_matrix(zeta))) < 1e-12


class TestBuildReducible:
    def test_pure_skew_case(self):
        ct = torsion.build_reducible(
            torsion.ReducibleTorsionParams(alpha=0.7, beta=0.0, gamma=0.0, xi=AXIS)
        )
        np.testing.assert_allclose(ct.a, 0.7 * np.eye(3))
        assert ct.is_pure_skew_torsion()

    def test_axis_only(self):
        ct = torsion.build_reducible(
            torsion.ReducibleTorsionParams(alpha=0.0, beta=0.0, gamma=2.0, xi=AXIS)
        )
        np.testing.assert_allclose(ct.a, 2.0 * np.outer(AXIS, AXIS))

    def test_final_shape(self):
        ct = torsion.build_reducible(
            torsion.ReducibleTorsionParams(alpha=1.0, beta=0.0, gamma=-1.0, xi=AXIS)
        )
        np.testing.assert_allclose(ct.a, np.eye(3) - np.outer(AXIS, AXIS))
        assert not ct.is_pure_skew_torsion()

    def test_non_unit_axis(self):
        with pytest.raises(NonUnitAxis):
            torsion.ReducibleTorsionParams(alpha=0.0, beta=0.0, gamma=1.0, xi=[0, 0, 2])


class TestConnection:
    def test_zero_contorsion(self):
        model = geometry.heisenberg(1.0)
        conn = torsion.connection_with_torsion(model, torsion.Contorsion(np.zeros((3, 3))))
        np.testing.assert_array_equal(conn.total, geometry.levi_civita(model))

    @pytest.mark.parametrize("model", model_corpus())
    def test_metric_compatibility(self, model, rng):
        ct = torsion.Contorsion(rng.normal(size=(3, 3)))
        conn = torsion.connection_with_torsion(model, ct)
        np.testing.assert_allclose(
            conn.total, -np.transpose(conn.total, (0, 2, 1)), atol=1e-13
        )

    def test_torsion_tensor(self, rng):
        model = geometry.milnor(1.0, 1.0, 1.0)
        ct = torsion.Contorsion(rng.normal(size=(3, 3)))
        conn = torsion.connection_with_torsion(model, ct)
        delta = torsion.contorsion_coefficients(ct)
        np.testing.assert_allclose(
            torsion.torsion_tensor(conn), delta - np.transpose(delta, (1, 0, 2)), atol=1e-14
        )

    def test_heisenberg_parallel_axis(self):
        # A = (lambda/2) g makes e3 D-parallel on [e1,e2] = lambda e3
        lam = 1.0
        model = geometry.heisenberg(lam)
        conn = torsion.connection_with_torsion(model, torsion.skew(lam / 2))
        np.testing.assert_allclose(conn.total[:, 2, :], 0.0, atol=1e-14)


class TestCovariantDerivative:
    def test_flat(self, rng):
        conn = torsion.connection_with_torsion(
            geometry.abelian(), torsion.Contorsion(np.zeros((3, 3)))
        )
        t = rng.normal(size=(3, 3))
        assert np.all(torsion.covariant_derivative(conn.total, t) == 0.0)

    def test_parallel_contorsion_heisenberg(self):
        params = torsion.ReducibleTorsionParams(alpha=1.0, beta=0.0, gamma=-1.0, xi=AXIS)
        ct = torsion.build_reducible(params)
        conn = torsion.connection_with_torsion(geometry.heisenberg(2.0), ct)
        da = torsion.covariant_derivative(conn.total, ct.a)
        np.testing.assert_allclose(da, 0.0, atol=1e-14)

    @pytest.mark.parametrize("model", model_corpus())
    def test_skew_contorsion_always_parallel(self, model):
        ct = torsion.skew(0.42)
        conn = torsion.connection_with_torsion(model, ct)
        np.testing.assert_allclose(
            torsion.covariant_derivative(conn.total, ct.a), 0.0, atol=1e-14
        )

    def test_metric_parallel(self, rng):
        model = random_model(rng)
        ct = torsion.Contorsion(rng.normal(size=(3, 3)))
        conn = torsion.connection_with_torsion(model, ct)
        np.testing.assert_allclose(
            torsion.covariant_derivative(conn.total, np.eye(3)), 0.0, atol=1e-13
        )

    def test_vector_rank(self):
        model = geometry.heisenberg(1.0)
        g = geometry.levi_civita(model)
        dxi = torsion.covariant_derivative(g, AXIS)
        # nabla^g xi = (lambda/2) * (X x xi)
        eye = np.eye(3)
        for i in range(3):
            np.testing.assert_allclose(dxi[i], 0.5 * np.cross(eye[i], AXIS), atol=1e-14)


class TestCurvatureD:
    def test_zero_contorsion_recovers_base(self):
        model = geometry.heisenberg(1.0)
        conn = torsion.connection_with_torsion(model, torsion.Contorsion(np.zeros((3, 3))))
        r = torsion.curvature_D(model, conn)
        base = geometry.curvature(model, geometry.levi_civita(model)).riemann
        np.testing.assert_allclose(r.entries, base.entries, atol=1e-14)

    def test_lemma_closed_form_heisenberg(self, rng):
        for _ in range(25):
            alpha = rng.uniform(0.1, 2.0)
            gamma = rng.uniform(-2.0, 2.0)
            model = geometry.heisenberg(2 * alpha)
            ct = torsion.build_reducible(
                torsion.ReducibleTorsionParams(alpha=alpha, beta=0.0, gamma=gamma, xi=AXIS)
            )
            conn = torsion.connection_with_torsion(model, ct)
            direct = torsion.curvature_D(model, conn)
            base = geometry.curvature(model, geometry.levi_civita(model))
            closed = torsion.reducible_curvature_closed_form(base.riemann, alpha, gamma, AXIS)
            np.testing.assert_allclose(direct.entries, closed.entries, atol=1e-12)
            # rank-one form: (3a^2 - s/2 + 2ac) <*xi, X^Y> *xi
            factor = 3 * alpha**2 - 0.5 * base.scalar + 2 * alpha * gamma
            np.testing.assert_allclose(
                direct.entries, factor * np.outer(AXIS, AXIS), atol=1e-12
            )

    def test_rara_closed_form(self, rng):
        for _ in range(25):
            alpha = rng.uniform(0.1, 2.0)
            gamma = rng.uniform(-2.0, 2.0)
            model = geometry.heisenberg(2 * alpha)
            ct = torsion.build_reducible(
                torsion.ReducibleTorsionParams(alpha=alpha, beta=0.0, gamma=gamma, xi=AXIS)
            )
            conn = torsion.connection_with_torsion(model, ct)
            r = torsion.curvature_D(model, conn)
            s = geometry.curvature(model, geometry.levi_civita(model)).scalar
            closed = torsion.rara_closed_form(alpha, gamma, s, AXIS)
            np.testing.assert_allclose(frame.curv_compose(r, r), closed, atol=1e-11)
            np.testing.assert_allclose(closed @ AXIS, 0.0, atol=1e-14)

    def test_rara_examples(self):
        np.testing.assert_allclose(
            torsion.rara_closed_form(1.0, -1.0, -2.0, AXIS), 4.0 * np.diag([1, 1, 0.0])
        )
        np.testing.assert_allclose(
            torsion.rara_closed_form(0.5, 0.0, -0.5, AXIS), np.diag([1, 1, 0.0])
        )
        # root of the scalar factor: 3a^2 - s/2 + 2ac = 0
        alpha, s = 1.0, -2.0
        gamma = -(3 * alpha**2 - 0.5 * s) / (2 * alpha)
        np.testing.assert_allclose(torsion.rara_closed_form(alpha, gamma, s, AXIS), 0.0)

    def test_skew_curvature_shift(self, rng):
        # R^{g,a} = R^g + a^2 X ^ Y on any model
        for _ in range(25):
            model = random_model(rng)
            alpha = rng.normal()
            conn = torsion.connection_with_torsion(model, torsion.skew(alpha))
            r = torsion.curvature_D(model, conn)
            base = geometry.curvature(model, geometry.levi_civita(model)).riemann
            np.testing.assert_allclose(
                r.entries, base.entries + alpha**2 * np.eye(3), atol=1e-12
            )

    def test_skew_rr_closed_form(self, rng):
        for _ in range(25):
            model = random_model(rng)
            alpha = rng.normal()
            conn = torsion.connection_with_torsion(model, torsion.skew(alpha))
            r = torsion.curvature_D(model, conn)
            data = geometry.curvature(model, geometry.levi_civita(model))
            closed = torsion.skew_rr_closed_form(data.ricci, data.scalar, alpha)
            scale = max(1.0, float(np.abs(closed).max()))
            np.testing.assert_allclose(
                frame.curv_compose(r, r), closed, atol=1e-11 * scale
            )

    def test_skew_rr_examples(self):
        np.testing.assert_allclose(
            torsion.skew_rr_closed_form(-2.0 * np.eye(3), -6.0, 1.0), 8.0 * np.eye(3)
        )
        np.testing.assert_allclose(
            torsion.skew_rr_closed_form(np.diag([-0.5, -0.5, 0.5]), -0.5, 0.5),
            np.diag([1.0, 1.0, 0.0]),
            atol=1e-14,
        )
        np.testing.assert_allclose(torsion.skew_rr_closed_form(np.zeros((3, 3)), 0.0, 0.0), 0.0)
