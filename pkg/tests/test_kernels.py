"""Finite-n and edge kernels, orthogonal systems, and backend agreement."""

import os
from fractions import Fraction

import numpy as np
import pytest

from betasf.errors import DomainError
from betasf.numerics.backend import backend_name, get_backend
from betasf.numerics.kernels import (
    Kernel,
    OrthoSystem,
    gue_kernel,
    gue_kernel_diag,
    hard_edge_kernel,
    hermite_functions,
    lue_kernel,
    lue_kernel_diag,
    soft_edge_kernel,
    weighted_laguerre1,
)

RNG = np.random.default_rng(11)


class TestOrthoSystem:
    def test_monic_hermite_exact_values(self):
        system = OrthoSystem("hermite_gue")
        x = Fraction(1, 2)
        # H3_monic = x^3 - (3/2) x -> at 1/2: 1/8 - 3/4
        assert system.monic(3, x) == Fraction(1, 8) - Fraction(3, 4)

    def test_monic_laguerre_exact_values(self):
        from math import factorial

        from betasf.numerics.special import laguerre_exact

        system = OrthoSystem("laguerre_lue", a=0)
        x = Fraction(7, 3)
        for n in (0, 1, 2, 5):
            # monic Laguerre is (-1)^n n! L_n
            expected = (-1) ** n * factorial(n) * laguerre_exact(n, 0, x)
            assert system.monic(n, x) == expected

    def test_orthonormal_matches_monic_over_norm(self):
        system = OrthoSystem("hermite_gue")
        x = np.array([0.3, 1.1, 2.4])
        n = 4
        direct = (
            np.exp(-(x**2) / 2.0)
            * np.array([float(system.monic(n, Fraction(v).limit_denominator(10**12)))
                        for v in x])
        )
        # float path loses a little; the anchor is the rational recurrence
        got = system.orthonormal(n, x) * np.sqrt(system.norm(n))
        assert np.allclose(got, direct, rtol=1e-9)

    def test_unknown_family_rejected(self):
        with pytest.raises(DomainError):
            OrthoSystem("jacobi")

    def test_negative_parameter_rejected(self):
        with pytest.raises(DomainError):
            OrthoSystem("laguerre_lue", a=-1)


class TestGueKernel:
    def test_cd_and_sum_forms_agree(self):
        x = RNG.uniform(-3, 3, 40)
        y = RNG.uniform(-3, 3, 40)
        cd = gue_kernel(8, x, y, form="cd")
        direct = gue_kernel(8, x, y, form="sum")
        assert np.allclose(cd, direct, atol=1e-10)

    def test_diagonal_is_continuous_limit(self):
        x = np.array([0.7])
        eps = 1e-7
        diag = gue_kernel_diag(6, x)
        near = gue_kernel(6, x, x + eps)
        assert abs(diag[0] - near[0]) < 1e-5

    def test_symmetry(self):
        x = RNG.uniform(-2, 2, 25)
        y = RNG.uniform(-2, 2, 25)
        assert np.allclose(gue_kernel(5, x, y), gue_kernel(5, y, x), atol=1e-12)

    def test_reproducing_property_via_quadrature(self):
        from betasf.numerics.quadrature import DEFAULT_POLICY, integrate

        n, x, y = 3, 0.4, -0.9

        def f(t):
            return gue_kernel(n, np.asarray([x]), np.asarray([t]))[0] * gue_kernel(
                n, np.asarray([t]), np.asarray([y])
            )[0]

        got = integrate(f, -12.0, 12.0, DEFAULT_POLICY).value
        assert got == pytest.approx(
            float(gue_kernel(n, np.asarray([x]), np.asarray([y]))[0]), abs=1e-8
        )

    def test_hermite_functions_normalized(self):
        from betasf.numerics.quadrature import DEFAULT_POLICY, integrate

        def f(t):
            return hermite_functions(4, np.asarray([t]))[1][0] ** 2

        assert integrate(f, -14.0, 14.0, DEFAULT_POLICY).value == pytest.approx(
            1.0, abs=1e-9
        )


class TestLueKernel:
    def test_cd_and_sum_forms_agree(self):
        x = RNG.uniform(0.05, 15, 40)
        y = RNG.uniform(0.05, 15, 40)
        assert np.allclose(
            lue_kernel(7, x, y, form="cd"),
            lue_kernel(7, x, y, form="sum"),
            atol=1e-9,
        )

    def test_diag_forms_agree(self):
        x = RNG.uniform(0.05, 12, 30)
        assert np.allclose(
            lue_kernel_diag(6, x, form="cd"),
            lue_kernel_diag(6, x, form="sum"),
            atol=1e-9,
        )

    def test_complex_arguments(self):
        x = np.array([1.0 + 0.3j])
        y = np.array([2.0 - 0.1j])
        cd = lue_kernel(4, x, y, form="cd")
        direct = lue_kernel(4, x, y, form="sum")
        assert np.allclose(cd, direct, atol=1e-10)

    def test_weighted_laguerre1_small_case(self):
        # n = 1: e^{-x/2} L_1^{(1)}(x) = e^{-x/2} (2 - x)
        x = np.array([0.5, 1.5, 3.0])
        assert np.allclose(
            weighted_laguerre1(1, x), np.exp(-x / 2.0) * (2.0 - x), atol=1e-12
        )


class TestEdgeKernels:
    def test_hard_edge_diagonal_continuity(self):
        x = np.array([2.0])
        assert abs(
            hard_edge_kernel(x, x + 1e-9)[0] - hard_edge_kernel(x, x)[0]
        ) < 1e-6

    def test_hard_edge_negative_rejected(self):
        with pytest.raises(DomainError):
            hard_edge_kernel(np.array([-1.0]), np.array([1.0]))

    def test_soft_edge_diagonal_continuity(self):
        x = np.array([-0.5])
        assert abs(
            soft_edge_kernel(x, x + 1e-9)[0] - soft_edge_kernel(x, x)[0]
        ) < 1e-6

    def test_soft_edge_decays_to_the_right(self):
        far = soft_edge_kernel(np.array([6.0]), np.array([6.0]))[0]
        assert 0.0 < far < 1e-8


class TestKernelFacade:
    def test_classmethod_dispatch(self):
        x = np.array([0.8])
        y = np.array([1.3])
        assert Kernel.gue(5)(x, y)[0] == pytest.approx(
            gue_kernel(5, x, y)[0], abs=1e-14
        )
        assert Kernel.lue(5)(x, y)[0] == pytest.approx(
            lue_kernel(5, x, y)[0], abs=1e-14
        )

    def test_lue_with_parameter_falls_back_to_sum(self):
        k = Kernel.lue(3, a=2)
        x = np.array([1.2])
        system = OrthoSystem("laguerre_lue", a=2)
        expected = sum(
            system.orthonormal(m, x)[0] ** 2 for m in range(3)
        )
        assert k(x, x)[0] == pytest.approx(expected, abs=1e-12)

    def test_diag_matches_call(self):
        for kernel in (Kernel.gue(4), Kernel.lue(4), Kernel.hard_edge(),
                       Kernel.soft_edge()):
            x = np.array([1.1])
            assert kernel.diag(x)[0] == pytest.approx(
                float(np.real(kernel(x, x)[0])), abs=1e-9
            )

    def test_invalid_sizes_rejected(self):
        with pytest.raises(DomainError):
            Kernel.gue(0)
        with pytest.raises(DomainError):
            Kernel.lue(2, a=-1)


class TestBackends:
    def test_forced_numpy_matches_active(self):
        x = RNG.uniform(0.1, 10, 30)
        y = x + RNG.uniform(0.01, 0.4, 30)
        active = lue_kernel(9, x, y)
        old = os.environ.get("BETASF_NUMBA")
        os.environ["BETASF_NUMBA"] = "0"
        try:
            forced = lue_kernel(9, x, y)
        finally:
            if old is None:
                del os.environ["BETASF_NUMBA"]
            else:
                os.environ["BETASF_NUMBA"] = old
        assert np.allclose(active, forced, rtol=1e-12, atol=1e-13)

    def test_backend_name_reports_selection(self):
        assert backend_name() in ("numba", "numpy")

    def test_backend_has_all_kernels(self):
        backend = get_backend()
        for fname in (
            "hermite_pair", "gue_diag", "gue_sum", "gue_cd",
            "laguerre_pair", "lue_diag", "lue_sum", "lue_cd",
            "lue_cd_diag", "laguerre_ell1",
        ):
            assert hasattr(backend, fname)
