import math

import numpy as np
import pytest

from lunepot import _kernels_py as kern
from lunepot.errors import DomainError, QuadratureWarning
from lunepot.geometry import OverlapQuery
from lunepot.quadrature import (
    QuadResult,
    adaptive_quad,
    quad_cos_log,
    quad_lune,
    quad_lune_tensor,
    quad_wedge,
)

PI = math.pi


class TestRulePair:
    def test_gauss_nodes_match_legendre(self):
        nodes, weights = np.polynomial.legendre.leggauss(7)
        pos = sorted(n for n in nodes if n > 0)
        table = sorted((kern._XGK[1], kern._XGK[3], kern._XGK[5]))
        assert np.allclose(pos, table, atol=5e-15, rtol=0.0)
        assert abs(kern._WG_C - weights[3]) <= 5e-15
        want = sorted(w for n, w in zip(nodes, weights) if n > 0)
        assert np.allclose(sorted(kern._WG), want, atol=5e-15, rtol=0.0)

    def test_kronrod_polynomial_exactness(self):
        # the 15-point rule integrates monomials up to degree 22 exactly
        for k in range(0, 23):
            total = kern._WGK_C * 0.0**k
            for x, w in zip(kern._XGK, kern._WGK):
                total += w * (x**k + (-x) ** k)
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            assert abs(total - exact) <= 2e-14

    def test_adaptive_on_smooth_integrand(self):
        res = adaptive_quad(math.exp, 0.0, 1.0, 1e-13)
        assert res.value == pytest.approx(math.e - 1.0, abs=1e-14)
        assert res.converged


class TestQuadWedge:
    def test_empty_interval(self):
        e = 0.25
        res = quad_wedge(OverlapQuery(1.0 - e, e))
        assert res.value == 0.0
        assert res.subdivisions >= 1

    def test_tolerance_monotonicity(self):
        q = OverlapQuery(0.95, 0.1)
        errs = [quad_wedge(q, tol).err_estimate for tol in (1e-6, 1e-8, 1e-10, 1e-12)]
        assert all(e2 <= e1 for e1, e2 in zip(errs, errs[1:]))

    def test_theta_structure_continuity(self):
        # value is continuous across the change from two angular intervals
        # to one at a^2 = 1 + eps^2
        e = 0.3
        a_star = math.sqrt(1.0 + e * e)
        lo = quad_wedge(OverlapQuery(a_star - 1e-11, e), 1e-12).value
        hi = quad_wedge(OverlapQuery(a_star + 1e-11, e), 1e-12).value
        assert abs(lo - hi) <= 1e-10

    def test_budget_flag(self):
        q = OverlapQuery(1.0, 0.3)
        with pytest.warns(QuadratureWarning):
            res = quad_wedge(q, 1e-13, budget=3)
        assert not res.converged

    def test_tolerance_floor(self):
        with pytest.raises(DomainError):
            quad_wedge(OverlapQuery(1.0, 0.3), 1e-14)

    def test_out_of_band(self):
        with pytest.raises(DomainError):
            quad_wedge(OverlapQuery(0.2, 0.3))


class TestQuadLune:
    def test_nested_is_closed_form(self):
        e = 0.5
        res = quad_lune(OverlapQuery(0.2, e))
        assert res.value == 0.25 * e * e * (math.log(e * e) - 1.0)
        assert res.err_estimate == 0.0

    def test_outside_zero(self):
        res = quad_lune(OverlapQuery(1.6, 0.5))
        assert res == QuadResult(0.0, 0.0, 1, True)

    def test_overlap_error_estimate(self):
        res = quad_lune(OverlapQuery(1.05, 0.2), 1e-11)
        assert res.converged
        assert res.err_estimate <= 1e-11

    def test_envelope(self):
        for e in (0.5, 0.2):
            env = 0.25 * e * e * (1.0 - math.log(e * e)) + 1e-12
            for a in np.linspace(0.0, 1.0 + e, 40):
                assert abs(quad_lune(OverlapQuery(float(a), e), 1e-11).value) <= env


class TestQuadCosLog:
    def test_empty(self):
        assert quad_cos_log(0.5, 0.0).value == 0.0

    def test_near_log_endpoint(self):
        res = quad_cos_log(1.0, 1.0, 1e-12)
        assert res.converged
        assert math.isfinite(res.value)

    def test_domain(self):
        with pytest.raises(DomainError):
            quad_cos_log(1.5, 1.0)


class TestTensorCrossCheck:
    @pytest.mark.parametrize(
        "a,e",
        [(0.2, 0.5), (0.8, 0.3), (0.95, 0.1), (0.99, 0.05), (0.85, 0.2)],
    )
    def test_agrees_with_primary(self, a, e):
        q = OverlapQuery(a, e)
        tensor = quad_lune_tensor(q, 1e-9)
        primary = quad_lune(q, 1e-12)
        assert tensor.value == pytest.approx(primary.value, abs=1e-8)

    @pytest.mark.parametrize("a,e", [(1.06, 0.5), (1.3, 0.5), (1.02, 0.2), (1.002, 0.05)])
    def test_outer_branches_against_raw_region(self, a, e):
        # the raw 2D region integral pins the sign conventions of the
        # angular decomposition beyond the unit distance
        q = OverlapQuery(a, e)
        tensor = quad_lune_tensor(q, 1e-9)
        primary = quad_lune(q, 1e-12)
        assert tensor.value == pytest.approx(primary.value, abs=1e-8)
