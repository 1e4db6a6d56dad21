import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from soliton2d import (
    DomainError,
    EdgeError,
    NotSmoothOriginError,
    SolitonParams,
    WindowEmptyError,
    build_warped_metric,
    closed_form_profile,
    curvature_from_a,
    curvature_from_b,
    geodesic_curvature,
    geometry_report,
    integrate_profile,
    make_params,
    metric_from_grid,
    radial_distance,
)
from conftest import cached_entry


class TestCurvatureFromA:
    def test_cigar_origin(self):
        assert curvature_from_a(make_params(0.0, -1.0), 1.0) == pytest.approx(2.0)

    def test_flat_separatrix(self):
        # a = gamma = 1 for (lambda, mu) = (-2, -1)
        assert curvature_from_a(make_params(-2.0, -1.0), 1.0) == pytest.approx(0.0)

    def test_limit_is_lambda(self):
        p = make_params(-3.0, -1.0)
        assert curvature_from_a(p, 1e12) == pytest.approx(p.lam, abs=1e-11)

    def test_sign_tracks_monotonicity(self):
        # increasing branch (mu < 0 below separatrix) has positive curvature
        p = make_params(-1.0, -1.0)  # gamma = 2
        prof = integrate_profile(p, 0.0, 1.0, (0.0, 10.0))
        ts = np.linspace(0.1, 2.0, 20)  # beyond t ~ 5 the deviation from gamma underflows
        assert prof.monotonicity() == "increasing"
        assert np.all(p.curvature(prof.a(ts)) > 0.0)


class TestBuildWarpedMetric:
    def test_cigar_matches_tanh(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 5.0), 2001)
        assert np.max(np.abs(m.b - np.tanh(m.r))) <= 1e-6
        assert m.b_prime[0] == pytest.approx(1.0, abs=1e-12)
        assert m.K[0] == pytest.approx(2.0, abs=1e-9)

    def test_exploding_matches_tan(self):
        prof = integrate_profile(make_params(0.0, 1.0), 0.0, 1.0, (0.0, math.inf))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 1.2), 2001)
        assert np.max(np.abs(m.b - np.tan(m.r))) <= 1e-6
        # total radial extent stops strictly before pi/2
        assert m.r_extent[1] < math.pi / 2.0
        assert m.r_extent[1] == pytest.approx(math.pi / 2.0, abs=1e-6)

    def test_flat_separatrix_is_plane(self):
        prof = integrate_profile(make_params(-2.0, -1.0), 0.0, 1.0, (0.0, 10.0))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 3.0), 501)
        assert_allclose(m.b, m.r, atol=1e-12)

    def test_coupling_identity(self, cigar_metric):
        m = cigar_metric
        prof = m.profile
        res = np.abs(prof.a(m.t_of_r[1:]) * m.b_prime[1:] - 1.0)
        assert np.max(res) <= 1e-8

    def test_t_of_r_exact(self, cigar_metric):
        assert_allclose(cigar_metric.t_of_r, 0.25 * cigar_metric.b**2, rtol=1e-15)

    def test_smooth_origin_required(self):
        # anchored at a(0) = 2: no smooth extension over b = 0
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 2.0, (0.0, math.inf))
        with pytest.raises(NotSmoothOriginError):
            build_warped_metric(prof, (0.0, 0.0), (0.0, 1.0), 101)

    def test_origin_not_in_domain(self):
        prof = closed_form_profile(make_params(0.0, 1.0), -1.0)  # domain (1/4, inf)
        with pytest.raises(DomainError):
            build_warped_metric(prof, (0.0, 0.0), (0.0, 1.0), 101)

    def test_window_empty(self):
        prof = integrate_profile(make_params(0.0, 1.0), 0.0, 1.0, (0.0, math.inf))
        with pytest.raises(WindowEmptyError):
            build_warped_metric(prof, (0.0, 0.0), (10.0, 20.0), 101)

    def test_interior_anchor(self):
        # anchor the cigar at b0 = tanh(1), r0 = 1: same metric, shifted window
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        m = build_warped_metric(prof, (1.0, math.tanh(1.0)), (0.5, 3.0), 801)
        assert np.max(np.abs(m.b - np.tanh(m.r))) <= 1e-8


class TestCurvatureFromB:
    def test_cigar_at_one(self, cigar_metric):
        got = curvature_from_b(cigar_metric, 1.0)
        assert got == pytest.approx(2.0 / math.cosh(1.0) ** 2, abs=5e-4)

    def test_second_order(self, cigar_entry):
        from soliton2d import entry_metric

        def err(h):
            m = entry_metric(cigar_entry, h=h)
            i = int(np.argmin(np.abs(m.r - 1.0)))  # estimate lives at the snapped node
            return abs(curvature_from_b(m, m.r[i]) - 2.0 / math.cosh(m.r[i]) ** 2)

        assert err(2e-3) / err(1e-3) >= 3.0

    def test_flat_is_zero(self):
        prof = integrate_profile(make_params(-2.0, -1.0), 0.0, 1.0, (0.0, 10.0))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 3.0), 1001)
        assert curvature_from_b(m, 1.5) == pytest.approx(0.0, abs=1e-9)

    def test_exploding_consistency(self):
        # -b''/b must agree with lambda - 2 mu b' for the tan metric
        prof = integrate_profile(make_params(0.0, 1.0), 0.0, 1.0, (0.0, math.inf))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 1.2), 2401)
        got = curvature_from_b(m, 0.5)
        assert got == pytest.approx(-2.0 / math.cos(0.5) ** 2, abs=2e-4)
        i = int(np.argmin(np.abs(m.r - 0.5)))
        assert got == pytest.approx(-2.0 * m.b_prime[i], abs=2e-4)

    def test_edge_guard(self, cigar_metric):
        with pytest.raises(EdgeError):
            curvature_from_b(cigar_metric, cigar_metric.r[1])

    def test_k_consistency_all_interior(self, cigar_metric):
        m = cigar_metric
        h = m.spacing
        idx = range(10, m.r.size - 10, 200)
        for i in idx:
            fd = curvature_from_b(m, m.r[i])
            alg = m.params.lam - 2.0 * m.params.mu * m.b_prime[i]
            assert abs(fd - alg) <= 20.0 * h * h


class TestGeodesicCurvature:
    def test_flat_unit_circle(self):
        prof = integrate_profile(make_params(-2.0, -1.0), 0.0, 1.0, (0.0, 10.0))
        m = build_warped_metric(prof, (0.0, 0.0), (0.0, 3.0), 1001)
        assert geodesic_curvature(m, 1.0) == pytest.approx(1.0, abs=1e-9)

    def test_cigar_value(self, cigar_metric):
        # analytic oracle sech^2(r)/tanh(r) from the tanh closed form
        got = geodesic_curvature(cigar_metric, 2.0)
        exact = (1.0 / math.cosh(2.0) ** 2) / math.tanh(2.0)
        assert got == pytest.approx(exact, abs=1e-6)

    def test_vanishes_at_boundary_blowup(self):
        # boundary-disk family: kappa -> 0 approaching the edge circle
        entry = cached_entry("G4_PLUS", 1.3)
        prof = entry.profile
        kappas = []
        for a_level in (1e2, 1e4, 1e6):
            from soliton2d import time_between_levels

            t = prof.t_ref + time_between_levels(prof.params, prof.a_ref, a_level)
            kappas.append(1.0 / (2.0 * a_level * math.sqrt(t)))
        assert kappas[0] > kappas[1] > kappas[2]
        assert kappas[2] <= 1e-4


class TestRadialDistance:
    def test_cigar_against_atanh(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        # r(t): b = 2 sqrt(t) = tanh(r) so r = atanh(2 sqrt(t))
        for t in (0.01, 0.05, 0.2):
            assert radial_distance(prof, 0.0, t) == pytest.approx(
                math.atanh(2.0 * math.sqrt(t)), rel=1e-9
            )


class TestGeometryReport:
    def test_cigar(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        rep = geometry_report(prof)
        assert rep.complete and rep.complete_inner and rep.complete_outer
        assert rep.curvature_sign == "POSITIVE"
        assert (rep.K_inf, rep.K_sup) == (pytest.approx(0.0), pytest.approx(2.0))
        assert rep.outer_end.kind == "CYLINDER_END"
        assert rep.outer_end.radius == pytest.approx(1.0, abs=1e-6)
        assert rep.inner_end.kind == "SMOOTH_POINT"

    def test_exploding(self):
        prof = integrate_profile(make_params(0.0, 1.0), 0.0, 1.0, (0.0, math.inf))
        rep = geometry_report(prof)
        assert not rep.complete
        assert rep.K_inf == -math.inf and rep.K_sup == pytest.approx(-2.0)
        assert rep.outer_end.kind == "EXPLODING_END"
        assert rep.outer_end.nu == pytest.approx(1.0)
        assert not rep.bounded_curvature

    def test_g6_cone(self):
        prof = integrate_profile(make_params(-1.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        rep = geometry_report(prof)
        assert rep.complete
        assert rep.curvature_sign == "POSITIVE"
        assert rep.outer_end.kind == "CONE_END"
        assert rep.outer_end.angle == pytest.approx(math.pi, abs=1e-10)

    def test_bounded_iff_a_bounded_away_from_zero(self):
        # decaying branch: curvature unbounded; converging branch: bounded
        rep_decay = geometry_report(
            integrate_profile(make_params(0.0, 1.0), 0.0, 1.0, (0.0, math.inf))
        )
        assert not rep_decay.bounded_curvature
        rep_conv = geometry_report(
            integrate_profile(make_params(-1.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        )
        assert rep_conv.bounded_curvature

    def test_truncated_window_resolves(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, 0.1))
        rep = geometry_report(prof)  # re-integrates the maximal interval
        assert rep.outer_end.kind == "CYLINDER_END"
        rep_raw = geometry_report(prof, resolve=False)
        assert rep_raw.outer_end.kind == "BLOWUP_EDGE"
        assert not rep_raw.complete_outer

    def test_json_shape(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, math.inf))
        d = geometry_report(prof).to_json_dict()
        assert d["complete"] is True
        assert d["outer_end"]["kind"] == "CYLINDER_END"
        assert "radius" in d["outer_end"]

    def test_cone_vertex_incomplete(self):
        # a(0) = 2 != 1: flat-cone-like vertex at the origin, not smooth
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 2.0, (0.0, math.inf))
        rep = geometry_report(prof)
        assert rep.inner_end.kind == "CONE_END"
        assert rep.inner_end.angle == pytest.approx(math.pi, rel=1e-8)
        assert not rep.complete_inner


class TestMetricFromGrid:
    def test_recovers_cigar_curvature(self):
        r = np.arange(0.2, 3.0, 1e-3)
        m = metric_from_grid(SolitonParams(0.0, -1.0), r, np.tanh(r))
        exact = 2.0 / np.cosh(r) ** 2
        assert np.max(np.abs(m.K - exact)[2:-2]) <= 1e-5

    def test_rejects_bad_shapes(self):
        with pytest.raises(DomainError):
            metric_from_grid(SolitonParams(0.0, -1.0), np.arange(3.0), np.ones(4))


class TestMetricCsv:
    def test_header_and_roundtrip(self, cigar_metric):
        text = cigar_metric.to_csv()
        lines = text.strip().split("\n")
        assert lines[0] == "r,b,db_dr,K"
        r, b, bp, K = map(float, lines[5].split(","))
        assert b == pytest.approx(math.tanh(r), abs=1e-8)
        assert K == pytest.approx(2.0 * (1.0 - b * b), abs=1e-8)
