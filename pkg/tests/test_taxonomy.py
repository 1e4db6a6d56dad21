import math

import numpy as np
import pytest

from soliton2d import (
    RangeError,
    Rescale,
    Scale,
    SolitonParams,
    Translate,
    apply_symmetry,
    build_warped_metric,
    catalog,
    catalog_listing,
    classify,
    disk_boundary_distance,
    geometry_report,
    integrate_profile,
    make_params,
)
from soliton2d.taxonomy import FAMILY_TAGS
from conftest import FAMILY_SAMPLES, cached_entry


class TestClassifyDecisionTable:
    def test_steady_cigar(self):
        prof = integrate_profile(make_params(0.0, -1.0), 0.0, 1.0, (0.0, 0.2))
        assert classify(prof).tag == "G1_CIGAR"

    def test_steady_exploding_vs_g3(self):
        p = make_params(0.0, 1.0)
        assert classify(integrate_profile(p, 0.0, 1.0, (0.0, 1.0))).tag == "G2_EXPLODING"
        # anchor on the branch behind the pole: phi <= 0
        assert classify(integrate_profile(p, 0.5, 1.0, (0.3, 5.0))).tag == "G3"

    def test_positive_gamma_mu_positive(self):
        p = SolitonParams(4.0, 1.0)  # gamma = 1/2
        assert classify(integrate_profile(p, 0.0, 1.0, (0.0, 0.05))).tag == "G4_PLUS"
        p5 = SolitonParams(1.0, 1.0)  # gamma = 2
        assert classify(integrate_profile(p5, 0.0, 1.0, (0.0, 0.5))).tag == "G5"

    def test_positive_gamma_mu_negative(self):
        p6 = SolitonParams(-1.0, -1.0)  # gamma = 2, start below
        assert classify(integrate_profile(p6, 0.0, 1.0, (0.0, 1.0))).tag == "G6"
        p7 = SolitonParams(-4.0, -1.0)  # gamma = 1/2, start above: T0 < 0 always
        assert classify(integrate_profile(p7, 0.0, 1.0, (0.0, 1.0))).tag == "G7"

    def test_negative_gamma(self):
        p4m = SolitonParams(2.0, -1.0)  # gamma = -1
        assert classify(integrate_profile(p4m, 0.0, 1.0, (0.0, 0.05))).tag == "G4_MINUS"
        p10 = SolitonParams(-2.0, 1.0)  # gamma = -1
        assert classify(integrate_profile(p10, 0.0, 1.0, (0.0, 1.0))).tag == "G10"

    def test_flat_separatrix(self):
        prof = integrate_profile(make_params(-2.0, -1.0), 0.0, 1.0, (0.0, 1.0))
        assert classify(prof).tag == "FLAT_SEPARATRIX"

    def test_t0_positive_families_from_translation(self):
        # same solution curve, anchored so the blow-up lands at t = 0.4 > 0
        entry = cached_entry("G9", 2.0)
        p = entry.params
        prof = entry.profile
        shifted = apply_symmetry(prof, Translate(0.15))  # T0: 1/4 -> 0.4
        assert classify(shifted).tag == "G9"

    def test_unresolved_near_zero_t0(self):
        # anchor numerically so that T0 is within its uncertainty of zero
        p = SolitonParams(-1.0, -1.0)  # gamma = 2, branch above
        from soliton2d.ode import _separatrix_time

        t_anchor = _separatrix_time(p, 1e6)  # T0 = 0 exactly, but unflagged
        prof = integrate_profile(p, t_anchor, 1e6, (t_anchor - 1.0, math.inf))
        label = classify(prof)
        assert label.tag == "UNRESOLVED_T0_SIGN"
        assert abs(label.t0_estimate) <= label.t0_uncertainty

    def test_exact_t0_catalog_is_not_unresolved(self):
        for tag in ("G8", "G11"):
            entry = cached_entry(tag, FAMILY_SAMPLES[tag])
            assert entry.profile.t0_exact and entry.profile.t0 == 0.0
            assert classify(entry.profile).tag == tag


class TestCatalog:
    @pytest.mark.parametrize("tag", FAMILY_TAGS)
    def test_round_trip(self, tag):
        entry = cached_entry(tag, FAMILY_SAMPLES[tag])
        assert classify(entry.profile).tag == tag
        assert entry.family.tag == tag

    def test_cigar_entry_closed_form(self):
        entry = cached_entry("G1_CIGAR", 1.0)
        assert entry.params.lam == 0.0 and entry.params.mu == -1.0
        ts = np.linspace(-0.5, 0.2, 10)
        np.testing.assert_allclose(entry.profile.a(ts), 1.0 / (1.0 - 4.0 * ts), rtol=1e-14)

    def test_g6_cone_angle(self):
        entry = cached_entry("G6", math.pi)
        assert entry.params.gamma == pytest.approx(2.0)
        rep = geometry_report(entry.profile)
        assert rep.outer_end.angle == pytest.approx(math.pi, abs=1e-10)

    def test_g3_zero_nu(self):
        entry = catalog("G3", 0.0)
        rep = geometry_report(entry.profile)
        assert rep.inner_end.kind == "CYLINDER_END"
        assert rep.inner_end.radius == pytest.approx(0.0, abs=1e-12)

    def test_range_enforcement(self):
        with pytest.raises(RangeError):
            catalog("G6", 7.0)  # >= 2 pi
        with pytest.raises(RangeError):
            catalog("G7", 6.0)  # <= 2 pi
        with pytest.raises(RangeError):
            catalog("G4_PLUS", 0.9)
        with pytest.raises(RangeError):
            catalog("G4_MINUS", 1.0)
        with pytest.raises(RangeError):
            catalog("G1_CIGAR", -1.0)

    def test_g4_plus_unattainable_above_hemisphere(self):
        # the boundary distance tends to the constant-curvature value pi/2
        # as gamma -> 0+, so larger requests cannot be realized
        with pytest.raises(RangeError):
            catalog("G4_PLUS", 2.0)

    def test_g4_distance_normalization(self):
        for tag in ("G4_PLUS", "G4_MINUS"):
            entry = cached_entry(tag, FAMILY_SAMPLES[tag])
            assert entry.nu == pytest.approx(FAMILY_SAMPLES[tag], abs=1e-8)
            # blow-up at 1/4 means the boundary circle has length 2 pi
            assert entry.profile.t1 == pytest.approx(0.25, abs=1e-9)

    def test_disk_boundary_distance_monotone(self):
        d = [disk_boundary_distance(g) for g in (0.2, 0.5, 0.8)]
        assert d[0] > d[1] > d[2] > 1.0
        dm = [disk_boundary_distance(g) for g in (-10.0, -1.0, -0.1)]
        assert dm[0] > dm[1] > dm[2] > math.pi / 2.0

    def test_boundary_length_normalizations(self):
        for tag in ("G9", "G12"):
            entry = cached_entry(tag, FAMILY_SAMPLES[tag])
            T0 = entry.profile.t0
            assert 4.0 * math.pi * math.sqrt(T0) == pytest.approx(2.0 * math.pi, abs=1e-9)

    def test_g8_lambda_normalization(self):
        entry = cached_entry("G8", math.pi)
        assert entry.params.lam == -1.0
        assert entry.params.gamma == pytest.approx(2.0)

    def test_listing_shape(self):
        rows = catalog_listing()
        assert len(rows) == 12
        g4 = next(row for row in rows if row["family"] == "G4")
        assert g4["branches"] == ["G4_PLUS", "G4_MINUS"]
        complete = {row["family"] for row in rows if row["complete"]}
        assert complete == {"G1_CIGAR", "G6", "G7", "G8"}


class TestScalingConsistency:
    def test_cigar_family_is_one_orbit(self):
        """catalog g1(nu) equals the metric-scaling image of g1(1)."""
        base = cached_entry("G1_CIGAR", 1.0)
        for nu in (0.5, 2.0):
            target = cached_entry("G1_CIGAR", nu)
            image = apply_symmetry(base.profile, Rescale(1.0 / nu))
            assert image.params.mu == pytest.approx(target.params.mu, rel=1e-14)
            ts = np.linspace(-0.1 / nu**2, 0.2 / nu**2, 50)
            np.testing.assert_allclose(image.a(ts), target.profile.a(ts), rtol=1e-8)
            # and the warped metrics agree: b_nu(r) = (1/nu) tanh(nu r)
            m = build_warped_metric(target.profile, (0.0, 0.0), (0.0, 4.0 / nu), 801)
            np.testing.assert_allclose(m.b, np.tanh(nu * m.r) / nu, atol=1e-8)

    def test_classification_invariant_under_actions(self):
        """Scaling actions never change the tag; translation preserves it as
        long as the blow-up time does not cross the origin (the tag of the
        T0-keyed families is anchored to t = b^2/4 >= 0, so moving the
        blow-up past 0 genuinely changes the geometry)."""
        cases = [
            ("G1_CIGAR", 1.0),
            ("G5", 1.0),
            ("G6", math.pi),
            ("G7", 3.0 * math.pi),
            ("G10", 1.0),
            ("G4_MINUS", 2.2),
        ]
        for tag, nu in cases:
            prof = cached_entry(tag, nu).profile
            for action in (Scale(2.0), Scale(0.3), Rescale(1.7)):
                assert classify(apply_symmetry(prof, action)).tag == tag, (tag, action)
            t0 = prof.t0
            tau = 0.3 * abs(t0) if math.isfinite(t0) and t0 != 0.0 else 0.37
            for action in (Translate(tau), Translate(-tau)):
                assert classify(apply_symmetry(prof, action)).tag == tag, (tag, action)

    def test_translation_changes_t0_family(self):
        # the non-geometric translation moves G10 (T0 < 0) into G12 (T0 > 0)
        prof = cached_entry("G10", 1.0).profile
        t0 = prof.t0
        moved = apply_symmetry(prof, Translate(-2.0 * t0))
        assert classify(moved).tag == "G12"
