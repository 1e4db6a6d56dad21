"""Classification into the twelve solution families and canonical catalog.

The decision table follows the phase-line case analysis: the steady branch
splits by the sign of mu and the reciprocal-affine coefficient, a finite
positive separatrix splits by the side of the anchor, and the families with
an initial blow-up split by the sign of the blow-up time T0.  The sign of
T0 is only trusted when it exceeds its numerical uncertainty or when the
profile was anchored analytically (the T0 = 0 cusp families are measure
zero and are produced exactly by the catalog, never inferred from data).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from scipy.optimize import brentq

from .errors import DomainError, RangeError
from .geometry import build_warped_metric, radial_distance, t0_uncertainty
from .ode import (
    BLOW_UP,
    DECAY_TO_ZERO,
    SEPARATRIX_SNAP,
    SMOOTH_ORIGIN,
    EndTag,
    ProfileA,
    SolitonParams,
    _separatrix_time,
    closed_form_profile,
    integrate_profile,
    time_between_levels,
)

G1_CIGAR = "G1_CIGAR"
G2_EXPLODING = "G2_EXPLODING"
G3 = "G3"
G4_PLUS = "G4_PLUS"
G4_MINUS = "G4_MINUS"
G5 = "G5"
G6 = "G6"
G7 = "G7"
G8 = "G8"
G9 = "G9"
G10 = "G10"
G11 = "G11"
G12 = "G12"
FLAT_SEPARATRIX = "FLAT_SEPARATRIX"
UNRESOLVED_T0_SIGN = "UNRESOLVED_T0_SIGN"

FAMILY_TAGS = (
    G1_CIGAR, G2_EXPLODING, G3, G4_PLUS, G4_MINUS, G5,
    G6, G7, G8, G9, G10, G11, G12,
)

#: Anchor level for the analytic construction of initial blow-up profiles.
_A_ANCHOR = 1.0e6


@dataclass(frozen=True)
class FamilyLabel:
    tag: str
    t0_estimate: Optional[float] = None
    t0_uncertainty: Optional[float] = None

    def __str__(self):
        if self.tag == UNRESOLVED_T0_SIGN:
            return f"{self.tag}(T0={self.t0_estimate:g} +- {self.t0_uncertainty:g})"
        return self.tag


@dataclass(frozen=True)
class CatalogEntry:
    family: FamilyLabel
    nu: float
    params: SolitonParams
    profile: ProfileA
    normalization_note: str


def _initial_blowup(profile: ProfileA) -> tuple[float, float, bool]:
    """(T0, uncertainty, exact) for a branch that blows up in the past."""
    if profile.tag0.kind == BLOW_UP:
        return profile.t0, t0_uncertainty(profile), profile.t0_exact
    fresh = integrate_profile(
        profile.params, profile.t_ref, profile.a_ref,
        (-math.inf, profile.t_ref), tol=profile.tol,
    )
    if fresh.tag0.kind != BLOW_UP:
        raise DomainError("expected an initial blow-up on this branch")
    return fresh.t0, t0_uncertainty(fresh), False


def classify(profile: ProfileA) -> FamilyLabel:
    """Family tag of the solution branch through the profile's anchor."""
    p = profile.params
    g = p.gamma
    if profile.is_constant:
        return FamilyLabel(FLAT_SEPARATRIX)
    a0 = profile.a_ref
    if math.isinf(g):
        phi = 1.0 / a0 - 4.0 * p.mu * profile.t_ref
        if p.mu < 0.0:
            return FamilyLabel(G1_CIGAR)
        return FamilyLabel(G2_EXPLODING) if phi > 0.0 else FamilyLabel(G3)
    if g > 0.0 and abs(a0 - g) <= SEPARATRIX_SNAP * max(1.0, g):
        return FamilyLabel(FLAT_SEPARATRIX)
    if g > 0.0:
        if p.mu > 0.0:
            return FamilyLabel(G4_PLUS) if a0 > g else FamilyLabel(G5)
        if a0 < g:
            return FamilyLabel(G6)
        below, on, above = G7, G8, G9
    else:
        if p.mu < 0.0:
            return FamilyLabel(G4_MINUS)
        below, on, above = G10, G11, G12
    t0, unc, exact = _initial_blowup(profile)
    if exact:
        if t0 == 0.0:
            return FamilyLabel(on, t0, 0.0)
        return FamilyLabel(below if t0 < 0.0 else above, t0, 0.0)
    if abs(t0) <= unc:
        return FamilyLabel(UNRESOLVED_T0_SIGN, t0, unc)
    return FamilyLabel(below if t0 < 0.0 else above, t0, unc)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def _require_range(tag: str, nu: float, lo: float, hi: float, lo_open=True, hi_open=True):
    ok = (nu > lo if lo_open else nu >= lo) and (nu < hi if hi_open else nu <= hi)
    if not ok:
        lo_b = "(" if lo_open else "["
        hi_b = ")" if hi_open else "]"
        raise RangeError(f"{tag} requires nu in {lo_b}{lo:g}, {hi:g}{hi_b}, got {nu:g}")


def disk_boundary_distance(gamma: float) -> float:
    """Distance from the center to the totally geodesic boundary circle.

    The branch through a(0) = 1 above the separatrix, time-normalized so the
    blow-up sits at t = 1/4 (boundary length 2 pi); the distance is the full
    radial extent of the reconstructed disk.  Strictly decreasing in gamma on
    each of (0, 1) and (-inf, 0).
    """
    if gamma >= 1.0 or gamma == 0.0:
        raise DomainError("boundary-disk branch requires gamma < 1, gamma != 0")
    mu = -1.0 - math.log1p(-gamma) / gamma
    lam = 2.0 * mu / gamma
    prof = integrate_profile(SolitonParams(lam, mu), 0.0, 1.0, (0.0, math.inf))
    metric = build_warped_metric(prof, (0.0, 0.0), (0.0, 100.0), n_samples=64)
    return metric.r_extent[1]


def _blowup_anchor_profile(params: SolitonParams, T0: float) -> ProfileA:
    """Profile with an exact initial blow-up at T0, anchored analytically.

    Places the anchor at the level a = 1e6 through the separable-integral
    relation t(a) = T0 + G(a) (G the exact time-to-level antiderivative with
    G(inf) = 0), integrates from there, and pins the refined endpoint to the
    exact T0 after checking agreement.
    """
    t_anchor = T0 + _separatrix_time(params, _A_ANCHOR)
    prof = integrate_profile(params, t_anchor, _A_ANCHOR, (min(0.0, T0), math.inf))
    if abs(prof.t0 - T0) > 1e-9 * max(1.0, abs(T0)):
        raise DomainError(
            f"analytic anchoring inconsistent: refined T0 {prof.t0!r} vs target {T0!r}"
        )
    return replace(prof, t0=float(T0), t0_exact=True, tag0=EndTag(BLOW_UP))


def catalog(tag: str, nu: float) -> CatalogEntry:
    """Canonical representative of a family at parameter nu.

    Normalizations: the steady families use their closed forms; the
    boundary-disk families set the blow-up time to 1/4 (boundary length
    2 pi) and recover gamma from nu = dist(center, boundary) by bisection;
    the cusp families fix lambda = -1 with the blow-up exactly at t = 0; the
    boundary annuli put the blow-up at t = 1/4; cone families are indexed by
    the cone angle nu = 2 pi / gamma with mu = -1.
    """
    nu = float(nu)
    if tag == G1_CIGAR:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(0.0, -nu * nu)
        prof = closed_form_profile(params, 1.0)
        note = "closed form 1/(1 - 4 nu^2 t); nu is the metric scale"
    elif tag == G2_EXPLODING:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(0.0, nu * nu)
        prof = closed_form_profile(params, 1.0)
        note = "closed form 1/(1 + 4 nu^2 t); nu is the metric scale"
    elif tag == G3:
        _require_range(tag, nu, 0.0, math.inf, lo_open=False)
        params = SolitonParams(0.0, 1.0)
        prof = closed_form_profile(params, -nu * nu)
        note = "closed form 1/(4t - nu^2) at mu = 1; inner cylinder radius nu"
    elif tag in (G4_PLUS, G4_MINUS):
        if tag == G4_PLUS:
            _require_range(tag, nu, 1.0, math.inf)
            hemi = disk_boundary_distance(1e-9)
            if nu >= hemi:
                raise RangeError(
                    f"G4_PLUS boundary distance is attainable only below {hemi:.9g} "
                    f"(the constant-curvature limit); got {nu:g}"
                )
            gamma = brentq(lambda g: disk_boundary_distance(g) - nu, 1e-9, 1.0 - 1e-12,
                           xtol=1e-13, rtol=8.9e-16)
        else:
            _require_range(tag, nu, math.pi / 2.0, math.inf)
            lo, hi = -1e12, -1e-9
            if nu >= disk_boundary_distance(lo):
                raise RangeError(
                    f"G4_MINUS boundary distance {nu:g} needs gamma below {lo:g}; "
                    "outside the numerically supported range"
                )
            if nu <= disk_boundary_distance(hi):
                raise RangeError(f"G4_MINUS requires nu > pi/2, got {nu:g}")
            s = brentq(lambda s: disk_boundary_distance(-math.exp(s)) - nu,
                       math.log(1e-9), math.log(1e12), xtol=1e-12)
            gamma = -math.exp(s)
        mu = -1.0 - math.log1p(-gamma) / gamma
        params = SolitonParams(2.0 * mu / gamma, mu)
        prof = integrate_profile(params, 0.0, 1.0, (0.0, math.inf))
        note = "blow-up time normalized to 1/4 (boundary length 2 pi); gamma by bisection on the boundary distance"
    elif tag == G5:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(nu * nu, nu * nu)  # gamma = 2
        prof = integrate_profile(params, 0.0, 1.0, (0.0, math.inf))
        note = "mu = nu^2 fixes the decaying-end scale; canonical gamma = 2"
    elif tag == G6:
        _require_range(tag, nu, 0.0, 2.0 * math.pi)
        gamma = 2.0 * math.pi / nu
        params = SolitonParams(-2.0 / gamma, -1.0)
        prof = integrate_profile(params, 0.0, 1.0, (0.0, math.inf))
        note = "cone angle nu = 2 pi / gamma; canonical mu = -1"
    elif tag == G7:
        _require_range(tag, nu, 2.0 * math.pi, math.inf)
        gamma = 2.0 * math.pi / nu
        params = SolitonParams(-2.0 / gamma, -1.0)
        prof = integrate_profile(params, 0.0, 1.0, (-math.inf, math.inf))
        note = "cone angle nu = 2 pi / gamma; canonical mu = -1"
    elif tag == G8:
        _require_range(tag, nu, 0.0, math.inf)
        gamma = 2.0 * math.pi / nu
        params = SolitonParams(-1.0, -gamma / 2.0)
        prof = _blowup_anchor_profile(params, 0.0)
        note = "lambda = -1 with the blow-up exactly at t = 0 (cusp end); cone angle nu"
    elif tag == G9:
        _require_range(tag, nu, 0.0, math.inf)
        gamma = 2.0 * math.pi / nu
        params = SolitonParams(-2.0 / gamma, -1.0)
        prof = _blowup_anchor_profile(params, 0.25)
        note = "blow-up at t = 1/4 (boundary length 2 pi); cone angle nu; canonical mu = -1"
    elif tag == G10:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(-2.0 * nu * nu, nu * nu)  # gamma = -1
        prof = integrate_profile(params, 0.0, 1.0, (-math.inf, math.inf))
        note = "mu = nu^2 fixes the decaying-end scale; canonical gamma = -1"
    elif tag == G11:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(-1.0, nu * nu)  # gamma = -2 nu^2
        prof = _blowup_anchor_profile(params, 0.0)
        note = "lambda = -1 with the blow-up exactly at t = 0 (cusp end); mu = nu^2"
    elif tag == G12:
        _require_range(tag, nu, 0.0, math.inf)
        params = SolitonParams(-2.0 * nu * nu, nu * nu)  # gamma = -1
        prof = _blowup_anchor_profile(params, 0.25)
        note = "blow-up at t = 1/4 (boundary length 2 pi); mu = nu^2"
    else:
        raise RangeError(f"unknown family tag {tag!r}")

    label = classify(prof)
    entry_nu = nu
    if tag in (G4_PLUS, G4_MINUS):
        # report the realized distance, which bisection matched to nu
        entry_nu = disk_boundary_distance(params.gamma)
    return CatalogEntry(family=label, nu=entry_nu, params=params, profile=prof,
                        normalization_note=note)


# Machine-readable family table: topology, parameter range, completeness,
# curvature sign, end structure.
CATALOG_TABLE = [
    {"family": G1_CIGAR, "topology": "plane", "nu_range": "(0, inf)",
     "complete": True, "curvature_sign": "POSITIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "CYLINDER_END",
     "notes": "steady; bounded curvature; cylinder radius 1/nu"},
    {"family": G2_EXPLODING, "topology": "plane", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "EXPLODING_END",
     "notes": "steady; curvature unbounded below"},
    {"family": G3, "topology": "punctured plane", "nu_range": "[0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "CYLINDER_END", "outer_end": "EXPLODING_END",
     "notes": "steady; cylinder radius nu at the far end"},
    {"family": G4_PLUS, "topology": "disk", "nu_range": "(1, inf)",
     "complete": False, "curvature_sign": "POSITIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "GEODESIC_BOUNDARY",
     "notes": "shrinking; boundary length 2 pi; nu = dist(center, boundary), "
              "attainable below pi/2 (constant-curvature limit)"},
    {"family": G4_MINUS, "topology": "disk", "nu_range": "(pi/2, inf)",
     "complete": False, "curvature_sign": "POSITIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "GEODESIC_BOUNDARY",
     "notes": "shrinking; boundary length 2 pi; nu = dist(center, boundary)"},
    {"family": G5, "topology": "plane", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "EXPLODING_END",
     "notes": "shrinking; curvature unbounded below"},
    {"family": G6, "topology": "plane", "nu_range": "(0, 2 pi)",
     "complete": True, "curvature_sign": "POSITIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "CONE_END",
     "notes": "expanding; cone angle nu = 2 pi / gamma"},
    {"family": G7, "topology": "plane", "nu_range": "(2 pi, inf)",
     "complete": True, "curvature_sign": "NEGATIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "CONE_END",
     "notes": "expanding; cone angle nu = 2 pi / gamma"},
    {"family": G8, "topology": "punctured plane", "nu_range": "(0, inf)",
     "complete": True, "curvature_sign": "NEGATIVE",
     "inner_end": "CUSP_END", "outer_end": "CONE_END",
     "notes": "expanding; hyperbolic cusp at the puncture, cone angle nu"},
    {"family": G9, "topology": "punctured disk", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "GEODESIC_BOUNDARY", "outer_end": "CONE_END",
     "notes": "expanding; boundary length 2 pi, cone angle nu at the puncture"},
    {"family": G10, "topology": "plane", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "SMOOTH_POINT", "outer_end": "EXPLODING_END",
     "notes": "expanding; curvature unbounded below"},
    {"family": G11, "topology": "punctured plane", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "CUSP_END", "outer_end": "EXPLODING_END",
     "notes": "expanding; cusp at the puncture, curvature unbounded below"},
    {"family": G12, "topology": "punctured disk", "nu_range": "(0, inf)",
     "complete": False, "curvature_sign": "NEGATIVE",
     "inner_end": "GEODESIC_BOUNDARY", "outer_end": "EXPLODING_END",
     "notes": "expanding; boundary length 2 pi, curvature unbounded below"},
]


def catalog_listing() -> list[dict]:
    """The twelve-family table as JSON-ready dictionaries.

    The two boundary-disk branches count as one family (their disjoint
    parameter ranges are reported together), matching the enumeration of
    twelve.
    """
    rows = []
    for row in CATALOG_TABLE:
        if row["family"] == G4_MINUS:
            continue
        if row["family"] == G4_PLUS:
            minus = next(r for r in CATALOG_TABLE if r["family"] == G4_MINUS)
            merged = dict(row)
            merged["family"] = "G4"
            merged["branches"] = [G4_PLUS, G4_MINUS]
            merged["nu_range"] = f"{row['nu_range']} / {minus['nu_range']}"
            rows.append(merged)
        else:
            rows.append(dict(row))
    return rows


# ---------------------------------------------------------------------------
# Default metric windows for catalog entries
# ---------------------------------------------------------------------------


def _t_at_level(profile: ProfileA, a_level: float) -> float:
    return profile.t_ref + time_between_levels(profile.params, profile.a_ref, a_level)


def entry_metric(entry: CatalogEntry, h: float = 1e-3, a_cap: float = 50.0,
                 a_floor: float = 0.95, conv_dev: float = 0.02):
    """A verification-friendly metric for a catalog entry.

    The radial window keeps the profile between moderate levels so that the
    curvature stays bounded away from zero: blow-up sides stop at a = a_cap,
    decaying sides at a = a_floor, converging sides where |a - gamma| drops
    to conv_dev * gamma.  Grid spacing is h.
    """
    prof = entry.profile
    p = prof.params
    g = p.gamma
    if math.isfinite(g) and g > 0.0:
        a_cap = max(a_cap, 4.0 * g)

    if prof.tag1.kind == BLOW_UP:
        t_out = _t_at_level(prof, a_cap) if prof.a_ref < a_cap else prof.t_ref
    elif prof.tag1.kind == DECAY_TO_ZERO:
        t_out = _t_at_level(prof, min(a_floor, 0.75 * prof.a_ref))
    else:  # CONVERGES: stop where a - gamma still carries |K| safely above noise
        dev0 = abs(prof.a_ref - g)
        dev = min(conv_dev * abs(g), 0.5 * dev0)
        level = g + dev if prof.a_ref > g else g - dev
        t_out = _t_at_level(prof, level)

    smooth_inner = prof.t0 < 0.0 or prof.tag0.kind == SMOOTH_ORIGIN
    if smooth_inner:
        r_out = radial_distance(prof, 0.0, t_out)
        return build_warped_metric(prof, (0.0, 0.0), (0.0, r_out),
                                   n_samples=int(round(r_out / h)) + 1)
    # annulus: anchor r = 0 at the circle of the moderate inner level
    t_in = _t_at_level(prof, a_cap)
    if not t_in < t_out:
        raise DomainError("degenerate verification window; adjust the level caps")
    b_anchor = 2.0 * math.sqrt(t_in)
    r_out = radial_distance(prof, t_in, t_out)
    return build_warped_metric(prof, (0.0, b_anchor), (0.0, r_out),
                               n_samples=int(round(r_out / h)) + 1)
