"""Geometry reports: completeness, curvature bounds and end structure.

Each end of a profile's metric is classified by the convergence of the
arc-length integral toward it together with the analytic tail model: smooth
points, cones, cylinders, hyperbolic cusps, totally geodesic boundary
circles, or the incomplete exploding ends of unbounded negative curvature.
The two headline consequences hold at desk scale: complete entries have
bounded curvature, and there are complete negatively curved expanding
metrics that are not of constant curvature.
"""

import math

from soliton2d import catalog, geometry_report


def describe(end):
    parts = [end.kind]
    for field in ("angle", "radius", "length", "nu", "curvature"):
        val = getattr(end, field)
        if val is not None:
            parts.append(f"{field}={val:.6g}")
    return " ".join(parts)


def main():
    cases = [
        ("G1_CIGAR", 1.0), ("G2_EXPLODING", 1.0), ("G3", 1.0),
        ("G4_PLUS", 1.3), ("G5", 1.0), ("G6", math.pi),
        ("G7", 3.0 * math.pi), ("G8", math.pi), ("G9", 2.0),
        ("G11", 1.0), ("G12", 1.0),
    ]
    print("== end structure across the catalog ==")
    for tag, nu in cases:
        rep = geometry_report(catalog(tag, nu).profile)
        k_lo = f"{rep.K_inf:.4g}" if math.isfinite(rep.K_inf) else "-inf"
        k_hi = f"{rep.K_sup:.4g}" if math.isfinite(rep.K_sup) else "+inf"
        print(f"{tag:<14s} complete={rep.complete!s:<5s} K in [{k_lo}, {k_hi}]")
        print(f"{'':14s} inner: {describe(rep.inner_end)}")
        print(f"{'':14s} outer: {describe(rep.outer_end)}")

    print("\n== complete implies bounded curvature ==")
    for tag, nu in cases:
        rep = geometry_report(catalog(tag, nu).profile)
        status = "bounded" if rep.bounded_curvature else "unbounded"
        print(f"{tag:<14s} complete={rep.complete!s:<5s} curvature {status}")

    print("\n== complete negatively curved expanding disks/cylinders ==")
    for tag, nu in (("G7", 3.0 * math.pi), ("G8", math.pi)):
        rep = geometry_report(catalog(tag, nu).profile)
        print(f"{tag}: complete={rep.complete}, sign={rep.curvature_sign}, "
              f"K range width {rep.K_sup - rep.K_inf:.3f} (not constant curvature)")


if __name__ == "__main__":
    main()
