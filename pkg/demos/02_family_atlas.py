"""Tour of the twelve solution families.

The positive branches sort into twelve one-parameter families by the sign
of mu, the position of the anchor relative to the separatrix a == gamma,
and (where the branch blows up backward in time) the sign of the blow-up
time.  The catalog holds one canonically normalized representative per
family; classify() recovers the tag from any anchored branch.
"""

import math

from soliton2d import catalog, catalog_listing, classify, geometry_report, integrate_profile, make_params

SAMPLES = [
    ("G1_CIGAR", 1.0), ("G2_EXPLODING", 1.0), ("G3", 1.0),
    ("G4_PLUS", 1.3), ("G4_MINUS", 2.2), ("G5", 1.0),
    ("G6", math.pi), ("G7", 3.0 * math.pi), ("G8", math.pi),
    ("G9", 2.0), ("G10", 1.0), ("G11", 1.0), ("G12", 1.0),
]


def main():
    print("== the twelve-family table ==")
    for row in catalog_listing():
        print(f"{row['family']:<14s} {row['topology']:<16s} complete={row['complete']!s:<5s} "
              f"{row['curvature_sign']:<8s} {row['inner_end']} -> {row['outer_end']}")

    print("\n== canonical representatives, classified back ==")
    for tag, nu in SAMPLES:
        entry = catalog(tag, nu)
        label = classify(entry.profile)
        rep = geometry_report(entry.profile)
        ends = f"{rep.inner_end.kind} / {rep.outer_end.kind}"
        print(f"{tag:<14s} nu={nu:7.4f}  -> {label.tag:<14s} complete={rep.complete!s:<5s} {ends}")
        print(f"{'':14s} normalization: {entry.normalization_note}")

    print("\n== classification straight from an anchor ==")
    cases = [
        (0.0, -1.0, 1.0, "steady, mu < 0"),
        (4.0, 1.0, 1.0, "shrinking above the separatrix"),
        (-1.0, -1.0, 1.0, "expanding below the separatrix"),
        (-4.0, -1.0, 1.0, "expanding above it: blow-up in the past"),
    ]
    for lam, mu, a0, note in cases:
        prof = integrate_profile(make_params(lam, mu), 0.0, a0, (-5.0, 5.0))
        print(f"lambda={lam:+.1f} mu={mu:+.1f} a(0)={a0:g}: {classify(prof).tag:<12s} ({note})")


if __name__ == "__main__":
    main()
