"""
Example usage script for the maximality toolkit.
Demonstrates different ways to use the system.
"""

import tempfile
from pathlib import Path

from catalog import ENTRIES
from hilbert import hilb2_verdict, hilb_betti_series
from homology import SimplicialInvolution, smith_sequence
from homology import triangulations as tri
from main import MaximalitySystem, main
from surfaces import RealComponent, SurfaceProfile, smith_defect
from tools import ProfileReader


def example_catalog_profile():
    """Verdict for a built-in profile."""
    print("=" * 70)
    print("Example 1: Built-in K3 Profile")
    print("=" * 70)

    profile = next(e.profile for e in ENTRIES if e.name == "k3-sigma10-s2")
    report = hilb2_verdict(profile)

    print(f"\nX(R) = {profile.real_locus_label}")
    print(f"beta*(X^[2]) = {report.beta_star_hilb2_C}, table = {report.beta_hilb2_R}")
    print(f"verdict: {report.verdict.decision.value} ({report.verdict.rule.value})")


def example_own_profile():
    """Build a profile in code, write it to disk and analyse it through the CLI."""
    print("\n" + "=" * 70)
    print("Example 2: Custom Profile")
    print("=" * 70)

    profile = SurfaceProfile(
        name="torus-product",
        betti_f2=(1, 4, 6, 4, 1),
        real_components=[RealComponent(orientable=True, genus_or_crosscaps=1)] * 4,
    )
    print(f"\nSmith defect of X: {smith_defect(profile).defect}")

    with tempfile.TemporaryDirectory() as directory:
        path = ProfileReader.write(profile, Path(directory) / "torus-product.profile")
        # no rank-mu hint, so the verdict stays Unknown
        main(["hilb2", str(path)])


def example_generating_function():
    """Betti numbers of X^[n] for a K3 surface."""
    print("\n" + "=" * 70)
    print("Example 3: Generating Function")
    print("=" * 70)

    series = hilb_betti_series((1, 0, 22, 0, 1), 3)
    for n in range(4):
        print(f"   n={n}: {series.row(n)}  total {series.total(n)}")


def example_smith_sequence():
    """Smith sequence of the antipodal map of the sphere."""
    print("\n" + "=" * 70)
    print("Example 4: Smith Sequence")
    print("=" * 70)

    involution = SimplicialInvolution(tri.octahedron(), tri.octahedron_antipodal())
    data = smith_sequence(involution)
    print(f"\nH(X) = {data.betti_X}, H(F) = {data.betti_F}, defect = {data.smith_defect}")


def example_records():
    """Machine-readable catalog output."""
    print("\n" + "=" * 70)
    print("Example 5: Catalog as JSON Records")
    print("=" * 70)

    MaximalitySystem(output_format="records").catalog("ruled")


if __name__ == "__main__":
    example_catalog_profile()
    example_own_profile()
    example_generating_function()
    example_smith_sequence()
    example_records()
