"""
Verification suites for the maximality toolkit.

Each suite is a list of named checks comparing a closed-form value with
an independent computation.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

from catalog import ENTRIES
from config import VERIFY_CONFIG
from errors import MaximalityError
from hilbert import (
    Decision,
    actual_beta1_hilb2_real,
    beta1_pieces,
    beta_star_hilb2_complex,
    check_cx_relation,
    check_euler_specialization,
    chi_hilb2_real,
    hilb2_verdict,
    hilb_betti_series,
    real_betti_table,
    required_beta1,
)
from homology import (
    SimplicialInvolution,
    check_kunneth,
    double_cover_class_eval,
    maximality_exactness,
    quotient_complex,
    smith_sequence,
    symmetric_square_oracle,
)
from homology import triangulations as tri
from surfaces import RealComponent, SurfaceProfile

logger = logging.getLogger(__name__)

SUITES = ("identities", "smith", "symsq")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _run(suite: str, name: str, check: Callable[[], Tuple[bool, str]]) -> CheckResult:
    try:
        passed, detail = check()
    except MaximalityError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    logger.info("[%s] %s: %s", suite, name, "ok" if passed else "FAILED")
    return CheckResult(suite=suite, name=name, passed=passed, detail=detail)


def _maximal_grid():
    for r in range(1, VERIFY_CONFIG["identity_grid_r"] + 1):
        for beta2 in range(2 * r - 2, VERIFY_CONFIG["identity_grid_beta2"] + 1):
            yield r, beta2


class VerificationTasks:
    """Suites of named checks, one static method per suite."""

    @staticmethod
    def identities() -> List[CheckResult]:
        """Closed-form identities over grids, and the reference values."""
        suite = "identities"

        def connectivity_criterion():
            bad = []
            for r, b2 in _maximal_grid():
                profile = SurfaceProfile.synthetic_maximal(r, b2)
                balanced = actual_beta1_hilb2_real(profile) == required_beta1(profile)
                if balanced != (r == 1):
                    bad.append((r, b2))
            return not bad, f"{len(bad)} counterexamples" if bad else "holds on the whole grid"

        def table_identities():
            bad = []
            points = 0
            for r, b2 in _maximal_grid():
                points += 1
                profile = SurfaceProfile.synthetic_maximal(r, b2)
                table = real_betti_table(profile)
                alternating = table[0] - table[1] + table[2] - table[3] + table[4]
                if alternating != chi_hilb2_real(profile):
                    bad.append((r, b2, "euler"))
                if sum(table) != beta_star_hilb2_complex(profile).value - 4 * (r - 1):
                    bad.append((r, b2, "total"))
                if actual_beta1_hilb2_real(profile) != table[1]:
                    bad.append((r, b2, "beta1"))
            return not bad, f"failures: {bad[:5]}" if bad else f"tables consistent on {points} grid points"

        def connected_required_value():
            bad = []
            for b2 in range(0, VERIFY_CONFIG["identity_grid_beta2"] + 1):
                profile = SurfaceProfile.synthetic_maximal(1, b2)
                if required_beta1(profile) != profile.beta_star - 1:
                    bad.append(b2)
                pieces = beta1_pieces(profile)
                if pieces.pieces_total != 1 + profile.beta1 + profile.beta_star - 1:
                    bad.append(b2)
            return not bad, f"failures at beta2 {bad[:5]}" if bad else "required beta1 = beta* - 1"

        def goettsche_grid():
            bad = []
            for b1 in range(VERIFY_CONFIG["cx_grid_b1"] + 1):
                for b2 in range(VERIFY_CONFIG["cx_grid_b2"] + 1):
                    if not check_cx_relation((1, b1, b2, b1, 1)):
                        bad.append((b1, b2))
            return not bad, f"mismatches {bad[:5]}" if bad else "series and closed form agree"

        def euler_specialization():
            n_max = VERIFY_CONFIG["euler_n_max"]
            samples = [(1, 0, 22, 0, 1), (1, 4, 6, 4, 1), (1, 0, 1, 0, 1), (1, 2, 2, 2, 1)]
            bad = [b for b in samples if not check_euler_specialization(b, n_max)]
            return not bad, f"mismatches {bad}" if bad else f"z = -1 matches up to n = {n_max}"

        def k3_total():
            series = hilb_betti_series((1, 0, 22, 0, 1), 2).total(2)
            formula = beta_star_hilb2_complex(_named("k3")).value
            return series == formula == 324, f"series {series}, formula {formula}"

        def enriques_totals():
            enriques = next(e for e in ENTRIES if e.name == "enriques")
            bound = beta_star_hilb2_complex(enriques.profile)
            report = hilb2_verdict(enriques.profile)
            ok = (bound.value == 150 and not bound.exact and report.beta_star_hilb2_C == 154
                  and report.verdict.decision == Decision.NOT_MAXIMAL)
            return ok, f"lower bound {bound.value}, known {report.beta_star_hilb2_C}, {report.verdict.decision.value}"

        def p2_table():
            report = hilb2_verdict(_named("p2"))
            ok = report.beta_hilb2_R == (1, 2, 3, 2, 1) and report.defect == 0
            return ok, f"table {report.beta_hilb2_R}, defect {report.defect}"

        def k3_table():
            report = hilb2_verdict(_named("k3"))
            ok = (report.chi_hilb2_R == 156 and report.beta_hilb2_R == (2, 41, 234, 41, 2)
                  and report.defect == 4)
            return ok, f"chi {report.chi_hilb2_R}, table {report.beta_hilb2_R}, defect {report.defect}"

        checks = [
            ("connectivity criterion on the (r, beta2) grid", connectivity_criterion),
            ("Betti table identities", table_identities),
            ("required beta1 on connected real loci", connected_required_value),
            ("generating function vs closed form at n = 2", goettsche_grid),
            ("Euler characteristic specialization", euler_specialization),
            ("K3: beta*(X^[2]) = 324 both ways", k3_total),
            ("Enriques: 150 <= 154", enriques_totals),
            ("P2 with RP2: table (1,2,3,2,1)", p2_table),
            ("K3 Sigma10 + S2: table (2,41,234,41,2)", k3_table),
        ]
        return [_run(suite, name, check) for name, check in checks]

    @staticmethod
    def smith() -> List[CheckResult]:
        """Smith sequences, double-cover classes and Kunneth on explicit complexes."""
        suite = "smith"
        octahedron = tri.octahedron()

        def reflection():
            inv = SimplicialInvolution(octahedron, tri.octahedron_reflection())
            data = smith_sequence(inv)
            exact = maximality_exactness(inv)
            return exact and data.smith_defect == 0, f"H(F) = {data.betti_F}, defect {data.smith_defect}"

        def antipodal():
            inv = SimplicialInvolution(octahedron, tri.octahedron_antipodal())
            data = smith_sequence(inv)
            exact = maximality_exactness(inv)
            ok = not exact and data.smith_defect == 2 and data.betti_relative == (1, 1, 1)
            return ok, f"H(X/c) = {data.betti_relative}, defect {data.smith_defect}"

        def identity():
            inv = SimplicialInvolution(tri.minimal_torus(), range(7))
            data = smith_sequence(inv)
            return maximality_exactness(inv) and data.betti_F == data.betti_X, f"H(F) = {data.betti_F}"

        def subdivided_flip():
            # swaps the endpoints of two edges, so one subdivision is needed
            inv = SimplicialInvolution(tri.cycle_graph(4), [1, 0, 3, 2])
            data = smith_sequence(inv, auto_subdivide=True)
            return data.subdivisions == 1 and data.betti_F == (2, 0), f"H(F) = {data.betti_F}"

        def free_quotient_euler():
            K, vertex_map = tri.torus_double_cover()
            quotient = quotient_complex(SimplicialInvolution(K, vertex_map))
            ok = 2 * quotient.chain.euler_characteristic() == K.euler_characteristic()
            return ok and quotient.homology_ranks() == [1, 2, 1], f"H(X/c) = {quotient.homology_ranks()}"

        def double_covers():
            hexagon, hexagon_map = tri.hexagon_antipodal()
            circle = double_cover_class_eval(SimplicialInvolution(hexagon, hexagon_map),
                                             [(0, 1), (1, 2), (2, 3)])
            pair, pair_map = tri.swapped_triangles()
            trivial = double_cover_class_eval(SimplicialInvolution(pair, pair_map),
                                              [(0, 1), (1, 2), (0, 2)])
            K, vertex_map = tri.torus_double_cover()
            cover = SimplicialInvolution(K, vertex_map)
            horizontal = double_cover_class_eval(cover, [(0, 3), (3, 6), (6, 9)])
            vertical = double_cover_class_eval(cover, [(0, 1), (1, 2), (0, 2)])
            values = (circle, trivial, horizontal, vertical)
            return values == (1, 0, 1, 0), f"classes {values}"

        def kunneth():
            spheres = check_kunneth(tri.sphere(), tri.sphere())
            tori = check_kunneth(tri.minimal_torus(), tri.minimal_torus())
            ok = spheres == [1, 0, 2, 0, 1] and tori == [1, 4, 6, 4, 1]
            return ok, f"S2 x S2 {spheres}, T2 x T2 {tori}"

        checks = [
            ("equatorial reflection of S2 is maximal", reflection),
            ("antipodal map of S2 has defect 2", antipodal),
            ("identity involution", identity),
            ("non-regular flip of a square", subdivided_flip),
            ("free quotient halves the Euler characteristic", free_quotient_euler),
            ("double cover classes", double_covers),
            ("Kunneth vs product triangulation", kunneth),
        ]
        return [_run(suite, name, check) for name, check in checks]

    @staticmethod
    def symsq() -> List[CheckResult]:
        """beta3 of the symmetric square equals beta1 of the surface."""
        suite = "symsq"
        results = []
        for orientable, count in VERIFY_CONFIG["symmetric_square_surfaces"]:
            component = RealComponent(orientable=orientable, genus_or_crosscaps=count)

            def check(component=component):
                betti = symmetric_square_oracle(component)
                return betti[3] == component.beta1, f"Betti numbers {betti}"

            results.append(_run(suite, f"symmetric square of {component.label}", check))
        return results

    @classmethod
    def run(cls, suite: str = "all") -> List[CheckResult]:
        names = SUITES if suite == "all" else (suite,)
        results = []
        for name in names:
            results.extend(getattr(cls, name)())
        return results


def _named(which: str) -> SurfaceProfile:
    wanted = {"p2": "p2-rp2", "k3": "k3-sigma10-s2"}[which]
    return next(e.profile for e in ENTRIES if e.name == wanted)
