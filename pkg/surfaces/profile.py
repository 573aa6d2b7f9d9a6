"""
Input data model for a real nonsingular projective surface.

A profile is purely topological: F2-Betti numbers of the complex surface,
2-torsion flags, optional Hodge numbers and the list of connected
components of the real locus. All derived invariants are exact integers.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator

from errors import ProfileValidationError


class RealComponent(BaseModel):
    """One closed connected surface of the real locus."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    orientable: bool = Field(..., description="True for a sphere with handles")
    genus_or_crosscaps: NonNegativeInt = Field(
        ..., description="Genus when orientable, number of crosscaps otherwise"
    )

    @model_validator(mode="after")
    def _crosscaps_positive(self) -> "RealComponent":
        if not self.orientable and self.genus_or_crosscaps < 1:
            raise ValueError("a non-orientable component needs at least one crosscap")
        return self

    @classmethod
    def sphere(cls) -> "RealComponent":
        return cls(orientable=True, genus_or_crosscaps=0)

    @classmethod
    def of_genus(cls, genus: int) -> "RealComponent":
        return cls(orientable=True, genus_or_crosscaps=genus)

    @classmethod
    def with_crosscaps(cls, crosscaps: int) -> "RealComponent":
        return cls(orientable=False, genus_or_crosscaps=crosscaps)

    @property
    def betti(self) -> Tuple[int, int, int]:
        """F2-Betti numbers (b0, b1, b2)."""
        if self.orientable:
            return (1, 2 * self.genus_or_crosscaps, 1)
        return (1, self.genus_or_crosscaps, 1)

    @property
    def beta1(self) -> int:
        return self.betti[1]

    @property
    def beta_star(self) -> int:
        return 2 + self.beta1

    @property
    def euler_characteristic(self) -> int:
        return 2 - self.beta1

    @property
    def label(self) -> str:
        g = self.genus_or_crosscaps
        if self.orientable:
            return {0: "S2", 1: "T2"}.get(g, f"Sigma{g}")
        return {1: "RP2", 2: "Klein"}.get(g, f"N{g}")


class HodgeNumbers(BaseModel):
    """The Hodge numbers h^{1,0}, h^{2,0}, h^{1,1} of the complex surface."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    h10: NonNegativeInt
    h20: NonNegativeInt
    h11: NonNegativeInt


class RankMuHint(BaseModel):
    """Externally supplied rank of the gluing map mu, with provenance."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    value: NonNegativeInt
    exact: bool = Field(True, description="False when value is only a lower bound")
    justification: str = ""


class SurfaceProfile(BaseModel):
    """Topological input datum for a real surface X."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(..., min_length=1)
    betti_f2: Tuple[NonNegativeInt, NonNegativeInt, NonNegativeInt, NonNegativeInt, NonNegativeInt]
    tors2_h1: bool = False
    tors2_hstar: bool = False
    hodge: Optional[HodgeNumbers] = None
    real_components: Tuple[RealComponent, ...] = ()
    rank_mu_hint: Optional[RankMuHint] = None
    beta_star_hilb2_hint: Optional[NonNegativeInt] = Field(
        None, description="Exact total F2-Betti number of X^[2], when known externally"
    )

    @property
    def beta_star(self) -> int:
        return sum(self.betti_f2)

    @property
    def beta1(self) -> int:
        return self.betti_f2[1]

    @property
    def beta2(self) -> int:
        return self.betti_f2[2]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti_f2))

    @property
    def component_count(self) -> int:
        return len(self.real_components)

    @property
    def real_locus_label(self) -> str:
        if not self.real_components:
            return "empty"
        return " + ".join(c.label for c in self.real_components)

    @classmethod
    def synthetic_maximal(cls, r: int, beta2: int, name: Optional[str] = None) -> "SurfaceProfile":
        """
        Build a formal maximal profile with beta1(X) = 0 and r real components.

        One component carries all of beta1(X(R)) = 2 + beta2 - 2r (as crosscaps),
        the remaining r - 1 components are spheres.
        """
        spare = 2 + beta2 - 2 * r
        if r < 1 or spare < 0:
            raise ValueError(f"no maximal real locus with r={r} and beta2={beta2}")
        first = RealComponent.with_crosscaps(spare) if spare else RealComponent.sphere()
        return cls(
            name=name or f"synthetic-r{r}-b{beta2}",
            betti_f2=(1, 0, beta2, 0, 1),
            real_components=(first,) + (RealComponent.sphere(),) * (r - 1),
        )


@dataclass(frozen=True)
class Violation:
    """A single broken profile invariant."""

    field: str
    rule: str

    def __str__(self) -> str:
        return f"{self.field}: {self.rule}"


class RealInvariants(NamedTuple):
    r: int
    beta_star_R: int
    beta1_R: int
    chi_R: int


def validate(profile: SurfaceProfile) -> List[Violation]:
    """
    Check the semantic invariants of a profile.

    Returns:
        Empty list when the profile is valid, otherwise one entry per
        violated rule.
    """
    violations = []
    b0, b1, b2, b3, b4 = profile.betti_f2

    if b0 != 1:
        violations.append(Violation("betti_f2", f"connectedness requires beta0 = 1, got {b0}"))
    if b4 != 1:
        violations.append(Violation("betti_f2", f"duality requires beta4 = 1, got {b4}"))
    if b1 != b3:
        violations.append(Violation("betti_f2", f"duality requires beta1 = beta3, got {b1} != {b3}"))
    if profile.tors2_h1 and not profile.tors2_hstar:
        violations.append(Violation("tors2_hstar", "2-torsion in H1 implies 2-torsion in H*"))

    if profile.hodge is not None and not profile.tors2_h1:
        h = profile.hodge
        if b1 != 2 * h.h10:
            violations.append(Violation("hodge", f"beta1 = 2*h10 required, got {b1} != {2 * h.h10}"))
        if b2 != 2 * h.h20 + h.h11:
            violations.append(
                Violation("hodge", f"beta2 = 2*h20 + h11 required, got {b2} != {2 * h.h20 + h.h11}")
            )

    return violations


def ensure_valid(profile: SurfaceProfile) -> SurfaceProfile:
    """Raise ProfileValidationError unless the profile is valid."""
    violations = validate(profile)
    if violations:
        raise ProfileValidationError(violations)
    return profile


def sum_real_invariants(components: Sequence[RealComponent]) -> RealInvariants:
    """Aggregate per-component invariants; additive under concatenation."""
    r = len(components)
    beta_star_R = sum(c.beta_star for c in components)
    beta1_R = sum(c.beta1 for c in components)
    chi_R = sum(c.euler_characteristic for c in components)
    return RealInvariants(r=r, beta_star_R=beta_star_R, beta1_R=beta1_R, chi_R=chi_R)


def derive_real_invariants(profile: SurfaceProfile) -> RealInvariants:
    """Return (r, beta_star_R, beta1_R, chi_R) for the real locus of a valid profile."""
    ensure_valid(profile)
    return sum_real_invariants(profile.real_components)
