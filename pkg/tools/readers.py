"""
File readers and writers for surface profiles and simplicial complexes.
These read plain text files directly; nothing is cached or indexed.
"""

import json
from pathlib import Path
from typing import List, NamedTuple, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from errors import ComplexError, ProfileFormatError
from homology import SimplicialComplex, SimplicialInvolution
from homology.triangulations import parse_facets
from surfaces import SurfaceProfile

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


class DocumentInput(BaseModel):
    """Input schema for the file readers."""
    file_path: str = Field(..., min_length=1, description="Full path to the file to read")


def _read_text(file_path: Union[str, Path], error=ProfileFormatError) -> str:
    try:
        DocumentInput(file_path=str(file_path))
    except ValidationError:
        raise error("no file path given") from None
    try:
        return Path(file_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise error(f"cannot read {file_path}: {exc.strerror or exc}") from None


def _field_name(location) -> str:
    parts = [str(p) for p in location]
    if parts and parts[0] == "real_components":
        parts[0] = "component"
        if len(parts) > 1:
            parts[:2] = [f"component[{parts[1]}]"]
    return ".".join(parts)


class ProfileReader:
    name: str = "Read Surface Profile"
    description: str = (
        "Reads a surface profile file (TOML: top-level keys, optional [hodge] "
        "and [rank_mu_hint] tables, repeated [[component]] tables). "
        "Returns a validated SurfaceProfile."
    )
    args_schema = DocumentInput

    @classmethod
    def read(cls, file_path: Union[str, Path]) -> SurfaceProfile:
        """Read a profile file and return the typed profile."""
        return cls.loads(_read_text(file_path), source=str(file_path))

    @staticmethod
    def loads(text: str, source: str = "<string>") -> SurfaceProfile:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ProfileFormatError(f"{source}: {exc}") from None

        components = data.pop("component", [])
        if not isinstance(components, list):
            raise ProfileFormatError(f"{source}: components must be [[component]] tables", field="component")
        data["real_components"] = components

        try:
            return SurfaceProfile.model_validate(data)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = _field_name(error["loc"])
            raise ProfileFormatError(f"{source}: {field}: {error['msg']}", field=field) from None

    @staticmethod
    def render(profile: SurfaceProfile) -> str:
        """Deterministic profile text; loads(render(p)) == p."""
        lines = [
            f"name = {json.dumps(profile.name)}",
            f"betti_f2 = [{', '.join(str(b) for b in profile.betti_f2)}]",
            f"tors2_h1 = {str(profile.tors2_h1).lower()}",
            f"tors2_hstar = {str(profile.tors2_hstar).lower()}",
        ]
        if profile.beta_star_hilb2_hint is not None:
            lines.append(f"beta_star_hilb2_hint = {profile.beta_star_hilb2_hint}")

        if profile.hodge is not None:
            h = profile.hodge
            lines += ["", "[hodge]", f"h10 = {h.h10}", f"h20 = {h.h20}", f"h11 = {h.h11}"]

        if profile.rank_mu_hint is not None:
            hint = profile.rank_mu_hint
            lines += [
                "",
                "[rank_mu_hint]",
                f"value = {hint.value}",
                f"exact = {str(hint.exact).lower()}",
                f"justification = {json.dumps(hint.justification)}",
            ]

        for component in profile.real_components:
            lines += [
                "",
                "[[component]]",
                f"orientable = {str(component.orientable).lower()}",
                f"genus_or_crosscaps = {component.genus_or_crosscaps}",
            ]
        return "\n".join(lines) + "\n"

    @classmethod
    def write(cls, profile: SurfaceProfile, file_path: Union[str, Path]) -> Path:
        path = Path(file_path)
        path.write_text(cls.render(profile), encoding="utf-8")
        return path


class ComplexFile(NamedTuple):
    complex: SimplicialComplex
    involution: Optional[SimplicialInvolution]


class ComplexReader:
    name: str = "Read Simplicial Complex"
    description: str = (
        "Reads a complex file: one maximal simplex per line as vertex indices, "
        "'#' comments, and an optional 'involution: v0 v1 ...' vertex permutation."
    )
    args_schema = DocumentInput

    @classmethod
    def read(cls, file_path: Union[str, Path]) -> ComplexFile:
        return cls.loads(_read_text(file_path, error=ComplexError))

    @staticmethod
    def loads(text: str) -> ComplexFile:
        facet_lines: List[str] = []
        permutation = None
        for line in text.splitlines():
            stripped = line.strip()
            if stripped.startswith("involution:"):
                try:
                    permutation = [int(v) for v in stripped.split(":", 1)[1].split()]
                except ValueError:
                    raise ComplexError(f"bad involution line: {stripped!r}") from None
            else:
                facet_lines.append(line)

        facets = parse_facets(facet_lines)
        if not facets:
            raise ComplexError("no simplices in complex file")
        complex_ = SimplicialComplex.from_facets(facets)
        involution = SimplicialInvolution(complex_, permutation) if permutation is not None else None
        return ComplexFile(complex_, involution)

    @staticmethod
    def render(complex_: SimplicialComplex, involution: Optional[SimplicialInvolution] = None) -> str:
        lines = [" ".join(str(v) for v in facet) for facet in complex_.facets()]
        if involution is not None:
            lines.append("involution: " + " ".join(str(v) for v in involution.vertex_map))
        return "\n".join(lines) + "\n"
