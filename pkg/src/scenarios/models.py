"""Scenario documents.

    {
      "name": "octahedron-antipodal",
      "kind": "finite-action",            finite-action | hodge | cover
      "complex": "octahedron",            bundled name or path to a complex document
      "action": "octahedron-antipodal",   bundled name or path to an action document
      "cover": null,                      bundled name or path to a cover document
      "weights": null,                    path to a weight document (hodge)
      "operations": ["split_check", "phi_map"],
      "parameters": {"max_degree": 2, "window_radius": 2, "cutoff": "domain"},
      "format": "record"                  record | table
    }
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config import settings

FINITE_OPERATIONS = (
    "split_check",
    "induced_action",
    "invariant_cohomology",
    "coinvariant_cohomology",
    "phi_map",
    "finite_exact_sequence",
    "equivariant_hodge",
    "h0_check",
    "oracle",
)
HODGE_OPERATIONS = (
    "hodge_check",
    "harmonic_space",
    "hodge_decompose",
    "equivariant_hodge",
    "oracle",
)
COVER_OPERATIONS = (
    "coinvariant_ranks",
    "cover_exact_sequence",
    "theta_class",
    "h0_check",
    "iota_injectivity",
    "corollary_check",
    "stabilization",
)
OPERATIONS: Dict[str, tuple] = {
    "finite-action": FINITE_OPERATIONS,
    "hodge": HODGE_OPERATIONS,
    "cover": COVER_OPERATIONS,
}


class CochainSpec(BaseModel):
    degree: int = Field(..., ge=0)
    coefficients: Dict[int, str] = Field(default_factory=dict)


class ScenarioParameters(BaseModel):
    max_degree: Optional[int] = Field(default=None, ge=0)
    window_radius: Optional[int] = Field(default=None, ge=1)
    cutoff: Optional[str] = Field(default=None, pattern="^(domain|split)$")
    expected_ranks: Optional[List[int]] = None
    cochains: List[CochainSpec] = Field(default_factory=list)

    @field_validator("window_radius")
    @classmethod
    def radius_bound(cls, v):
        if v is not None and v > settings.max_window_radius:
            raise ValueError(f"window radius {v} exceeds the limit {settings.max_window_radius}")
        return v


class Scenario(BaseModel):
    """One scenario: what to load and which operations to run."""
    name: str = Field(..., min_length=1)
    kind: str = Field(..., pattern="^(finite-action|hodge|cover)$")
    description: str = ""
    complex: Optional[str] = None
    action: Optional[str] = None
    cover: Optional[str] = None
    weights: Optional[str] = None
    operations: List[str] = Field(..., min_length=1)
    parameters: ScenarioParameters = Field(default_factory=ScenarioParameters)
    format: Optional[str] = Field(default=None, pattern="^(record|table)$")

    @model_validator(mode="after")
    def references(self):
        allowed = OPERATIONS[self.kind]
        unknown = [op for op in self.operations if op not in allowed]
        if unknown:
            raise ValueError(f"operation '{unknown[0]}' is not available for kind {self.kind}")
        if len(set(self.operations)) != len(self.operations):
            raise ValueError("operations must not repeat")
        if self.kind == "cover":
            if not self.cover:
                raise ValueError("cover scenarios need a 'cover' reference")
        else:
            if not self.complex and not self.action:
                raise ValueError(f"{self.kind} scenarios need a 'complex' or 'action' reference")
        if self.kind == "finite-action" and not self.action:
            raise ValueError("finite-action scenarios need an 'action' reference")
        if "equivariant_hodge" in self.operations and not self.action:
            raise ValueError("'equivariant_hodge' needs an 'action' reference")
        return self
