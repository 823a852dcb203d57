"""Report records.

Every report carries its own check ledger. Rationals are rendered as
"p/q" strings so the JSON form is exact, and nothing time-dependent is
recorded, so identical inputs give identical bytes.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field
from sympy.polys.matrices import DomainMatrix

from src.linalg import exact


class CheckResult(BaseModel):
    """One ledger entry: a named property and whether it held."""
    invariant: str
    passed: bool
    detail: str = ""
    witness: Optional[str] = None


def check(invariant: str, passed: bool, detail: str = "", witness: Optional[str] = None) -> CheckResult:
    return CheckResult(invariant=invariant, passed=bool(passed), detail=detail,
                       witness=None if passed else witness)


def fraction_matrix(M: DomainMatrix) -> List[List[str]]:
    return [[str(x) for x in row] for row in exact.to_lists(M)]


class LedgerMixin(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class DecompositionReport(LedgerMixin):
    """Direct-sum decomposition of one cochain space."""
    subject: str
    decomposition: str
    degree: int
    ambient_dim: int
    dims: Dict[str, int] = Field(default_factory=dict)
    pairings: Dict[str, List[List[str]]] = Field(default_factory=dict)


class InducedActionReport(LedgerMixin):
    subject: str
    degree: int
    betti: int
    generator_matrices: Dict[str, List[List[str]]] = Field(default_factory=dict)
    invariant_dim: int
    coinvariant_dim: int


class HodgeDegree(BaseModel):
    degree: int
    cochain_dim: int
    exact_dim: int
    coexact_dim: int
    harmonic_dim: int
    betti: int


class HodgeReport(LedgerMixin):
    subject: str
    degrees: List[HodgeDegree] = Field(default_factory=list)


class DecompositionPartsReport(LedgerMixin):
    """One cochain split as dα + δβ + η."""
    subject: str
    degree: int
    cochain: Dict[str, str]
    exact_part: Dict[str, str]
    coexact_part: Dict[str, str]
    harmonic_part: Dict[str, str]


class PhiDegree(BaseModel):
    degree: int
    invariant_rank: int
    coinvariant_rank: int
    betti: int
    matrix: List[List[str]]
    rank: int
    invariant_image_dim: int
    coinvariant_image_dim: int
    bijective: bool


class PhiReport(LedgerMixin):
    subject: str
    degrees: List[PhiDegree] = Field(default_factory=list)


class SequenceRow(BaseModel):
    """Ranks around one degree of … → H(A) → H(B) → H(C) → H(A)[+1] → …"""
    degree: int
    coinvariant_rank: int
    middle_rank: int
    invariant_rank: int
    inclusion_rank: int
    average_rank: int
    connecting_rank: int
    exact_at_coinvariant: bool
    exact_at_middle: bool
    exact_at_invariant: bool


class SequenceReport(LedgerMixin):
    subject: str
    regime: str
    radius: Optional[int] = None
    cutoff: Optional[str] = None
    rows: List[SequenceRow] = Field(default_factory=list)
    dimensions: List[int] = Field(default_factory=list)
    alternating_sum: int = 0
    stabilized: Optional[bool] = None


class CoverRanksReport(LedgerMixin):
    """Coinvariant compactly supported cohomology of a cover at one radius."""
    subject: str
    radius: int
    ranks: List[int]
    next_ranks: List[int]
    stabilized: bool
    expected: Optional[List[int]] = None


class CorollaryRow(BaseModel):
    degree: int
    coinvariant_rank: int
    quotient_rank: int
    agrees: bool


class CorollaryReport(LedgerMixin):
    subject: str
    radius: int
    rows: List[CorollaryRow] = Field(default_factory=list)


class VerdictReport(LedgerMixin):
    """Single yes/no certificate with supporting values."""
    subject: str
    claim: str
    verdict: bool
    values: Dict[str, Any] = Field(default_factory=dict)


class ReportSection(BaseModel):
    operation: str
    report: Dict[str, Any]
    passed: bool


class ScenarioReport(BaseModel):
    """Top-level record written by the CLI."""
    schema_version: str
    scenario: str
    kind: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    sections: List[ReportSection] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool = True
    digest: str = ""
