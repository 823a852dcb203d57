"""Resolving scenario references and running single operations."""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from src.complex import BUNDLED_COMPLEXES, CellComplex, Cochain, betti_numbers, bundled_complex, load_complex
from src.config import settings
from src.cover import (
    BUNDLED_COVERS,
    PeriodicCover,
    bundled_cover,
    coinvariant_ranks,
    coinvariant_ranks_report,
    corollary_check,
    cover_exact_sequence,
    h0_check,
    iota_injectivity_check,
    load_cover,
    stable_radius,
    theta_class,
)
from src.equivariant import coinvariant_cohomology, finite_exact_sequence, invariant_cohomology, phi_map
from src.errors import InputError, ScenarioError
from src.group import BUNDLED_ACTIONS, CochainAction, bundled_action, induced_action_report, load_action, split_check
from src.hodge import (
    InnerProductSpace,
    decomposition_report,
    equivariant_hodge_check,
    harmonic_space,
    hodge_check,
    load_weights,
)
from src.linalg import oracle_betti, oracle_equivariant_ranks, oracle_subspace_dims
from src.reports.models import VerdictReport, check
from src.utils.logging import get_logger

from .models import Scenario

logger = get_logger(__name__)


@dataclass
class Subjects:
    """Everything a scenario refers to, loaded once."""

    complex: Optional[CellComplex] = None
    action: Optional[CochainAction] = None
    cover: Optional[PeriodicCover] = None
    pairing: Optional[InnerProductSpace] = None


def _is_path(reference: str, base: Optional[Path]) -> Optional[Path]:
    path = Path(reference)
    if not path.is_absolute() and base is not None:
        path = base / path
    return path if path.suffix == ".json" or path.exists() else None


def resolve(scenario: Scenario, base: Optional[Path] = None) -> Subjects:
    subjects = Subjects()
    if scenario.complex:
        if scenario.complex in BUNDLED_COMPLEXES:
            subjects.complex = bundled_complex(scenario.complex)
        elif _is_path(scenario.complex, base):
            subjects.complex = load_complex(_is_path(scenario.complex, base))
        else:
            raise ScenarioError(f"unknown complex '{scenario.complex}'")
    if scenario.action:
        if scenario.action in BUNDLED_ACTIONS:
            subjects.action = bundled_action(scenario.action)
            if subjects.complex is not None and subjects.complex.name != subjects.action.complex.name:
                raise ScenarioError(
                    f"action '{scenario.action}' acts on {subjects.action.complex.name}, "
                    f"not on {subjects.complex.name}"
                )
            subjects.complex = subjects.action.complex
        elif _is_path(scenario.action, base):
            if subjects.complex is None:
                raise ScenarioError("an action file needs a 'complex' reference")
            subjects.action = load_action(_is_path(scenario.action, base), subjects.complex)
        else:
            raise ScenarioError(f"unknown action '{scenario.action}'")
    if scenario.cover:
        if scenario.cover in BUNDLED_COVERS:
            subjects.cover = bundled_cover(scenario.cover)
        elif _is_path(scenario.cover, base):
            subjects.cover = load_cover(_is_path(scenario.cover, base))
        else:
            raise ScenarioError(f"unknown cover '{scenario.cover}'")
    if scenario.weights:
        path = _is_path(scenario.weights, base)
        if path is None or subjects.complex is None:
            raise ScenarioError(f"weights '{scenario.weights}' need a file path and a complex")
        subjects.pairing = load_weights(path, subjects.complex, action=subjects.action)
    return subjects


@dataclass(frozen=True)
class Context:
    scenario: Scenario
    subjects: Subjects
    radius: int
    cutoff: str
    max_degree: Optional[int]

    def degrees(self, K: CellComplex) -> List[int]:
        top = K.dimension if self.max_degree is None else min(self.max_degree, K.dimension)
        return list(range(top + 1))


class SectionList(BaseModel):
    """Several per-degree reports under one operation."""
    subject: str
    items: List[dict]

    @property
    def passed(self) -> bool:
        return all(all(c["passed"] for c in item.get("checks", [])) for item in self.items)


def _per_degree(ctx: Context, K: CellComplex, build: Callable[[int], BaseModel]) -> SectionList:
    return SectionList(subject=K.name, items=[build(p).model_dump(mode="json") for p in ctx.degrees(K)])


def _ranks(claim: str, ranks: List[int], subject: str) -> VerdictReport:
    return VerdictReport(subject=subject, claim=claim, verdict=True, values={"ranks": ranks})


def oracle_check(K: CellComplex, action: Optional[CochainAction] = None) -> VerdictReport:
    """Compare the sparse pipeline against dense brute-force elimination."""
    if K.size > settings.oracle_cell_limit:
        raise InputError(f"{K.name} has {K.size} cells; the oracle runs up to {settings.oracle_cell_limit}")
    betti = betti_numbers(K)
    expected_betti = oracle_betti(K)
    checks = [check("oracle.betti", betti == expected_betti, f"{betti}", witness=f"oracle {expected_betti}")]
    values = {"betti": betti}
    if action is not None:
        for p in range(K.dimension + 1):
            dims = (action.invariant_basis(p).shape[1], action.coinvariant_basis(p).shape[1])
            expected = oracle_subspace_dims(action, p)
            checks.append(check(f"oracle.subspace_dims[{p}]", dims == tuple(expected),
                                f"{dims}", witness=f"oracle {tuple(expected)}"))
        ranks = (invariant_cohomology(action), coinvariant_cohomology(action))
        expected_ranks = oracle_equivariant_ranks(action)
        checks.append(check("oracle.equivariant_ranks", ranks == tuple(expected_ranks),
                            f"{ranks}", witness=f"oracle {tuple(expected_ranks)}"))
        values["invariant_ranks"], values["coinvariant_ranks"] = ranks
    return VerdictReport(subject=K.name, claim="oracle_agrees", verdict=all(c.passed for c in checks),
                         values=values, checks=checks)


def _cochains(ctx: Context, K: CellComplex) -> List[Cochain]:
    specs = ctx.scenario.parameters.cochains
    if not specs:
        return [Cochain.indicator(p, 0) for p in ctx.degrees(K) if K.count(p)]
    cochains = []
    for spec in specs:
        try:
            cochain = Cochain(spec.degree, {i: Fraction(v) for i, v in spec.coefficients.items()})
        except (ValueError, ZeroDivisionError) as e:
            raise ScenarioError(f"bad cochain coefficient: {e}") from e
        cochains.append(cochain.validate(K))
    return cochains


def _finite(ctx: Context, operation: str) -> BaseModel:
    A = ctx.subjects.action
    K = A.complex
    if operation == "split_check":
        return _per_degree(ctx, K, lambda p: split_check(A, p))
    if operation == "induced_action":
        return _per_degree(ctx, K, lambda p: induced_action_report(A, p))
    if operation == "invariant_cohomology":
        return _ranks("invariant_cohomology", invariant_cohomology(A), A.name)
    if operation == "coinvariant_cohomology":
        return _ranks("coinvariant_cohomology", coinvariant_cohomology(A), A.name)
    if operation == "phi_map":
        return phi_map(A)
    if operation == "finite_exact_sequence":
        return finite_exact_sequence(A, ctx.max_degree)
    if operation == "h0_check":
        return h0_check(A)
    return _shared(ctx, operation)


def _hodge(ctx: Context, operation: str) -> BaseModel:
    K = ctx.subjects.complex
    ip = ctx.subjects.pairing
    if operation == "hodge_check":
        return hodge_check(K, ip)
    if operation == "harmonic_space":
        space = harmonic_space(K, ip, ctx.subjects.action)
        values = {"harmonic": space.dims()}
        if space.invariant is not None:
            values["invariant"] = [b.shape[1] for b in space.invariant]
            values["coinvariant"] = [b.shape[1] for b in space.coinvariant]
        checks = [check("harmonic.equals_betti", space.dims() == betti_numbers(K))]
        return VerdictReport(subject=K.name, claim="harmonic_space", verdict=all(c.passed for c in checks),
                             values=values, checks=checks)
    if operation == "hodge_decompose":
        return SectionList(subject=K.name, items=[
            decomposition_report(K, ip, omega).model_dump(mode="json") for omega in _cochains(ctx, K)
        ])
    return _shared(ctx, operation)


def _shared(ctx: Context, operation: str) -> BaseModel:
    A = ctx.subjects.action
    if operation == "equivariant_hodge":
        return _per_degree(ctx, A.complex, lambda p: equivariant_hodge_check(A, ctx.subjects.pairing, p))
    if operation == "oracle":
        K = ctx.subjects.complex if A is None else A.complex
        return oracle_check(K, A)
    raise ScenarioError(f"operation '{operation}' is not available for kind {ctx.scenario.kind}")


def _cover(ctx: Context, operation: str) -> BaseModel:
    P = ctx.subjects.cover
    R = ctx.radius
    if operation == "coinvariant_ranks":
        return coinvariant_ranks_report(P, R, ctx.scenario.parameters.expected_ranks)
    if operation == "cover_exact_sequence":
        return cover_exact_sequence(P, R, ctx.cutoff)
    if operation == "theta_class":
        return theta_class(P, R, ctx.cutoff)
    if operation == "h0_check":
        return h0_check(P, R)
    if operation == "iota_injectivity":
        return iota_injectivity_check(P, R)
    if operation == "corollary_check":
        return corollary_check(P, R)
    if operation == "stabilization":
        limit = settings.stabilization_radius_limit
        found = stable_radius(P, limit)
        values = {"stable_radius": found, "limit": limit}
        if found is not None:
            values["ranks"] = coinvariant_ranks(P, found)
        checks = [check("stabilization.within_limit", found is not None,
                        f"ranks agree at R and R+1 for some R ≤ {limit}",
                        witness=f"no agreement up to R={limit}")]
        return VerdictReport(subject=P.name, claim="ranks_stabilize", verdict=found is not None,
                             values=values, checks=checks)
    raise ScenarioError(f"operation '{operation}' is not available for kind cover")


DISPATCH: Dict[str, Callable[[Context, str], BaseModel]] = {
    "finite-action": _finite,
    "hodge": _hodge,
    "cover": _cover,
}


def run_operation(ctx: Context, operation: str) -> BaseModel:
    logger.info(f"Running {operation} for scenario {ctx.scenario.name}")
    return DISPATCH[ctx.scenario.kind](ctx, operation)
