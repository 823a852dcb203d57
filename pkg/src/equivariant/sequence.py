"""The coinvariant / invariant long exact sequence for a finite group.

0 → Ω_Γ → Ω → Ω^Γ → 0 with the normalised average as the surjection and
the inclusion of invariants as its section, so the connecting map
[ω] ↦ [d(section ω)] vanishes on cocycles.
"""

from typing import List, Optional

from src.complex import ChainView, GradedSubspace, LinkMap, LongExactSequence, long_exact_sequence
from src.linalg import exact
from src.reports.models import CheckResult, SequenceReport, SequenceRow, check
from src.utils.logging import get_logger
from src.utils.performance import measure_performance

logger = get_logger(__name__)


def sequence_checks(sequence: LongExactSequence, complete: bool = True) -> List[CheckResult]:
    """One ledger entry per node, plus the alternating-sum identity when the
    sequence runs to the top degree and so ends in zero."""
    checks = [
        check(
            f"sequence.exact_at[{node.node}]",
            node.exact,
            f"in {node.incoming_rank} + out {node.outgoing_rank} = dim {node.dimension}",
            witness=node.witness or (
                "map does not send cocycles to cocycles" if not node.maps_well_defined
                else f"{node.incoming_rank} + {node.outgoing_rank} != {node.dimension}"
            ),
        )
        for node in sequence.nodes
    ]
    if complete:
        checks.append(check("sequence.alternating_sum", sequence.alternating_sum == 0,
                            f"Σ(−1)^k dim = {sequence.alternating_sum}"))
    return checks


def sequence_rows(sequence: LongExactSequence, f: LinkMap, g: LinkMap, delta: LinkMap) -> List[SequenceRow]:
    rows = []
    for p in range(sequence.top + 1):
        a, b, c = sequence.nodes[3 * p: 3 * p + 3]
        rows.append(SequenceRow(
            degree=p,
            coinvariant_rank=a.dimension,
            middle_rank=b.dimension,
            invariant_rank=c.dimension,
            inclusion_rank=f.rank(p),
            average_rank=g.rank(p),
            connecting_rank=delta.rank(p),
            exact_at_coinvariant=a.exact,
            exact_at_middle=b.exact,
            exact_at_invariant=c.exact,
        ))
    return rows


def _short_exact_checks(action) -> List[CheckResult]:
    """Cochain level: inclusion injective, average onto Ω^Γ, ker m = Ω_Γ."""
    checks = []
    K = action.complex
    for p in range(K.dimension + 1):
        n = K.count(p)
        M = action.average_matrix(p)
        inv = action.invariant_basis(p)
        coinv = action.coinvariant_basis(p)
        kernel = exact.nullspace_basis(M)
        section_ok = exact.is_zero(exact.subtract(exact.matmul(M, inv), inv))
        checks.extend([
            check(f"short_exact.average_onto_invariants[{p}]",
                  exact.in_span(exact.column_basis(M), inv) and exact.rank(M) == inv.shape[1]),
            check(f"short_exact.section[{p}]", section_ok, "m restricted to Ω^Γ is the identity"),
            check(f"short_exact.kernel_is_coinvariant[{p}]",
                  exact.in_span(kernel, coinv) and exact.in_span(coinv, kernel),
                  witness=f"dim ker m = {kernel.shape[1]}, dim Ω_Γ = {coinv.shape[1]}"),
            check(f"short_exact.dimensions[{p}]", coinv.shape[1] + inv.shape[1] == n),
        ])
    return checks


@measure_performance("equivariant.finite_exact_sequence")
def finite_exact_sequence(action, max_degree: Optional[int] = None) -> SequenceReport:
    """Certify … → H^p(Ω_Γ) → H^p(K) → H^p(Ω^Γ) → H^{p+1}(Ω_Γ) → … ."""
    action.require_finite("finite_exact_sequence")
    K = action.complex
    top = K.dimension if max_degree is None else min(max_degree, K.dimension)

    coinv = ChainView(action.coinvariant_complex(), "coinvariant")
    full = ChainView(GradedSubspace.full(K), K.name)
    inv = ChainView(action.invariant_complex(), "invariant")

    f = LinkMap("inclusion", coinv, full, lambda p, cols: cols)
    g = LinkMap("average", full, inv, lambda p, cols: exact.matmul(action.average_matrix(p), cols))
    delta = LinkMap("connecting", inv, coinv, lambda p, cols: exact.matmul(K.d(p), cols), shift=1)

    sequence = long_exact_sequence(coinv, full, inv, f, g, delta, top)
    checks = _short_exact_checks(action) + sequence_checks(sequence, top == K.dimension)
    checks.append(check(
        "sequence.connecting_map_zero",
        all(delta.rank(p) == 0 for p in range(top + 1)),
        "the inclusion of invariants is a cochain section of m",
    ))
    report = SequenceReport(
        subject=action.name,
        regime="finite",
        rows=sequence_rows(sequence, f, g, delta),
        dimensions=[node.dimension for node in sequence.nodes],
        alternating_sum=sequence.alternating_sum,
        checks=checks,
    )
    logger.info(f"Finite exact sequence for {action.name}: {report.dimensions}, exact={sequence.exact}")
    return report
