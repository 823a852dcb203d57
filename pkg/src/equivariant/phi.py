"""Cohomology of invariant and coinvariant subcomplexes and the comparison map Φ.

Φ : H^p(Ω^Γ) ⊕ H^p(Ω_Γ) → H^p(K), ([ω]^Γ, [η]_Γ) ↦ [ω + η], for a finite
group acting by signed cell permutations.
"""

from fractions import Fraction
from typing import List

from src.complex import Cochain, GradedSubspace, apply_coboundary, betti_numbers, cohomology_basis, cohomology_ranks
from src.complex.cohomology import coordinate_matrix, induced_inclusion_check, is_coboundary
from src.group import act, average, induced_cohomology_action
from src.linalg import exact
from src.reports.models import PhiDegree, PhiReport, check, fraction_matrix
from src.utils.logging import get_logger
from src.utils.performance import measure_performance

logger = get_logger(__name__)


def invariant_cohomology(action) -> List[int]:
    """Ranks of H^p(Ω^Γ) for every degree."""
    action.require_finite("invariant_cohomology")
    return cohomology_ranks(action.complex, action.invariant_complex())


def coinvariant_cohomology(action) -> List[int]:
    """Ranks of H^p(Ω_Γ) for every degree (compact complex, so Ω_c = Ω)."""
    action.require_finite("coinvariant_cohomology")
    return cohomology_ranks(action.complex, action.coinvariant_complex())


def averaging_witness(action, omega: Cochain) -> bool:
    """m(ω) = ω + d((1/|Γ|) Σ α^γ) where γ.ω − ω = dα^γ.

    Only meaningful when the class of ω is fixed by every element; returns
    False if some γ.ω − ω has no primitive.
    """
    K = action.complex
    group = action.group
    if omega.degree == 0:
        return all(act(action, g, omega) == omega for g in range(group.order)) and average(action, omega) == omega
    total = Cochain.zero(omega.degree - 1)
    for g in range(group.order):
        alpha = is_coboundary(K, act(action, g, omega) - omega)
        if alpha is None:
            return False
        total = total + alpha
    correction = apply_coboundary(K, total.scaled(Fraction(1, group.order)))
    return average(action, omega) == omega + correction


@measure_performance("equivariant.phi_map")
def phi_map(action) -> PhiReport:
    """Φ on chosen class bases, its image split and the certificates behind it."""
    action.require_finite("phi_map")
    K = action.complex
    inv = action.invariant_complex()
    coinv = action.coinvariant_complex()
    full = GradedSubspace.full(K)
    betti = betti_numbers(K)
    degrees = []
    checks = [
        check("phi.invariant_closed", inv.closed),
        check("phi.coinvariant_closed", coinv.closed),
    ]
    for p in range(K.dimension + 1):
        reps_inv = cohomology_basis(K, p, inv)
        reps_coinv = cohomology_basis(K, p, coinv)
        reps = cohomology_basis(K, p)
        a, c, b = reps_inv.shape[1], reps_coinv.shape[1], reps.shape[1]
        phi_inv = coordinate_matrix(K, p, reps, reps_inv)
        phi_coinv = coordinate_matrix(K, p, reps, reps_coinv)
        phi = exact.hstack([phi_inv, phi_coinv], b)
        rank = exact.rank(phi)
        image_inv = exact.rank(phi_inv)
        image_coinv = exact.rank(phi_coinv)
        bijective = a + c == b and rank == b
        degrees.append(PhiDegree(
            degree=p, invariant_rank=a, coinvariant_rank=c, betti=b,
            matrix=fraction_matrix(phi), rank=rank,
            invariant_image_dim=image_inv, coinvariant_image_dim=image_coinv,
            bijective=bijective,
        ))

        induced = induced_cohomology_action(action, p)
        overlap = exact.intersection_dim(phi_inv, phi_coinv)
        checks.extend([
            check(f"phi.well_defined.invariant[{p}]", induced_inclusion_check(K, inv, full, p),
                  "Ω^Γ coboundaries are coboundaries in K"),
            check(f"phi.well_defined.coinvariant[{p}]", induced_inclusion_check(K, coinv, full, p),
                  "Ω_Γ coboundaries are coboundaries in K"),
            check(f"phi.bijective[{p}]", bijective, f"rank {rank} of {a}+{c} columns, b = {b}",
                  witness=f"rank {rank}, b = {b}"),
            check(f"phi.rank_sum[{p}]", a + c == betti[p], f"{a} + {c} = {betti[p]}"),
            check(f"phi.invariant_image_is_fixed_classes[{p}]",
                  exact.in_span(phi_inv, induced.invariant_classes)
                  and exact.in_span(induced.invariant_classes, phi_inv)),
            check(f"phi.coinvariant_image_is_coinvariant_classes[{p}]",
                  exact.in_span(phi_coinv, induced.coinvariant_classes)
                  and exact.in_span(induced.coinvariant_classes, phi_coinv)),
            check(f"phi.images_independent[{p}]", overlap == 0 and image_inv + image_coinv == b,
                  witness=f"overlap {overlap}"),
        ])
        fixed_reps = exact.matmul(reps, induced.invariant_classes)
        witnesses = [averaging_witness(action, Cochain.from_column(p, fixed_reps, k))
                     for k in range(fixed_reps.shape[1])]
        checks.append(check(f"phi.averaging_witness[{p}]", all(witnesses),
                            f"m(ω) = ω + d(avg α) for {len(witnesses)} fixed classes",
                            witness=f"class {witnesses.index(False)}" if not all(witnesses) else None))

    report = PhiReport(subject=action.name, degrees=degrees, checks=checks)
    logger.info(
        f"Φ for {action.name}: invariant {[d.invariant_rank for d in degrees]}, "
        f"coinvariant {[d.coinvariant_rank for d in degrees]}, passed={report.passed}"
    )
    return report


