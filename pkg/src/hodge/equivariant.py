"""Hodge decompositions restricted to invariant and coinvariant cochains."""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.linalg import exact
from src.reports.models import DecompositionReport, check, fraction_matrix
from src.utils.logging import get_logger

from .decomposition import delta, harmonic_basis, harmonic_parts, laplacian
from .inner_product import InnerProductSpace

logger = get_logger(__name__)


def _basis(action, kind: str, q: int) -> DomainMatrix:
    K = action.complex
    if not 0 <= q <= K.dimension:
        return exact.zeros(K.count(q), 0)
    if kind == "invariant":
        return action.invariant_basis(q)
    return action.coinvariant_basis(q)


def _summand_checks(label: str, ip: InnerProductSpace, p: int, whole: DomainMatrix,
                    parts: List[Tuple[str, DomainMatrix]], pairings: Dict[str, List[List[str]]]):
    """whole = ⊥-sum of parts: containment, zero cross pairings, dimension sum."""
    checks = []
    dims = {name: M.shape[1] for name, M in parts}
    total = sum(dims.values())
    checks.append(check(f"{label}.dimension_sum", total == whole.shape[1],
                        " + ".join(str(v) for v in dims.values()) + f" = {whole.shape[1]}"))
    for name, M in parts:
        checks.append(check(f"{label}.{name}_contained", exact.in_span(whole, M)))
    for (a, A), (b, B) in combinations(parts, 2):
        cross = ip.cross_gram(p, A, B)
        pairings[f"{label}:{a}.{b}"] = fraction_matrix(cross)
        checks.append(check(f"{label}.{a}_orthogonal_{b}", exact.is_zero(cross)))
    return checks


def equivariant_hodge_check(action, ip: Optional[InnerProductSpace], p: int) -> DecompositionReport:
    """Orthogonal decompositions of Ω^p_Γ, Ω^p{}^Γ and 𝓗^p under a finite action."""
    action.require_finite("equivariant_hodge_check")
    K = action.complex
    K.check_degree(p)
    ip = ip or InnerProductSpace.default(K)
    ip.require_preserved(action)
    n = K.count(p)

    H = harmonic_basis(K, ip, p)
    h_inv, h_coinv = harmonic_parts(action, p, H)
    pairings: Dict[str, List[List[str]]] = {}
    dims: Dict[str, int] = {"harmonic": H.shape[1], "harmonic_invariant": h_inv.shape[1],
                            "harmonic_coinvariant": h_coinv.shape[1]}
    checks = []
    for kind, h_part in (("coinvariant", h_coinv), ("invariant", h_inv)):
        whole = _basis(action, kind, p)
        d_part = exact.column_basis(exact.matmul(K.d(p - 1), _basis(action, kind, p - 1)))
        delta_part = exact.column_basis(exact.matmul(delta(K, ip, p + 1), _basis(action, kind, p + 1)))
        dims.update({
            kind: whole.shape[1],
            f"{kind}_exact": d_part.shape[1],
            f"{kind}_coexact": delta_part.shape[1],
        })
        checks.extend(_summand_checks(
            kind, ip, p, whole,
            [("exact", d_part), ("coexact", delta_part), ("harmonic", h_part)],
            pairings,
        ))
    checks.extend(_summand_checks("harmonic", ip, p, H,
                                  [("invariant", h_inv), ("coinvariant", h_coinv)], pairings))

    meet = exact.intersection_basis(H, _basis(action, "coinvariant", p))
    checks.append(check("harmonic.coinvariant_is_intersection",
                        exact.in_span(meet, h_coinv) and exact.in_span(h_coinv, meet),
                        "𝓗_Γ = 𝓗 ∩ Ω_Γ"))
    lap = laplacian(K, ip, p)
    moving = [g for g in action.generator_names
              if not exact.is_zero(exact.subtract(exact.matmul(lap, action.matrix(g, p)),
                                                  exact.matmul(action.matrix(g, p), lap)))]
    checks.append(check("harmonic.laplacian_equivariant", not moving,
                        witness=f"generator {moving[0]}" if moving else None))

    report = DecompositionReport(
        subject=f"{action.name}/{ip.name}",
        decomposition="equivariant-hodge",
        degree=p,
        ambient_dim=n,
        dims=dims,
        pairings=pairings,
        checks=checks,
    )
    logger.debug(f"Equivariant Hodge check {action.name} degree {p}: passed={report.passed}")
    return report
