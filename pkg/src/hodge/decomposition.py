"""Codifferential, Laplacian, harmonic cochains and the Hodge decomposition."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.complex import CellComplex, Cochain, apply_map, betti_numbers
from src.errors import InnerProductError
from src.linalg import exact
from src.reports.models import DecompositionPartsReport, HodgeDegree, HodgeReport, check
from src.utils.logging import get_logger
from src.utils.performance import measure_performance

from .inner_product import InnerProductSpace

logger = get_logger(__name__)


def _pairing(K: CellComplex, ip: Optional[InnerProductSpace]) -> InnerProductSpace:
    if ip is None:
        return InnerProductSpace.default(K)
    if ip.complex is not K and ip.complex != K:
        raise InnerProductError(f"pairing {ip.name} is defined on {ip.complex.name}, not {K.name}")
    return ip


def delta(K: CellComplex, ip: InnerProductSpace, p: int) -> DomainMatrix:
    """δ_p : C^p -> C^{p-1} for any p; zero-sized outside 1..dim."""
    if not 1 <= p <= K.dimension:
        return exact.zeros(K.count(p - 1), K.count(p))
    d = K.d(p - 1)
    return exact.matmul(ip.inverse_gram(p - 1), exact.matmul(exact.transpose(d), ip.gram(p)))


def codifferential(K: CellComplex, ip: Optional[InnerProductSpace], p: int) -> DomainMatrix:
    """Adjoint of d_{p-1}: ⟨dα, β⟩ = ⟨α, δβ⟩."""
    K.check_degree(p, 1, K.dimension)
    return delta(K, _pairing(K, ip), p)


def laplacian(K: CellComplex, ip: Optional[InnerProductSpace], p: int) -> DomainMatrix:
    """Δ_p = δ_{p+1} d_p + d_{p-1} δ_p."""
    K.check_degree(p)
    ip = _pairing(K, ip)
    up = exact.matmul(delta(K, ip, p + 1), K.d(p))
    down = exact.matmul(K.d(p - 1), delta(K, ip, p))
    return exact.add(up, down)


def adjointness_residual(K: CellComplex, ip: InnerProductSpace, p: int) -> DomainMatrix:
    """W_p d_{p-1} − (W_{p-1} δ_p)^T on full bases; exactly zero for an adjoint."""
    lhs = exact.matmul(ip.gram(p), K.d(p - 1))
    rhs = exact.transpose(exact.matmul(ip.gram(p - 1), delta(K, ip, p)))
    return exact.subtract(lhs, rhs)


@dataclass(frozen=True)
class HarmonicSpace:
    """Bases of ker Δ_p, optionally split by an action."""

    bases: Tuple[DomainMatrix, ...]
    invariant: Optional[Tuple[DomainMatrix, ...]] = None
    coinvariant: Optional[Tuple[DomainMatrix, ...]] = None

    def dims(self) -> List[int]:
        return [b.shape[1] for b in self.bases]


def harmonic_basis(K: CellComplex, ip: InnerProductSpace, p: int) -> DomainMatrix:
    return exact.nullspace_basis(laplacian(K, ip, p))


def harmonic_parts(action, p: int, H: DomainMatrix) -> Tuple[DomainMatrix, DomainMatrix]:
    """(𝓗^Γ, 𝓗_Γ): fixed harmonic cochains and span of (id − γ) applied to 𝓗."""
    n = H.shape[0]
    k = H.shape[1]
    if k == 0:
        return exact.zeros(n, 0), exact.zeros(n, 0)
    blocks = [exact.matmul(exact.subtract(action.matrix(g, p), exact.identity(n)), H)
              for g in action.generator_names]
    fixed = exact.nullspace_basis(exact.vstack(blocks, k))
    invariant = exact.column_basis(exact.matmul(H, fixed))
    moved = [exact.matmul(exact.subtract(exact.identity(n), action.matrix(g, p)), H)
             for g in action.generator_refs()]
    coinvariant = exact.column_basis(exact.hstack(moved, n))
    return invariant, coinvariant


@measure_performance("hodge.harmonic_space")
def harmonic_space(K: CellComplex, ip: Optional[InnerProductSpace] = None, action=None) -> HarmonicSpace:
    ip = _pairing(K, ip)
    bases = tuple(harmonic_basis(K, ip, p) for p in range(K.dimension + 1))
    if action is None:
        return HarmonicSpace(bases=bases)
    ip.require_preserved(action)
    parts = [harmonic_parts(action, p, bases[p]) for p in range(K.dimension + 1)]
    return HarmonicSpace(
        bases=bases,
        invariant=tuple(part[0] for part in parts),
        coinvariant=tuple(part[1] for part in parts),
    )


@dataclass(frozen=True)
class HodgeDecomposition:
    """ω = dα + δβ + η."""

    cochain: Cochain
    exact_part: Cochain
    coexact_part: Cochain
    harmonic_part: Cochain
    alpha: Cochain
    beta: Cochain


def _project(M: DomainMatrix, gram: DomainMatrix, omega: Cochain, degree: int) -> Tuple[Cochain, Cochain]:
    """Orthogonal projection of ω onto the column space of M.

    Returns (projection, potential) with projection = M·potential, solving the
    normal equations on the pivot columns of M.
    """
    pivots = exact.pivot_columns(M)
    if not pivots:
        return Cochain.zero(omega.degree), Cochain.zero(degree)
    B = exact.select_columns(M, pivots)
    normal = exact.gram(B, gram, B)
    rhs = exact.apply(exact.matmul(exact.transpose(B), gram), omega.coefficients)
    x = exact.solve(normal, rhs)
    projection = Cochain(omega.degree, exact.apply(B, x))
    potential = Cochain(degree, {pivots[k]: v for k, v in x.items()})
    return projection, potential


def hodge_decompose(K: CellComplex, ip: Optional[InnerProductSpace], omega: Cochain) -> HodgeDecomposition:
    """Split ω into exact, coexact and harmonic parts, with potentials α, β."""
    ip = _pairing(K, ip)
    omega.validate(K)
    p = omega.degree
    W = ip.gram(p)
    exact_part, alpha = _project(K.d(p - 1), W, omega, p - 1)
    coexact_part, beta = _project(delta(K, ip, p + 1), W, omega, p + 1)
    harmonic = omega - exact_part - coexact_part
    return HodgeDecomposition(
        cochain=omega,
        exact_part=exact_part,
        coexact_part=coexact_part,
        harmonic_part=harmonic,
        alpha=alpha,
        beta=beta,
    )


def decomposition_report(K: CellComplex, ip: Optional[InnerProductSpace], omega: Cochain) -> DecompositionPartsReport:
    ip = _pairing(K, ip)
    parts = hodge_decompose(K, ip, omega)
    p = omega.degree
    lap = laplacian(K, ip, p)
    e, c, h = parts.exact_part, parts.coexact_part, parts.harmonic_part
    d_alpha = apply_map(K.d(p - 1), parts.alpha, p) if p > 0 else Cochain.zero(p)
    delta_beta = apply_map(delta(K, ip, p + 1), parts.beta, p)
    checks = [
        check("hodge.reconstructs", (e + c + h) == omega),
        check("hodge.exact_potential", d_alpha == e, "exact part = dα"),
        check("hodge.coexact_potential", delta_beta == c, "coexact part = δβ"),
        check("hodge.harmonic", apply_map(lap, h, p).is_zero(), "Δη = 0"),
        check("hodge.orthogonal",
              ip.pair(e, c) == 0 and ip.pair(e, h) == 0 and ip.pair(c, h) == 0,
              witness=f"⟨exact,coexact⟩={ip.pair(e, c)}, ⟨exact,harmonic⟩={ip.pair(e, h)}, "
                      f"⟨coexact,harmonic⟩={ip.pair(c, h)}"),
    ]
    return DecompositionPartsReport(
        subject=K.name,
        degree=p,
        cochain=omega.to_dict()["coefficients"],
        exact_part=e.to_dict()["coefficients"],
        coexact_part=c.to_dict()["coefficients"],
        harmonic_part=h.to_dict()["coefficients"],
        checks=checks,
    )


@measure_performance("hodge.hodge_check")
def hodge_check(K: CellComplex, ip: Optional[InnerProductSpace] = None) -> HodgeReport:
    """Adjointness, ker Δ = ker d ∩ ker δ, symmetry of Δ and dim ker Δ = b_p."""
    ip = _pairing(K, ip)
    betti = betti_numbers(K)
    degrees = []
    checks = []
    for p in range(K.dimension + 1):
        n = K.count(p)
        lap = laplacian(K, ip, p)
        H = exact.nullspace_basis(lap)
        closed_coclosed = exact.nullspace_basis(exact.vstack([K.d(p), delta(K, ip, p)], n))
        exact_dim = exact.rank(K.d(p - 1))
        coexact_dim = exact.rank(delta(K, ip, p + 1))
        harmonic_dim = H.shape[1]
        wl = exact.matmul(ip.gram(p), lap)
        degrees.append(HodgeDegree(
            degree=p, cochain_dim=n, exact_dim=exact_dim, coexact_dim=coexact_dim,
            harmonic_dim=harmonic_dim, betti=betti[p],
        ))
        if p >= 1:
            residual = adjointness_residual(K, ip, p)
            checks.append(check(f"hodge.adjoint[{p}]", exact.is_zero(residual),
                                "⟨dα, β⟩ = ⟨α, δβ⟩ on cell bases"))
        checks.extend([
            check(f"hodge.kernel_is_closed_and_coclosed[{p}]",
                  exact.in_span(H, closed_coclosed) and exact.in_span(closed_coclosed, H)),
            check(f"hodge.laplacian_symmetric[{p}]",
                  exact.is_zero(exact.subtract(wl, exact.transpose(wl)))),
            check(f"hodge.harmonic_equals_betti[{p}]", harmonic_dim == betti[p],
                  f"dim ker Δ = {harmonic_dim}, b = {betti[p]}"),
            check(f"hodge.dimension_sum[{p}]", exact_dim + coexact_dim + harmonic_dim == n,
                  f"{exact_dim} + {coexact_dim} + {harmonic_dim} = {n}"),
        ])
    report = HodgeReport(subject=f"{K.name}/{ip.name}", degrees=degrees, checks=checks)
    logger.info(f"Hodge check on {K.name}: harmonic dims {[d.harmonic_dim for d in degrees]}")
    return report
