"""Deck average, discrete cutoff weights, the section they induce and
kernel certificates.

A cutoff assigns a rational weight to finitely many translations; the
same weights are used for every orbit, so the orbit sums equal the total
weight, which must be exactly 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from src.complex import Cochain
from src.errors import InputError, SupportError, WindowTooSmallError
from src.utils.logging import get_logger

from .periodic import CoverCochain, PeriodicCover, Translation, Window, norm, required_radius, shift

logger = get_logger(__name__)

CUTOFF_KINDS = ("domain", "split")


@dataclass(frozen=True)
class CutoffWeights:
    """φ(t) per translation; every orbit carries the same weights."""

    kind: str
    deck_rank: int
    weights: Tuple[Tuple[Translation, Fraction], ...]

    def __post_init__(self):
        if self.orbit_sum != 1:
            raise InputError(f"cutoff '{self.kind}' weights sum to {self.orbit_sum}, not 1")
        if any(len(t) != self.deck_rank for t, _ in self.weights):
            raise InputError(f"cutoff '{self.kind}' has translations outside ℤ^{self.deck_rank}")

    @property
    def orbit_sum(self) -> Fraction:
        return sum((w for _, w in self.weights), Fraction(0))

    @property
    def support(self) -> List[Translation]:
        return [t for t, w in self.weights if w]

    @property
    def reach(self) -> int:
        """Translation range of the support."""
        return max((norm(t) for t in self.support), default=0)

    def __call__(self, t: Translation) -> Fraction:
        for s, w in self.weights:
            if s == tuple(t):
                return w
        return Fraction(0)

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "weights": {",".join(str(a) for a in t): str(w) for t, w in self.weights},
            "orbit_sum": str(self.orbit_sum),
        }


def cutoff(cover: PeriodicCover, kind: str = "domain") -> CutoffWeights:
    """The fundamental-domain indicator, or the split ½·e_0 + ½·e_(first axis)."""
    n = cover.deck_rank
    origin = (0,) * n
    if kind == "domain":
        weights = ((origin, Fraction(1)),)
    elif kind == "split":
        step = (1,) + (0,) * (n - 1)
        weights = ((origin, Fraction(1, 2)), (step, Fraction(1, 2)))
    else:
        raise InputError(f"unknown cutoff '{kind}' (expected one of {', '.join(CUTOFF_KINDS)})")
    return CutoffWeights(kind=kind, deck_rank=n, weights=weights)


def _require_interior(window: Window, omega: CoverCochain):
    outside = [(j, t) for j, t in omega.support if not window.is_interior(omega.degree, j, t)]
    if outside:
        j, t = outside[0]
        raise SupportError(
            f"degree {omega.degree} cochain touches the collar of the radius {window.radius} window "
            f"at cell ({j}, {list(t)})"
        )


def deck_average(cover: PeriodicCover, window: Window, omega: CoverCochain) -> Cochain:
    """m(ω) = Σ_g τ_g*ω pushed to the quotient: sum of the values over each orbit."""
    _require_interior(window, omega)
    values: Dict[int, Fraction] = {}
    for (j, _), v in omega.coefficients.items():
        values[j] = values.get(j, Fraction(0)) + v
    return Cochain(omega.degree, values)


def section_radius(cover: PeriodicCover, weights: CutoffWeights, omega: Cochain) -> int:
    cells = [(omega.degree, j, t) for j in omega.support for t in weights.support]
    return required_radius(cover, cells)


def section(cover: PeriodicCover, window: Window, omega: Cochain, weights: CutoffWeights) -> CoverCochain:
    """φ·ω lifted: the weight of translation t times ω(j) on each (j, t)."""
    p = omega.degree
    omega.validate(cover.quotient)
    collar = [j for j in omega.support if (p, j) in cover.quotient_collar]
    if collar:
        raise SupportError(f"quotient cochain is nonzero on collar cell {cover.quotient.cells[p][collar[0]].label}")
    cells = [(p, j, t) for j in omega.support for t in weights.support]
    if not all(window.is_interior(q, j, t) for q, j, t in cells):
        raise WindowTooSmallError(window.radius, section_radius(cover, weights, omega))
    return CoverCochain(p, {
        (j, t): w * v
        for j, v in omega.coefficients.items()
        for t, w in weights.weights
    })


@dataclass(frozen=True)
class CertificateTerm:
    """ω_g = α − τ_g α with α(j, t) = φ(t + g)·ω(j, t)."""

    translation: Translation
    potential: CoverCochain
    term: CoverCochain

    def to_dict(self) -> Dict[str, object]:
        return {
            "translation": list(self.translation),
            "potential": self.potential.to_dict(),
            "term": self.term.to_dict(),
        }


@dataclass(frozen=True)
class KernelCertificate:
    cochain: CoverCochain
    terms: Tuple[CertificateTerm, ...]
    radius: int

    def reconstructs(self) -> bool:
        total = CoverCochain.zero(self.cochain.degree)
        for entry in self.terms:
            total = total + entry.term
        return total == self.cochain

    def manifest(self) -> bool:
        """Each term is a cochain minus its translate."""
        return all(entry.term == entry.potential - entry.potential.translated(entry.translation)
                   for entry in self.terms)


def kernel_certificate(cover: PeriodicCover, omega: CoverCochain, weights: CutoffWeights) -> KernelCertificate:
    """Write an orbit-sum-free cochain as Σ_g (α_g − τ_g α_g).

    Only g = s − t with s in the cutoff support and t in the translations
    of the support of ω contribute; zero terms are skipped.
    """
    sums: Dict[int, Fraction] = {}
    for (j, _), v in omega.coefficients.items():
        sums[j] = sums.get(j, Fraction(0)) + v
    nonzero = {j: v for j, v in sums.items() if v}
    if nonzero:
        j = min(nonzero)
        raise SupportError(f"deck average is nonzero: orbit of quotient cell {j} sums to {nonzero[j]}")

    candidates = sorted({shift(s, t, -1) for s in weights.support for _, t in omega.support})
    terms = []
    for g in candidates:
        potential = CoverCochain(omega.degree, {
            (j, t): weights(shift(t, g)) * v for (j, t), v in omega.coefficients.items()
        })
        term = potential - potential.translated(g)
        if term.is_zero():
            continue
        terms.append(CertificateTerm(translation=g, potential=potential, term=term))
    radius = max([omega.radius()] + [entry.term.radius() for entry in terms])
    certificate = KernelCertificate(cochain=omega, terms=tuple(terms), radius=radius)
    logger.debug(f"Kernel certificate with {len(terms)} terms, support radius {radius}")
    return certificate
