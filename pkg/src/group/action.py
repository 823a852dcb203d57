"""Cochain-level group actions, the average operator and the V^Γ ⊕ V_Γ split.

Convention: the stored map of an element γ is the left action
γ.ω = (γ⁻¹)*ω on cochains. ``act`` applies it directly; ``pullback``
applies the stored map of γ⁻¹, so pullback(γδ) = pullback(δ)∘pullback(γ).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.matrices import DomainMatrix

from src.complex import CellComplex, Cochain, GradedSubspace, apply_map
from src.complex.cohomology import cohomology_basis, coordinate_matrix
from src.errors import ActionValidationError, GroupError
from src.linalg import exact
from src.reports.models import DecompositionReport, InducedActionReport, check, fraction_matrix
from src.utils.logging import get_logger

from .finite import Element, FiniteGroup, FreeAbelianGroup, Group, check_signed_permutation, invert

logger = get_logger(__name__)

GroupRef = Union[int, str]


def signed_matrix(level: Sequence[Tuple[int, int]]) -> DomainMatrix:
    n = len(level)
    return exact.matrix((n, n), {(t, i): s for i, (t, s) in enumerate(level)})


@dataclass(frozen=True, eq=False)
class CochainAction:
    """A group acting on the cochains of a complex by signed permutations."""

    name: str
    complex: CellComplex
    group: Group
    generator_names: Tuple[str, ...]
    generator_maps: Tuple[Element, ...]
    _cache: Dict[object, object] = field(default_factory=dict, repr=False)

    @classmethod
    def from_generators(cls, K: CellComplex, generators: Mapping[str, Element], name: str = None,
                        order: Optional[int] = None, relations: Sequence[str] = (),
                        free: bool = False) -> "CochainAction":
        """Validate generator maps and synthesise the group they generate.

        Each map must be a signed permutation in every degree that commutes
        with the coboundary. With ``free`` the group is recorded as ℤⁿ on the
        generators and no closure is attempted.
        """
        counts = K.counts()
        names = tuple(generators)
        maps = tuple(tuple(tuple(tuple(e) for e in level) for level in generators[n]) for n in names)
        for gname, element in zip(names, maps):
            check_signed_permutation(element, counts, gname)
            for p in range(K.dimension):
                lhs = exact.matmul(signed_matrix(element[p + 1]), K.d(p))
                rhs = exact.matmul(K.d(p), signed_matrix(element[p]))
                if exact.entries(lhs) != exact.entries(rhs):
                    raise ActionValidationError(
                        f"generator '{gname}' does not commute with the coboundary in degree {p}",
                        degree=p,
                    )
        if free:
            group: Group = FreeAbelianGroup(rank=len(names))
        else:
            group = FiniteGroup.from_generators(names, maps, counts, order=order, relations=relations)
        action = cls(
            name=name or f"{K.name}/action",
            complex=K,
            group=group,
            generator_names=names,
            generator_maps=maps,
        )
        logger.info(
            f"Loaded action {action.name} on {K.name}: "
            + (f"group of order {group.order}" if group.finite else f"free abelian rank {group.rank}")
        )
        return action

    @property
    def finite(self) -> bool:
        return self.group.finite

    def require_finite(self, operation: str) -> FiniteGroup:
        if not self.group.finite:
            raise GroupError(f"{operation} needs a finite group; use the deck average for covers")
        return self.group

    def element(self, ref: GroupRef) -> Element:
        if self.group.finite:
            return self.group.elements[self.group.element_index(ref)]
        if isinstance(ref, str):
            inverse = ref.endswith("^-1")
            base = ref[:-3] if inverse else ref
            if base in self.generator_names:
                g = self.generator_maps[self.generator_names.index(base)]
                return invert(g) if inverse else g
        raise GroupError(f"unknown element {ref!r} of the free group on {self.generator_names}")

    def matrix(self, ref: GroupRef, p: int) -> DomainMatrix:
        key = ("matrix", ref, p)
        if key not in self._cache:
            self.complex.check_degree(p)
            self._cache[key] = signed_matrix(self.element(ref)[p])
        return self._cache[key]

    def element_refs(self) -> List[GroupRef]:
        if self.group.finite:
            return list(range(self.group.order))
        return list(self.generator_names)

    def inverse_ref(self, ref: GroupRef) -> GroupRef:
        if self.group.finite:
            return self.group.inverse(self.group.element_index(ref))
        return ref[:-3] if ref.endswith("^-1") else f"{ref}^-1"

    def generator_refs(self) -> List[GroupRef]:
        """Generators followed by their inverses."""
        refs = list(self.generator_names)
        return refs + [self.inverse_ref(r) for r in refs]

    def commutes_with_d(self, ref: GroupRef, p: int) -> bool:
        if p >= self.complex.dimension:
            return True
        K = self.complex
        lhs = exact.matmul(self.matrix(ref, p + 1), K.d(p))
        rhs = exact.matmul(K.d(p), self.matrix(ref, p))
        return exact.is_zero(exact.subtract(lhs, rhs))

    def average_matrix(self, p: int) -> DomainMatrix:
        key = ("average", p)
        if key not in self._cache:
            group = self.require_finite("average")
            n = self.complex.count(p)
            total = exact.zeros(n, n)
            for k in range(group.order):
                total = exact.add(total, self.matrix(k, p))
            self._cache[key] = exact.scale(total, Fraction(1, group.order))
        return self._cache[key]

    def invariant_basis(self, p: int) -> DomainMatrix:
        key = ("invariant", p)
        if key not in self._cache:
            n = self.complex.count(p)
            blocks = [exact.subtract(self.matrix(g, p), exact.identity(n)) for g in self.generator_names]
            self._cache[key] = exact.nullspace_basis(exact.vstack(blocks, n))
        return self._cache[key]

    def coinvariant_basis(self, p: int) -> DomainMatrix:
        key = ("coinvariant", p)
        if key not in self._cache:
            n = self.complex.count(p)
            blocks = [exact.subtract(exact.identity(n), self.matrix(g, p)) for g in self.generator_refs()]
            self._cache[key] = exact.column_basis(exact.hstack(blocks, n))
        return self._cache[key]

    def invariant_complex(self) -> GradedSubspace:
        key = "invariant-complex"
        if key not in self._cache:
            K = self.complex
            spans = [self.invariant_basis(p) for p in range(K.dimension + 1)]
            self._cache[key] = GradedSubspace.from_spanning(K, spans, name=f"{self.name}/invariant")
        return self._cache[key]

    def coinvariant_complex(self) -> GradedSubspace:
        key = "coinvariant-complex"
        if key not in self._cache:
            K = self.complex
            spans = [self.coinvariant_basis(p) for p in range(K.dimension + 1)]
            self._cache[key] = GradedSubspace.from_spanning(K, spans, name=f"{self.name}/coinvariant")
        return self._cache[key]

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "complex": self.complex.name,
            "group": self.group.to_dict(),
        }


def act(A: CochainAction, gamma: GroupRef, omega: Cochain) -> Cochain:
    """γ.ω, the stored action of γ."""
    omega.validate(A.complex)
    return apply_map(A.matrix(gamma, omega.degree), omega, omega.degree)


def pullback(A: CochainAction, gamma: GroupRef, omega: Cochain) -> Cochain:
    """γ*ω = γ⁻¹.ω."""
    return act(A, A.inverse_ref(gamma), omega)


def average(A: CochainAction, omega: Cochain) -> Cochain:
    """m(ω) = (1/|Γ|) Σ γ.ω."""
    omega.validate(A.complex)
    return apply_map(A.average_matrix(omega.degree), omega, omega.degree)


def invariant_subspace(A: CochainAction, p: int) -> DomainMatrix:
    """Basis of V^Γ in degree p: the joint kernel of γ − id over generators."""
    A.complex.check_degree(p)
    return A.invariant_basis(p)


def coinvariant_subspace(A: CochainAction, p: int) -> DomainMatrix:
    """Basis of V_Γ in degree p: the span of (id − γ) over generators and inverses."""
    A.complex.check_degree(p)
    return A.coinvariant_basis(p)


def split_check(A: CochainAction, p: int) -> DecompositionReport:
    """Certify V = V^Γ ⊕ V_Γ and ker m = V_Γ in degree p."""
    A.require_finite("split_check")
    K = A.complex
    K.check_degree(p)
    n = K.count(p)
    inv = A.invariant_basis(p)
    coinv = A.coinvariant_basis(p)
    M = A.average_matrix(p)
    kernel = exact.nullspace_basis(M)
    image = exact.column_basis(M)
    residual = exact.subtract(exact.identity(n), M)
    cross = exact.gram(inv, exact.identity(n), coinv)

    dim_inv, dim_coinv = inv.shape[1], coinv.shape[1]
    intersection = exact.intersection_dim(inv, coinv)
    stable = all(exact.in_span(coinv, exact.matmul(A.matrix(g, p), coinv)) for g in A.generator_refs())
    commuting = [g for g in A.generator_names if not A.commutes_with_d(g, p)]

    checks = [
        check("split.dimension_sum", dim_inv + dim_coinv == n,
              f"{dim_inv} + {dim_coinv} = {n}", witness=f"{dim_inv} + {dim_coinv} != {n}"),
        check("split.trivial_intersection", intersection == 0,
              witness=f"intersection has dimension {intersection}"),
        check("split.kernel_of_average_in_coinvariants", exact.in_span(coinv, kernel)),
        check("split.coinvariants_in_kernel_of_average", exact.is_zero(exact.matmul(M, coinv))),
        check("split.average_idempotent", exact.is_zero(exact.subtract(exact.matmul(M, M), M))),
        check("split.image_of_average_is_invariant",
              exact.in_span(inv, image) and exact.in_span(image, inv)),
        check("split.residual_in_coinvariants", exact.in_span(coinv, residual),
              "v − m(v) ∈ V_Γ for every basis cochain v"),
        check("split.coinvariants_stable", stable, "γ.V_Γ ⊆ V_Γ for generators and inverses"),
        check("split.orthogonal", exact.is_zero(cross), "V^Γ ⊥ V_Γ in the cellwise pairing"),
        check("split.complement_trivial",
              exact.rank(exact.hstack([inv, coinv], n)) == n, "(V^Γ ⊕ V_Γ)^⊥ = 0"),
        check("action.commutes_with_d", not commuting,
              witness=f"generator {commuting[0]}" if commuting else None),
    ]
    report = DecompositionReport(
        subject=A.name,
        decomposition="invariant+coinvariant",
        degree=p,
        ambient_dim=n,
        dims={"invariant": dim_inv, "coinvariant": dim_coinv, "intersection": intersection},
        pairings={"invariant.coinvariant": fraction_matrix(cross)},
        checks=checks,
    )
    if not report.passed:
        logger.warning(f"split_check failed for {A.name} in degree {p}: {[c.invariant for c in report.failures()]}")
    return report


@dataclass(frozen=True)
class InducedAction:
    """Action on H^p in the basis of ``representatives``, with fixed/coinvariant classes."""

    degree: int
    representatives: DomainMatrix
    matrices: Dict[str, DomainMatrix]
    invariant_classes: DomainMatrix
    coinvariant_classes: DomainMatrix

    @property
    def betti(self) -> int:
        return self.representatives.shape[1]

    @property
    def invariant_dim(self) -> int:
        return self.invariant_classes.shape[1]

    @property
    def coinvariant_dim(self) -> int:
        return self.coinvariant_classes.shape[1]


def induced_matrix(A: CochainAction, ref: GroupRef, p: int, reps: DomainMatrix) -> DomainMatrix:
    images = exact.matmul(A.matrix(ref, p), reps)
    return coordinate_matrix(A.complex, p, reps, images)


def induced_cohomology_action(A: CochainAction, p: int) -> InducedAction:
    """The action of Γ on H^p and its invariant and coinvariant class subspaces."""
    A.require_finite("induced_cohomology_action")
    K = A.complex
    K.check_degree(p)
    reps = cohomology_basis(K, p)
    b = reps.shape[1]
    matrices = {name: induced_matrix(A, name, p, reps) for name in A.generator_names}
    inverse_matrices = [induced_matrix(A, A.inverse_ref(name), p, reps) for name in A.generator_names]
    eye = exact.identity(b)
    invariant = exact.nullspace_basis(exact.vstack([exact.subtract(M, eye) for M in matrices.values()], b))
    coinvariant = exact.column_basis(exact.hstack(
        [exact.subtract(eye, M) for M in list(matrices.values()) + inverse_matrices], b
    ))
    return InducedAction(
        degree=p,
        representatives=reps,
        matrices=matrices,
        invariant_classes=invariant,
        coinvariant_classes=coinvariant,
    )


def induced_action_report(A: CochainAction, p: int) -> InducedActionReport:
    induced = induced_cohomology_action(A, p)
    overlap = exact.intersection_dim(induced.invariant_classes, induced.coinvariant_classes)
    checks = [
        check("induced.dimension_sum", induced.invariant_dim + induced.coinvariant_dim == induced.betti,
              f"{induced.invariant_dim} + {induced.coinvariant_dim} = {induced.betti}"),
        check("induced.trivial_intersection", overlap == 0,
              witness=f"intersection has dimension {overlap}"),
    ]
    return InducedActionReport(
        subject=A.name,
        degree=p,
        betti=induced.betti,
        generator_matrices={name: fraction_matrix(M) for name, M in induced.matrices.items()},
        invariant_dim=induced.invariant_dim,
        coinvariant_dim=induced.coinvariant_dim,
        checks=checks,
    )
