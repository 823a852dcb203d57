"""Cohomology-level maps and exactness certificates for long exact sequences.

A sequence is given by three subcomplex views A, B, C and cochain-level
maps f: A -> B, g: B -> C and a connecting map δ: C^p -> A^{p+1}. Each map
is a function from ambient cocycle columns to ambient columns of its
target. Exactness at a node X with incoming map u and outgoing map v is
certified by

  - v∘u sending every class to zero, witnessed by exact primitives, and
  - rank u* + rank v* = dim H(X).
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.linalg import exact
from src.utils.logging import get_logger

from .cells import CellComplex
from .cohomology import cohomology_basis, cohomology_rank
from .subspace import GradedSubspace

logger = get_logger(__name__)

ColumnMap = Callable[[int, DomainMatrix], DomainMatrix]


@dataclass(frozen=True, eq=False)
class ChainView:
    """A d-closed subcomplex seen as a cochain complex in its own right."""

    subspace: GradedSubspace
    label: str = ""
    _cache: Dict[Tuple[str, int], object] = field(default_factory=dict, repr=False)

    @property
    def complex(self) -> CellComplex:
        return self.subspace.complex

    @property
    def name(self) -> str:
        return self.label or self.subspace.name

    def in_range(self, p: int) -> bool:
        return 0 <= p <= self.complex.dimension

    def rank(self, p: int) -> int:
        if not self.in_range(p):
            return 0
        key = ("rank", p)
        if key not in self._cache:
            self._cache[key] = cohomology_rank(self.complex, p, self.subspace)
        return self._cache[key]

    def ranks(self) -> List[int]:
        return [self.rank(p) for p in range(self.complex.dimension + 1)]

    def representatives(self, p: int) -> DomainMatrix:
        if not self.in_range(p):
            return exact.zeros(self.complex.count(p), 0)
        key = ("reps", p)
        if key not in self._cache:
            self._cache[key] = cohomology_basis(self.complex, p, self.subspace)
        return self._cache[key]

    def coboundaries(self, p: int) -> DomainMatrix:
        """Spanning columns of d(S_{p-1}) in degree p."""
        key = ("bd", p)
        if key not in self._cache:
            self._cache[key] = exact.matmul(self.complex.d(p - 1), self.subspace.basis(p - 1))
        return self._cache[key]

    def are_cocycles(self, p: int, columns: DomainMatrix) -> bool:
        if columns.shape[1] == 0:
            return True
        if not self.in_range(p):
            return exact.is_zero(columns)
        closed = exact.is_zero(exact.matmul(self.complex.d(p), columns))
        return closed and exact.in_span(self.subspace.basis(p), columns)


@dataclass(frozen=True, eq=False)
class LinkMap:
    """Cochain map (shift 0) or connecting map (shift 1) between views."""

    name: str
    source: ChainView
    target: ChainView
    apply: ColumnMap
    shift: int = 0

    def image(self, p: int) -> DomainMatrix:
        q = p + self.shift
        if not self.source.in_range(p) or not self.target.in_range(q):
            return exact.zeros(self.target.complex.count(q), 0)
        return self.apply(p, self.source.representatives(p))

    def rank(self, p: int) -> int:
        q = p + self.shift
        if not self.source.in_range(p) or not self.target.in_range(q):
            return 0
        image = self.image(p)
        boundaries = self.target.coboundaries(q)
        n = self.target.complex.count(q)
        return exact.rank(exact.hstack([image, boundaries], n)) - exact.rank(boundaries)

    def well_defined(self, p: int) -> bool:
        """Representative cocycles land on cocycles of the target view."""
        q = p + self.shift
        if not self.source.in_range(p) or not self.target.in_range(q):
            return True
        return self.target.are_cocycles(q, self.image(p))


@dataclass(frozen=True)
class NodeCheck:
    node: str
    degree: int
    dimension: int
    incoming_rank: int
    outgoing_rank: int
    composite_zero: bool
    maps_well_defined: bool
    witness: Optional[str] = None

    @property
    def exact(self) -> bool:
        return (
            self.composite_zero
            and self.maps_well_defined
            and self.incoming_rank + self.outgoing_rank == self.dimension
        )


def _composite_zero(incoming: LinkMap, p_in: int, outgoing: LinkMap, q: int) -> Tuple[bool, Optional[str]]:
    if not incoming.source.in_range(p_in) or not outgoing.target.in_range(q + outgoing.shift):
        return True, None
    image = incoming.image(p_in)
    if image.shape[1] == 0:
        return True, None
    composite = outgoing.apply(q, image)
    r = q + outgoing.shift
    _, failed = exact.solve_many(outgoing.target.coboundaries(r), composite)
    if failed is None:
        return True, None
    return False, (
        f"class {failed} of H^{p_in}({incoming.source.name}) survives "
        f"{outgoing.name}∘{incoming.name} in H^{r}({outgoing.target.name})"
    )


def verify_node(view: ChainView, q: int, incoming: Optional[LinkMap], p_in: int,
                outgoing: Optional[LinkMap]) -> NodeCheck:
    in_rank = incoming.rank(p_in) if incoming else 0
    out_rank = outgoing.rank(q) if outgoing else 0
    composite_zero, witness = True, None
    if incoming and outgoing:
        composite_zero, witness = _composite_zero(incoming, p_in, outgoing, q)
    well_defined = (incoming.well_defined(p_in) if incoming else True) and (
        outgoing.well_defined(q) if outgoing else True
    )
    dimension = view.rank(q)
    node = NodeCheck(
        node=f"H^{q}({view.name})",
        degree=q,
        dimension=dimension,
        incoming_rank=in_rank,
        outgoing_rank=out_rank,
        composite_zero=composite_zero,
        maps_well_defined=well_defined,
        witness=witness,
    )
    if not node.exact:
        logger.warning(
            f"Exactness fails at {node.node}: in {in_rank} + out {out_rank} vs dim {dimension}"
            + (f" ({witness})" if witness else "")
        )
    return node


@dataclass(frozen=True)
class LongExactSequence:
    nodes: Tuple[NodeCheck, ...]
    top: int

    @property
    def exact(self) -> bool:
        return all(node.exact for node in self.nodes)

    @property
    def alternating_sum(self) -> int:
        return sum((-1) ** k * node.dimension for k, node in enumerate(self.nodes))

    def node(self, name: str) -> NodeCheck:
        for node in self.nodes:
            if node.node == name:
                return node
        raise KeyError(name)


def long_exact_sequence(A: ChainView, B: ChainView, C: ChainView,
                        f: LinkMap, g: LinkMap, delta: LinkMap, top: int) -> LongExactSequence:
    """Certify … → H^p(A) → H^p(B) → H^p(C) → H^{p+1}(A) → … for p ≤ top."""
    nodes: List[NodeCheck] = []
    for p in range(top + 1):
        nodes.append(verify_node(A, p, delta if p > 0 else None, p - 1, f))
        nodes.append(verify_node(B, p, f, p, g))
        nodes.append(verify_node(C, p, g, p, delta))
    sequence = LongExactSequence(nodes=tuple(nodes), top=top)
    logger.debug(f"Long exact sequence over degrees 0..{top}: exact={sequence.exact}")
    return sequence
