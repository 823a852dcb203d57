"""Diagonal cellwise inner products on cochains and the weight file format.

Weight file:

    {"name": "weighted", "weights": {"1": {"0": "2", "3": "1/2"}}}

Keys are degree, then cell id; cells not listed keep weight 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from pydantic import BaseModel, Field
from sympy.polys.matrices import DomainMatrix

from src.complex import CellComplex, Cochain
from src.errors import DescriptionError, InnerProductError
from src.linalg import exact
from src.utils.documents import load_document
from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class InnerProductSpace:
    """⟨a, b⟩_p = Σ_i w_p[i] a_i b_i on p-cochains."""

    complex: CellComplex
    weights: Tuple[Tuple[Fraction, ...], ...]
    name: str = "cellwise"
    _cache: Dict[object, DomainMatrix] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        K = self.complex
        if len(self.weights) != K.dimension + 1:
            raise InnerProductError(f"{self.name}: weights needed for {K.dimension + 1} degrees")
        for p, level in enumerate(self.weights):
            if len(level) != K.count(p):
                raise InnerProductError(f"{self.name}: degree {p} has {len(level)} weights for {K.count(p)} cells")
            bad = [i for i, w in enumerate(level) if w <= 0]
            if bad:
                raise InnerProductError(
                    f"{self.name}: weight {level[bad[0]]} of degree-{p} cell {bad[0]} is not positive"
                )

    @classmethod
    def default(cls, K: CellComplex) -> "InnerProductSpace":
        return cls(K, tuple(tuple(Fraction(1) for _ in cells) for cells in K.cells), name="cellwise")

    @classmethod
    def from_weights(cls, K: CellComplex, weights: Dict[int, Dict[int, Fraction]], name: str = "weighted") -> "InnerProductSpace":
        for p, level in weights.items():
            if not 0 <= p <= K.dimension:
                raise InnerProductError(f"{name}: no degree {p} in {K.name}")
            unknown = [i for i in level if not 0 <= i < K.count(p)]
            if unknown:
                raise InnerProductError(f"{name}: no degree-{p} cell {unknown[0]} in {K.name}")
        table = tuple(
            tuple(Fraction(weights.get(p, {}).get(i, 1)) for i in range(K.count(p)))
            for p in range(K.dimension + 1)
        )
        return cls(K, table, name=name)

    @property
    def is_standard(self) -> bool:
        return all(w == 1 for level in self.weights for w in level)

    def gram(self, p: int) -> DomainMatrix:
        key = ("gram", p)
        if key not in self._cache:
            n = self.complex.count(p)
            level = self.weights[p] if 0 <= p <= self.complex.dimension else ()
            self._cache[key] = exact.matrix((n, n), {(i, i): w for i, w in enumerate(level)})
        return self._cache[key]

    def inverse_gram(self, p: int) -> DomainMatrix:
        key = ("inverse", p)
        if key not in self._cache:
            n = self.complex.count(p)
            level = self.weights[p] if 0 <= p <= self.complex.dimension else ()
            self._cache[key] = exact.matrix((n, n), {(i, i): 1 / w for i, w in enumerate(level)})
        return self._cache[key]

    def pair(self, a: Cochain, b: Cochain) -> Fraction:
        if a.degree != b.degree:
            raise InnerProductError(f"cannot pair degrees {a.degree} and {b.degree}")
        level = self.weights[a.degree]
        return sum((level[i] * v * b[i] for i, v in a.coefficients.items()), Fraction(0))

    def cross_gram(self, p: int, left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
        return exact.gram(left, self.gram(p), right)

    def preservation_failure(self, action) -> Optional[str]:
        """Witness that some generator moves a cell to one of different weight."""
        if action.complex is not self.complex and action.complex != self.complex:
            return f"action lives on {action.complex.name}, pairing on {self.complex.name}"
        for name, element in zip(action.generator_names, action.generator_maps):
            for p, level in enumerate(element):
                for i, (t, _) in enumerate(level):
                    if self.weights[p][i] != self.weights[p][t]:
                        return (
                            f"generator '{name}' sends degree-{p} cell {i} (weight {self.weights[p][i]}) "
                            f"to cell {t} (weight {self.weights[p][t]})"
                        )
        return None

    def require_preserved(self, action):
        failure = self.preservation_failure(action)
        if failure:
            raise InnerProductError(f"{self.name} is not preserved by {action.name}: {failure}")


class WeightDocument(BaseModel):
    """Diagonal weight file."""
    name: str = Field(default="weighted", min_length=1)
    weights: Dict[int, Dict[int, Union[int, str]]] = Field(default_factory=dict)


def load_weights(source: Union[str, Path], K: CellComplex, action=None, text: str = None) -> InnerProductSpace:
    """Load a weight file; with an action, its invariance is checked here."""
    document = load_document(source, WeightDocument, text)
    try:
        table = {
            p: {i: Fraction(str(w)) for i, w in level.items()}
            for p, level in document.weights.items()
        }
    except (ValueError, ZeroDivisionError) as e:
        raise DescriptionError(str(source), f"bad weight: {e}", field="weights") from e
    ip = InnerProductSpace.from_weights(K, table, name=document.name)
    if action is not None:
        ip.require_preserved(action)
    logger.info(f"Loaded pairing {ip.name} on {K.name}")
    return ip
