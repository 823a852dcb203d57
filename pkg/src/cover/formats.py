"""JSON description format for periodic covers.

Either a cubical shortcut

    {"name": "slab", "cubical": {"deck_rank": 1, "period": 2, "widths": [3]}}

or the quotient with explicit lift data

    {
      "name": "line",
      "deck_rank": 1,
      "quotient": {<complex document>},
      "lifts": [{"e": [["v", [1], 1], ["v", [0], -1]]}],   one map per degree p >= 1
      "collar": [[0, "v"]],                                   optional, face-closed
      "contractible": true
    }

Lift entries are [face label, offset vector, sign]: the cover cell
(label, t) has sign·(face label, t + offset) in its boundary.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from src.complex.formats import ComplexDocument
from src.errors import CollarError, ComplexError, DescriptionError
from src.utils.documents import load_document
from src.utils.logging import get_logger

from .library import cubical_cover
from .periodic import PeriodicCover

logger = get_logger(__name__)


class CubicalSpec(BaseModel):
    deck_rank: int = Field(..., ge=1, le=3)
    period: int = Field(default=1, ge=1)
    widths: List[int] = Field(default_factory=list, max_length=2)


class CoverDocument(BaseModel):
    """Periodic cover description document."""
    name: str = Field(default="cover", min_length=1)
    description: str = ""
    cubical: Optional[CubicalSpec] = None
    deck_rank: Optional[int] = Field(default=None, ge=1)
    quotient: Optional[ComplexDocument] = None
    lifts: List[Dict[str, List[Tuple[str, List[int], int]]]] = Field(default_factory=list)
    collar: List[Tuple[int, str]] = Field(default_factory=list)
    contractible: bool = False

    @model_validator(mode="after")
    def one_source(self):
        if (self.cubical is None) == (self.quotient is None):
            raise ValueError("give exactly one of 'cubical' or 'quotient'")
        if self.quotient is not None and self.deck_rank is None:
            raise ValueError("'deck_rank' is required with an explicit quotient")
        return self

    def build(self) -> PeriodicCover:
        if self.cubical is not None:
            spec = self.cubical
            return cubical_cover(self.name, spec.deck_rank, period=spec.period, widths=spec.widths,
                                 contractible=self.contractible and not spec.widths,
                                 description=self.description)
        Q = self.quotient.build()
        if len(self.lifts) != Q.dimension:
            raise ComplexError(f"'lifts' needs one entry per degree from 1 to {Q.dimension}")
        labels = [{cell.label: cell.id for cell in level} for level in Q.cells]
        lifts = [tuple(() for _ in Q.cells[0])]
        for p in range(1, Q.dimension + 1):
            entries = self.lifts[p - 1]
            unknown = set(entries) - set(labels[p])
            if unknown:
                raise ComplexError(f"degree {p} lifts name unknown cell '{sorted(unknown)[0]}'")
            level = []
            for cell in Q.cells[p]:
                row = []
                for face, offset, sign in entries.get(cell.label, []):
                    if face not in labels[p - 1]:
                        raise ComplexError(f"cell '{cell.label}' lifts to unknown face '{face}'")
                    row.append((labels[p - 1][face], tuple(offset), sign))
                level.append(tuple(row))
            lifts.append(tuple(level))
        collar = set()
        for p, label in self.collar:
            if not 0 <= p <= Q.dimension or label not in labels[p]:
                raise CollarError(f"collar names unknown degree-{p} cell '{label}'")
            collar.add((p, labels[p][label]))
        return PeriodicCover(
            name=self.name,
            quotient=Q,
            deck_rank=self.deck_rank,
            lifts=tuple(lifts),
            quotient_collar=frozenset(collar),
            contractible=self.contractible,
            description=self.description,
        )


def load_cover(source: Union[str, Path], text: str = None) -> PeriodicCover:
    """Load a cover description; structural failures become DescriptionErrors."""
    document = load_document(source, CoverDocument, text)
    try:
        cover = document.build()
    except (ComplexError, CollarError) as e:
        raise DescriptionError(str(source), str(e)) from e
    logger.info(f"Loaded cover {cover.name}: deck rank {cover.deck_rank}, quotient {cover.quotient.counts()}")
    return cover
