"""JSON description format for complexes.

A document gives exactly one of:

  simplices  list of top simplices (vertex id lists); closure and
             orientation are computed.
  grid       {"shape": [...], "periodic": [...]} cubical grid.
  cells      list per degree of cell labels, together with
             boundary  list per degree p >= 1 of {cell label: {face label: coefficient}}.
"""

from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from src.errors import ComplexError, DescriptionError
from src.utils.documents import load_document

from .cells import CellComplex, build_complex
from .library import cubical_grid, simplicial_complex


class GridSpec(BaseModel):
    shape: List[int] = Field(..., min_length=1, max_length=4)
    periodic: Optional[List[bool]] = None


class ComplexDocument(BaseModel):
    """Complex description document."""
    name: str = Field(default="complex", min_length=1)
    orientation: str = Field(default="cellular", pattern="^(simplicial|cubical|cellular)$")
    simplices: Optional[List[List[int]]] = None
    grid: Optional[GridSpec] = None
    cells: Optional[List[List[str]]] = None
    boundary: List[Dict[str, Dict[str, int]]] = Field(default_factory=list)

    @model_validator(mode="after")
    def one_source(self):
        given = [k for k in ("simplices", "grid", "cells") if getattr(self, k) is not None]
        if len(given) != 1:
            raise ValueError("give exactly one of 'simplices', 'grid' or 'cells'")
        if self.cells is not None and len(self.boundary) != len(self.cells) - 1:
            raise ValueError("'boundary' needs one entry per degree from 1 to the top degree")
        return self

    def build(self) -> CellComplex:
        if self.simplices is not None:
            return simplicial_complex(self.name, self.simplices)
        if self.grid is not None:
            return cubical_grid(self.grid.shape, self.grid.periodic, name=self.name)
        keys = [list(level) for level in self.cells]
        for p, level in enumerate(keys):
            if len(set(level)) != len(level):
                raise ComplexError(f"duplicate cell label in degree {p}")
        faces = [[() for _ in keys[0]]]
        for p in range(1, len(keys)):
            lookup = {label: i for i, label in enumerate(keys[p - 1])}
            entries = self.boundary[p - 1]
            unknown = set(entries) - set(keys[p])
            if unknown:
                raise ComplexError(f"degree {p} boundary names unknown cell '{sorted(unknown)[0]}'")
            level_faces = []
            for label in keys[p]:
                row = []
                for face, coefficient in entries.get(label, {}).items():
                    if face not in lookup:
                        raise ComplexError(f"cell '{label}' has unknown face '{face}'")
                    if coefficient:
                        row.append((lookup[face], coefficient))
                level_faces.append(tuple(sorted(row)))
            faces.append(level_faces)
        return build_complex(self.name, self.orientation, keys, faces)


def load_complex(source: Union[str, Path], text: str = None) -> CellComplex:
    """Load a complex description; every failure is a DescriptionError."""
    document = load_document(source, ComplexDocument, text)
    try:
        return document.build()
    except ComplexError as e:
        raise DescriptionError(str(source), str(e)) from e
