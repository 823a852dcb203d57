"""JSON description format for actions.

    {
      "name": "swap",
      "order": 2,                      optional, checked
      "relations": ["s^2"],            optional, checked
      "generators": {
        "s": {"vertex_map": {"0": 1, "1": 0}}                       simplicial only
        "t": {"cells": [[[source, target, sign], ...], ...]}        one list per degree
      }
    }
"""

from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from src.complex import CellComplex
from src.errors import ActionValidationError, DescriptionError
from src.utils.documents import load_document

from .action import CochainAction
from .library import vertex_map_element


class GeneratorSpec(BaseModel):
    vertex_map: Optional[Dict[int, int]] = None
    cells: Optional[List[List[List[int]]]] = None

    @model_validator(mode="after")
    def one_form(self):
        if (self.vertex_map is None) == (self.cells is None):
            raise ValueError("give exactly one of 'vertex_map' or 'cells'")
        for level in self.cells or []:
            for entry in level:
                if len(entry) != 3:
                    raise ValueError("cell entries are [source, target, sign]")
        return self


class ActionDocument(BaseModel):
    """Action description document."""
    name: str = Field(default="action", min_length=1)
    complex: Optional[str] = None
    order: Optional[int] = Field(default=None, ge=1)
    relations: List[str] = Field(default_factory=list)
    generators: Dict[str, GeneratorSpec] = Field(..., min_length=1)

    def build(self, K: CellComplex) -> CochainAction:
        maps = {}
        for name, spec in self.generators.items():
            if spec.vertex_map is not None:
                maps[name] = vertex_map_element(K, spec.vertex_map)
                continue
            if len(spec.cells) != K.dimension + 1:
                raise ActionValidationError(
                    f"generator '{name}' lists {len(spec.cells)} degrees, complex has {K.dimension + 1}"
                )
            levels = []
            for p, level in enumerate(spec.cells):
                images = {}
                for source, target, sign in level:
                    if source in images:
                        raise ActionValidationError(
                            f"generator '{name}' maps degree-{p} cell {source} twice", degree=p
                        )
                    images[source] = (target, sign)
                if sorted(images) != list(range(K.count(p))):
                    raise ActionValidationError(
                        f"generator '{name}' must map every degree-{p} cell exactly once", degree=p
                    )
                levels.append(tuple(images[i] for i in range(K.count(p))))
            maps[name] = tuple(levels)
        return CochainAction.from_generators(
            K, maps, name=self.name, order=self.order, relations=self.relations
        )


def load_action(source: Union[str, Path], K: CellComplex, text: str = None) -> CochainAction:
    """Load an action description against a complex."""
    document = load_document(source, ActionDocument, text)
    if document.complex and document.complex != K.name:
        raise DescriptionError(str(source), f"action is for complex '{document.complex}', got '{K.name}'",
                               field="complex")
    return document.build(K)
