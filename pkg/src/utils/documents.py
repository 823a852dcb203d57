"""Loading JSON description documents into pydantic schemas."""

import json
from pathlib import Path
from typing import Any, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from src.errors import DescriptionError
from src.utils.logging import get_logger

logger = get_logger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def read_json(source: Union[str, Path], text: str = None) -> Any:
    """Parse JSON text (read from ``source`` when ``text`` is None)."""
    source = str(source)
    if text is None:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise DescriptionError(source, f"cannot read file: {e.strerror or e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptionError(source, e.msg, line=e.lineno, column=e.colno) from e


def validate_document(source: str, payload: Any, model: Type[ModelT]) -> ModelT:
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error.get("loc", ()))
        raise DescriptionError(source, error.get("msg", "invalid document"), field=field or None) from e


def load_document(source: Union[str, Path], model: Type[ModelT], text: str = None) -> ModelT:
    """Read and validate a description document; errors carry line/field."""
    payload = read_json(source, text)
    document = validate_document(str(source), payload, model)
    logger.debug(f"Loaded {model.__name__} from {source}")
    return document
