"""Hashing utilities for report determinism."""

import hashlib
import json
from typing import Any, Union


def hash_content(content: Union[str, bytes]) -> str:
    """Generate SHA-256 hash of content."""
    if isinstance(content, str):
        content = content.encode("utf-8")

    return hashlib.sha256(content).hexdigest()


def canonical_json(payload: Any) -> str:
    """Serialise a JSON-compatible payload with sorted keys and fixed separators."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def report_digest(payload: Any) -> str:
    """Digest of a report body; identical scenarios give identical digests."""
    return hash_content(canonical_json(payload))
