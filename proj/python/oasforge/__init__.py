# SPDX-License-Identifier: Apache-2.0
"""Generate OpenAPI 3 descriptions from Spring Boot source trees and score them."""

from __future__ import annotations

import json
import os
from typing import Any, Iterable

from . import _core
from ._core import GroundTruthError, InputError, MergeConflict, normalize_path, split_path_pattern

__all__ = [
    "GroundTruthError",
    "InputError",
    "MergeConflict",
    "evaluate",
    "flatten",
    "generate",
    "generate_documents",
    "merge",
    "normalize_path",
    "serialize",
    "split_path_pattern",
]


def generate(
    source_root: str | os.PathLike[str],
    profiles: Iterable[str] = (),
    merge: bool = False,
    format: str = "json",
) -> dict[str, Any]:
    """Analyze a project. Documents come back as text keyed by profile."""
    return _core.generate(os.fspath(source_root), list(profiles), merge, format)


def generate_documents(source_root: str | os.PathLike[str], profiles: Iterable[str] = ()) -> dict[str, dict]:
    """Like generate, with every description parsed into a dict."""
    result = generate(source_root, profiles)
    return {profile: json.loads(text) for profile, text in result["documents"].items()}


def merge(documents: Iterable[dict | str], format: str = "json") -> str:
    texts = [d if isinstance(d, str) else json.dumps(d) for d in documents]
    return _core.merge(texts, format)


def evaluate(description: dict | str, ground_truth: dict | str, label: str = "") -> dict:
    """Precision/recall report for one description, as a dict."""
    desc = description if isinstance(description, str) else json.dumps(description)
    gt = ground_truth if isinstance(ground_truth, str) else json.dumps(ground_truth)
    return json.loads(_core.evaluate(desc, gt, label))


def flatten(description: dict | str) -> dict:
    desc = description if isinstance(description, str) else json.dumps(description)
    return json.loads(_core.flatten(desc))


def serialize(description: dict | str, format: str = "json") -> str:
    desc = description if isinstance(description, str) else json.dumps(description)
    return _core.serialize(desc, format)

