"""The JSON interchange format for ensembles.

A document declares the ring once, then lists the scale and the
coordinate vectors:

    {"ring": "integers", "scale": 3, "vectors": [[1, 1, 1], [1, -1, -1]]}
    {"ring": {"k": 5}, "scale": [10, 2], "vectors": [[[0, 0], [2, 0], [1, 1]], ...]}

Over a quadratic ring each coordinate is either a plain integer
(embedded as z1 = 0) or a [z0, z1] pair.  Parsing failures carry the
offending line/field so hand-written files are easy to repair.
"""

from __future__ import annotations

import json

from .ensemble import Ensemble, make_ensemble


class DocumentError(ValueError):
    """A document failed to parse or validate."""


def parse_document(text: str) -> Ensemble:
    """Parse a document into an ensemble, with field-precise diagnostics."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")

    ring = doc.get("ring", "integers")
    if ring == "integers":
        k = None
    elif (
        isinstance(ring, dict)
        and set(ring) == {"k"}
        and isinstance(ring["k"], int)
        and not isinstance(ring["k"], bool)
    ):
        k = ring["k"]
    else:
        raise DocumentError('ring: expected "integers" or {"k": <positive integer>}')

    if "scale" not in doc:
        raise DocumentError("scale: missing")
    if "vectors" not in doc:
        raise DocumentError("vectors: missing")
    vectors = doc["vectors"]
    if not isinstance(vectors, list) or not vectors:
        raise DocumentError("vectors: expected a nonempty list of coordinate arrays")
    for i, v in enumerate(vectors):
        if not isinstance(v, list) or not v:
            raise DocumentError(f"vectors[{i}]: expected a nonempty coordinate array")

    unknown = set(doc) - {"ring", "scale", "vectors"}
    if unknown:
        raise DocumentError(f"unknown fields: {', '.join(sorted(unknown))}")

    try:
        return make_ensemble(
            [[_coord(c) for c in v] for v in vectors], _coord(doc["scale"]), k=k
        )
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _coord(c):
    # JSON arrays arrive as lists; make_ensemble accepts ints and pairs
    if isinstance(c, list):
        return tuple(c) if len(c) == 2 else c
    return c


def document_of(ensemble: Ensemble) -> dict:
    """The document round-tripping to an equal ensemble."""
    k = ensemble.ring.k

    def render(s):
        return s.z0 if k is None else [s.z0, s.z1]

    return {
        "ring": "integers" if k is None else {"k": k},
        "scale": render(ensemble.scale),
        "vectors": [[render(c) for c in v] for v in ensemble.vectors],
    }


def format_document(ensemble: Ensemble) -> str:
    return json.dumps(document_of(ensemble), indent=2) + "\n"
