"""Versioned structured-output documents.

Every machine-readable result is a single JSON document wrapped in the
same envelope: a schema tag, the producing command, and the payload.
Documents are emitted with sorted keys so byte-identical reruns stay
byte-identical, and ``parse`` round-trips them for use as test fixtures.
"""

from __future__ import annotations

import json

SCHEMA = "hyptile-report/1"


def wrap(command: str, payload: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "result": payload}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise ValueError(
            f"not a {SCHEMA} document (schema={doc.get('schema') if isinstance(doc, dict) else None!r})"
        )
    return doc
