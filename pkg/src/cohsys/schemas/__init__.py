"""JSON schemas for the CLI's --json output."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

SCHEMA_VERSION = "v1"

# CLI verb (or output kind) -> definition name in the schema file
KINDS = {
    "dim": "dim",
    "decompose": "decompose",
    "range": "range_out",
    "classify": "verdict",
    "walls": "walls",
    "flips": "flips",
    "search": "search_wall",
    "search-report": "search_row",
    "segre": "segre",
}


@lru_cache(maxsize=None)
def root_schema() -> dict:
    text = resources.files(__package__).joinpath(f"cohsys.{SCHEMA_VERSION}.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _validator(kind: str):
    schema = dict(root_schema())
    schema["$ref"] = f"#/$defs/{KINDS[kind]}"
    return jsonschema.Draft202012Validator(schema)


def validate(kind: str, obj) -> None:
    """Raise jsonschema.ValidationError if obj is not valid output for kind."""
    _validator(kind).validate(obj)
