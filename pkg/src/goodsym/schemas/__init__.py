"""JSON Schema for every input and report format, bundled as ``goodsym.schema.json``."""
import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def schema_document() -> dict:
    return json.loads(resources.files(__name__).joinpath("goodsym.schema.json").read_text())


def schema_for(name: str) -> dict:
    """Schema for one definition, e.g. ``schema_for("snp_report")``; refs resolve inside the document."""
    doc = schema_document()
    if name not in doc["$defs"]:
        raise KeyError(name)
    return {"$schema": doc["$schema"], "$defs": doc["$defs"], "$ref": f"#/$defs/{name}"}


def validate(instance, name: str) -> None:
    import jsonschema
    jsonschema.validate(instance, schema_for(name))
