"""On-disk result cache: versioned JSON documents with atomic writes.

Files are content-addressed by (operation, parameters, schema version) in
their name and carry the schema version inline; a document whose version
does not match is recomputed, never migrated.  Writes go through a
temporary file in the target directory followed by os.replace, so
concurrent processes sharing a cache directory never observe partial
files.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .coeffs import SCHEMA_VERSION

ENV_CACHE_DIR = "KCYCLES_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "kcycles"


def document_path(cache_dir: Path, operation: str, params: str) -> Path:
    return Path(cache_dir) / f"{operation}-{params}.v{SCHEMA_VERSION}.json"


def canonical_json(obj) -> str:
    """The single byte-stable rendering used for files and stdout."""
    return json.dumps(obj, indent=2) + "\n"


def write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def load_document(path: Path) -> dict | None:
    """Parsed document, or None if absent or from another schema version."""
    path = Path(path)
    if not path.is_file():
        return None
    with open(path) as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError:
            return None
    if not isinstance(obj, dict) or obj.get("version") != SCHEMA_VERSION:
        return None
    return obj
