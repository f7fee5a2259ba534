"""On-disk table of symbolic polynomials, one JSON file per (m, n)."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Optional

from .csoperator import LabeledGegenbauer
from .formats import parse_json

ENV_VAR = "GGP_CACHE_DIR"


def default_dir() -> Optional[Path]:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def cache_path(directory: Path, m: int, n: int) -> Path:
    return Path(directory) / f"a2_m{m}_n{n}.json"


def write_atomic(path: Path, text: str) -> bool:
    """Write ``text`` via a temp file and rename; skip if identical. Returns True if written."""
    path = Path(path)
    data = text.encode()
    try:
        if path.read_bytes() == data:
            return False
    except FileNotFoundError:
        pass
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
    return True


def load(directory: Path, m: int, n: int) -> Optional[LabeledGegenbauer]:
    path = cache_path(directory, m, n)
    if not path.exists():
        return None
    return parse_json(path.read_text())
