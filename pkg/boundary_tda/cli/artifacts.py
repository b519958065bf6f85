"""Atomic artifact writing."""

from __future__ import annotations

import contextlib
import os
from pathlib import Path
import tempfile
from typing import TYPE_CHECKING

from boundary_tda.const import LOGGER

if TYPE_CHECKING:
    from collections.abc import Mapping


def atomic_write_text(path: Path, text: str) -> None:
    """
    Write text to path via a temporary file in the same directory and a rename.

    Readers never observe a partially written file.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        Path(tmp_name).replace(path)
    except BaseException:
        with contextlib.suppress(FileNotFoundError):
            Path(tmp_name).unlink()
        raise
    LOGGER.debug("Wrote %s (%d bytes)", path, len(text.encode("utf-8")))


def write_artifacts(artifacts: Mapping[Path, str]) -> None:
    """Write every artifact atomically, in sorted path order."""
    for path in sorted(artifacts):
        atomic_write_text(path, artifacts[path])
