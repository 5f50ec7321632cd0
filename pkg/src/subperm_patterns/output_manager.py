"""Rendering of tables and documents for the CLI.

CSV is RFC 4180 with a header row and CRLF line ends; JSON is one object
carrying ``schema_version``; b-files are ``n value`` lines.
"""

import json
import logging
import sys
from typing import Any, Dict, Iterable, Optional, TextIO

import pandas as pd

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CSV_LINE_TERMINATOR = "\r\n"
DEFAULT_FLOAT_DIGITS = 12


def frame_to_csv(frame: pd.DataFrame, float_digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    return frame.to_csv(
        index=False,
        lineterminator=CSV_LINE_TERMINATOR,
        float_format=f"%.{float_digits}g",
    )


def json_document(payload: Dict[str, Any]) -> str:
    """Wraps ``payload`` in a single versioned object with sorted keys."""
    document = {"schema_version": SCHEMA_VERSION}
    document.update(payload)
    return json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True, default=str) + "\n"


def frame_to_json(frame: pd.DataFrame, key: str = "rows") -> str:
    # to_json round-trips floats through its own formatter; keep Python's repr
    records = [
        {column: _plain(value) for column, value in row.items()}
        for row in frame.to_dict(orient="records")
    ]
    return json_document({"columns": list(frame.columns), key: records})


def _plain(value: Any) -> Any:
    if hasattr(value, "item"):
        return value.item()
    return value


def bfile_text(lines: Iterable[str]) -> str:
    return "".join(f"{line}\n" for line in lines)


def render_frame(frame: pd.DataFrame, fmt: str, float_digits: int = DEFAULT_FLOAT_DIGITS) -> str:
    """``csv`` or ``json`` rendering of a result table."""
    if fmt == "csv":
        return frame_to_csv(frame, float_digits)
    if fmt == "json":
        return frame_to_json(frame)
    raise ValueError(f"unknown output format '{fmt}'")


def emit(text: str, path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Writes to ``path`` when given, else to ``stream`` (stdout by default)."""
    if path:
        # newline="" keeps the CRLF of CSV output unchanged
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {len(text)} characters to '{path}'")
        return
    (stream or sys.stdout).write(text)
