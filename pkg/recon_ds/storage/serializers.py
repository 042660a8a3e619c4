"""Serialization utilities for sequence files and JSON payloads."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List

from ..core.config import get_config
from ..core.exceptions import LengthMismatchError, ReconError
from ..models.sequence import BinSeq


def parse_sequences(text: str) -> List[BinSeq]:
    """
    Parse the line format: one bit string per line.

    Blank lines and lines starting with '#' are skipped. Every sequence
    must have the length of the first one.

    Args:
        text: File contents

    Returns:
        Sequences in file order
    """
    out: List[BinSeq] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        seq = BinSeq(line)
        if out and len(seq) != len(out[0]):
            raise LengthMismatchError(len(seq), len(out[0]))
        out.append(seq)
    return out


def format_sequences(seqs: Iterable[BinSeq]) -> str:
    return "".join(f"{s.bits}\n" for s in seqs)


def read_sequences(path) -> List[BinSeq]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ReconError(f"Cannot read sequences from {path}", e)
    return parse_sequences(text)


def write_sequences(path, seqs: Iterable[BinSeq]) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_sequences(seqs), encoding="utf-8")


def versioned(kind: str, payload: Any) -> Dict[str, Any]:
    """Wrap a payload with the schema tag and its kind."""
    return {"schema": get_config().schema, "kind": kind, "data": payload}


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic JSON text; key order is the insertion order."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def check_schema(document: Dict[str, Any]) -> Dict[str, Any]:
    """
    Validate the schema tag of a loaded document.

    Raises:
        ReconError: When the tag is missing or names another schema
    """
    schema = document.get("schema") if isinstance(document, dict) else None
    if schema != get_config().schema:
        raise ReconError(f"Unsupported document schema: {schema!r}")
    return document
