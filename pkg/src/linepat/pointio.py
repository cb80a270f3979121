"""Point-set text format.

One point per line as two fields ``A B``, each an integer or a fraction
``p/q``.  Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from .geometry import CoeffPoint

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


class PointFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an integer or p/q fraction: {text!r}")
    value = Fraction(text)
    return value


def parse_point(text: str) -> CoeffPoint:
    """Parse the command-line literal ``"p/q,r/s"``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'A,B', got {text!r}")
    return CoeffPoint(parse_rational(parts[0]), parse_rational(parts[1]))


def read_points(stream: TextIO) -> list[CoeffPoint]:
    points: list[CoeffPoint] = []
    seen = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PointFormatError(lineno, f"expected two fields, got {len(fields)}")
        try:
            p = CoeffPoint(parse_rational(fields[0]), parse_rational(fields[1]))
        except ValueError as exc:
            raise PointFormatError(lineno, str(exc)) from None
        if p not in seen:
            seen.add(p)
            points.append(p)
    return points


def load_points(path: str | Path) -> list[CoeffPoint]:
    with open(path, encoding="utf-8") as fh:
        return read_points(fh)


def format_points(points: Iterable[CoeffPoint], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines.extend(f"{p.A} {p.B}" for p in points)
    return "\n".join(lines) + "\n"
