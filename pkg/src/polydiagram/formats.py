"""Presentation-layer encoding of exact rationals and tabular documents.

Exactness lives in the library; this module only renders.  JSON carries
rationals as {"num": ..., "den": ...} decimal strings so arbitrarily large
values survive any JSON reader; CSV and markdown carry "num/den" text plus
a rounded decimal column.  Decimal rendering rounds half to even at the
configured number of places, trims trailing zeros, and always uses '.' as
the decimal point, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

__all__ = [
    "DEFAULT_DIGITS",
    "format_rational",
    "format_decimal",
    "rational_to_json",
    "rational_from_json",
    "csv_document",
    "markdown_document",
    "json_document",
]

DEFAULT_DIGITS = 4


def format_rational(value: Fraction) -> str:
    """Render as num/den with the denominator always explicit, e.g. '6/1'."""
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    """Round to `digits` decimal places (half to even) and trim trailing zeros."""
    if digits < 0:
        raise ValueError(f"digits must be non-negative, got {digits}")
    scaled = round(value * 10**digits)  # Fraction rounding ties to even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    text = f"{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")
    return sign + text


def rational_to_json(value: Fraction) -> dict[str, str]:
    """Encode a rational as {"num": ..., "den": ...} decimal strings."""
    return {"num": str(value.numerator), "den": str(value.denominator)}


def rational_from_json(obj: object) -> Fraction:
    """Decode a {"num": ..., "den": ...} object back into a reduced Fraction."""
    try:
        num = int(obj["num"])  # type: ignore[index]
        den = int(obj["den"])  # type: ignore[index]
    except (TypeError, KeyError, ValueError) as exc:
        raise ValueError(f"not a rational object: {obj!r}") from exc
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    return Fraction(num, den)


def csv_document(headers: list[str], rows: list[list[str]]) -> str:
    """One CSV table with a header row and '\\n' line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def markdown_document(headers: list[str], rows: list[list[str]]) -> str:
    """One markdown pipe table."""
    lines = [
        "| " + " | ".join(headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def json_document(payload: dict) -> str:
    """Stable two-space-indented JSON document (insertion key order)."""
    return json.dumps(payload, indent=2) + "\n"
