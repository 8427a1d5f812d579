"""JSON and CSV encodings for matrices, tables and spectra."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def matrix_to_json(m) -> dict:
    """{"dim": d, "entries": [[re, im], ...]} in row-major order."""
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if dim < 1 or len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for dim {dim}, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(dim, dim)


def _fraction(x: float) -> str:
    fr = Fraction(x).limit_denominator(64)
    if abs(float(fr) - x) > 1e-12:
        return repr(x)
    return str(fr)


def format_scalar(z: complex) -> str:
    """Short exact-looking form for small rationals, e.g. ``1/2``, ``-1/4i``, ``1/2+1/2i``."""
    z = complex(z)
    re, im = z.real, z.imag
    if abs(im) < 1e-15:
        return _fraction(re)
    if abs(re) < 1e-15:
        return f"{_fraction(im)}i"
    sign = "+" if im >= 0 else "-"
    return f"{_fraction(re)}{sign}{_fraction(abs(im))}i"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def format_float(x: float) -> str:
    """Shortest repr that round-trips, with -0.0 folded to 0.0."""
    return repr(float(x) + 0.0)
