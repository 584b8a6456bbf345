"""Generalized Reed-Muller weight toolkit: Python surface.

Thin wrappers over the compiled ``_core`` extension; structured results are
decoded from the same JSON wire formats the CLI emits.
"""

import json as _json
import os as _os

try:
    from . import _core as _c
except ImportError:  # in-tree build: extension lives in the CMake build dir
    _core_dir = _os.environ.get("GRMW_CORE_DIR")
    if not _core_dir:
        raise
    __path__.append(_core_dir)
    from . import _core as _c

GrmwError = _c.GrmwError


def weights(q, m, r):
    """Closed-form w1/w2/w3 record as a dict (w2 is None when uncovered)."""
    return _json.loads(_c.weights_json(q, m, r))


def n_points(q, m, sizes):
    """Points covered by a block arrangement with the given block sizes."""
    return _c.n_points(q, m, list(sizes))


def spectrum(q, m, r, shards=1, cap=-1, max_distinct=-1):
    """Exhaustive spectrum as a list of (weight, count) pairs, ascending."""
    rows = _c.spectrum_csv(q, m, r, shards, cap, max_distinct).splitlines()[1:]
    return [(int(w), int(c)) for w, c, _ in (row.split(",") for row in rows)]


def top3(q, m, d):
    """Top-three arrangement union counts as a list of row dicts."""
    lines = _c.top3_csv(q, m, d).splitlines()
    keys = lines[0].split(",")
    return [dict(zip(keys, row.split(","))) for row in lines[1:]]


def construct_third(q, m, a, b):
    """Exact third-weight witness: dict with ``poly`` (wire format), ``weight``."""
    return _json.loads(_c.construct_third_json(q, m, a, b))


def poly_weight(poly):
    """Weight of a polynomial given as a wire-format dict."""
    return _c.poly_weight(_json.dumps(poly))


def verify(suite="all", extended=False, threads=1):
    """Run a verification suite; returns the report dict."""
    return _json.loads(_c.verify_json(suite, extended, threads))


__all__ = [
    "GrmwError",
    "weights",
    "n_points",
    "spectrum",
    "top3",
    "construct_third",
    "poly_weight",
    "verify",
]
