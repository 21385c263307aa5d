"""Affine solution sets of sparse polynomial systems."""

import json

from ._core import ParseError, adjacent_minors, bench_scaling, initial_form
from ._core import decompose_json as _decompose_json

__all__ = ["ParseError", "adjacent_minors", "bench_scaling", "decompose", "initial_form"]


def decompose(text, *, pure=False, max_codim=None, greedy=False, threads=1, degrees=True, timing=False):
    """Decompose a system given in the text format; returns the JSON report as a dict."""
    return json.loads(_decompose_json(text, pure, max_codim, greedy, threads, degrees, timing))
