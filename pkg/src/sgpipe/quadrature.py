"""Gauss-Legendre quadrature on the unit radius with the disk weight r dr."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = ["DEFAULT_NODES", "gl_nodes", "disk_integral", "QuadratureError"]

DEFAULT_NODES = 200


class QuadratureError(RuntimeError):
    """Raised when node doubling fails to confirm convergence."""


@lru_cache(maxsize=16)
def gl_nodes(n: int):
    """Nodes and weights of n-point Gauss-Legendre on [0, 1]."""
    if n < 16:
        raise ValueError("at least 16 nodes required")
    x, w = np.polynomial.legendre.leggauss(int(n))
    return 0.5 * (x + 1.0), 0.5 * w


def disk_integral(values, n: int = DEFAULT_NODES):
    """Sum w_i r_i f(r_i) for samples f(r_i) on the n-point grid."""
    r, w = gl_nodes(n)
    values = np.asarray(values)
    if values.shape != r.shape:
        raise ValueError("values are not sampled on the requested grid")
    return complex(np.sum(w * r * values))
