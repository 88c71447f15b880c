"""Gauss-Legendre rules and composite panel helpers."""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1] (read-only arrays)."""
    x, w = np.polynomial.legendre.leggauss(order)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def panel_rule(edges, order: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """Composite rule over consecutive breakpoints ``edges``."""
    edges = np.asarray(edges, dtype=float)
    x, w = gauss_legendre(order)
    a, b = edges[:-1, None], edges[1:, None]
    half = 0.5 * (b - a)
    nodes = (0.5 * (a + b) + half * x).ravel()
    weights = (half * w).ravel()
    return nodes, weights


def geometric_edges(a: float, b: float, t_min: float, ratio: float = 4.0) -> np.ndarray:
    """Breakpoints on [a, b] graded geometrically toward ``a``.

    The first panel is [a, a + t_min]; consecutive panel lengths grow by ``ratio``
    until they reach the other end.
    """
    length = b - a
    offsets = [0.0]
    h = t_min
    while h < length / ratio:
        offsets.append(h)
        h *= ratio
    offsets.append(length)
    return a + np.asarray(offsets)
