"""Gauss-Legendre panel quadrature helpers (internal)."""

from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre


@lru_cache(maxsize=64)
def _gl_rule(order):
    x, w = roots_legendre(order)
    return x, w


def gl_nodes(a, b, order):
    """Nodes and weights of the Gauss-Legendre rule on [a, b]."""
    x, w = _gl_rule(order)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def panel_nodes(a, b, panel_width, order, max_panels=None):
    """Nodes/weights of fixed-width Gauss-Legendre panels covering [a, b].

    The last panel is shrunk to end exactly at ``b``.  Raises ``ValueError``
    when more than ``max_panels`` panels would be needed.
    """
    if b <= a:
        return np.empty(0), np.empty(0)
    n_panels = int(np.ceil((b - a) / panel_width))
    if max_panels is not None and n_panels > max_panels:
        raise ValueError(f"quadrature needs {n_panels} panels > budget {max_panels}")
    edges = a + (b - a) / n_panels * np.arange(n_panels + 1)
    x, w = _gl_rule(order)
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = edges[:-1, None] + half[:, None] * (x[None, :] + 1.0)
    weights = half[:, None] * w[None, :]
    return nodes.ravel(), weights.ravel()
