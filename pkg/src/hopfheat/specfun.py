"""Orthogonal polynomials, zonal spherical eigenfunctions and the wrapped
Gaussian with high-order derivatives.

These are the scalar building blocks of every kernel formula in the library:

* Jacobi polynomials ``P_k^{(alpha,beta)}`` and Gegenbauer polynomials
  ``C_m^lambda``, both by forward three-term recurrence (stable for the
  degrees of a few hundred used here).
* ``s7_zonal``: the normalized zonal eigenfunction of the radial Laplacian
  on the 7-sphere, eigenvalue ``-m(m+6)``, value 1 at the pole.  Production
  path is the Gegenbauer ratio ``C_m^3(cos eta)/C_m^3(1)``; the classical
  Laplace-type integral is kept as an independent oracle.
* ``theta_jet``: the wrapped Gaussian ``V(t, delta)`` on the circle together
  with its first few delta-derivatives, evaluated term by term.  Purely
  imaginary ``delta = i*y`` is supported (the analytic continuation needed
  for heat kernels at hyperbolic arguments); general complex ``delta`` is
  not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError
from ._quadrature import gl_nodes

__all__ = [
    "PolyIndex",
    "TruncationControl",
    "Jet5",
    "jacobi_p",
    "gegenbauer_c",
    "s7_zonal",
    "s7_zonal_integral",
    "theta_jet",
    "jet_mul",
    "jet_reciprocal",
]

JET_ORDER_MAX = 5


@dataclass(frozen=True)
class PolyIndex:
    """Index pair of one term of the double spectral series.

    ``m`` is the fiber harmonic degree, ``k`` the Jacobi degree.
    """

    m: int
    k: int

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise DomainError(f"PolyIndex requires m, k >= 0, got ({self.m}, {self.k})")


@dataclass(frozen=True)
class TruncationControl:
    """Tolerances and caps governing series, quadrature and theta sums."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_terms: int = 2000
    max_panels: int = 2000

    def __post_init__(self):
        if not (0.0 < self.abs_tol < 1.0) or not (0.0 < self.rel_tol < 1.0):
            raise DomainError("tolerances must lie in (0, 1)")
        if self.max_terms < 8:
            raise DomainError("max_terms must be >= 8")
        if self.max_panels < 1:
            raise DomainError("max_panels must be >= 1")


DEFAULT_CONTROL = TruncationControl()


@dataclass(frozen=True)
class Jet5:
    """Value and first five derivatives of a scalar function of one angle.

    Entries are real for real angles and complex on the imaginary-angle
    continuation used by hyperbolic kernel arguments.
    """

    d0: complex
    d1: complex = 0.0
    d2: complex = 0.0
    d3: complex = 0.0
    d4: complex = 0.0
    d5: complex = 0.0

    def as_array(self):
        return np.array([self.d0, self.d1, self.d2, self.d3, self.d4, self.d5])

    @staticmethod
    def from_array(a):
        a = list(a) + [0.0] * (6 - len(a))
        return Jet5(*a[:6])


# ---------------------------------------------------------------------------
# jet arithmetic (derivative coefficients, Leibniz products)
# ---------------------------------------------------------------------------

_BINOM = [[math.comb(n, j) for j in range(n + 1)] for n in range(JET_ORDER_MAX + 1)]


def jet_mul(a, b):
    """Leibniz product of two derivative jets (arrays of f, f', f'', ...)."""
    n = min(len(a), len(b))
    out = np.zeros(n, dtype=np.result_type(a, b))
    for i in range(n):
        row = _BINOM[i]
        out[i] = sum(row[j] * a[j] * b[i - j] for j in range(i + 1))
    return out


def jet_reciprocal(s):
    """Jet of 1/f from the jet of f (f(x0) must be nonzero)."""
    n = len(s)
    out = np.zeros(n, dtype=np.result_type(s, float))
    out[0] = 1.0 / s[0]
    for i in range(1, n):
        row = _BINOM[i]
        acc = sum(row[j] * s[j] * out[i - j] for j in range(1, i + 1))
        out[i] = -acc / s[0]
    return out


# ---------------------------------------------------------------------------
# orthogonal polynomials
# ---------------------------------------------------------------------------

def jacobi_p(k, alpha, beta, x):
    """Jacobi polynomial P_k^(alpha,beta)(x) by the three-term recurrence.

    ``x`` may be a scalar or an ndarray; values outside [-1, 1] are accepted
    (polynomial extrapolation).
    """
    if k < 0:
        raise DomainError(f"jacobi_p needs k >= 0, got {k}")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("jacobi_p needs alpha, beta > -1")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("jacobi_p: nonfinite evaluation point")
    p_prev = np.ones_like(x)
    if k == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for n in range(2, k + 1):
        c = 2.0 * n + alpha + beta
        a1 = 2.0 * n * (n + alpha + beta) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c
        p, p_prev = ((a2 + a3 * x) * p - a4 * p_prev) / a1, p
    return p if p.ndim else float(p)


def gegenbauer_c(m, lam, x):
    """Gegenbauer (ultraspherical) polynomial C_m^lambda(x) by recurrence."""
    if m < 0:
        raise DomainError(f"gegenbauer_c needs m >= 0, got {m}")
    if lam <= 0.0:
        raise DomainError("gegenbauer_c needs lambda > 0")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("gegenbauer_c: nonfinite evaluation point")
    c_prev = np.ones_like(x)
    if m == 0:
        return c_prev if c_prev.ndim else float(c_prev)
    c = 2.0 * lam * x
    for n in range(2, m + 1):
        c, c_prev = (2.0 * (n + lam - 1.0) * x * c - (n + 2.0 * lam - 2.0) * c_prev) / n, c
    return c if c.ndim else float(c)


# ---------------------------------------------------------------------------
# zonal eigenfunctions on the 7-sphere
# ---------------------------------------------------------------------------

def s7_zonal(m, eta):
    """Normalized zonal eigenfunction of d^2/deta^2 + 6 cot(eta) d/deta.

    Eigenvalue -m(m+6), normalization s7_zonal(m, 0) = 1.  Evaluated as
    C_m^3(cos eta) / C_m^3(1); exact at the pole and O(m) per call.
    """
    if m < 0:
        raise DomainError(f"s7_zonal needs m >= 0, got {m}")
    pole = math.comb(m + 5, 5)
    return gegenbauer_c(m, 3.0, np.cos(eta)) / pole


def s7_zonal_integral(m, eta, control=None):
    """Oracle path for ``s7_zonal``: the classical Laplace-type integral

        (15/16) * int_0^pi Re[(cos eta + i sin eta cos phi)^m] sin^5(phi) dphi

    by Gauss-Legendre of order max(32, 2m); the imaginary part cancels by
    symmetry.  Raises AccuracyError if the internal symmetry residual
    exceeds the requested relative tolerance.
    """
    if m < 0:
        raise DomainError(f"s7_zonal_integral needs m >= 0, got {m}")
    if not (0.0 <= eta <= np.pi):
        raise DomainError(f"s7_zonal_integral needs eta in [0, pi], got {eta}")
    control = control or DEFAULT_CONTROL
    order = max(32, 2 * m)
    phi, w = gl_nodes(0.0, np.pi, order)
    z = np.cos(eta) + 1j * np.sin(eta) * np.cos(phi)
    vals = z ** m * np.sin(phi) ** 5
    re = 15.0 / 16.0 * float(np.dot(w, vals.real))
    im = 15.0 / 16.0 * abs(float(np.dot(w, vals.imag)))
    scale = max(abs(re), 1.0)
    if im > control.rel_tol * scale:
        raise AccuracyError(
            f"s7_zonal_integral: symmetry residual {im:.3e} above tolerance", residual=im
        )
    return re


# ---------------------------------------------------------------------------
# wrapped Gaussian theta function with derivatives
# ---------------------------------------------------------------------------

def _theta_cutoff(t, delta, abs_tol):
    # Gaussian tail bound with two guard terms.
    width = abs(delta.real) + abs(delta.imag) + 2.0 * math.sqrt(t * math.log(1.0 / abs_tol))
    return int(math.ceil(width / (2.0 * math.pi))) + 2


def theta_jet(t, delta, order=5, control=None):
    """Wrapped Gaussian V(t, delta) = (4 pi t)^{-1/2} sum_k exp(-(delta-2k pi)^2/4t)
    with its delta-derivatives up to ``order`` as a :class:`Jet5`.

    ``delta`` may be real or purely imaginary (``cos(i y) = cosh y``
    continuation); each lattice term is a Gaussian whose derivatives follow
    the recurrence f^(n+1) = -(x f^(n) + n f^(n-1)) / (2t).
    """
    if order < 0 or order > JET_ORDER_MAX:
        raise DomainError(f"theta_jet supports derivative orders 0..5, got {order}")
    if not (t > 0.0) or not math.isfinite(t):
        raise DomainError(f"theta_jet needs t > 0, got {t}")
    control = control or DEFAULT_CONTROL
    delta = complex(delta)
    if delta.real != 0.0 and delta.imag != 0.0:
        raise DomainError("theta_jet: delta must be real or purely imaginary")
    K = _theta_cutoff(t, delta, control.abs_tol)
    out = np.zeros(order + 1, dtype=complex)
    inv2t = 1.0 / (2.0 * t)
    for k in range(-K, K + 1):
        x = delta - 2.0 * math.pi * k
        g = np.exp(-x * x / (4.0 * t))
        term = np.zeros(order + 1, dtype=complex)
        term[0] = g
        if order >= 1:
            term[1] = -x * inv2t * g
        for n in range(1, order):
            term[n + 1] = -(x * term[n] + n * term[n - 1]) * inv2t
        out += term
    out /= math.sqrt(4.0 * math.pi * t)
    if delta.imag == 0.0:
        out = out.real.astype(complex)
    return Jet5.from_array(out)
