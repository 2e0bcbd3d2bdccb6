"""Local scalar product, predistance polynomials and related interpolants.

Polynomials carry ascending real coefficients. The predistance system is
kept in two forms: values at the local eigenvalues (used for anything
measured by the local scalar product) and coefficients (used for degree
checks and for evaluating p(A)).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

if TYPE_CHECKING:
    from .local import LocalSpectrum


class PolynomialBreakdown(ArithmeticError):
    pass


@dataclass(frozen=True)
class Polynomial:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        nz = np.nonzero(c)[0]
        c = c[: nz[-1] + 1] if len(nz) else c[:1]
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, value: float = 1.0) -> "Polynomial":
        return cls(np.array([value]))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls(np.array([0.0, 1.0]))

    @classmethod
    def from_roots(cls, roots, scale: float = 1.0) -> "Polynomial":
        roots = np.asarray(roots, dtype=float)
        if roots.size == 0:
            return cls.constant(scale)
        return cls(scale * P.polyfromroots(roots))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return float(self.coeffs[-1])

    def degree_above(self, tol: float) -> int:
        """Degree after discarding trailing coefficients of size <= tol."""
        big = np.nonzero(np.abs(self.coeffs) > tol)[0]
        return int(big[-1]) if len(big) else 0

    def __call__(self, x):
        return P.polyval(x, self.coeffs)

    def __add__(self, other):
        return Polynomial(P.polyadd(self.coeffs, _coeffs(other)))

    def __sub__(self, other):
        return Polynomial(P.polysub(self.coeffs, _coeffs(other)))

    def __mul__(self, other):
        if np.isscalar(other):
            return Polynomial(self.coeffs * other)
        return Polynomial(P.polymul(self.coeffs, _coeffs(other)))

    __rmul__ = __mul__

    def mulx(self) -> "Polynomial":
        return Polynomial(P.polymulx(self.coeffs))

    def tolist(self) -> list:
        return [float(c) for c in self.coeffs]


def _coeffs(p):
    return p.coeffs if isinstance(p, Polynomial) else np.atleast_1d(np.asarray(p, dtype=float))


def local_inner_product(p, q, ls: "LocalSpectrum") -> float:
    """<p, q>_C = sum_l m_C(mu_l) p(mu_l) q(mu_l)."""
    pv = p(ls.mu) if callable(p) else np.asarray(p, dtype=float)
    qv = q(ls.mu) if callable(q) else np.asarray(q, dtype=float)
    return float(np.sum(ls.mult * pv * qv))


@dataclass(frozen=True)
class PredistanceSystem:
    """p_0..p_d with x p_k = b[k-1] p_{k-1} + a[k] p_k + c[k+1] p_{k+1}.

    ``b[d] = 0`` and ``c[0] = 0`` so the arrays line up with intersection
    arrays; ``b_{-1}`` and ``c_{d+1}`` are implicitly zero.
    """

    polys: tuple
    values: np.ndarray = field(repr=False)   # values[k, l] = p_k(mu_l)
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.polys) - 1

    @property
    def top(self) -> Polynomial:
        return self.polys[-1]

    def at_mu0(self) -> np.ndarray:
        return self.values[:, 0].copy()

    def gram(self) -> np.ndarray:
        return (self.values * self.weights) @ self.values.T


def lanczos(nodes, weights, tol: float = 1e-12):
    """Orthonormal polynomials of a discrete positive measure.

    Symmetric Lanczos on ``diag(nodes)`` started from ``sqrt(weights)``,
    with full reorthogonalisation. Returns ``(alpha, beta, phi)`` where
    ``x phi_k = beta[k+1] phi_{k+1} + alpha[k] phi_k + beta[k] phi_{k-1}``
    (``beta[0] = 0``) and ``phi[k, l]`` is ``phi_k`` at node ``l``.
    """
    x = np.asarray(nodes, dtype=float)
    w = np.asarray(weights, dtype=float)
    m = len(x)
    sw = np.sqrt(w)
    v = np.zeros((m, m))
    v[0] = sw / np.linalg.norm(sw)
    alpha = np.zeros(m)
    beta = np.zeros(m)
    scale = max(1.0, float(np.max(np.abs(x))))
    for k in range(m):
        r = x * v[k]
        alpha[k] = float(r @ v[k])
        if k + 1 == m:
            break
        r -= alpha[k] * v[k]
        if k > 0:
            r -= beta[k] * v[k - 1]
        for _ in range(2):
            r -= v[: k + 1].T @ (v[: k + 1] @ r)
        beta[k + 1] = float(np.linalg.norm(r))
        if beta[k + 1] <= tol * scale:
            raise PolynomialBreakdown(
                f"Lanczos broke down at step {k + 1}; measure has fewer than {m} "
                "effective nodes (check tol_m)")
        v[k + 1] = r / beta[k + 1]
    # positive beta keeps every leading coefficient positive
    return alpha, beta, v / sw


def predistance_polynomials(ls: "LocalSpectrum", tol_poly: float = 1e-8) -> PredistanceSystem:
    """Orthogonal system for the local measure with <p_k, p_k>_C = p_k(mu_0).

    With phi_k orthonormal, p_k = phi_k(mu_0) phi_k.
    """
    x, w = ls.mu, ls.mult
    m = len(x)
    alpha, beta, phi = lanczos(x, w)
    t = phi[:, 0].copy()

    ortho = [np.array([1.0 / np.sqrt(np.sum(w))])]
    for k in range(m - 1):
        nxt = P.polymulx(ortho[k]) - np.pad(alpha[k] * ortho[k], (0, 1))
        if k > 0:
            nxt = P.polysub(nxt, beta[k] * ortho[k - 1])
        ortho.append(nxt / beta[k + 1])
    polys = tuple(Polynomial(tk * q) for tk, q in zip(t, ortho))
    values = t[:, None] * phi

    a = alpha.copy()
    b = np.zeros(m)
    c = np.zeros(m)
    for k in range(m - 1):
        c[k + 1] = beta[k + 1] * t[k] / t[k + 1]
        b[k] = beta[k + 1] * t[k + 1] / t[k]
    values.setflags(write=False)
    return PredistanceSystem(polys=polys, values=values, nodes=x.copy(), weights=w.copy(),
                             a=a, b=b, c=c)


def recurrence_residuals(ps: PredistanceSystem) -> np.ndarray:
    """Coefficient-norm residual of the three-term recurrence for each k.

    For the top index the identity only holds modulo prod(x - mu_l), so it
    is measured on the node values instead.
    """
    d = ps.degree
    out = np.zeros(d + 1)
    for k in range(d + 1):
        rhs = ps.polys[k] * ps.a[k]
        if k > 0:
            rhs = rhs + ps.polys[k - 1] * ps.b[k - 1]
        if k < d:
            rhs = rhs + ps.polys[k + 1] * ps.c[k + 1]
            out[k] = float(np.linalg.norm(_coeffs(ps.polys[k].mulx() - rhs)))
        else:
            lhs = ps.nodes * ps.values[k]
            out[k] = float(np.max(np.abs(lhs - rhs(ps.nodes))))
    return out


def hoffman_polynomial(ls: "LocalSpectrum", norm_nu_sq: float, norm_rho_sq: float) -> Polynomial:
    """H_C = ||nu||^2 / (pi_0(C) ||rho C||^2) * prod_{l >= 1} (x - mu_l)."""
    return Polynomial.from_roots(ls.mu[1:], scale=norm_nu_sq / (ls.pi_c[0] * norm_rho_sq))


def interpolate(nodes: Sequence[float], values: Sequence[float]) -> Polynomial:
    """Polynomial of degree <= len(nodes) - 1 through the given points (Newton form)."""
    x = np.asarray(nodes, dtype=float)
    dd = np.array(values, dtype=float)
    if x.shape != dd.shape:
        raise ValueError("nodes and values must have the same length")
    m = len(x)
    for j in range(1, m):
        dd[j:] = (dd[j:] - dd[j - 1:-1]) / (x[j:] - x[:m - j])
    coeffs = np.array([dd[-1]])
    for k in range(m - 2, -1, -1):
        coeffs = P.polyadd(P.polymulx(coeffs) - np.pad(x[k] * coeffs, (0, 1)), [dd[k]])
    return Polynomial(coeffs)


def interpolate_on_local_spectrum(values, ls: "LocalSpectrum") -> Polynomial:
    if len(values) != len(ls.mu):
        raise ValueError(f"expected {len(ls.mu)} values, got {len(values)}")
    return interpolate(ls.mu, values)


def interpolate_on_spectrum(values, eigenvalues) -> Polynomial:
    if len(values) != len(eigenvalues):
        raise ValueError(f"expected {len(eigenvalues)} values, got {len(values)}")
    return interpolate(eigenvalues, values)
