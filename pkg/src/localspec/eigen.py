"""Dense symmetric eigendecomposition and spectral projectors of a graph."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph


class ConvergenceError(RuntimeError):
    pass


class SpectrumError(RuntimeError):
    """Clustering produced a spectrum inconsistent with a connected graph."""


def _round_robin(m: int):
    """Yield m-1 rounds of m/2 disjoint index pairs covering all pairs once."""
    players = list(range(m))
    for _ in range(m - 1):
        yield [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        players = [players[0], players[-1]] + players[1:-1]


def jacobi_eigh(a, tol=1e-14, max_sweeps=100):
    """Eigenvalues and eigenvectors of a real symmetric matrix by cyclic Jacobi.

    Each sweep visits every off-diagonal pair exactly once, in round-robin
    order so that the n/2 rotations of one round act on disjoint index
    pairs and can be applied together. Stops when the off-diagonal
    Frobenius norm drops below ``tol * ||a||_F``.

    Returns ``(w, v)`` with ``a @ v[:, i] == w[i] * v[:, i]``, unsorted.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    m = n + (n % 2)
    rounds = []
    for pairs in _round_robin(m):
        pairs = [(p, q) for p, q in pairs if p < n and q < n]
        p = np.array([min(pq) for pq in pairs])
        q = np.array([max(pq) for pq in pairs])
        rounds.append((p, q))

    offdiag = ~np.eye(n, dtype=bool)

    def off(x):
        return np.linalg.norm(x[offdiag])

    for _ in range(max_sweeps):
        if off(a) < tol * scale:
            return a.diagonal().copy(), v
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(1.0 + theta * theta))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            cc, ss = c[:, None], s[:, None]
            rp, rq = a[p, :], a[q, :]
            a[p, :], a[q, :] = cc * rp - ss * rq, ss * rp + cc * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p], a[:, q] = cp * c - cq * s, cp * s + cq * c
            a[p, q] = a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p], v[:, q] = vp * c - vq * s, vp * s + vq * c
    if off(a) < tol * scale:
        return a.diagonal().copy(), v
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def cluster_eigenvalues(w, gap):
    """Group descending-sorted eigenvalues into runs separated by more than ``gap``.

    Returns a list of index arrays into ``w``.
    """
    groups = [[0]]
    for i in range(1, len(w)):
        if w[i - 1] - w[i] > gap:
            groups.append([i])
        else:
            groups[-1].append(i)
    return [np.array(g) for g in groups]


def moment_parameters(values) -> np.ndarray:
    """pi_l = prod_{h != l} |x_l - x_h| for distinct nodes x."""
    x = np.asarray(values, dtype=float)
    diff = np.abs(x[:, None] - x[None, :])
    np.fill_diagonal(diff, 1.0)
    return diff.prod(axis=1)


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending), multiplicities, projectors, Perron vector."""

    eigenvalues: np.ndarray
    multiplicities: tuple
    projectors: tuple = field(repr=False)
    bases: tuple = field(repr=False)
    perron: np.ndarray = field(repr=False)
    pi: np.ndarray
    adjacency: np.ndarray = field(repr=False)
    tol_proj: float = 1e-9

    @property
    def d(self) -> int:
        return len(self.eigenvalues) - 1

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def lambda0(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def perron_norm_sq(self) -> float:
        return float(self.perron @ self.perron)

    def project(self, l: int, u) -> np.ndarray:
        """E_l u, computed from the orthonormal eigenbasis of cluster l."""
        if not 0 <= l <= self.d:
            raise IndexError(f"eigenvalue index {l} out of range 0..{self.d}")
        u = np.asarray(u, dtype=float)
        if u.shape != (self.n,):
            raise ValueError(f"vector of length {self.n} expected, got shape {u.shape}")
        b = self.bases[l]
        return b @ (b.T @ u)

    def projections(self, u) -> np.ndarray:
        """Row l is E_l u."""
        return np.array([self.project(l, u) for l in range(self.d + 1)])

    def index_of(self, value: float, tol: float) -> int:
        """Index of the distinct eigenvalue within ``tol`` of ``value``."""
        i = int(np.argmin(np.abs(self.eigenvalues - value)))
        if abs(self.eigenvalues[i] - value) > tol:
            raise KeyError(f"{value} is not an eigenvalue")
        return i


def spectral_decomposition(g: Graph, tol_eig: float = 1e-8, tol_proj: float = 1e-9,
                           method: str = "jacobi") -> Spectrum:
    """Spectrum of the adjacency matrix of ``g``.

    ``tol_eig`` and ``tol_proj`` are relative: the clustering gap is
    ``tol_eig * max(1, ||A||_F)`` and projector checks use ``tol_proj * n``.
    ``method="lapack"`` swaps the Jacobi solver for ``numpy.linalg.eigh``.
    """
    a = g.adjacency_matrix
    n = g.n
    if method == "jacobi":
        w, vecs = jacobi_eigh(a)
    elif method == "lapack":
        w, vecs = np.linalg.eigh(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    order = np.argsort(-w, kind="stable")
    w, vecs = w[order], vecs[:, order]

    gap = tol_eig * max(1.0, float(np.linalg.norm(a)))
    groups = cluster_eigenvalues(w, gap)
    if len(groups[0]) != 1:
        raise SpectrumError(
            f"largest eigenvalue cluster has size {len(groups[0])}; graph must be "
            "connected (or tol_eig is too coarse)")
    # every member has multiplicity one, so the weighted mean is the plain mean
    values = np.array([w[idx].mean() for idx in groups])
    bases = tuple(vecs[:, idx].copy() for idx in groups)
    projectors = tuple(b @ b.T for b in bases)
    for p in projectors:
        p.setflags(write=False)

    nu = vecs[:, 0].copy()
    if nu.sum() < 0:
        nu = -nu
    if nu.min() <= 0:
        raise SpectrumError("leading eigenvector is not strictly positive")
    nu /= nu.min()
    nu.setflags(write=False)
    values.setflags(write=False)
    pi = moment_parameters(values)
    pi.setflags(write=False)

    return Spectrum(eigenvalues=values,
                    multiplicities=tuple(len(idx) for idx in groups),
                    projectors=projectors, bases=bases, perron=nu, pi=pi,
                    adjacency=a, tol_proj=tol_proj * n)


def project(s: Spectrum, l: int, u) -> np.ndarray:
    return s.project(l, u)


def apply_polynomial(g_or_a, p, u) -> np.ndarray:
    """p(A) u by Horner's rule with matrix-vector products.

    ``p`` is anything with ascending coefficients in ``.coeffs`` or a
    plain coefficient sequence.
    """
    a = g_or_a.adjacency_matrix if isinstance(g_or_a, Graph) else np.asarray(g_or_a)
    coeffs = np.asarray(getattr(p, "coeffs", p), dtype=float)
    u = np.asarray(u, dtype=float)
    if u.shape != (a.shape[0],):
        raise ValueError(f"vector of length {a.shape[0]} expected, got shape {u.shape}")
    out = np.zeros_like(u)
    for c in coeffs[::-1]:
        out = a @ out + c * u
    return out


def check_spectrum(s: Spectrum) -> dict:
    """Residuals of the projector identities; all should be below ``s.tol_proj``."""
    n = s.n
    eye = np.eye(n)
    total = sum(s.projectors)
    recon = sum(lam * e for lam, e in zip(s.eigenvalues, s.projectors))
    res = {
        "resolution_of_identity": float(np.abs(total - eye).max()),
        "reconstruction": float(np.abs(recon - s.adjacency).max()),
        "idempotent": max(float(np.abs(e @ e - e).max()) for e in s.projectors),
        "symmetric": max(float(np.abs(e - e.T).max()) for e in s.projectors),
        "eigen_equation": max(float(np.abs(s.adjacency @ e - lam * e).max())
                              for lam, e in zip(s.eigenvalues, s.projectors)),
        "trace_rank": max(abs(float(np.trace(e)) - m)
                          for e, m in zip(s.projectors, s.multiplicities)),
        "perron": float(np.abs(s.adjacency @ s.perron - s.lambda0 * s.perron).max()),
    }
    orth = 0.0
    for l in range(len(s.projectors)):
        for h in range(l + 1, len(s.projectors)):
            orth = max(orth, float(np.abs(s.projectors[l] @ s.projectors[h]).max()))
    res["orthogonality"] = orth
    return res
