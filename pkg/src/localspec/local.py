"""Weighted set vectors, C-local spectra, dual degree and extremality."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .eigen import Spectrum, moment_parameters
from .graph import Graph, VertexSet, VertexSetError, distance_partition
from .polynomials import Polynomial


class InconsistencyError(RuntimeError):
    """A computed quantity contradicts a theorem; usually a tolerance problem."""


@dataclass(frozen=True)
class WeightedSetVector:
    rho: np.ndarray
    norm_sq: float
    unit: np.ndarray


def rho_vector(s: Spectrum, c: VertexSet) -> WeightedSetVector:
    """rho C = sum of nu_i e_i over i in C, with its squared norm and unit vector."""
    if len(c) == 0:
        raise VertexSetError("vertex set is empty")
    idx = list(c)
    rho = np.zeros(s.n)
    rho[idx] = s.perron[idx]
    norm_sq = float(rho @ rho)
    return WeightedSetVector(rho, norm_sq, rho / np.sqrt(norm_sq))


@dataclass(frozen=True)
class LocalSpectrum:
    """Eigenvalues with nonzero C-multiplicity and the associated data.

    ``all_mult`` holds ``m_C(lambda_l)`` for every global eigenvalue,
    including the ones below ``tol_m`` that were discarded (listed in
    ``discarded``) so borderline cases stay visible.
    """

    mu: np.ndarray
    mult: np.ndarray
    parent_indices: tuple
    pi_c: np.ndarray
    all_mult: np.ndarray = field(repr=False)
    discarded: tuple = ()
    rho: WeightedSetVector = field(default=None, repr=False)

    @property
    def dual_degree(self) -> int:
        return len(self.mu) - 1

    @property
    def support(self) -> frozenset:
        return frozenset(self.parent_indices)


def local_spectrum(s: Spectrum, c: VertexSet, tol_m: float = 1e-10) -> LocalSpectrum:
    w = rho_vector(s, c)
    all_mult = np.array([float(np.sum(s.project(l, w.unit) ** 2)) for l in range(s.d + 1)])
    keep = [l for l in range(s.d + 1) if all_mult[l] > tol_m]
    discarded = tuple((l, float(all_mult[l])) for l in range(s.d + 1) if all_mult[l] <= tol_m
                      and all_mult[l] > 0.0)
    mu = s.eigenvalues[keep].copy()
    return LocalSpectrum(mu=mu, mult=all_mult[keep].copy(), parent_indices=tuple(keep),
                         pi_c=moment_parameters(mu), all_mult=all_mult,
                         discarded=discarded, rho=w)


@dataclass(frozen=True)
class Extremality:
    extremal: bool
    eccentricity: int
    dual_degree: int


def is_extremal(g: Graph, s: Spectrum, c: VertexSet, tol_m: float = 1e-10,
                ls: LocalSpectrum = None) -> Extremality:
    ecc = distance_partition(g, c).eccentricity
    ls = ls or local_spectrum(s, c, tol_m)
    if ecc > ls.dual_degree:
        raise InconsistencyError(
            f"eccentricity {ecc} exceeds dual degree {ls.dual_degree}; "
            "check tol_eig / tol_m")
    return Extremality(ecc == ls.dual_degree, ecc, ls.dual_degree)


def local_idempotent_polynomial(ls: LocalSpectrum, l: int) -> Polynomial:
    """Z_l^C = (-1)^l / pi_l(C) * prod_{h != l} (x - mu_h).

    The sign of the product at ``mu_l`` is ``(-1)^l`` because exactly ``l``
    nodes exceed ``mu_l``, so this is the Lagrange basis polynomial.
    """
    if not 0 <= l <= ls.dual_degree:
        raise IndexError(f"local index {l} out of range 0..{ls.dual_degree}")
    roots = np.delete(ls.mu, l)
    return Polynomial.from_roots(roots, scale=(-1) ** l / ls.pi_c[l])
