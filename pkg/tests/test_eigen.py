import numpy as np
import pytest
from hypothesis import given, strategies as st

from localspec.eigen import (apply_polynomial, check_spectrum, cluster_eigenvalues,
                             jacobi_eigh, moment_parameters, spectral_decomposition)
from localspec.graph import complete, cycle, hypercube, path, petersen
from localspec.polynomials import Polynomial

from conftest import connected_graphs


def test_cycle4_spectrum():
    s = spectral_decomposition(cycle(4))
    # 2 cos(2 pi j / 4), j = 0..3
    expected = sorted({round(2 * np.cos(2 * np.pi * j / 4), 12) for j in range(4)}, reverse=True)
    assert s.eigenvalues == pytest.approx(expected, abs=1e-12)
    assert s.multiplicities == (1, 2, 1)
    assert s.perron == pytest.approx(np.ones(4))


def test_k3_spectrum_from_characteristic_polynomial():
    # det(xI - A) = x^3 - 3x - 2
    roots = np.sort(np.roots([1, 0, -3, -2]).real)[::-1]
    s = spectral_decomposition(complete(3))
    assert s.eigenvalues == pytest.approx([roots[0], roots[-1]], abs=1e-7)
    assert s.multiplicities == (1, 2)
    assert s.pi == pytest.approx([3, 3], abs=1e-12)


def test_path2():
    s = spectral_decomposition(path(2))
    assert s.eigenvalues == pytest.approx([1, -1])
    assert s.perron == pytest.approx([1, 1])


def test_single_vertex():
    from localspec.graph import load_graph
    s = spectral_decomposition(load_graph("n 1"))
    assert s.eigenvalues == pytest.approx([0.0])
    assert s.perron == pytest.approx([1.0])


def test_jacobi_against_lapack():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(40, 40))
    m = m + m.T
    w, v = jacobi_eigh(m)
    assert np.sort(w) == pytest.approx(np.linalg.eigvalsh(m), abs=1e-11)
    assert np.abs(v.T @ v - np.eye(40)).max() < 1e-12
    assert np.abs(m @ v - v * w).max() < 1e-11


def test_jacobi_iteration_cap():
    from localspec.eigen import ConvergenceError
    m = np.array([[1.0, 2.0, 3.0], [2.0, 0.0, 1.0], [3.0, 1.0, 5.0]])
    with pytest.raises(ConvergenceError):
        jacobi_eigh(m, max_sweeps=1)


def test_clustering():
    groups = cluster_eigenvalues(np.array([3.0, 1.0 + 1e-12, 1.0, -2.0]), 1e-8)
    assert [list(g) for g in groups] == [[0], [1, 2], [3]]


def test_moment_parameters():
    assert moment_parameters([2, 0, -2]) == pytest.approx([8, 4, 8])


def test_project_examples():
    s = spectral_decomposition(cycle(4))
    assert s.project(0, s.perron) == pytest.approx(s.perron)
    e0 = np.eye(4)[0]
    assert s.project(0, e0) == pytest.approx(np.full(4, 0.25))
    assert np.abs(s.project(1, s.project(2, e0))).max() < 1e-14
    with pytest.raises(IndexError):
        s.project(3, e0)
    with pytest.raises(ValueError):
        s.project(0, np.ones(3))


def test_apply_polynomial_basics():
    g = petersen()
    u = np.arange(10.0)
    assert apply_polynomial(g, Polynomial.constant(1.0), u) == pytest.approx(u)
    e3 = np.eye(10)[3]
    nbrs = np.zeros(10)
    nbrs[list(g.adjacency[3])] = 1
    assert apply_polynomial(g, Polynomial.x(), e3) == pytest.approx(nbrs)
    with pytest.raises(ValueError):
        apply_polynomial(g, [1.0], np.ones(4))


@pytest.mark.parametrize("g", [cycle(7), hypercube(4), petersen(), path(6), complete(5)])
def test_spectrum_identities(g):
    s = spectral_decomposition(g)
    res = check_spectrum(s)
    assert max(res.values()) <= s.tol_proj, res
    assert sum(s.multiplicities) == g.n
    if g.is_regular():
        assert s.perron == pytest.approx(np.ones(g.n))
        assert s.lambda0 == pytest.approx(g.degree(0))


def test_lapack_and_jacobi_agree():
    g = hypercube(5)
    a = spectral_decomposition(g)
    b = spectral_decomposition(g, method="lapack")
    assert a.eigenvalues == pytest.approx(b.eigenvalues, abs=1e-12)
    assert a.multiplicities == b.multiplicities
    for pa, pb in zip(a.projectors, b.projectors):
        assert np.abs(pa - pb).max() < 1e-11


@given(connected_graphs(max_n=10))
def test_spectral_invariants(g):
    s = spectral_decomposition(g)
    res = check_spectrum(s)
    assert max(res.values()) <= s.tol_proj, res
    assert sum(s.multiplicities) == g.n
    assert s.perron.min() == pytest.approx(1.0) and (s.perron > 0).all()
    ref = np.linalg.eigvalsh(g.adjacency_matrix)
    assert s.eigenvalues[0] == pytest.approx(ref[-1], abs=1e-10)


@given(connected_graphs(max_n=8), st.integers(0, 2 ** 31 - 1))
def test_lagrange_interpolator_matches_projector(g, seed):
    s = spectral_decomposition(g)
    u = np.random.default_rng(seed).normal(size=g.n)
    for l in range(s.d + 1):
        others = np.delete(s.eigenvalues, l)
        z = Polynomial.from_roots(others, scale=(-1) ** l / s.pi[l])
        assert np.abs(apply_polynomial(g, z, u) - s.project(l, u)).max() <= s.tol_proj
