import numpy as np
import pytest
from hypothesis import given

from localspec.eigen import apply_polynomial, spectral_decomposition
from localspec.graph import VertexSet, cycle, hypercube, path, petersen, vertex_set
from localspec.local import (is_extremal, local_idempotent_polynomial, local_spectrum,
                             rho_vector)
from localspec.graph import VertexSetError

from conftest import graphs_with_sets


def test_rho_cycle4():
    g = cycle(4)
    w = rho_vector(spectral_decomposition(g), vertex_set(g, [0]))
    assert w.rho == pytest.approx([1, 0, 0, 0])
    assert w.norm_sq == pytest.approx(1.0)


def test_rho_whole_set_is_perron():
    g = path(5)
    s = spectral_decomposition(g)
    assert rho_vector(s, vertex_set(g, range(5))).rho == pytest.approx(s.perron)


def test_rho_path2():
    g = path(2)
    w = rho_vector(spectral_decomposition(g), vertex_set(g, [0]))
    assert w.rho == pytest.approx([1, 0]) and w.unit == pytest.approx([1, 0])


def test_rho_rejects_empty():
    g = path(2)
    with pytest.raises(VertexSetError):
        rho_vector(spectral_decomposition(g), VertexSet(()))


def test_local_spectrum_cycle4():
    g = cycle(4)
    ls = local_spectrum(spectral_decomposition(g), vertex_set(g, [0]))
    assert ls.mu == pytest.approx([2, 0, -2], abs=1e-12)
    assert ls.mult == pytest.approx([0.25, 0.5, 0.25], abs=1e-12)
    assert ls.dual_degree == 2
    assert ls.pi_c == pytest.approx([8, 4, 8], abs=1e-12)


def test_local_spectrum_whole_set():
    g = petersen()
    ls = local_spectrum(spectral_decomposition(g), vertex_set(g, range(10)))
    assert ls.dual_degree == 0 and ls.mult == pytest.approx([1.0])


def test_local_spectrum_petersen_vertex():
    g = petersen()
    s = spectral_decomposition(g)
    ls = local_spectrum(s, vertex_set(g, [0]))
    # vertex-transitive: m_C(lambda) = m(lambda) / n
    assert ls.mu == pytest.approx([3, 1, -2], abs=1e-12)
    assert ls.mult == pytest.approx(np.array(s.multiplicities) / 10, abs=1e-12)
    assert ls.dual_degree == 2


def test_extremality_examples():
    g = cycle(4)
    s = spectral_decomposition(g)
    e = is_extremal(g, s, vertex_set(g, [0]))
    assert (e.extremal, e.eccentricity, e.dual_degree) == (True, 2, 2)
    assert is_extremal(g, s, vertex_set(g, range(4))).extremal

    q = hypercube(3)
    e = is_extremal(q, spectral_decomposition(q), vertex_set(q, [0b000, 0b111]))
    assert e.eccentricity == 1 and e.eccentricity <= e.dual_degree
    # rho C only meets the characters of even weight: eigenvalues 3 and -1
    assert e.dual_degree == 1 and e.extremal


def test_local_idempotents_cycle4():
    g = cycle(4)
    ls = local_spectrum(spectral_decomposition(g), vertex_set(g, [0]))
    z0 = local_idempotent_polynomial(ls, 0)
    assert z0.coeffs == pytest.approx([0, 2 / 8, 1 / 8], abs=1e-14)
    assert z0(2.0) == pytest.approx(1.0)
    z1 = local_idempotent_polynomial(ls, 1)
    assert z1(ls.mu) == pytest.approx([0, 1, 0], abs=1e-14)
    with pytest.raises(IndexError):
        local_idempotent_polynomial(ls, 3)


def test_local_idempotent_degree_zero():
    g = cycle(5)
    ls = local_spectrum(spectral_decomposition(g), vertex_set(g, range(5)))
    assert local_idempotent_polynomial(ls, 0).coeffs == pytest.approx([1.0])


@given(graphs_with_sets(max_n=10))
def test_local_invariants(gc):
    g, members = gc
    s = spectral_decomposition(g)
    c = vertex_set(g, members)
    ls = local_spectrum(s, c)
    assert abs(ls.all_mult.sum() - 1) <= 1e-10 * (s.d + 1)
    assert ls.mu[0] == s.eigenvalues[0]
    assert ls.mult[0] == pytest.approx(ls.rho.norm_sq / s.perron_norm_sq, abs=1e-10)
    assert (ls.mult > 1e-10).all()
    e = is_extremal(g, s, c, ls=ls)
    assert e.eccentricity <= e.dual_degree
    # Z_l^C(A) e_C reproduces E_l e_C on the local support
    for li, gl in enumerate(ls.parent_indices):
        z = local_idempotent_polynomial(ls, li)
        lhs = apply_polynomial(g, z, ls.rho.unit)
        assert np.abs(lhs - s.project(gl, ls.rho.unit)).max() <= s.tol_proj
