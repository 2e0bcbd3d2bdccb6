"""Deciding completely pseudo-regular codes.

Four independent tests are run on a vertex set C:

* ``combinatorial`` -- the weighted intersection functions c, a, b are
  constant on every layer of the distance partition. No spectral numerics;
  this is the reference the other three are compared against.
* ``theorem1``      -- rho C_k == p_k(A) rho C for every layer k.
* ``collinearity``  -- (extremal C only) E_l rho D is a multiple of
  E_l rho C for every eigenvalue, D being the farthest layer; the
  multiples interpolate a polynomial p with p(A) rho C == rho D.
* ``spectral_excess`` -- (extremal C only) ||rho D||^2 / ||rho C||^2
  attains its closed-form upper bound.

Each test reports a measured discrepancy next to its threshold. A verdict
is *decisive* when the discrepancy is at least a factor 10 away from the
threshold on either side.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import Config
from .eigen import Spectrum, apply_polynomial, spectral_decomposition
from .graph import DistancePartition, Graph, VertexSet, distance_partition, vertex_set
from .local import (Extremality, InconsistencyError, LocalSpectrum, is_extremal,
                    local_spectrum, rho_vector)
from .polynomials import (Polynomial, PredistanceSystem, hoffman_polynomial,
                          interpolate_on_local_spectrum, predistance_polynomials)

DECISIVE_FACTOR = 10.0

CHARACTERIZATIONS = ("combinatorial", "theorem1", "collinearity", "spectral_excess")


class NotExtremalError(ValueError):
    pass


@dataclass
class Verdict:
    name: str
    holds: bool | None
    value: float = float("nan")
    threshold: float = float("nan")
    reason: str = ""
    details: dict = field(default_factory=dict)

    @property
    def ran(self) -> bool:
        return self.holds is not None

    @property
    def decisive(self) -> bool:
        if not self.ran:
            return False
        return (self.value <= self.threshold / DECISIVE_FACTOR
                or self.value >= self.threshold * DECISIVE_FACTOR)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, None, reason=reason)


# -- intersection functions ---------------------------------------------------

@dataclass(frozen=True)
class IntersectionData:
    c: np.ndarray
    a: np.ndarray
    b: np.ndarray
    partition: DistancePartition = field(repr=False)

    def spreads(self) -> np.ndarray:
        """Row k holds max - min of (c, a, b) over layer k."""
        out = []
        for layer in self.partition.layers:
            idx = list(layer)
            out.append([float(np.ptp(f[idx])) for f in (self.c, self.a, self.b)])
        return np.array(out)

    def layer_means(self) -> np.ndarray:
        """Row k is (c_k, a_k, b_k) averaged over layer k."""
        return np.array([[float(np.mean(f[list(layer)])) for f in (self.c, self.a, self.b)]
                         for layer in self.partition.layers])


def intersection_functions(g: Graph, s: Spectrum, dp: DistancePartition) -> IntersectionData:
    nu = s.perron
    dist = dp.distance
    c, a, b = np.zeros(g.n), np.zeros(g.n), np.zeros(g.n)
    for i in range(g.n):
        k = dist[i]
        for j in g.adjacency[i]:
            dj = dist[j]
            if dj == k - 1:
                c[i] += nu[j]
            elif dj == k:
                a[i] += nu[j]
            else:
                b[i] += nu[j]
    return IntersectionData(c / nu, a / nu, b / nu, dp)


def check_combinatorial(idata: IntersectionData, tol_int: float) -> Verdict:
    """C is completely pseudo-regular iff c, a, b are constant on every layer.

    ``tol_int`` is absolute here.
    """
    spreads = idata.spreads()
    value = float(spreads.max()) if spreads.size else 0.0
    holds = bool(value <= tol_int)
    details = {"layer_spreads": spreads}
    if holds:
        details["intersection_array"] = idata.layer_means()
    return Verdict("combinatorial", holds, value, tol_int, details=details)


# -- spectral characterizations -----------------------------------------------

def check_theorem1(g: Graph, s: Spectrum, c: VertexSet, dp: DistancePartition,
                   ps: PredistanceSystem, tol_vec: float) -> Verdict:
    """Relative residuals ||rho C_k - p_k(A) rho C|| / ||rho C_k|| for k = 0..ecc."""
    ecc = dp.eccentricity
    if ecc > ps.degree:
        raise InconsistencyError(f"eccentricity {ecc} exceeds dual degree {ps.degree}")
    rc = rho_vector(s, c).rho
    residuals = []
    for k in range(ecc + 1):
        rk = rho_vector(s, dp.layers[k]).rho
        r = np.linalg.norm(rk - apply_polynomial(s.adjacency, ps.polys[k], rc))
        residuals.append(float(r / np.linalg.norm(rk)))
    value = max(residuals)
    return Verdict("theorem1", bool(value <= tol_vec), value, tol_vec,
                   details={"residuals": residuals})


def _require_extremal(ls: LocalSpectrum, eccentricity: int):
    if eccentricity != ls.dual_degree:
        raise NotExtremalError(
            f"set is not extremal (eccentricity {eccentricity} != dual degree "
            f"{ls.dual_degree})")


def check_collinearity(s: Spectrum, c: VertexSet, d: VertexSet, ls: LocalSpectrum,
                       eccentricity: int, tol_vec: float) -> Verdict:
    """E_l rho D == alpha_l E_l rho C for every l, with p(mu_l) = alpha_l.

    On eigenvalues outside the C-local spectrum E_l rho C vanishes, so
    E_l rho D has to vanish as well; its total norm is reported as
    ``z_norm``.
    """
    _require_extremal(ls, eccentricity)
    rc = rho_vector(s, c).rho
    rd = rho_vector(s, d).rho
    norm_d = float(np.linalg.norm(rd))
    support = ls.support
    alphas, residuals = [], []
    z_sq = 0.0
    for l in range(s.d + 1):
        pc, pd = s.project(l, rc), s.project(l, rd)
        if l in support:
            alpha = float(pd @ pc / (pc @ pc))
            alphas.append(alpha)
            residuals.append(float(np.linalg.norm(pd - alpha * pc)) / norm_d)
        else:
            z_sq += float(pd @ pd)
            residuals.append(float(np.linalg.norm(pd)) / norm_d)
    p = interpolate_on_local_spectrum(alphas, ls)
    thm2 = float(np.linalg.norm(rd - apply_polynomial(s.adjacency, p, rc))) / norm_d
    value = max(max(residuals), thm2)
    return Verdict("collinearity", bool(value <= tol_vec), value, tol_vec, details={
        "alpha": alphas,
        "residuals": residuals,
        "z_norm": float(np.sqrt(z_sq)),
        "theorem2_residual": thm2,
        "polynomial": p,
        "sign_alternates": all(bool(np.sign(a) == (-1) ** l) for l, a in enumerate(alphas)),
    })


def spectral_excess_bound(ls: LocalSpectrum) -> float:
    m0, pi0 = ls.mult[0], ls.pi_c[0]
    return (1.0 / (m0 ** 2 * pi0 ** 2)) / float(np.sum(1.0 / (ls.mult * ls.pi_c ** 2)))


def check_spectral_excess(s: Spectrum, c: VertexSet, d: VertexSet, ls: LocalSpectrum,
                          eccentricity: int, tol_ex: float) -> Verdict:
    """||rho D||^2/||rho C||^2 <= bound, with equality iff C is a CPRC.

    ``tol_ex`` is relative to the bound.
    """
    _require_extremal(ls, eccentricity)
    lhs = rho_vector(s, d).norm_sq / rho_vector(s, c).norm_sq
    rhs = spectral_excess_bound(ls)
    gap = (rhs - lhs) / rhs
    if gap < -tol_ex:
        raise InconsistencyError(f"spectral excess bound violated: lhs={lhs!r} > rhs={rhs!r}")
    value = abs(gap)
    return Verdict("spectral_excess", bool(value <= tol_ex), value, tol_ex,
                   details={"lhs": lhs, "rhs": rhs, "relative_gap": gap})


# -- corollary checks ---------------------------------------------------------

def check_prop1_inequality(s: Spectrum, c: VertexSet, d: VertexSet, ls: LocalSpectrum,
                           eccentricity: int, tol_m: float, tol_ex: float) -> dict:
    """Per-eigenvalue slack of m_C m_D >= (pi_0/pi_l)^2 ||rho C||^2 ||rho D||^2 / ||nu||^4.

    Equality at mu_l should coincide with z_C(mu_l) and z_D(mu_l) being
    collinear; ``clause_i_agrees`` records whether it does.
    """
    _require_extremal(ls, eccentricity)
    lsd = local_spectrum(s, d, tol_m)
    nu4 = s.perron_norm_sq ** 2
    wc, wd = rho_vector(s, c), rho_vector(s, d)
    factor = wc.norm_sq * wd.norm_sq / nu4
    slacks, collinear_res, equal, clause_i = [], [], [], []
    for li, gl in enumerate(ls.parent_indices):
        mc, md = ls.mult[li], lsd.all_mult[gl]
        slack = float(mc * md - (ls.pi_c[0] / ls.pi_c[li]) ** 2 * factor)
        zc, zd = s.project(gl, wc.unit), s.project(gl, wd.unit)
        res = float(np.linalg.norm(zd - (zd @ zc) / (zc @ zc) * zc))
        is_eq = abs(slack) <= tol_ex
        # slack == m_C * res^2, so this reaches the same decision from the vectors
        is_col = mc * res ** 2 <= tol_ex
        slacks.append(slack)
        collinear_res.append(res)
        equal.append(is_eq)
        clause_i.append(is_eq == is_col)
        if slack < -tol_ex:
            raise InconsistencyError(f"multiplicity inequality violated at l={li}: slack {slack!r}")
    contained = ls.support <= lsd.support
    if not contained:
        raise InconsistencyError("local spectrum of C is not contained in that of D")
    return {"slack": slacks, "equality": equal, "collinearity_residual": collinear_res,
            "clause_i_agrees": clause_i, "ev_c_subset_ev_d": contained,
            "all_equal": all(equal)}


def _zero_tol(tol_poly, p0):
    return tol_poly * max(1.0, abs(p0))


def subconstituent_report(g: Graph, s: Spectrum, c: VertexSet, dp: DistancePartition,
                          ps: PredistanceSystem, ls: LocalSpectrum, tol_m: float = 1e-10,
                          tol_poly: float = 1e-8, strict: bool = False) -> dict:
    """Local spectra of every layer C_k compared with that of C.

    With ``strict=True`` (C known to be a CPRC) any failed relation raises
    ``InconsistencyError``; otherwise the report is descriptive.
    """
    ecc = dp.eccentricity
    wc = rho_vector(s, c)
    dc = ls.dual_degree
    support_c = ls.support
    layers = []
    supports = []
    failures = []
    for k in range(ecc + 1):
        lk = local_spectrum(s, dp.layers[k], tol_m)
        wk = lk.rho
        supports.append(lk.support)
        row = {"k": k, "size": len(dp.layers[k]), "ev": sorted(lk.support),
               "dual_degree": lk.dual_degree}
        row["subset_of_ev_c"] = lk.support <= support_c
        if k <= ps.degree:
            pk = ps.polys[k]
            pred = wc.norm_sq / wk.norm_sq * pk(s.eigenvalues) ** 2 * ls.all_mult
            row["multiplicity_residual"] = float(np.max(np.abs(lk.all_mult - pred)))
            pv = ps.values[k]
            zeros = int(np.sum(np.abs(pv) <= _zero_tol(tol_poly, pv[0])))
            row["zeros_on_ev_c"] = zeros
            row["zero_bound_ok"] = zeros <= min(k, dc - k)
        row["dual_degree_bound_ok"] = lk.dual_degree >= max(k, dc - k)
        layers.append(row)
        if strict:
            if not row["subset_of_ev_c"]:
                failures.append(f"ev(C_{k}) not contained in ev(C)")
            if row.get("multiplicity_residual", 0.0) > tol_m:
                failures.append(f"multiplicity identity fails at k={k}: "
                                f"{row['multiplicity_residual']!r}")
            if not row["dual_degree_bound_ok"]:
                failures.append(f"dual degree bound fails at k={k}")
            if not row.get("zero_bound_ok", True):
                failures.append(f"p_{k} has too many zeros on ev(C)")

    coverage = [supports[k] | supports[k + 1] == support_c for k in range(ecc)]
    ev_c_eq_ev_d = supports[-1] == support_c
    if strict:
        if not all(coverage):
            failures.append("ev(C) != ev(C_k) U ev(C_k+1) for some k")
        if not ev_c_eq_ev_d:
            failures.append("ev(C) != ev(D)")
        if failures:
            raise InconsistencyError("; ".join(failures))
    return {"layers": layers, "coverage": coverage, "ev_c_equals_ev_d": ev_c_eq_ev_d,
            "strict": strict}


def check_md_identities(s: Spectrum, c: VertexSet, d: VertexSet, ls: LocalSpectrum,
                        ps: PredistanceSystem, tol_m: float = 1e-10, tol_poly: float = 1e-8,
                        strict: bool = False) -> dict:
    """Multiplicities of C and D in terms of the top predistance polynomial.

    The identities are checked with |p_d(mu_l)|; the sign of p_d(mu_l) is
    reported separately and alternates as (-1)^l on a CPRC. The top
    D-local predistance polynomial pbar satisfies |pbar * p_d| = 1 on ev(C).
    """
    wc, wd = rho_vector(s, c), rho_vector(s, d)
    nu2 = s.perron_norm_sq
    lsd = local_spectrum(s, d, tol_m)
    psd = predistance_polynomials(lsd, tol_poly)
    d_index = {gl: i for i, gl in enumerate(lsd.parent_indices)}
    top = ps.values[-1]
    ratio = ls.pi_c[0] / ls.pi_c
    mc_pred = ratio * wd.norm_sq / nu2 / np.abs(top)
    md_actual = lsd.all_mult[list(ls.parent_indices)]
    md_pred = ratio * wc.norm_sq / nu2 * np.abs(top)
    pbar = np.array([psd.values[-1][d_index[gl]] if gl in d_index
                     else psd.top(s.eigenvalues[gl]) for gl in ls.parent_indices])
    product = pbar * top
    signs = [int(np.sign(v)) for v in top]
    report = {
        "p_top_values": top.tolist(),
        "pbar_top_values": pbar.tolist(),
        "m_c_residual": float(np.max(np.abs(ls.mult - mc_pred))),
        "m_d_residual": float(np.max(np.abs(md_actual - md_pred))),
        "reciprocity_product": product.tolist(),
        "reciprocity_residual": float(np.max(np.abs(np.abs(product) - 1.0))),
        "sign_pattern": signs,
        "sign_alternates": signs == [(-1) ** l for l in range(len(signs))],
        "d_dual_degree": lsd.dual_degree,
    }
    if strict:
        failures = []
        if report["m_c_residual"] > tol_m or report["m_d_residual"] > tol_m:
            failures.append("multiplicity identities for C/D fail")
        if report["reciprocity_residual"] > tol_poly:
            failures.append("reciprocity |pbar p_d| = 1 fails")
        if not report["sign_alternates"]:
            failures.append("sign of p_d on ev(C) does not alternate")
        if failures:
            raise InconsistencyError("; ".join(failures))
    return report


def check_hoffman(s: Spectrum, ls: LocalSpectrum) -> tuple:
    """H_C and the relative residual ||H_C(A) rho C - nu|| / ||nu||."""
    w = ls.rho
    h = hoffman_polynomial(ls, s.perron_norm_sq, w.norm_sq)
    r = np.linalg.norm(apply_polynomial(s.adjacency, h, w.rho) - s.perron)
    return h, float(r / np.sqrt(s.perron_norm_sq))


def normalized_leading(ps: PredistanceSystem) -> list:
    """|leading coefficient| * h^k / max_l |p_k(mu_l)| with h the half-width of the nodes.

    Invariant under rescaling x and p, so it can be compared with an
    absolute threshold whatever the degree.
    """
    h = max((ps.nodes[0] - ps.nodes[-1]) / 2.0, 1e-300)
    return [abs(p.leading) * h ** k / float(np.max(np.abs(ps.values[k])))
            for k, p in enumerate(ps.polys)]


def predistance_checks(ps: PredistanceSystem, tol_poly: float, tol_coef: float) -> dict:
    """Orthogonality, normalisation, degree ladder and recurrence sign condition."""
    gram = ps.gram()
    p0 = ps.at_mu0()
    scale = np.maximum(1.0, np.maximum.outer(np.abs(p0), np.abs(p0)))
    off = gram / scale
    np.fill_diagonal(off, 0.0)
    orth = float(np.abs(off).max()) if len(p0) > 1 else 0.0
    norm_rel = float(np.max(np.abs(np.diag(gram) - p0) / np.maximum(1.0, np.abs(p0))))
    ladder = all(p.degree == k and lead > tol_coef
                 for k, (p, lead) in enumerate(zip(ps.polys, normalized_leading(ps))))
    bc = [float(ps.b[k] * ps.c[k + 1]) for k in range(ps.degree)]
    return {
        "orthogonality": orth,
        "norm_condition": norm_rel,
        "degree_ladder": ladder,
        "bc_positive": all(v > 0 for v in bc),
        "p_at_mu0_positive": bool(np.all(p0 > 0)),
        "ok": orth <= tol_poly and norm_rel <= tol_poly and ladder and all(v > 0 for v in bc),
    }


# -- orchestration ------------------------------------------------------------

@dataclass
class CodeReport:
    graph: Graph
    members: VertexSet
    config: Config
    spectrum: Spectrum
    local: LocalSpectrum
    partition: DistancePartition
    predistance: PredistanceSystem
    extremality: Extremality
    intersection: IntersectionData
    hoffman: Polynomial
    hoffman_residual: float
    predistance_checks: dict
    verdicts: dict
    prop1: dict | None = None
    subconstituents: dict | None = None
    md: dict | None = None
    recurrence_vs_intersection: dict | None = None
    status: str = ""
    messages: list = field(default_factory=list)

    @property
    def is_cprc(self) -> bool:
        return self.status == "CPRC"

    @property
    def exit_code(self) -> int:
        return {"CPRC": 0, "NOT_CPRC": 1}.get(self.status, 2)


def _status(verdicts) -> tuple:
    ran = [v for v in verdicts.values() if v.ran]
    outcomes = {v.holds for v in ran}
    decisive = {v.holds for v in ran if v.decisive}
    if len(decisive) > 1:
        return "INCONSISTENT", "decisive verdicts disagree"
    if len(outcomes) == 1:
        return ("CPRC" if outcomes.pop() else "NOT_CPRC"), ""
    return "INCONCLUSIVE", "verdicts disagree and at least one margin is borderline"


def analyze(g: Graph, c, config: Config = None, spectrum: Spectrum = None) -> CodeReport:
    """Run every applicable characterization on the vertex set ``c``."""
    cfg = config or Config()
    if not isinstance(c, VertexSet):
        c = vertex_set(g, c)
    s = spectrum or spectral_decomposition(g, cfg.tol_eig, cfg.tol_proj)
    ls = local_spectrum(s, c, cfg.tol_m)
    dp = distance_partition(g, c)
    ext = is_extremal(g, s, c, cfg.tol_m, ls=ls)
    ps = predistance_polynomials(ls, cfg.tol_poly)
    idata = intersection_functions(g, s, dp)
    h, h_res = check_hoffman(s, ls)
    d = dp.antipodal
    messages = []

    verdicts = {
        "combinatorial": check_combinatorial(idata, cfg.tol_int * s.lambda0),
        "theorem1": check_theorem1(g, s, c, dp, ps, cfg.tol_vec),
    }
    prop1 = None
    if ext.extremal:
        verdicts["collinearity"] = check_collinearity(s, c, d, ls, ext.eccentricity, cfg.tol_vec)
        verdicts["spectral_excess"] = check_spectral_excess(s, c, d, ls, ext.eccentricity,
                                                            cfg.tol_ex)
        prop1 = check_prop1_inequality(s, c, d, ls, ext.eccentricity, cfg.tol_m, cfg.tol_ex)
    else:
        reason = (f"set is not extremal (eccentricity {ext.eccentricity} < dual degree "
                  f"{ext.dual_degree}); the characterization needs an extremal set")
        verdicts["collinearity"] = Verdict.skipped("collinearity", reason)
        verdicts["spectral_excess"] = Verdict.skipped("spectral_excess", reason)
        messages.append(reason)

    status, why = _status(verdicts)
    if why:
        messages.append(why)

    report = CodeReport(graph=g, members=c, config=cfg, spectrum=s, local=ls, partition=dp,
                        predistance=ps, extremality=ext, intersection=idata, hoffman=h,
                        hoffman_residual=h_res,
                        predistance_checks=predistance_checks(ps, cfg.tol_poly, cfg.tol_coef),
                        verdicts=verdicts, prop1=prop1, status=status, messages=messages)

    strict = status == "CPRC"
    try:
        report.subconstituents = subconstituent_report(g, s, c, dp, ps, ls, cfg.tol_m,
                                                       cfg.tol_poly, strict=strict)
        if strict:
            report.md = check_md_identities(s, c, d, ls, ps, cfg.tol_m, cfg.tol_poly,
                                            strict=True)
            report.recurrence_vs_intersection = _recurrence_vs_intersection(
                ps, idata, cfg.tol_poly * max(1.0, s.lambda0))
            if not report.recurrence_vs_intersection["agrees"]:
                raise InconsistencyError("recurrence coefficients differ from the "
                                         "intersection numbers")
    except InconsistencyError as exc:
        report.status = "INCONSISTENT"
        report.messages.append(str(exc))
    return report


def _recurrence_vs_intersection(ps: PredistanceSystem, idata: IntersectionData, tol: float):
    arr = idata.layer_means()
    k = min(len(arr), ps.degree + 1)
    rec = np.column_stack([ps.c, ps.a, ps.b])[:k]
    diff = float(np.max(np.abs(rec - arr[:k])))
    return {"max_difference": diff, "agrees": diff <= tol}
