"""Stable JSON and plain-text rendering of analysis results.

Every JSON document has the same top-level keys; sections a command does
not compute are ``null``. Floats are written with 17 significant digits
so a rerun with the same input is byte-identical.
"""
from __future__ import annotations

import json
import math

import numpy as np

from .codes import CHARACTERIZATIONS, CodeReport, Verdict, predistance_checks
from .config import Config
from .eigen import Spectrum
from .graph import DistancePartition, Graph, VertexSet
from .local import Extremality, LocalSpectrum
from .polynomials import Polynomial, PredistanceSystem, hoffman_polynomial

TOP_LEVEL_KEYS = ("graph", "set", "spectrum", "local_spectrum", "partition",
                  "polynomials", "verdicts", "margins", "config")


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, frozenset, set)):
        items = sorted(x) if isinstance(x, (frozenset, set)) else x
        return [_plain(v) for v in items]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, Polynomial):
        return x.tolist()
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def dumps(obj, indent: int = 2) -> str:
    """JSON text with floats rendered as ``%.17g``; NaN and inf become null."""
    def emit(x, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if x is None:
            return "null"
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, int):
            return str(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                return "null"
            text = format(x, ".17g")
            if "e" not in text and "." not in text and "n" not in text:
                text += ".0"
            return text
        if isinstance(x, str):
            return json.dumps(x)
        if isinstance(x, list):
            if not x:
                return "[]"
            if all(not isinstance(v, (list, dict)) for v in x):
                return "[" + ", ".join(emit(v, level + 1) for v in x) + "]"
            return "[\n" + ",\n".join(pad + emit(v, level + 1) for v in x) + "\n" + end + "]"
        if isinstance(x, dict):
            if not x:
                return "{}"
            return "{\n" + ",\n".join(f"{pad}{json.dumps(k)}: {emit(v, level + 1)}"
                                      for k, v in x.items()) + "\n" + end + "}"
        raise TypeError(f"cannot serialise {type(x).__name__}")

    return emit(_plain(obj), 0) + "\n"


def graph_section(g: Graph) -> dict:
    degrees = [g.degree(i) for i in range(g.n)]
    return {"n": g.n, "edges": len(g.edges), "regular": g.is_regular(),
            "min_degree": min(degrees), "max_degree": max(degrees)}


def spectrum_section(s: Spectrum) -> dict:
    return {"eigenvalues": s.eigenvalues, "multiplicities": list(s.multiplicities),
            "pi": s.pi, "perron": s.perron, "perron_norm_sq": s.perron_norm_sq}


def local_section(ls: LocalSpectrum, ext: Extremality = None) -> dict:
    out = {
        "mu": ls.mu,
        "multiplicities": ls.mult,
        "global_indices": list(ls.parent_indices),
        "dual_degree": ls.dual_degree,
        "pi": ls.pi_c,
        "rho_norm_sq": ls.rho.norm_sq,
        "all_multiplicities": ls.all_mult,
        "discarded": [{"index": l, "multiplicity": m} for l, m in ls.discarded],
    }
    if ext is not None:
        out["eccentricity"] = ext.eccentricity
        out["extremal"] = ext.extremal
    return out


def partition_section(dp: DistancePartition) -> dict:
    return {"eccentricity": dp.eccentricity,
            "layers": [list(layer) for layer in dp.layers],
            "sizes": [len(layer) for layer in dp.layers]}


def polynomials_section(ps: PredistanceSystem, hoffman: Polynomial, cfg: Config) -> dict:
    return {
        "predistance": [{"k": k, "coefficients": p, "values": ps.values[k]}
                        for k, p in enumerate(ps.polys)],
        "recurrence": {"a": ps.a, "b": ps.b, "c": ps.c},
        "hoffman": hoffman,
        "checks": predistance_checks(ps, cfg.tol_poly, cfg.tol_coef),
    }


def _margin(v: Verdict) -> dict:
    if not v.ran:
        return {"ran": False, "reason": v.reason}
    return {"ran": True, "holds": v.holds, "value": v.value, "threshold": v.threshold,
            "decisive": v.decisive}


def _verdict_details(v: Verdict) -> dict:
    if v.name == "combinatorial":
        return {"layer_spreads": v.details["layer_spreads"],
                "intersection_array": v.details.get("intersection_array")}
    if v.name == "theorem1":
        return {"residuals": v.details["residuals"]}
    if v.name == "collinearity":
        d = dict(v.details)
        d["polynomial"] = d["polynomial"].tolist()
        return d
    return dict(v.details)


def empty_document(g: Graph, cfg: Config) -> dict:
    doc = dict.fromkeys(TOP_LEVEL_KEYS)
    doc["graph"] = graph_section(g)
    doc["config"] = cfg.as_dict()
    return doc


def report_document(r: CodeReport) -> dict:
    doc = empty_document(r.graph, r.config)
    doc["set"] = list(r.members)
    doc["spectrum"] = spectrum_section(r.spectrum)
    doc["local_spectrum"] = local_section(r.local, r.extremality)
    doc["partition"] = partition_section(r.partition)
    doc["polynomials"] = polynomials_section(r.predistance, r.hoffman, r.config)
    doc["polynomials"]["hoffman_residual"] = r.hoffman_residual
    doc["verdicts"] = {
        "status": r.status,
        "exit_code": r.exit_code,
        "characterizations": {name: r.verdicts[name].holds for name in CHARACTERIZATIONS},
        "details": {name: _verdict_details(r.verdicts[name]) for name in CHARACTERIZATIONS
                    if r.verdicts[name].ran},
        "extremal": r.extremality.extremal,
        "prop1": r.prop1,
        "subconstituents": r.subconstituents,
        "md_identities": r.md,
        "recurrence_vs_intersection": r.recurrence_vs_intersection,
        "messages": list(r.messages),
    }
    doc["margins"] = {name: _margin(r.verdicts[name]) for name in CHARACTERIZATIONS}
    return doc


# -- text mode ----------------------------------------------------------------

def _fmt(xs, digits=6):
    return "[" + ", ".join(f"{float(x):.{digits}g}" for x in xs) + "]"


def text_spectrum(s: Spectrum) -> str:
    lines = ["eigenvalue      multiplicity  pi"]
    for lam, m, p in zip(s.eigenvalues, s.multiplicities, s.pi):
        lines.append(f"{lam:>12.8g}  {m:>12d}  {p:.8g}")
    lines.append(f"||nu||^2 = {s.perron_norm_sq:.10g}")
    return "\n".join(lines)


def text_local(ls: LocalSpectrum, ext: Extremality) -> str:
    lines = [f"||rho C||^2 = {ls.rho.norm_sq:.10g}",
             "mu              m_C(mu)         pi_l(C)"]
    for mu, m, p in zip(ls.mu, ls.mult, ls.pi_c):
        lines.append(f"{mu:>12.8g}  {m:>14.10g}  {p:.8g}")
    lines.append(f"dual degree {ext.dual_degree}, eccentricity {ext.eccentricity}, "
                 f"{'extremal' if ext.extremal else 'not extremal'}")
    if ls.discarded:
        lines.append("discarded multiplicities: " +
                     ", ".join(f"l={l}: {m:.3g}" for l, m in ls.discarded))
    return "\n".join(lines)


def text_polys(ps: PredistanceSystem, hoffman: Polynomial) -> str:
    lines = []
    for k, p in enumerate(ps.polys):
        lines.append(f"p_{k}: coeffs {_fmt(p.coeffs)}  values {_fmt(ps.values[k])}")
    lines.append("recurrence (c_k, a_k, b_k):")
    for k in range(ps.degree + 1):
        lines.append(f"  k={k}: ({ps.c[k]:.8g}, {ps.a[k]:.8g}, {ps.b[k]:.8g})")
    lines.append(f"Hoffman: {_fmt(hoffman.coeffs)}")
    return "\n".join(lines)


def text_report(r: CodeReport) -> str:
    lines = [f"set {list(r.members)} in graph with n={r.graph.n}",
             text_local(r.local, r.extremality), ""]
    for name in CHARACTERIZATIONS:
        v = r.verdicts[name]
        if v.ran:
            lines.append(f"{name:<16} {'yes' if v.holds else 'no':<4} "
                         f"value {v.value:.3e} / threshold {v.threshold:.1e}"
                         f"{'' if v.decisive else '  (borderline)'}")
        else:
            lines.append(f"{name:<16} skipped: {v.reason}")
    lines.append(f"status: {r.status}")
    lines += r.messages
    return "\n".join(lines)
