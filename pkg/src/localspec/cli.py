"""Command-line front end.

    localspec spectrum --generate cycle 4
    localspec local    --graph k3.txt --set 0
    localspec check    --generate hypercube 7 --set @hamming74.txt
    localspec polys    --generate cycle 6 --set 0 --format text

``check`` exits 0 for a completely pseudo-regular code, 1 when it is not
one, 2 when the characterizations disagree or are borderline, and 3 on
input or numerical errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report
from .codes import NotExtremalError, analyze
from .config import Config
from .eigen import ConvergenceError, SpectrumError, spectral_decomposition
from .graph import GraphError, VertexSetError, generate, load_graph, vertex_set
from .local import InconsistencyError, is_extremal, local_spectrum
from .polynomials import PolynomialBreakdown, hoffman_polynomial, predistance_polynomials

EXIT_ERROR = 3


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="PATH", help="edge-list file, or - for stdin")
    src.add_argument("--generate", nargs="+", metavar="ARG",
                     help="NAME [PARAMS...]: cycle N | hypercube K | complete N | path N | petersen")
    common.add_argument("--set", dest="members", metavar="LIST",
                        help="comma-separated vertices, or @FILE with one index per line")
    defaults = Config()
    for name in ("eig", "proj", "m", "poly", "coef", "vec", "int", "ex"):
        common.add_argument(f"--tol-{name}", type=float, default=getattr(defaults, f"tol_{name}"),
                            metavar="X")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="localspec",
                                description="Local spectra and completely pseudo-regular codes")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="distinct eigenvalues and multiplicities")
    sub.add_parser("local", parents=[common], help="local spectrum of a vertex set")
    sub.add_parser("check", parents=[common], help="decide whether a set is a CPRC")
    sub.add_parser("polys", parents=[common], help="predistance polynomial system")
    return p


def _config(args) -> Config:
    return Config(tol_eig=args.tol_eig, tol_proj=args.tol_proj, tol_m=args.tol_m,
                  tol_poly=args.tol_poly, tol_coef=args.tol_coef, tol_vec=args.tol_vec,
                  tol_int=args.tol_int, tol_ex=args.tol_ex, output_format=args.format,
                  seed=args.seed)


def _read_graph(args):
    if args.generate:
        name, *params = args.generate
        try:
            ints = [int(x) for x in params]
        except ValueError:
            raise GraphError(f"generator parameters must be integers: {params}") from None
        return generate(name, ints)
    if args.graph == "-":
        return load_graph(sys.stdin.read())
    return load_graph(Path(args.graph).read_text(encoding="utf-8"))


def parse_set(text: str) -> list:
    if text.startswith("@"):
        lines = Path(text[1:]).read_text(encoding="utf-8").splitlines()
        items = [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]
    else:
        items = [x.strip() for x in text.split(",") if x.strip()]
    try:
        return [int(x) for x in items]
    except ValueError:
        raise VertexSetError(f"vertex set entries must be integers: {items}") from None


def _members(args, g):
    if args.members is None:
        raise VertexSetError("--set is required for this command")
    return vertex_set(g, parse_set(args.members))


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    try:
        cfg = _config(args)
        g = _read_graph(args)
        if args.command == "check":
            r = analyze(g, _members(args, g), cfg)
            text = (report.dumps(report.report_document(r)) if cfg.output_format == "json"
                    else report.text_report(r) + "\n")
            out.write(text)
            return r.exit_code

        s = spectral_decomposition(g, cfg.tol_eig, cfg.tol_proj)
        doc = report.empty_document(g, cfg)
        doc["spectrum"] = report.spectrum_section(s)
        text = report.text_spectrum(s)
        if args.command in ("local", "polys"):
            c = _members(args, g)
            ls = local_spectrum(s, c, cfg.tol_m)
            ext = is_extremal(g, s, c, cfg.tol_m, ls=ls)
            doc["set"] = list(c)
            doc["local_spectrum"] = report.local_section(ls, ext)
            text = report.text_local(ls, ext)
            if args.command == "polys":
                ps = predistance_polynomials(ls, cfg.tol_poly)
                h = hoffman_polynomial(ls, s.perron_norm_sq, ls.rho.norm_sq)
                doc["polynomials"] = report.polynomials_section(ps, h, cfg)
                text = report.text_polys(ps, h)
        out.write(report.dumps(doc) if cfg.output_format == "json" else text + "\n")
        return 0
    except (GraphError, VertexSetError, OSError, ValueError, ConvergenceError, SpectrumError,
            PolynomialBreakdown, InconsistencyError, NotExtremalError) as exc:
        print(f"localspec: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
