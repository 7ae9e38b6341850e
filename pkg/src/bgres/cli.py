"""Batch command-line front end.

Subcommands compute tables, resolutions, graphs and verification reports,
writing machine-readable artifacts (CSV/JSON/DOT) plus rendered charts
next to the delimited output when an output directory is given.  Every
command is deterministic: identical flags produce byte-identical files.
Exit status is nonzero when a verification report contains failures
(reports are still written).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .lambda_algebra import (
    closed_formula_audit,
    differential,
    lambda_basis,
    lambda_homology,
    parse_lambda,
)
from .polyfun import (
    cinj_gamma,
    cinj_lambda,
    cproj_lambda,
    cproj_s,
    ext_twist,
    gldim,
    gldim_witnesses,
    koszul_verify,
    maclane_table,
    sdr_series,
)
from .psr import build_graph, poincare
from .spheres import (
    Report,
    bockstein_verify,
    cp_infinity_table,
    ehp_verify,
    ext_table,
    james_check,
    ressphere_check,
    saturation_check,
    sphere_min_resolution,
)
from . import output


def _emit(args, name: str, text: str) -> None:
    if args.out:
        output.write_text(Path(args.out) / name, text)
    else:
        sys.stdout.write(text)


def _emit_report(args, name: str, config: dict, reports, tables=None) -> int:
    payload = output.report_payload(config, reports, tables)
    _emit(args, f"{name}.json", output.canonical_json(payload))
    return 0 if payload["passed"] else 1


def _plot_dir(args) -> Optional[Path]:
    if args.out and not getattr(args, "no_plot", False):
        return Path(args.out)
    return None


# ---------------------------------------------------------------------------
# command handlers


def cmd_ext_sphere(args) -> int:
    table = ext_table(args.nmax, args.tmax, args.smax)
    if args.format == "json":
        _emit(args, "ext_sphere.json", output.canonical_json(
            {"tool_version": __version__, "config": _config(args), **output.ext_table_json(table)}
        ))
    else:
        _emit(args, "ext_sphere.csv", output.ext_table_csv(table))
    plot = _plot_dir(args)
    if plot:
        output.save_ext_chart(table, list(range(1, args.nmax + 1)), plot / "ext_sphere.png")
    if args.check:
        rep = ressphere_check(args.tmax)
        return _emit_report(args, "ext_sphere_check", _config(args), [rep])
    return 0


def cmd_res_minimal(args) -> int:
    res = sphere_min_resolution(args.t)
    payload = {
        "tool_version": __version__,
        "config": _config(args),
        "complex": res.to_json_dict(),
        "poincare": poincare(res).to_json_dict(),
    }
    if args.format == "text":
        lines = [f"minimal resolution of the {args.t}-fold suspension:"]
        for k, term in enumerate(res.terms):
            lines.append(f"  position {k}: {term}")
        _emit(args, "res_minimal.txt", "\n".join(lines) + "\n")
    else:
        _emit(args, "res_minimal.json", output.canonical_json(payload))
    return 0


def cmd_graph(args) -> int:
    g = build_graph(args.m, args.n, args.max_weight)
    if args.format == "json":
        payload = {
            "tool_version": __version__,
            "config": _config(args),
            "complex": g.to_complex().to_json_dict(),
        }
        _emit(args, f"graph_{args.m}_{args.n}.json", output.canonical_json(payload))
    else:
        _emit(args, f"graph_{args.m}_{args.n}.dot", g.to_dot())
    return 0


def cmd_bockstein_verify(args) -> int:
    dmax = args.dmax if args.dmax is not None else 2 * args.nmax + 2
    rep = bockstein_verify(args.nmax, dmax)
    return _emit_report(args, "bockstein_verify", {**_config(args), "dmax": dmax}, [rep])


def cmd_saturation_verify(args) -> int:
    lo, hi = (int(v) for v in args.window.split(":"))
    rep = saturation_check(args.kmax, window=(lo, hi))
    return _emit_report(args, "saturation_verify", _config(args), [rep])


def cmd_ehp_verify(args) -> int:
    reports = [ehp_verify(n, args.smax, args.tmax) for n in range(1, args.nmax + 1)]
    return _emit_report(args, "ehp_verify", _config(args), reports)


def cmd_james_verify(args) -> int:
    reports = [james_check(k, args.smax, args.tmax) for k in range(0, args.kmax + 1)]
    return _emit_report(args, "james_verify", _config(args), reports)


def cmd_cpinf_table(args) -> int:
    table = cp_infinity_table(args.nmax, args.kmax, args.smax)
    if args.format == "json":
        _emit(args, "cpinf_table.json", output.canonical_json(
            {"tool_version": __version__, "config": _config(args), **output.ext_table_json(table)}
        ))
    else:
        _emit(args, "cpinf_table.csv", output.ext_table_csv(table))
    plot = _plot_dir(args)
    if plot:
        output.save_ext_chart(table, list(range(1, args.nmax + 1)), plot / "cpinf_table.png")
    return 0


def cmd_lambda_basis(args) -> int:
    rows = []
    for r in range(args.rmax + 1):
        for s in range(args.smax + 1):
            for word in lambda_basis(r, s):
                rows.append((r, s, "".join(f"l({a})" for a in word) or "1"))
    _emit(args, "lambda_basis.csv", output.csv_table(["r", "s", "word"], rows))
    return 0


def cmd_lambda_diff(args) -> int:
    x = parse_lambda(args.element)
    lines = [f"d({x}) = {differential(x)}"]
    _emit(args, "lambda_diff.txt", "\n".join(lines) + "\n")
    return 0


def cmd_lambda_homology(args) -> int:
    dims = lambda_homology(args.rmax, args.smax)
    if args.format == "json":
        payload = {
            "tool_version": __version__,
            "config": _config(args),
            "dims": {f"{r},{s}": v for (r, s), v in sorted(dims.items())},
        }
        _emit(args, "lambda_homology.json", output.canonical_json(payload))
    else:
        _emit(args, "lambda_homology.csv", output.homology_csv(dims))
    plot = _plot_dir(args)
    if plot:
        output.save_homology_chart(dims, plot / "lambda_homology.png", "bigraded homology")
    return 0


def cmd_lambda_audit(args) -> int:
    entries = closed_formula_audit(args.amax, args.bmax)
    payload = {
        "tool_version": __version__,
        "config": _config(args),
        "entries": [e.to_json_dict() for e in entries],
        "mismatches": sum(0 if e.matches else 1 for e in entries),
    }
    _emit(args, "lambda_audit.json", output.canonical_json(payload))
    return 0


_SERIES = {
    "inj-gamma": cinj_gamma,
    "proj-s": cproj_s,
    "inj-lambda": cinj_lambda,
    "proj-lambda": cproj_lambda,
}


def cmd_poly_series(args) -> int:
    if args.kind == "twist":
        series = sdr_series(args.d, args.r)
    else:
        series = _SERIES[args.kind](args.d)
    payload = {
        "tool_version": __version__,
        "config": _config(args),
        "series": output.series_json(series),
    }
    _emit(args, "poly_series.json", output.canonical_json(payload))
    return 0


def cmd_poly_twist(args) -> int:
    dims = ext_twist(args.r)
    _emit(args, "poly_twist.csv", output.csv_table(["k", "dim"], sorted(dims.items())))
    plot = _plot_dir(args)
    if plot:
        output.save_bar_chart(dims, plot / "poly_twist.png", f"twisted self-extensions (r={args.r})", "k")
    return 0


def cmd_poly_maclane(args) -> int:
    table = maclane_table(args.kmax)
    _emit(args, "poly_maclane.csv", output.csv_table(["k", "dim"], sorted(table.items())))
    plot = _plot_dir(args)
    if plot:
        output.save_bar_chart(table, plot / "poly_maclane.png", "cohomology of F2", "k")
    return 0


def cmd_poly_gldim(args) -> int:
    rows = []
    reports = []
    for d in range(1, args.dmax + 1):
        w = gldim_witnesses(d)
        rows.append((d, gldim(d), w.inj_length, w.proj_length))
        rep = Report(f"gldim-{d}")
        rep.checked += 1
        if w.inj_length != 2 * d - 2 or w.proj_length != 2 * d - 2:
            rep.failures.append(f"d={d}: canonical resolutions miss the length bound")
        if d >= 2 and (d & (d - 1)) == 0:
            rep.checked += 1
            if not w.consistent:
                rep.failures.append(f"d={d}: top extension witness failed")
        reports.append(rep)
    _emit(args, "poly_gldim.csv", output.csv_table(
        ["d", "gldim", "inj_length", "proj_length"], rows
    ))
    return _emit_report(args, "poly_gldim_check", _config(args), reports)


def cmd_poly_koszul(args) -> int:
    rep = koszul_verify(args.d, args.v)
    wrapped = Report(f"koszul-{args.d}-{args.v}")
    wrapped.checked = len(rep.gamma_lambda_homology) + len(rep.lambda_s_homology)
    if not rep.passed:
        wrapped.failures.append("nontrivial homology in an evaluated Koszul complex")
    return _emit_report(
        args, "poly_koszul", _config(args), [wrapped], tables=rep.to_json_dict()
    )


# ---------------------------------------------------------------------------
# parser wiring


def _config(args) -> dict:
    skip = {"func", "out", "no_plot"}
    return {
        k: v for k, v in sorted(vars(args).items())
        if k not in skip and v is not None and not callable(v)
    }


def _add_common(p, formats=("csv", "json"), default=None):
    p.add_argument("--out", help="output directory (default: stdout)")
    if formats:
        p.add_argument(
            "--format", choices=list(formats), default=default or formats[0]
        )
    p.add_argument("--no-plot", action="store_true", help="skip chart rendering")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bgres",
        description="exact mod-2 resolutions, Ext charts and functor calculators",
    )
    parser.add_argument("--version", action="version", version=f"bgres {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    ext = top.add_parser("ext", help="extension-group charts").add_subparsers(
        dest="sub", required=True
    )
    p = ext.add_parser("sphere", help="chart cells from minimal resolutions")
    p.add_argument("--tmax", "--t", type=int, default=8)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--smax", type=int, default=7)
    p.add_argument("--check", action="store_true", help="also run the closed-form check")
    _add_common(p)
    p.set_defaults(func=cmd_ext_sphere)

    res = top.add_parser("res", help="resolutions").add_subparsers(dest="sub", required=True)
    p = res.add_parser("minimal", help="minimal resolution of a suspended sphere")
    p.add_argument("--t", type=int, required=True)
    _add_common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_res_minimal)

    p = top.add_parser("graph", help="suspension graph of a Brown-Gitler module")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--max-weight", type=int, default=None)
    _add_common(p, formats=("dot", "json"))
    p.set_defaults(func=cmd_graph)

    bock = top.add_parser("bockstein", help="Bockstein sequence").add_subparsers(
        dest="sub", required=True
    )
    p = bock.add_parser("verify", help="rank-check exactness of a window")
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--dmax", type=int, default=None,
                   help="internal degree cutoff (default 2*nmax+2)")
    _add_common(p, formats=())
    p.set_defaults(func=cmd_bockstein_verify)

    sat = top.add_parser("saturation", help="suspension saturation").add_subparsers(
        dest="sub", required=True
    )
    p = sat.add_parser("verify")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--window", default="1:14")
    _add_common(p, formats=())
    p.set_defaults(func=cmd_saturation_verify)

    ehp = top.add_parser("ehp", help="EHP windows").add_subparsers(dest="sub", required=True)
    p = ehp.add_parser("verify")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--smax", type=int, default=6)
    p.add_argument("--tmax", type=int, default=12)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_ehp_verify)

    james = top.add_parser("james", help="splitting at two-power spheres").add_subparsers(
        dest="sub", required=True
    )
    p = james.add_parser("verify")
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--smax", type=int, default=6)
    p.add_argument("--tmax", type=int, default=12)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_james_verify)

    cpinf = top.add_parser("cpinf", help="infinite complex projective space").add_subparsers(
        dest="sub", required=True
    )
    p = cpinf.add_parser("table")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--smax", type=int, default=6)
    _add_common(p)
    p.set_defaults(func=cmd_cpinf_table)

    lam = top.add_parser("lambda", help="the Lambda algebra").add_subparsers(
        dest="sub", required=True
    )
    p = lam.add_parser("basis")
    p.add_argument("--rmax", type=int, default=6)
    p.add_argument("--smax", type=int, default=10)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_lambda_basis)
    p = lam.add_parser("diff")
    p.add_argument("--element", required=True, help='e.g. "l(4)" or "l(2)l(1)"')
    _add_common(p, formats=())
    p.set_defaults(func=cmd_lambda_diff)
    p = lam.add_parser("homology")
    p.add_argument("--rmax", type=int, default=10)
    p.add_argument("--smax", type=int, default=14)
    _add_common(p)
    p.set_defaults(func=cmd_lambda_homology)
    p = lam.add_parser("audit")
    p.add_argument("--amax", type=int, default=10)
    p.add_argument("--bmax", type=int, default=3)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_lambda_audit)

    poly = top.add_parser("poly", help="strict polynomial functor calculators").add_subparsers(
        dest="sub", required=True
    )
    p = poly.add_parser("series")
    p.add_argument("--kind", choices=sorted(_SERIES) + ["twist"], required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_poly_series)
    p = poly.add_parser("twist")
    p.add_argument("--r", type=int, required=True)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_poly_twist)
    p = poly.add_parser("maclane")
    p.add_argument("--kmax", type=int, default=10)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_poly_maclane)
    p = poly.add_parser("gldim")
    p.add_argument("--dmax", type=int, default=8)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_poly_gldim)
    p = poly.add_parser("koszul")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--v", type=int, default=2)
    _add_common(p, formats=())
    p.set_defaults(func=cmd_poly_koszul)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
