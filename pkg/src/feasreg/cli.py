"""Command-line interface: curve export, region clouds, construction
export, verification suites, profile optimization, and figure-data
reproduction.

Outputs are deterministic given (arguments, seed); files are written
atomically (temp file + rename).  Exit codes: 0 ok, 2 usage, 3 domain
error, 4 capability cap exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import constructions, curves, lab, multipartite
from .errors import CapabilityError, DomainError, FeasRegError
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    clique_minus_edge,
    empty_graph,
    star_graph,
)
from .quantum import QuantumGraph, parse_quantum, serialize_quantum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CAPABILITY = 4
EXIT_VERIFY = 5

_ALIASES = {
    "k2": lambda: complete_graph(2),
    "k3": lambda: complete_graph(3),
    "k3bar": lambda: empty_graph(3),
    "k3minus": lambda: clique_minus_edge(3),
    "k4": lambda: complete_graph(4),
    "k4minus": lambda: clique_minus_edge(4),
    "c4": lambda: cycle_graph(4),
    "s2": lambda: star_graph(2),
    "s3": lambda: star_graph(3),
}


def _parse_q(spec: str) -> QuantumGraph:
    if spec == "goodman":
        return QuantumGraph([(1.0, complete_graph(3)), (1.0, empty_graph(3))])
    if spec in _ALIASES:
        return QuantumGraph.single(_ALIASES[spec]())
    return parse_quantum(spec)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _write_atomic(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".feasreg-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _grid(
    n: int, knots=(), lo: float = 0.0, hi: float = 1.0
) -> list[tuple[float, Fraction | None]]:
    """n-point grid on [lo, hi]: uniform nodes merged with exact rational
    knots, which displace nearby uniform nodes so the total stays near n."""
    ks = sorted(set(
        Fraction(k) for k in knots if lo <= float(k) <= hi
    ))[: max(0, n - 2)]
    base = max(2, n - len(ks))
    pts: list[tuple[float, Fraction | None]] = [
        (lo + i * (hi - lo) / (base - 1), None) for i in range(base)
    ]
    for k in ks:
        pts.append((float(k), k))
    pts.sort(key=lambda t: (t[0], t[1] is None))
    dedup: list[tuple[float, Fraction | None]] = []
    for x, k in pts:
        if dedup and dedup[-1][0] == x:
            if dedup[-1][1] is None and k is not None:
                dedup[-1] = (x, k)
            continue
        dedup.append((x, k))
    return dedup


# ----------------------------------------------------------------------
# curve registry
# ----------------------------------------------------------------------

def _curve_eval(name: str):
    """Returns (domain, eval(x) -> y, exact(Fraction) -> Fraction|None, knots)."""
    if name == "k3minus":
        return (0.0, 1.0), curves.k3minus_upper, None, \
            [Fraction(k - 1, k) for k in range(2, 11)]
    if name == "goodman-lower":
        return (0.0, 1.0), lambda x: curves.goodman_olpp(x)[0], None, \
            [Fraction(1, 2)]
    if name == "goodman-upper":
        return (0.0, 1.0), lambda x: curves.goodman_olpp(x)[1], None, \
            [Fraction(1, 2)]
    if name == "c4-large":
        return (0.5, 1.0), curves.c4_upper_large, \
            lambda f: 3 * f * (1 - f) ** 2, \
            [Fraction(k - 1, k) for k in range(2, 11)]
    if name == "k4minus-small":
        return (0.0, 0.5), curves.k4minus_small_upper, \
            lambda f: Fraction(3, 2) * f * f, [Fraction(1, 2)]
    if name == "s3-tail":
        return (curves.S3_TAIL_LEFT, 1.0), curves.s3_lower_tail, None, []
    if name.startswith("g-"):
        r = int(name[2:])
        return (0.0, 1.0), lambda x: curves.g_r(r, x), None, \
            [Fraction(k - 1, k) for k in range(max(2, r - 1), max(2, r - 1) + 9)]
    if name.startswith("h-"):
        t = int(name[2:])
        knots = curves.h_t_knots(t)
        return (0.0, 1.0), lambda x: curves.h_t_curve(t, x), None, \
            [a for a, _ in knots[1:-1][:12]]
    if name.startswith("s-"):
        t = int(name[2:])
        return (0.0, 0.5), lambda x: curves.s_t_curve(t, x), None, []
    if name.startswith("kk-"):
        r = int(name[3:])
        return (0.0, 1.0), lambda x: curves.kk_upper(r, x), None, []
    if name.startswith("kst-"):
        s, t = (int(v) for v in name[4:].split("-"))
        return (0.0, 1.0), lambda x: curves.kst_upper(s, t, x)[0], None, []
    raise DomainError(f"unknown curve {name!r}")


def _cmd_curve(args) -> int:
    (lo, hi), fn, exact, knots = _curve_eval(args.name)
    lines = ["x,y,source"]
    for x, frac in _grid(args.grid, knots, lo, hi):
        if frac is not None and exact is not None:
            y = float(exact(frac))
        else:
            y = fn(x)
        lines.append(f"{_fmt(x)},{_fmt(y)},closed_form")
    _write_atomic(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_region(args) -> int:
    q = _parse_q(args.q)
    cloud = lab.region_cloud(q, args.n)
    lines = ["x,y,graph6"]
    lines.extend(
        f"{_fmt(x)},{_fmt(y)},{g6}" for x, y, g6 in cloud.points
    )
    _write_atomic(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "turan":
        if args.r is None:
            raise DomainError("turan needs --r")
        g = constructions.turan(args.n, args.r)
    else:
        if args.x is None:
            raise DomainError(f"{kind} needs --x")
        builder = {
            "h-star": constructions.h_star,
            "bipartite": constructions.bipartite_b,
            "clique-isolated": constructions.clique_isolated,
            "coclique-joined": constructions.coclique_joined,
        }[kind]
        g = builder(args.n, args.x)
    if args.format == "json":
        _write_atomic(args.out, g.to_json() + "\n")
    else:
        _write_atomic(args.out, g.to_graph6() + "\n")
    return EXIT_OK


def _cmd_profile_opt(args) -> int:
    q = _parse_q(args.q)
    res = multipartite.optimize_profile(
        q, args.r, args.x, args.sense, seed=args.seed
    )
    payload = {
        "q": serialize_quantum(q),
        "r": args.r,
        "x": args.x,
        "sense": args.sense,
        "seed": args.seed,
        "value": res.value,
        "profile": list(res.profile),
        "iterations": res.iterations,
    }
    _write_atomic(args.out, json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_OK


_VERIFY_SUITES = {
    "goodman-vertex": lambda g: verify_tuple(lab.verify_goodman_vertex(g)),
    "corollary-vertex": lambda g: lab.verify_corollary_vertex_choice(g) is not None,
    "k4minus-pair": lab.verify_k4minus_pairbound,
    "c4-finite": lambda g: lab.verify_c4_finite(g)[2],
    "kst-2-2": lambda g: lab.verify_kst_decomposition(g, 2, 2),
    "kst-2-3": lambda g: lab.verify_kst_decomposition(g, 2, 3),
    "kst-3-3": lambda g: lab.verify_kst_decomposition(g, 3, 3),
}


def verify_tuple(t) -> bool:
    return t[-1]


def _cmd_verify(args) -> int:
    names = sorted(_VERIFY_SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in _VERIFY_SUITES:
            raise DomainError(f"unknown verifier {name!r}")
    suites = []
    total = 0
    for name in names:
        check = _VERIFY_SUITES[name]
        failures = []
        classes = 0
        for n in range(1, args.n + 1):
            for g in lab.enumerate_hosts(n):
                classes += 1
                if not check(g):
                    failures.append(g.to_graph6())
        total += len(failures)
        suites.append(
            {"name": name, "classes": classes, "failures": failures}
        )
    payload = {
        "command": "verify",
        "suite": args.suite,
        "n": args.n,
        "seed": args.seed,
        "suites": suites,
        "total_failures": total,
    }
    _write_atomic(args.out, json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_OK if total == 0 else EXIT_VERIFY


def _figure_rows(which: int, grid: int):
    """Grid data behind the four region figures."""
    if which == 1:
        knots = [Fraction(1, 2)]
        rows = []
        for x, frac in _grid(grid, knots):
            lo, hi = curves.goodman_olpp(x)
            if frac == Fraction(1, 2):
                lo = 0.25
            rows.append((x, lo, hi))
        return ["x,lower,upper"], rows
    if which == 2:
        knots = [Fraction(k - 1, k) for k in range(2, 31)]
        rows = []
        for x, frac in _grid(grid, knots):
            if frac is not None:
                k = frac.denominator
                y = float(Fraction(3, 2) * (frac - curves.g_r_critical(3, k)))
            else:
                y = curves.k3minus_upper(x)
            rows.append((x, 0.0, y))
        return ["x,lower,upper"], rows
    if which == 3:
        hknots = curves.h_t_knots(4)
        knots = [Fraction(1, 2)] + [a for a, _ in hknots[1:-1] if a > Fraction(1, 2)]
        exact = dict(hknots)
        rows = []
        for x, frac in _grid(grid, knots[:24]):
            if x <= 0.5:
                y = float(Fraction(3, 2) * frac * frac) if frac is not None \
                    else curves.k4minus_small_upper(x)
            elif frac is not None and frac in exact:
                y = float(exact[frac])
            else:
                y = curves.h_t_curve(4, x)
            rows.append((x, 0.0, y))
        return ["x,lower,upper"], rows
    if which == 4:
        knots = [Fraction(1, 2)] + [Fraction(k - 1, k) for k in range(3, 21)]
        rows = []
        for x, frac in _grid(grid, knots):
            if x <= 0.5:
                y = float(Fraction(3, 2) * frac * frac) if frac is not None \
                    else curves.k4minus_small_upper(x)
            else:
                y = float(3 * frac * (1 - frac) ** 2) if frac is not None \
                    else curves.c4_upper_large(x)
            rows.append((x, 0.0, y))
        return ["x,lower,upper"], rows
    raise DomainError(f"no figure {which}")


def _cmd_figures(args) -> int:
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    for which in (1, 2, 3, 4):
        header, rows = _figure_rows(which, args.grid)
        lines = header + [
            ",".join(_fmt(v) for v in row) for row in rows
        ]
        _write_atomic(
            os.path.join(outdir, f"figure{which}.csv"),
            "\n".join(lines) + "\n",
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None)

    ap = argparse.ArgumentParser(
        prog="feasreg",
        description="Feasible regions of induced quantum-graph densities",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("curve", parents=[common],
                       help="emit a closed-form curve as CSV")
    c.add_argument("name")
    c.add_argument("--grid", type=int, default=200)
    c.set_defaults(fn=_cmd_curve)

    r = sub.add_parser("region", parents=[common],
                       help="emit an exhaustive region cloud as CSV")
    r.add_argument("--q", required=True)
    r.add_argument("--n", type=int, required=True)
    r.set_defaults(fn=_cmd_region)

    g = sub.add_parser("construct", parents=[common],
                       help="emit a parameterized construction")
    g.add_argument("kind", choices=[
        "h-star", "bipartite", "clique-isolated", "coclique-joined", "turan",
    ])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--x", type=float, default=None)
    g.add_argument("--r", type=int, default=None)
    g.add_argument("--format", choices=["graph6", "json"], default="graph6")
    g.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("profile-opt", parents=[common],
                       help="optimize over part profiles")
    p.add_argument("--q", required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--sense", choices=["max", "min"], default="max")
    p.set_defaults(fn=_cmd_profile_opt)

    v = sub.add_parser("verify", parents=[common],
                       help="run finite-n inequality suites")
    v.add_argument("suite", help="'all' or a suite name")
    v.add_argument("--n", type=int, default=6)
    v.set_defaults(fn=_cmd_verify)

    f = sub.add_parser("figures", parents=[common],
                       help="emit the data behind the four figures")
    f.add_argument("--grid", type=int, default=200)
    f.set_defaults(fn=_cmd_figures)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (DomainError, FeasRegError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
