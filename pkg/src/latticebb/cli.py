"""Command-line front end: lattice files in, JSON/text/SVG out.

Subcommands: hnf, analyze, order-ideals, border-basis, reduce, dim2, plot,
oracle-check.  Exit codes: 0 success, 1 computational contract violation
(e.g. reducing against an ideal that is not max-compatible), 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dim2 as dim2_mod
from . import oracle as oracle_mod
from .border_basis import border, border_families, expand_binomials, groebner_realizable
from .compatibility import ContractViolationError, representative_in
from .lattice_core import Lattice, LatticeInputError, RankError, lattice_from_json, member
from .lattice_minimals import compute_A1, compute_X1
from .region_graph import maximal_order_ideals
from .compatibility import is_max_compatible
from .staircase import (
    INF,
    RectUnion,
    complement_of_cones,
    rect_union_from_json,
    rect_union_to_json,
)


def variable_names(n: int):
    return ["x", "y", "z"][:n] if n <= 3 else [f"x{i + 1}" for i in range(n)]


def monomial_str(exp, names) -> str:
    parts = []
    for e, name in zip(exp, names):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def binomial_str(b, r, names) -> str:
    return f"{monomial_str(b, names)} - {monomial_str(r, names)}"


def parse_monomial(s: str, n: int):
    """Inverse of monomial_str; returns the exponent vector."""
    names = variable_names(n)
    exp = [0] * n
    s = s.strip()
    if s == "1":
        return tuple(exp)
    for factor in s.split("*"):
        if "^" in factor:
            name, _, power = factor.partition("^")
            e = int(power)
        else:
            name, e = factor, 1
        exp[names.index(name.strip())] += e
    return tuple(exp)


def _rect_json(rect):
    return {
        "lo": [int(a) for a in rect.lo],
        "hi": [None if b == INF else int(b) for b in rect.hi],
    }


def _map_json(m):
    return {"matrix": [list(row) for row in m.matrix], "offset": list(m.offset)}


def _load_lattice(path) -> Lattice:
    with open(path) as fh:
        return lattice_from_json(fh.read())


def _load_ideal(path, n) -> RectUnion:
    with open(path) as fh:
        obj = json.load(fh)
    S = rect_union_from_json(obj, dim=n)
    if S.dim != n:
        raise ValueError(f"ideal dimension {S.dim} does not match lattice n={n}")
    return S


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, json.dumps(obj, indent=2) + "\n")


def _pipeline_payload(L, check_groebner=False, only_max=False):
    graph, cliques, ideals = maximal_order_ideals(L)
    flags = [is_max_compatible(I, L) for I in ideals]
    realizable = witnesses = None
    if check_groebner:
        realizable, witnesses = [], []
        for I, mc in zip(ideals, flags):
            if not mc:
                realizable.append(None)
                witnesses.append(None)
                continue
            res = groebner_realizable(border_families(I, L))
            realizable.append(res.realizable)
            witnesses.append(list(res.witness) if res.witness else None)
    rows = list(zip(ideals, flags, range(len(ideals))))
    if only_max:
        rows = [row for row in rows if row[1]]
    payload = {
        "regions": [
            {"rep": list(r.representative), "rects": rect_union_to_json(r.points)}
            for r in graph.regions
        ],
        "non_edges": [
            [i, j]
            for i in range(len(graph.regions))
            for j in range(i + 1, len(graph.regions))
            if not graph.adjacency[i][j]
        ],
        "cliques": [list(c) for c in cliques],
        "ideals": [rect_union_to_json(I) for I, _, _ in rows],
        "max_compatible": [mc for _, mc, _ in rows],
    }
    if check_groebner:
        payload["groebner_realizable"] = [realizable[k] for _, _, k in rows]
        payload["witnesses"] = [witnesses[k] for _, _, k in rows]
    return payload, graph, [I for I, _, _ in rows]


def _cmd_hnf(args) -> int:
    L = _load_lattice(args.lattice)
    if args.format == "text":
        lines = [" ".join(str(x) for x in row) for row in L.hnf]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(
            args,
            {
                "n": L.n,
                "m": L.m,
                "hnf": [list(r) for r in L.hnf],
                "pivots": list(L.pivots),
                "pivot_columns": list(L.pivot_cols),
            },
        )
    return 0


def _cmd_analyze(args) -> int:
    L = _load_lattice(args.lattice)
    a1 = compute_A1(L)
    x1 = compute_X1(L)
    V = complement_of_cones(a1, L.n)
    _emit_json(
        args,
        {
            "A1": [list(a) for a in a1],
            "X1": [[list(a0), list(a1_)] for a0, a1_ in x1],
            "V": rect_union_to_json(V),
        },
    )
    return 0


def _cmd_order_ideals(args) -> int:
    L = _load_lattice(args.lattice)
    payload, _, _ = _pipeline_payload(
        L, check_groebner=args.check_groebner, only_max=args.only_max
    )
    _emit_json(args, payload)
    return 0


def _cmd_border_basis(args) -> int:
    L = _load_lattice(args.lattice)
    if not args.ideal:
        raise LatticeInputError("border-basis requires --ideal")
    O = _load_ideal(args.ideal, L.n)
    fams = border_families(O, L)
    bd = border(O)
    names = variable_names(L.n)
    finite = all(f.params.cardinality() != INF for f in fams)
    if args.format == "text":
        if finite:
            lines = [binomial_str(b, r, names) for b, r in expand_binomials(fams)]
        else:
            lines = []
            for f in fams:
                lines.append(
                    f"border {_map_json(f.border_map)} rep {_map_json(f.rep_map)}"
                    f" over {_rect_json(f.params)}"
                )
        _emit(args, "\n".join(lines) + "\n")
        return 0
    payload = {
        "border": rect_union_to_json(bd),
        "families": [
            {
                "params": _rect_json(f.params),
                "border": _map_json(f.border_map),
                "rep": _map_json(f.rep_map),
            }
            for f in fams
        ],
    }
    if args.render == "monomials":
        if finite:
            payload["binomials"] = [
                binomial_str(b, r, names) for b, r in expand_binomials(fams)
            ]
        else:
            payload["binomials"] = None
    _emit_json(args, payload)
    return 0


def _cmd_reduce(args) -> int:
    L = _load_lattice(args.lattice)
    if not args.ideal:
        raise LatticeInputError("reduce requires --ideal")
    O = _load_ideal(args.ideal, L.n)
    if not is_max_compatible(O, L):
        raise ContractViolationError("ideal is not max-compatible")
    out = []
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            z = tuple(int(tok) for tok in line.split())
        except ValueError as e:
            raise LatticeInputError(f"bad exponent vector {line!r}") from e
        if len(z) != L.n:
            raise LatticeInputError(f"vector {line!r} does not have length {L.n}")
        out.append(representative_in(z, O, L))
    if args.format == "text":
        _emit(args, "\n".join(" ".join(str(x) for x in v) for v in out) + "\n")
    else:
        _emit_json(args, {"reps": [list(v) for v in out]})
    return 0


def _cmd_dim2(args) -> int:
    L = _load_lattice(args.lattice)
    two = dim2_mod.second_hnf(L)
    payload, _, ideals = _pipeline_payload(L, check_groebner=args.check_groebner)
    by_points = {d.points: d for d in dim2_mod.ideals_2d(L)}
    gbs = []
    for I in ideals:
        d = by_points.get(I)
        gbs.append(
            [[list(b), list(r)] for b, r in d.groebner_basis] if d else None
        )
    payload["a"] = [two.a1, two.a2, two.a3]
    payload["b"] = [two.b1, two.b2, two.b3]
    payload["groebner_bases"] = gbs
    _emit_json(args, payload)
    return 0


def _cmd_plot(args) -> int:
    L = _load_lattice(args.lattice)
    if L.n != 2:
        raise LatticeInputError("plot requires a two-dimensional lattice")
    graph, _, _ = maximal_order_ideals(L)
    svg = render_svg(L, graph.regions, graph.x1, graph.adjacency)
    _emit(args, svg)
    return 0


def _cmd_oracle_check(args) -> int:
    L = _load_lattice(args.lattice)
    cap = args.cap if args.cap else None
    oracle_ideals = oracle_mod.direct_maximal_ideals(L, cap)
    _, _, ideals = maximal_order_ideals(L)
    pipeline = sorted(sorted(I.points()) for I in ideals)
    match = pipeline == sorted(sorted(s) for s in oracle_ideals)
    _emit_json(
        args,
        {
            "oracle_ideals": len(oracle_ideals),
            "pipeline_ideals": len(ideals),
            "match": match,
        },
    )
    return 0 if match else 1


_PALETTE = [
    "#aecde1", "#f4b183", "#c5e0b4", "#ffe699", "#d7bde2", "#f5b7b1",
    "#a9dfbf", "#aed6f1", "#fad7a0", "#d5dbdb", "#e6b0aa", "#abebc6",
]


def _region_letter(i: int) -> str:
    return chr(ord("A") + i) if i < 26 else f"R{i}"


def render_svg(L, regions, x1, adjacency) -> str:
    """Deterministic picture: grid, lattice points, shaded regions, pair
    segments, and the quotient graph on a circle in a side panel."""
    import math as _m

    cell = 24
    extent = 6
    for r in regions:
        for rect in r.points.rects:
            for v in rect.lo:
                extent = max(extent, v + 3)
            for v in rect.hi:
                if v != INF:
                    extent = max(extent, v + 2)
    for a0, a1 in x1:
        extent = max(extent, max(a0) + 2, max(a1) + 2)
    extent = min(extent, 40)
    gw = extent * cell
    panel = 260
    width, height = gw + panel + 40, gw + 20
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')

    def px(x):
        return 10 + x * cell

    def py(y):
        return height - 10 - (y + 1) * cell

    # shaded region cells with letters at representatives
    for idx, region in enumerate(regions):
        color = _PALETTE[idx % len(_PALETTE)]
        letter = _region_letter(idx)
        for rect in region.points.rects:
            xe = extent if rect.hi[0] == INF else min(rect.hi[0], extent)
            ye = extent if rect.hi[1] == INF else min(rect.hi[1], extent)
            for x in range(rect.lo[0], xe):
                for y in range(rect.lo[1], ye):
                    out.append(
                        f'<rect class="region-cell region-{letter}" x="{px(x)}" '
                        f'y="{py(y)}" width="{cell}" height="{cell}" fill="{color}"/>'
                    )
        rx, ry = region.representative
        if rx < extent and ry < extent:
            out.append(
                f'<text class="region-label" x="{px(rx) + cell / 2:.1f}" '
                f'y="{py(ry) + cell * 0.7:.1f}" text-anchor="middle" '
                f'font-size="13">{letter}</text>'
            )

    # grid
    for i in range(extent + 1):
        out.append(
            f'<line x1="{px(i)}" y1="{py(-1)}" x2="{px(i)}" y2="{py(extent - 1)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{px(0)}" y1="{py(i - 1)}" x2="{px(extent)}" y2="{py(i - 1)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )

    # lattice points within the window
    for x in range(extent):
        for y in range(extent):
            if member((x, y), L):
                out.append(
                    f'<circle class="lattice-point" cx="{px(x) + cell / 2:.1f}" '
                    f'cy="{py(y) + cell / 2:.1f}" r="3.5" fill="#1f3d7a"/>'
                )

    # one segment per unordered pair
    seen = set()
    for a0, a1 in x1:
        key = tuple(sorted([a0, a1]))
        if key in seen:
            continue
        seen.add(key)
        out.append(
            f'<line class="pair-segment" x1="{px(a0[0]) + cell / 2:.1f}" '
            f'y1="{py(a0[1]) + cell / 2:.1f}" x2="{px(a1[0]) + cell / 2:.1f}" '
            f'y2="{py(a1[1]) + cell / 2:.1f}" stroke="#cc0000" stroke-width="2"/>'
        )

    # quotient graph panel: vertices on a circle
    k = len(regions)
    cx, cy, rad = gw + 40 + panel / 2, height / 2, panel / 2 - 30
    pos = []
    for i in range(k):
        ang = -_m.pi / 2 + 2 * _m.pi * i / max(k, 1)
        pos.append((cx + rad * _m.cos(ang), cy + rad * _m.sin(ang)))
    for i in range(k):
        for j in range(i + 1, k):
            x1_, y1_ = pos[i]
            x2_, y2_ = pos[j]
            if adjacency[i][j]:
                out.append(
                    f'<line class="edge" x1="{x1_:.1f}" y1="{y1_:.1f}" '
                    f'x2="{x2_:.1f}" y2="{y2_:.1f}" stroke="#444444" stroke-width="1.2"/>'
                )
            else:
                out.append(
                    f'<line class="non-edge" x1="{x1_:.1f}" y1="{y1_:.1f}" '
                    f'x2="{x2_:.1f}" y2="{y2_:.1f}" stroke="#cc0000" '
                    f'stroke-width="1.2" stroke-dasharray="5,4"/>'
                )
    for i in range(k):
        x_, y_ = pos[i]
        out.append(
            f'<circle class="graph-vertex" cx="{x_:.1f}" cy="{y_:.1f}" r="12" '
            f'fill="{_PALETTE[i % len(_PALETTE)]}" stroke="#333333"/>'
        )
        out.append(
            f'<text class="graph-label" x="{x_:.1f}" y="{y_ + 4.5:.1f}" '
            f'text-anchor="middle" font-size="12">{_region_letter(i)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticebb",
        description="Order ideals and border bases of lattice ideals over Z^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=False):
        p.add_argument("--lattice", required=True, help="lattice JSON file")
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--format", choices=["json", "text"], default="json")
        # reserved; every computation is deterministic today
        p.add_argument("--seed", type=int, help=argparse.SUPPRESS)
        if ideal:
            p.add_argument("--ideal", help="order-ideal JSON file")

    common(sub.add_parser("hnf", help="Hermite normal form of the generators"))
    common(sub.add_parser("analyze", help="minimal vectors, minimal pairs, compatible set"))
    p = sub.add_parser("order-ideals", help="all maximal compatible order ideals")
    common(p)
    p.add_argument("--only-max", action="store_true", help="keep max-compatible ideals only")
    p.add_argument("--check-groebner", action="store_true", help="add realizability verdicts")
    p = sub.add_parser("border-basis", help="border basis of a max-compatible ideal")
    common(p, ideal=True)
    p.add_argument(
        "--render", choices=["exponents", "monomials"], default="exponents"
    )
    p = sub.add_parser("reduce", help="reduce exponent vectors from stdin into the ideal")
    common(p, ideal=True)
    p = sub.add_parser("dim2", help="closed-form pipeline for full-rank planar lattices")
    common(p)
    p.add_argument("--check-groebner", action="store_true")
    common(sub.add_parser("plot", help="SVG of the compatible set and quotient graph (n=2)"))
    p = sub.add_parser("oracle-check", help="compare pipeline with brute force (dev)")
    common(p)
    p.add_argument("--cap", type=int, help="override the brute-force size cap")
    return parser


_COMMANDS = {
    "hnf": _cmd_hnf,
    "analyze": _cmd_analyze,
    "order-ideals": _cmd_order_ideals,
    "border-basis": _cmd_border_basis,
    "reduce": _cmd_reduce,
    "dim2": _cmd_dim2,
    "plot": _cmd_plot,
    "oracle-check": _cmd_oracle_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (LatticeInputError, RankError, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ContractViolationError as e:
        print(f"contract violation: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
