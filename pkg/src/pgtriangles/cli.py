"""Command-line front end.

Subcommands: triangle, edge, rays, tables, helicoid, census, sp, gap,
pell, border, balance, render.  Generators are described by the
"kind:args" mini-language of the generators module (--gen), optionally
extended by the ten-bit tail (--tail fixed).  Results go to --out (or
stdout) as JSON, CSV, or SVG; errors print a machine-readable JSON
object on stderr and exit nonzero.

A JSON config file (--config) may hold defaults for any long flag;
explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bench, border, generators, helix, seqcore, spnum, viz


def _resolve_gen(args) -> tuple[int, ...]:
    if not getattr(args, "gen", None):
        raise ValueError("missing --gen")
    seq = generators.parse_generator_spec(args.gen)
    tail = getattr(args, "tail", None)
    if tail:
        if tail == "fixed":
            seq = generators.with_fixed_tail(seq)
        else:
            seq = seq + tuple(int(t) for t in tail.split(","))
    return seq


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


# ----------------------------------------------------------------------
# subcommand handlers

def _cmd_triangle(args) -> None:
    seq = _resolve_gen(args)
    rows = [list(r) for r in seqcore.triangle_rows(seq)]
    if args.format == "csv":
        _emit(args, "\n".join(",".join(str(v) for v in r) for r in rows) + "\n")
    else:
        _emit_json(args, {"generator": list(seq), "rows": rows})


def _cmd_edge(args) -> None:
    seq = _resolve_gen(args)
    _emit_json(args, {"generator": list(seq), "edge": list(seqcore.left_edge(seq))})


def _cmd_rays(args) -> None:
    seq = _resolve_gen(args)
    stats = bench.rays_table(seq, args.rays, args.second, mod=args.mod)
    if args.format == "json":
        _emit_json(
            args,
            [
                {
                    "r": s.ray_rank,
                    "N": s.n_entries,
                    "z": s.z,
                    "second": s.second,
                    "diff": s.diff,
                    "h": s.h,
                    "ratio": f"{float(s.ratio):.5f}",
                }
                for s in stats
            ],
        )
    else:
        _emit(args, bench.render_table_csv(stats))


def _cmd_tables(args) -> None:
    stats = bench.table_rays(args.source, args.limit, args.rays, mod=args.mod)
    if args.format == "json":
        _emit_json(
            args,
            [
                {"r": s.ray_rank, "N": s.n_entries, "z": s.z, "second": s.second,
                 "diff": s.diff, "h": s.h, "ratio": f"{float(s.ratio):.5f}"}
                for s in stats
            ],
        )
    else:
        _emit(args, bench.render_table_csv(stats))


def _cmd_helicoid(args) -> None:
    seq = _resolve_gen(args)
    orbit = helix.orbit_analysis(seq, max_layers=args.max_layers)
    _emit_json(args, orbit.to_json_dict())


def _cmd_census(args) -> None:
    if args.gen:
        fam = [(args.gen, _resolve_gen(args))]
    else:
        fam = bench.builtin_census_family()
    rows = bench.layer_census(fam, max_layers=args.max_layers)
    if args.format == "csv":
        lines = ["label,len,P,C,distinct"]
        lines.extend(",".join(str(v) for v in row) for row in rows)
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(
            args,
            [
                {"label": lb, "len": ln, "P": p, "C": c, "distinct": d}
                for lb, ln, p, c, d in rows
            ],
        )


def _cmd_sp(args) -> None:
    if args.limit is None:
        raise ValueError("missing --limit")
    sieve = spnum.sp_sieve(args.limit)
    _emit_json(
        args,
        {
            "limit": args.limit,
            "count": sieve.count(),
            "terms": sieve.terms.tolist(),
            "twins": spnum.sp_twins(args.limit),
        },
    )


def _cmd_gap(args) -> None:
    cert = spnum.gap_representation(args.x)
    _emit_json(args, cert.to_json_dict())


def _cmd_pell(args) -> None:
    sol = spnum.pell_fundamental(args.d)
    _emit_json(args, {"D": sol.D, "m": str(sol.m), "n": str(sol.n)})


def _cmd_border(args) -> None:
    seed_row = (
        tuple(int(v) for v in args.seed_row.split(","))
        if args.seed_row
        else (27, 28)
    )
    zs = [args.z] * args.rounds
    row, steps = border.build_prescribed_west(zs, seed=seed_row)
    _emit_json(
        args,
        {
            "seed": list(seed_row),
            "rounds": [s.to_json_dict() for s in steps],
            "top_row": [str(v) for v in row],
            "western_edge": [str(v) for v in seqcore.left_edge(row)],
        },
    )


def _cmd_balance(args) -> None:
    rep = bench.monte_carlo_balance(
        args.n,
        args.samples,
        args.epsilon,
        args.delta,
        seed=args.seed,
        mode=args.mode,
    )
    _emit_json(args, rep.to_json_dict())


def _cmd_render(args) -> None:
    seq = _resolve_gen(args)
    if args.kind == "triangle":
        svg = viz.render_triangle(seq, mod=args.mod, cell_radius=args.cell_radius)
    elif args.kind == "layer":
        svg = viz.render_layer(seq, level=args.level, cell_radius=args.cell_radius)
    else:
        svg = viz.render_orbit_strip(seq, cell_radius=args.cell_radius)
    _emit(args, svg)


# ----------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pgtriangles",
        description="difference-triangle laboratory",
    )
    top.add_argument("--config", help="JSON file with default flag values")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=fn)
        p.add_argument("--out", default="-")
        p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
        return p

    def add_gen(p, required=True):
        p.add_argument("--gen", required=required, help="generator spec kind:args")
        p.add_argument("--tail", help="'fixed' for the ten-bit tail, or CSV bits")

    p = add("triangle", _cmd_triangle, help="emit all triangle rows")
    add_gen(p)
    p = add("edge", _cmd_edge, help="western edge of the triangle")
    add_gen(p)
    p = add("rays", _cmd_rays, help="ray value census for a generator")
    add_gen(p)
    p.add_argument("--rays", type=int, default=10)
    p.add_argument("--second", type=int, default=2, help="companion value")
    p.add_argument("--mod", type=int, help="count residues modulo this")
    p = add("tables", _cmd_tables, help="published ray-frequency tables")
    p.add_argument("--source", choices=("primes", "square-primes"), required=True)
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument("--rays", type=int, default=10)
    p.add_argument("--mod", type=int)
    p = add("helicoid", _cmd_helicoid, help="orbit report for a generator")
    add_gen(p)
    p.add_argument("--max-layers", type=int, default=10000)
    p = add("census", _cmd_census, help="layer census (builtin family or --gen)")
    add_gen(p, required=False)
    p.add_argument("--max-layers", type=int, default=10000)
    p = add("sp", _cmd_sp, help="square-primes below a limit")
    p.add_argument("--limit", type=int)
    p = add("gap", _cmd_gap, help="square-prime pair at a prescribed difference")
    p.add_argument("--x", type=int, required=True)
    p = add("pell", _cmd_pell, help="fundamental Pell solution")
    p.add_argument("--d", type=int, required=True)
    p = add("border", _cmd_border, help="iterated square-prime bordering")
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--seed-row", help="CSV start row (default 27,28)")
    p = add("balance", _cmd_balance, help="ray-balance Monte Carlo")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--epsilon", default="0.1")
    p.add_argument("--delta", default="0.05")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p = add("render", _cmd_render, help="SVG rendering")
    add_gen(p)
    p.add_argument("--kind", choices=("triangle", "layer", "orbit"),
                   default="triangle")
    p.add_argument("--mod", type=int)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--cell-radius", type=float, default=0.48)
    return top


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    if not args.config:
        return
    try:
        conf = json.loads(Path(args.config).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read config: {exc}") from exc
    if not isinstance(conf, dict):
        raise ValueError("config must be a JSON object")
    explicit = {a.split("=", 1)[0] for a in argv if a.startswith("--")}
    for key, value in conf.items():
        attr = key.replace("-", "_")
        if f"--{key}" in explicit or not hasattr(args, attr):
            continue
        setattr(args, attr, value)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, list(argv))
        args.func(args)
    except (ValueError, IndexError, OverflowError, TypeError,
            spnum.ScanBudgetError, helix.OrbitBudgetError) as exc:
        sys.stderr.write(
            json.dumps({"error": str(exc), "type": type(exc).__name__}) + "\n"
        )
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
