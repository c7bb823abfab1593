"""Command-line driver: ``reduce``, ``spectra`` and ``walk``.

Exit codes: 0 success, 1 I/O or parse error, 2 validation failure
(stratification / automorphism / inconsistent atoms), 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .families import BUILTINS, builtin
from .graph import CayleyError, Graph, Permutation, load_graph, load_perms
from .reduction import JacobiData, jacobi_sequences, load_jacobi
from .spectra import SpectralError, spectral_atoms
from .symmetry import NotAutomorphism, StratificationInvalid, orbit_partition, stratify
from .walk import amplitudes, max_deviation, oracle_amplitudes, time_grid

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3
VERIFY_TOL = 1e-9


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


class ValidationError(Exception):
    pass


@dataclass
class Problem:
    """What a command works on: either a reduced graph or a bare Jacobi chain."""

    jacobi: JacobiData
    graph: Graph | None = None
    strat: object = None


def _add_source(p, allow_jacobi=True):
    src = p.add_argument_group("graph source")
    ex = src.add_mutually_exclusive_group(required=True)
    ex.add_argument("--builtin", choices=sorted(BUILTINS), help="built-in graph family")
    ex.add_argument("--edges", metavar="FILE", help='graph JSON {"n", "edges", "labels"?}')
    if allow_jacobi:
        ex.add_argument("--jacobi", metavar="FILE", help='chain JSON {"omega", "alpha"}; skips the graph stage')
    src.add_argument("--n", type=int, help="size parameter for --builtin cycle")
    sub = p.add_argument_group("subgroup")
    sub.add_argument("--subgroup", action="append", metavar="CYCLES",
                     help='generator in 0-based cycle notation, e.g. "(0 2)(1 3)"; repeatable')
    sub.add_argument("--perms", metavar="FILE", help='generators as JSON {"n", "perms"}')
    p.add_argument("--root", type=int, help="root vertex (default: preset root or 0)")
    p.add_argument("--out", metavar="PATH", help="output file (default: $QW_OUT_DIR/<command>.<ext> or stdout)")


def _load_problem(args) -> Problem:
    if getattr(args, "jacobi", None):
        return Problem(load_jacobi(args.jacobi))
    root = 0
    if args.builtin:
        if args.builtin == "cycle" and args.n is None:
            raise ValueError("--builtin cycle requires --n")
        fx = builtin(args.builtin, args.n)
        g, gens, root = fx.graph, list(fx.generators), fx.root
    else:
        g, gens = load_graph(args.edges), []
    if args.subgroup or args.perms:
        gens = [Permutation.parse(c, g.n) for c in args.subgroup or []]
        if args.perms:
            gens += load_perms(args.perms)
    if args.root is not None:
        root = args.root
    for p in gens:
        if len(p) != g.n:
            raise ValueError(f"generator {p} acts on {len(p)} points, graph has {g.n}")
    s = stratify(g, orbit_partition(g, gens), root)
    return Problem(jacobi_sequences(g, s), g, s)


def _destination(args, command: str, ext: str):
    if args.out:
        return Path(args.out)
    out_dir = os.environ.get("QW_OUT_DIR")
    if out_dir:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
        return Path(out_dir) / f"{command}.{ext}"
    return None


def _emit(args, command: str, ext: str, text: str):
    dest = _destination(args, command, ext)
    if dest is None:
        sys.stdout.write(text)
    else:
        dest.write_text(text)
        print(f"wrote {dest}", file=sys.stderr)


def cmd_reduce(args) -> int:
    prob = _load_problem(args)
    s = prob.strat
    print(f"strata: d={s.d} sizes={list(s.sizes)} root={s.root}", file=sys.stderr)
    _emit(args, "reduce", "json", json.dumps(prob.jacobi.to_dict()) + "\n")
    return EXIT_OK


def cmd_spectra(args) -> int:
    prob = _load_problem(args)
    j = prob.jacobi
    atoms = spectral_atoms(j)
    m1, m2 = atoms.moment(1), atoms.moment(2)
    a1, w1 = float(j.alpha[0]), (float(j.omega[0]) if j.d else 0.0)
    print(f"mass={atoms.weights.sum():.15g} "
          f"m1={m1:.15g} (expect {a1:.15g}) m2={m2:.15g} (expect {a1 * a1 + w1:.15g})",
          file=sys.stderr)
    _emit(args, "spectra", "json", json.dumps(atoms.to_dict()) + "\n")
    return EXIT_OK


def _series_rows(series, method=None):
    for k, t in enumerate(series.times):
        for m, q in enumerate(series.amplitudes[:, k]):
            row = [repr(float(t)), m, repr(float(q.real)), repr(float(q.imag)), repr(float(abs(q) ** 2))]
            if method is not None:
                row.append(method)
            yield row


def cmd_walk(args) -> int:
    prob = _load_problem(args)
    if args.verify and prob.graph is None:
        raise ValidationError("--verify needs a graph source, not --jacobi")
    times = time_grid(args.t_start, args.t_stop, args.t_count)
    series = amplitudes(prob.jacobi, spectral_atoms(prob.jacobi), times)
    oracle = oracle_amplitudes(prob.graph, prob.strat, times) if args.verify else None

    if args.format == "json":
        payload = {"method": "spectral", **series.to_dict()}
        if oracle is not None:
            payload = {"spectral": series.to_dict(), "oracle": oracle.to_dict(),
                       "max_deviation": max_deviation(series, oracle)}
        text = json.dumps(payload) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["t", "orbit", "re", "im", "prob"]
        if oracle is None:
            w.writerow(header)
            w.writerows(_series_rows(series))
        else:
            w.writerow(header + ["method"])
            w.writerows(_series_rows(series, "spectral"))
            w.writerows(_series_rows(oracle, "oracle"))
        text = buf.getvalue()
    _emit(args, "walk", args.format, text)

    if oracle is not None:
        dev = max_deviation(series, oracle)
        print(f"max deviation spectral vs oracle: {dev:.3e}", file=sys.stderr)
        if dev > VERIFY_TOL:
            print(f"verification FAILED (> {VERIFY_TOL:g})", file=sys.stderr)
            return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quotientwalk", description=__doc__.splitlines()[0])
    cmds = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = cmds.add_parser("reduce", help="stratify a graph and print its Jacobi sequences")
    _add_source(p, allow_jacobi=False)
    p.set_defaults(func=cmd_reduce)

    p = cmds.add_parser("spectra", help="spectral atoms (Gauss nodes and weights)")
    _add_source(p)
    p.set_defaults(func=cmd_spectra)

    p = cmds.add_parser("walk", help="stratum amplitudes q_m(t)")
    _add_source(p)
    p.add_argument("--t-start", type=float, default=0.0)
    p.add_argument("--t-stop", type=float, default=4 * math.pi)
    p.add_argument("--t-count", type=int, default=256)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--verify", action="store_true",
                   help=f"compare with full-graph diagonalisation; exit {EXIT_VERIFY} if deviation > {VERIFY_TOL:g}")
    p.set_defaults(func=cmd_walk)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAutomorphism as exc:
        print(f"error: not an automorphism: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (StratificationInvalid, CayleyError, SpectralError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError, KeyError, IndexError) as exc:
        # json.JSONDecodeError and PermutationError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
