"""Command-line interface: ``python -m lambdachain <command> --type G2 --weight 0,1``.

Exit codes: 0 success, 1 audit failure, 2 usage or input error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from . import export
from .chain import counting_identity_check, lex_lambda_chain, validate_lambda_chain
from .characters import (
    branch,
    character,
    freudenthal_multiplicities,
    levi_recombine,
    lr_decompose,
    tensor_oracle,
    weyl_dimension,
)
from .crystal import DEFAULT_CAP, build_crystal_graph, stembridge_audit
from .errors import ModelError, SizeCapExceeded
from .folding import folding_of, g_alpha_samples
from .geometry import alcove_coords, ls_chain_of, path_difference_defects, path_points, validate_ls_chain
from .roots import root_system

EXIT_OK, EXIT_AUDIT, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FORMATS = {
    "chain": ("text", "json"),
    "crystal": ("text", "json", "dot"),
    "char": ("text", "json"),
    "lr": ("text", "json"),
    "branch": ("text", "json"),
    "path": ("csv", "json"),
    "audit": ("text",),
}


class UsageError(Exception):
    pass


def _int_list(text, what):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _load_system(args):
    if args.cartan_file:
        rows = Path(args.cartan_file).read_text().split("\n")
        matrix = [[int(x) for x in row.split()] for row in rows if row.strip()]
        return root_system(matrix)
    if not args.type:
        raise UsageError("one of --type or --cartan-file is required")
    return root_system(args.type)


def _weight(system, text, what="--weight"):
    w = _int_list(text, what)
    if len(w) != system.rank:
        raise UsageError(f"{what} needs {system.rank} coordinates, got {len(w)}")
    return tuple(w)


def _colors(system, text, what):
    cs = _int_list(text, what)
    for c in cs:
        if not 1 <= c <= system.rank:
            raise UsageError(f"{what}: color {c} outside 1..{system.rank}")
    return [c - 1 for c in cs]


def _chain(system, args):
    order = None
    if args.order:
        order = [c - 1 for c in _int_list(args.order, "--order")]
        if sorted(order) != list(range(system.rank)):
            raise UsageError(f"--order must be a permutation of 1..{system.rank}")
    return lex_lambda_chain(system, _weight(system, args.weight), order)


def cmd_chain(system, args):
    chain = _chain(system, args)
    return EXIT_OK, export.chain_json(chain) if args.format == "json" else export.chain_text(chain)


def cmd_crystal(system, args):
    graph = build_crystal_graph(_chain(system, args), args.cap)
    render = {"json": export.crystal_json, "dot": export.crystal_dot, "text": export.crystal_text}
    return EXIT_OK, render[args.format](graph)


def cmd_char(system, args):
    ch = character(_chain(system, args), args.cap)
    return EXIT_OK, export.character_json(ch) if args.format == "json" else export.character_table(ch)


def _decomp_out(system, dec, fmt):
    if fmt == "json":
        return export.character_json(dec)
    dims = {mu: weyl_dimension(system, mu) for mu in dec}
    return export.decomposition_table(dec, dims)


def cmd_lr(system, args):
    if not args.weight2:
        raise UsageError("lr needs --weight2")
    dec = lr_decompose(_chain(system, args), _weight(system, args.weight2, "--weight2"), args.cap)
    return EXIT_OK, _decomp_out(system, dec, args.format)


def cmd_branch(system, args):
    levi = _colors(system, args.levi or "", "--levi")
    dec = branch(_chain(system, args), levi, args.cap)
    if args.format == "json":
        return EXIT_OK, export.character_json(dec)
    dims = {mu: weyl_dimension(system, mu, levi) for mu in dec}
    return EXIT_OK, export.decomposition_table(dec, dims)


def cmd_path(system, args):
    chain = _chain(system, args)
    J = [j - 1 for j in _int_list(args.subset or "", "--subset")]
    path = path_points(chain, J)
    return EXIT_OK, export.path_json(path) if args.format == "json" else export.path_csv(path)


def _audit_lines(system, chain, cap):
    """``(name, ok, detail)`` for every invariant suite on one instance."""
    out = []
    rep = validate_lambda_chain(chain)
    out.append(("lambda-chain counts and interlacing", rep.ok, "; ".join(rep.failures()[:3])))
    out.append(("counting identity", counting_identity_check(chain), ""))
    graph = build_crystal_graph(chain, cap)
    audit = stembridge_audit(graph)
    for name, fails in audit.checks.items():
        out.append((f"crystal {name}", not fails, "; ".join(fails[:3])))
    dim = weyl_dimension(system, chain.lam)
    out.append(("node count = Weyl dimension", len(graph) == dim, f"{len(graph)} vs {dim}"))
    ch = character(chain, cap)
    out.append(("character = Freudenthal", ch == freudenthal_multiplicities(system, chain.lam), ""))
    if dim * dim <= cap:
        lr_ok = lr_decompose(chain, chain.lam, cap) == tensor_oracle(system, chain.lam, chain.lam)
        out.append(("LR rule (nu = lambda) = tensor oracle", lr_ok, ""))
    br_ok = True
    for size in range(system.rank + 1):
        for P in itertools.combinations(range(system.rank), size):
            if levi_recombine(system, branch(chain, P, cap), P) != ch:
                br_ok = False
    out.append(("branching recombines to the character", br_ok, ""))
    level_ok = True
    for J in graph.nodes:
        f = folding_of(chain, J)
        for p in range(system.rank):
            s = g_alpha_samples(f, system.simple_root(p))
            if not (s.c1_holds() and s.c2_holds()):
                level_ok = False
    out.append(("level-function sign conditions", level_ok, ""))
    if system.is_irreducible:
        try:
            alcove_coords(chain)
            shi = True
        except ModelError:
            shi = False
        out.append(("Shi condition", shi, ""))
        path_ok = all(not path_difference_defects(chain, J) for J in graph.nodes)
        out.append(("gallery point differences", path_ok, ""))
        seen = set()
        ls_ok = True
        for J in graph.nodes:
            ls = ls_chain_of(chain, J)
            ls_ok &= validate_ls_chain(chain, ls).ok
            seen.add((ls.weights, ls.times))
        out.append(("LS chains valid and injective", ls_ok and len(seen) == len(graph), ""))
    return out


def cmd_audit(system, args):
    chain = _chain(system, args)
    rows = _audit_lines(system, chain, args.cap)
    lines = []
    for name, ok, detail in rows:
        tail = f"  ({detail})" if detail and not ok else ""
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}{tail}")
    ok = all(r[1] for r in rows)
    lines.append("audit passed" if ok else "audit FAILED")
    return (EXIT_OK if ok else EXIT_AUDIT), "\n".join(lines) + "\n"


COMMANDS = {
    "chain": cmd_chain,
    "crystal": cmd_crystal,
    "char": cmd_char,
    "lr": cmd_lr,
    "branch": cmd_branch,
    "path": cmd_path,
    "audit": cmd_audit,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="lambdachain", description="Crystals of admissible subsets of lambda-chains.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", help="Cartan type, e.g. G2 or A1xB2")
        p.add_argument("--cartan-file", help="file with whitespace-separated integer rows")
        p.add_argument("--weight", required=True, help="dominant weight, comma-separated fundamental coordinates")
        p.add_argument("--order", help="simple-root order, 1-based permutation")
        p.add_argument("--format", default=FORMATS[name][0], choices=FORMATS[name])
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--output", help="write to this file instead of stdout")
        if name == "lr":
            p.add_argument("--weight2", help="second dominant weight")
        if name == "branch":
            p.add_argument("--levi", help="1-based simple roots of the Levi subalgebra")
        if name == "path":
            p.add_argument("--subset", help="1-based admissible subset")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        system = _load_system(args)
        code, text = COMMANDS[args.command](system, args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ModelError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
