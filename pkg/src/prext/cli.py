"""``prext`` command line: classify, solve, contract, generate, verify.

Exit codes: 0 success or pass, 1 infeasible or violation found, 2 input
error, 3 resource guard (search budget, enumeration cap, sampling budget).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from pathlib import Path
from typing import Any, Sequence

from prext import harness
from prext.contraction import FamilyError, cocontract, contract
from prext.detect import MAX_N, classify, meyniel_violation
from prext.errors import ResourceLimitError
from prext.formats import ParseError, read_family, read_graph, write_dimacs
from prext.graph import Graph, complement, from_edges
from prext.solve import DEFAULT_NODE_BUDGET, co_prext_optimize, prext_decide, prext_optimize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

_NMAX_DEFAULT = {"theorem1": 6, "theorem2": 6, "lemma1": 5, "lemmas": 6, "closure": 5}
_SAMPLED = {"theorem2", "lemmas"}


class InputError(Exception):
    pass


def _render(data: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    lines: list[str] = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict) and value:
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else str(key), value[key])
        else:
            lines.append(f"{prefix}: {json.dumps(value, sort_keys=True)}")

    walk("", data)
    return "\n".join(lines) + "\n"


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> tuple[Graph, list[int]]:
    try:
        return read_graph(path)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_family(path: str | None) -> list[frozenset[int]]:
    if path is None:
        return []
    try:
        return read_family(path)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _class_warning(g: Graph, need_meyniel: bool) -> None:
    """Exact search is correct anyway; only the polynomial guarantee is at stake."""
    if g.n > MAX_N:
        warnings.warn(f"class membership not checked above {MAX_N} vertices")
        return
    test = g if need_meyniel else complement(g)
    if meyniel_violation(test.adj, test.n):
        name = "Meyniel" if need_meyniel else "co-Meyniel"
        warnings.warn(f"input graph is not {name}; exact search may take exponential time")


# -- commands ------------------------------------------------------------------------

def cmd_classify(args: argparse.Namespace) -> int:
    g, labels = _load_graph(args.graph)
    if g.n > MAX_N:
        raise ResourceLimitError(f"classification is limited to {MAX_N} vertices")
    _emit(args, _render(classify(g).to_json(labels), args.format))
    return EXIT_OK


def cmd_prext(args: argparse.Namespace) -> int:
    g, labels = _load_graph(args.graph)
    classes = _load_family(args.family)
    _class_warning(g, need_meyniel=args.co)
    host = complement(g) if args.co else g
    if args.k is not None:
        if args.k < 0:
            raise InputError("-k must be non-negative")
        answer = prext_decide(host, classes, args.k, args.node_budget)
    elif args.co:
        answer = co_prext_optimize(g, classes, args.node_budget)
    else:
        answer = prext_optimize(g, classes, args.node_budget)
    data = answer.to_json(labels)
    data["mode"] = "cliques" if args.co else "stable"
    _emit(args, _render(data, args.format))
    return EXIT_OK if answer.feasible else EXIT_FAIL


def cmd_contract(args: argparse.Namespace) -> int:
    g, labels = _load_graph(args.graph)
    classes = _load_family(args.family)
    res = (cocontract if args.co else contract)(g, classes)
    comments = [f"{'co-contraction' if args.co else 'contraction'} of {g.n} vertices by {res.m} classes"]
    for new, (kind, value) in enumerate(res.origin, 1):
        if kind == "class":
            members = " ".join(str(labels[v]) for v in sorted(classes[value - 1]))
            comments.append(f"origin {new} class {value}: {members}")
        else:
            comments.append(f"origin {new} vertex {labels[value]}")
    _emit(args, write_dimacs(res.graph, comments))
    return EXIT_OK


def _gen_any(n: int, count: int, seed: int) -> list[Graph]:
    """Uniform labeled graphs: each edge present with probability 1/2."""
    pairs = harness.edge_pairs(n)
    out = []
    for i in range(count):
        rng = random.Random(f"any:{seed}:{n}:{i}")
        out.append(from_edges(n, [p for p in pairs if rng.random() < 0.5]))
    return out


def cmd_gen(args: argparse.Namespace) -> int:
    n, count = args.n, args.count
    if n < 0 or count < 0:
        raise InputError("n and count must be non-negative")
    cap = 63 if args.cls == "any" else MAX_N
    if n > cap:
        raise ResourceLimitError(f"{args.cls} generation is limited to {cap} vertices")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", harness.SamplingBudgetWarning)
        if args.cls == "any":
            graphs = _gen_any(n, count, args.seed)
        elif args.cls == "meyniel":
            graphs = harness.sample_meyniel(n, count, args.seed, args.max_attempts)
        else:
            graphs = harness.sample_co_meyniel(n, count, args.seed, args.max_attempts)
    text = "".join(write_dimacs(g, [f"{args.cls} n={n} seed={args.seed} graph {i + 1}"])
                   for i, g in enumerate(graphs))
    _emit(args, text)
    if len(graphs) < count:
        for w in caught:
            print(f"prext: {w.message}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    prop = args.property
    n_max = _NMAX_DEFAULT[prop] if args.nmax is None else args.nmax
    if n_max < 0:
        raise InputError("--nmax must be non-negative")
    if args.samples and prop not in _SAMPLED:
        raise InputError(f"--samples is not supported for {prop}")
    if args.samples < 0:
        raise InputError("--samples must be non-negative")
    sample_n = args.sample_n
    if prop == "theorem1":
        report = harness.verify_theorem1(n_max, workers=args.workers)
    elif prop == "theorem2":
        report = harness.verify_theorem2(n_max, args.samples, args.seed, sample_n, args.workers)
    elif prop == "lemma1":
        report = harness.verify_lemma1(n_max, workers=args.workers)
    elif prop == "lemmas":
        report = harness.verify_structural_lemmas(n_max, args.samples, args.seed, sample_n, args.workers)
    else:
        report = harness.closure_probe(n_max, workers=args.workers)
    if args.format == "json":
        _emit(args, report.dumps() + "\n")
    else:
        _emit(args, report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


# -- argument parsing ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="branch-and-bound node limit for exact coloring")

    parser = argparse.ArgumentParser(prog="prext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Meyniel/Artemis/Berge/co-Meyniel flags")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prext", parents=[common], help="pre-coloring extension")
    p.add_argument("graph")
    p.add_argument("family", nargs="?", help="family file (q <j>: v ...); omit for none")
    p.add_argument("-k", type=int, help="decide k-extendability instead of minimizing")
    p.add_argument("--co", action="store_true", help="family of cliques, partition into cliques")
    p.set_defaults(func=cmd_prext)

    p = sub.add_parser("contract", parents=[common], help="emit G/Q (or G^Q with --co) as DIMACS")
    p.add_argument("graph")
    p.add_argument("family", nargs="?")
    p.add_argument("--co", action="store_true")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("verify", parents=[common], help="mechanized checks over small graphs")
    p.add_argument("property", choices=sorted(_NMAX_DEFAULT))
    p.add_argument("--nmax", type=int)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--sample-n", type=int, help="vertex count of sampled graphs (default nmax+3 or nmax+2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="seeded random graphs as a DIMACS stream")
    p.add_argument("cls", choices=("any", "meyniel", "co-meyniel"))
    p.add_argument("n", type=int)
    p.add_argument("count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=10_000)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def show(message, category, filename, lineno, file=None, line=None):
        print(f"prext: warning: {message}", file=sys.stderr)

    warnings.showwarning = show
    try:
        return args.func(args)
    except InputError as exc:
        print(f"prext: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FamilyError as exc:
        print(f"prext: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"prext: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
