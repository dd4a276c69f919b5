"""Text formats: DIMACS ``.col``, compact edge lists and pre-coloring files."""
from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

from prext.graph import Graph, bits, from_edges


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- DIMACS -------------------------------------------------------------------

def parse_dimacs(text: str) -> tuple[Graph, list[int]]:
    """Parse one DIMACS graph; returns the graph and its 1-based label table."""
    graphs = parse_dimacs_many(text)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one 'p' line, found {len(graphs)}")
    return graphs[0]


def parse_dimacs_many(text: str) -> list[tuple[Graph, list[int]]]:
    out = []
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                out.append((_build(n, edges), list(range(1, n + 1))))
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n = _int(fields[2], lineno)
            edges = []
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before 'p' line", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _int(fields[1], lineno), _int(fields[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognised line type {fields[0]!r}", lineno)
    if n is not None:
        out.append((_build(n, edges), list(range(1, n + 1))))
    return out


def _build(n: int, edges):
    try:
        return from_edges(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


# -- compact edge list ------------------------------------------------------------

def parse_edge_list(text: str) -> tuple[Graph, list[int]]:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge-list file")
    lineno, first = lines[0]
    n = _int(first, lineno)
    edges = []
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected '<u> <v>'", lineno)
        u, v = _int(fields[0], lineno), _int(fields[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        edges.append((u, v))
    return _build(n, edges), list(range(n))


def write_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph(text: str) -> tuple[Graph, list[int]]:
    """Sniff the format: DIMACS if any record starts with ``p``/``e``/``c``."""
    for line in text.splitlines():
        head = line.strip()[:1]
        if head in ("p", "e", "c"):
            return parse_dimacs(text)
        if head and head != "#":
            break
    return parse_edge_list(text)


def read_graph(path: str | Path) -> tuple[Graph, list[int]]:
    return parse_graph(Path(path).read_text())


# -- pre-coloring families ----------------------------------------------------------

_FAMILY_LINE = re.compile(r"^q\s*(\d+)\s*:(.*)$")


def parse_family(text: str) -> list[frozenset[int]]:
    """Parse ``q <j>: v1 v2 ...`` lines into classes ordered by ``j``.

    Indices must be exactly ``1..m``; vertex ids are 0-based.  Range and
    stability/clique checks happen against a graph, not here.
    """
    classes: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("#", "c ")) or line == "c":
            continue
        m = _FAMILY_LINE.match(line)
        if not m:
            raise ParseError("expected 'q <j>: <v1> <v2> ...'", lineno)
        j = int(m.group(1))
        if j in classes:
            raise ParseError(f"class {j} given twice", lineno)
        members = [_int(tok, lineno) for tok in m.group(2).split()]
        if len(set(members)) != len(members):
            raise ParseError(f"class {j} repeats a vertex", lineno)
        classes[j] = frozenset(members)
    if sorted(classes) != list(range(1, len(classes) + 1)):
        raise ParseError(f"class indices must be 1..{len(classes)}, got {sorted(classes)}")
    return [classes[j] for j in range(1, len(classes) + 1)]


def write_family(classes: Sequence[Iterable[int] | int]) -> str:
    lines = []
    for j, c in enumerate(classes, 1):
        members = list(bits(c)) if isinstance(c, int) else sorted(c)
        lines.append(f"q {j}: " + " ".join(map(str, members)))
    return "\n".join(lines) + ("\n" if lines else "")


def read_family(path: str | Path) -> list[frozenset[int]]:
    return parse_family(Path(path).read_text())


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None
