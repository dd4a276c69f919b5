"""Contraction ``G/Q`` of pre-colorings and co-contraction ``G^Q`` of pre-co-colorings.

Both reductions number the new graph the same way: the class vertices
``c_1..c_m`` take ids ``0..m-1`` and the uncontracted vertices follow in
increasing original order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from prext.coloring import Coloring, is_proper
from prext.graph import Graph, bits, complement, is_clique, is_stable, to_mask


class FamilyError(ValueError):
    """A pre-(co-)coloring is malformed for its host graph.

    ``class_index`` is the 1-based index of the offending class, when there
    is one.
    """

    def __init__(self, message: str, class_index: int | None = None):
        self.class_index = class_index
        super().__init__(message)


@dataclass(frozen=True)
class _Family:
    classes: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.classes)

    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.classes)

    def validate(self, g: Graph) -> None:
        seen = 0
        for j, c in enumerate(self.classes, 1):
            if not c:
                raise FamilyError(f"class {j} is empty", j)
            bad = [v for v in c if not 0 <= v < g.n]
            if bad:
                raise FamilyError(f"class {j} has vertex {bad[0]} outside 0..{g.n - 1}", j)
            mask = to_mask(c)
            if mask & seen:
                raise FamilyError(f"class {j} overlaps an earlier class", j)
            seen |= mask
            if not self._class_ok(g, mask):
                raise FamilyError(f"class {j} is not a {self._what} of the graph", j)

    _what = ""

    def _class_ok(self, g: Graph, mask: int) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError


class StableFamily(_Family):
    """Pre-coloring: disjoint non-empty stable sets, class ``j`` pre-colored ``j``."""

    _what = "stable set"

    def _class_ok(self, g, mask):
        return is_stable(g, mask)


class CliqueFamily(_Family):
    """Pre-co-coloring: disjoint non-empty cliques."""

    _what = "clique"

    def _class_ok(self, g, mask):
        return is_clique(g, mask)


def as_family(kind: type, classes: Iterable[Iterable[int]] | _Family) -> _Family:
    if isinstance(classes, _Family):
        return kind(classes.classes)
    return kind(tuple(frozenset(c) for c in classes))


@dataclass(frozen=True)
class ContractionResult:
    """The reduced graph and what each of its vertices stands for.

    ``origin[i]`` is ``("class", j)`` for the vertex ``c_j`` and
    ``("vertex", v)`` for an uncontracted original vertex ``v``.
    """

    graph: Graph
    class_vertex: tuple[int, ...]
    origin: tuple[tuple[str, int], ...]
    host: Graph
    classes: tuple[frozenset[int], ...]
    mode: str  # "contract" or "cocontract"

    @property
    def m(self) -> int:
        return len(self.classes)

    def new_id(self) -> dict[int, int]:
        """Map uncontracted original vertices to their ids in ``graph``."""
        return {v: i for i, (tag, v) in enumerate(self.origin) if tag == "vertex"}


def reduce_adjacency(adj: Sequence[int], n: int, masks: Sequence[int], co: bool) -> tuple[list[int], list[int]]:
    """Bitset core of both reductions, without validation.

    Returns the new adjacency rows and the list of uncontracted original
    vertices (in new-id order after the ``m`` class vertices).
    """
    m = len(masks)
    covered = 0
    for c in masks:
        covered |= c
    rest = [v for v in range(n) if not covered >> v & 1]
    new_of = {v: m + i for i, v in enumerate(rest)}
    size = m + len(rest)
    rows = [0] * size
    for i, v in enumerate(rest):
        row = 0
        for u in bits(adj[v] & ~covered):
            row |= 1 << new_of[u]
        av = adj[v]
        for j, c in enumerate(masks):
            if (av & c == c) if co else (av & c):
                row |= 1 << j
                rows[j] |= 1 << (m + i)
        rows[m + i] = row
    if not co and m > 1:
        clique = (1 << m) - 1
        for j in range(m):
            rows[j] |= clique & ~(1 << j)
    return rows, rest


def _reduce(g: Graph, q: _Family, co: bool) -> ContractionResult:
    q.validate(g)
    rows, rest = reduce_adjacency(g.adj, g.n, q.masks, co)
    m = len(q)
    result = ContractionResult(
        graph=Graph._trusted(len(rows), rows),
        class_vertex=tuple(range(m)),
        origin=tuple([("class", j) for j in range(1, m + 1)] + [("vertex", v) for v in rest]),
        host=g,
        classes=q.classes,
        mode="cocontract" if co else "contract",
    )
    check = is_stable if co else is_clique
    assert check(result.graph, (1 << m) - 1)
    return result


def contract(g: Graph, q: StableFamily | Iterable[Iterable[int]]) -> ContractionResult:
    """``G/Q``: collapse each stable class ``C_j`` to ``c_j``.

    ``c_j`` sees the uncontracted vertices having a neighbour in ``C_j``;
    the ``c_j`` are pairwise adjacent.
    """
    return _reduce(g, as_family(StableFamily, q), co=False)


def cocontract(g: Graph, q: CliqueFamily | Iterable[Iterable[int]]) -> ContractionResult:
    """``G^Q``: collapse each clique ``C_j`` to ``c_j``.

    ``c_j`` sees the uncontracted vertices complete to ``C_j``; the ``c_j``
    are pairwise non-adjacent.
    """
    return _reduce(g, as_family(CliqueFamily, q), co=True)


def lift_coloring(res: ContractionResult, coloring: Coloring | Sequence[int]) -> Coloring:
    """Lift a coloring of the reduced graph to an extension of the family.

    Colors are first renamed so that ``c_j`` gets ``j``; the remaining colors
    become ``m+1, m+2, ...`` in increasing order of their old index.  For a
    co-contraction the input must be a coloring of the complement of
    ``res.graph`` (a clique partition), and the output is a clique partition
    of the host.
    """
    colors = tuple(coloring.colors if isinstance(coloring, Coloring) else coloring)
    target = res.graph if res.mode == "contract" else complement(res.graph)
    if len(colors) != target.n or not is_proper(target, colors):
        raise ValueError("coloring is not proper on the reduced graph")
    m = res.m
    class_colors = [colors[i] for i in res.class_vertex]
    if len(set(class_colors)) < m:
        raise ValueError(f"class vertices use fewer than {m} colors")
    perm = {c: j for j, c in enumerate(class_colors, 1)}
    nxt = m + 1
    for c in sorted(set(colors) - set(perm)):
        perm[c] = nxt
        nxt += 1
    out = [0] * res.host.n
    for j, cls in enumerate(res.classes, 1):
        for v in cls:
            out[v] = j
    for i, (tag, v) in enumerate(res.origin):
        if tag == "vertex":
            out[v] = perm[colors[i]]
    return Coloring(tuple(out))
