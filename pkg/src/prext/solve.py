"""Exact maximum clique, chromatic number and pre-coloring extension.

Coloring is exact branch-and-bound (DSATUR vertex order, maximum-clique
seeding, new colors opened only below the incumbent), so every answer here is
optimal rather than merely polynomial on perfect inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from prext.coloring import Coloring
from prext.contraction import (
    CliqueFamily,
    ContractionResult,
    StableFamily,
    as_family,
    cocontract,
    contract,
    lift_coloring,
)
from prext.errors import ResourceLimitError
from prext.graph import Graph, bits, complement, popcount

DEFAULT_NODE_BUDGET = 10**7


# -- maximum clique -------------------------------------------------------------------

def _greedy_color_order(p: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            colors.append(color)
            p &= ~low
            q &= ~low & ~adj[v]
    return order, colors


def max_clique_mask(adj: Sequence[int], candidates: int) -> int:
    best = [0, 0]

    def expand(r: int, size: int, p: int) -> None:
        order, colors = _greedy_color_order(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return
            v = order[i]
            newp = p & adj[v]
            if newp:
                expand(r | (1 << v), size + 1, newp)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, r | (1 << v)
            p &= ~(1 << v)

    if candidates:
        expand(0, 0, candidates)
    return best[1]


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique of ``g``."""
    return frozenset(bits(max_clique_mask(g.adj, g.full)))


# -- coloring ----------------------------------------------------------------------

class _Search:
    """DSATUR branch-and-bound over a bitset graph with some colors fixed."""

    def __init__(self, adj: Sequence[int], n: int, node_budget: int):
        self.adj = adj
        self.n = n
        self.deg = [popcount(r) for r in adj]
        self.color = [0] * n
        self.count = [[0] * (n + 2) for _ in range(n)]
        self.sat = [0] * n
        self.nodes = 0
        self.budget = node_budget

    def assign(self, v: int, c: int) -> None:
        self.color[v] = c
        count, sat = self.count, self.sat
        for u in bits(self.adj[v]):
            row = count[u]
            row[c] += 1
            if row[c] == 1:
                sat[u] |= 1 << c

    def unassign(self, v: int) -> None:
        c = self.color[v]
        self.color[v] = 0
        count, sat = self.count, self.sat
        for u in bits(self.adj[v]):
            row = count[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] &= ~(1 << c)

    def pick(self) -> int:
        # max saturation, then max degree, then smallest id
        best, key = -1, None
        color, sat, deg = self.color, self.sat, self.deg
        for v in range(self.n):
            if color[v]:
                continue
            k = (popcount(sat[v]), deg[v])
            if key is None or k > key:
                best, key = v, k
        return best

    def greedy(self) -> int:
        """Complete the current partial coloring greedily; returns colors used."""
        used = max(self.color, default=0)
        for _ in range(self.color.count(0)):
            v = self.pick()
            c = 1
            while self.sat[v] >> c & 1:
                c += 1
            self.assign(v, c)
            used = max(used, c)
        return used

    def minimize(self, used: int, incumbent: int, stop_at: int) -> list[int] | None:
        """Find a completion using fewer than ``incumbent`` colors, as few as
        possible, stopping early once ``stop_at`` colors are reached."""
        self.best: list[int] | None = None
        self.best_k = incumbent
        self.stop_at = stop_at
        self._rec(self.color.count(0), used)
        return self.best

    def _rec(self, left: int, used: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitError(f"coloring search exceeded {self.budget} nodes")
        if used >= self.best_k:
            return False
        if left == 0:
            self.best = list(self.color)
            self.best_k = used
            return used <= self.stop_at
        v = self.pick()
        forb = self.sat[v]
        for c in range(1, used + 1):
            if forb >> c & 1:
                continue
            self.assign(v, c)
            done = self._rec(left - 1, used)
            self.unassign(v)
            if done:
                return True
        if used + 1 < self.best_k:
            self.assign(v, used + 1)
            done = self._rec(left - 1, used + 1)
            self.unassign(v)
            if done:
                return True
        return False


def chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with a witnessing coloring."""
    if g.n == 0:
        return 0, Coloring(())
    clique = list(bits(max_clique_mask(g.adj, g.full)))
    lower = len(clique)

    greedy = _Search(g.adj, g.n, node_budget)
    for c, v in enumerate(clique, 1):
        greedy.assign(v, c)
    upper = greedy.greedy()
    best = list(greedy.color)
    if upper > lower:
        search = _Search(g.adj, g.n, node_budget)
        for c, v in enumerate(clique, 1):
            search.assign(v, c)
        found = search.minimize(lower, upper, lower)
        if found is not None:
            best = found
    coloring = Coloring(tuple(best))
    return coloring.num_colors, coloring


def _color_with_fixed(adj: Sequence[int], n: int, fixed: dict[int, int], k: int,
                      node_budget: int) -> list[int] | None:
    """Any proper coloring with colors ``1..k`` agreeing with ``fixed``."""
    search = _Search(adj, n, node_budget)
    for v, c in fixed.items():
        if search.sat[v] >> c & 1:
            return None
        search.assign(v, c)
    used = max(fixed.values(), default=0)
    if used > k:
        return None
    return search.minimize(used, k + 1, k)


# -- pre-coloring extension -------------------------------------------------------------

@dataclass(frozen=True)
class PrextAnswer:
    feasible: bool
    extension: Coloring | None
    colors_used: int | None
    contracted: ContractionResult

    def to_json(self, labels: Sequence[Any] | None = None) -> dict:
        lab = (lambda v: v) if labels is None else (lambda v: labels[v])
        assignment = [] if self.extension is None else [
            [lab(v), c] for v, c in enumerate(self.extension.colors)]
        return {
            "feasible": self.feasible,
            "colors_used": self.colors_used,
            "assignment": assignment,
            "contracted_size": self.contracted.graph.n,
        }


def count_extensions(g: Graph, q: StableFamily | Iterable[Iterable[int]], k: int) -> int:
    """Number of proper k-colorings of ``g`` putting class ``C_j`` in color ``j``.

    Plain backtracking; only for ``n <= 10`` and ``k <= n``.
    """
    if g.n > 10:
        raise ResourceLimitError("count_extensions is limited to 10 vertices")
    if not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}")
    q = as_family(StableFamily, q)
    q.validate(g)
    if len(q) > k:
        return 0
    color = [0] * g.n
    for j, cls in enumerate(q.classes, 1):
        for v in cls:
            color[v] = j
    free = [v for v in range(g.n) if not color[v]]
    adj = g.adj
    if not free:
        return 1

    def rec(i: int) -> int:
        v = free[i]
        taken = 0
        for u in bits(adj[v]):
            taken |= 1 << color[u]
        options = [c for c in range(1, k + 1) if not taken >> c & 1]
        if i == len(free) - 1:
            return len(options)
        total = 0
        for c in options:
            color[v] = c
            total += rec(i + 1)
        color[v] = 0
        return total

    return rec(0)


def prext_decide(g: Graph, q: StableFamily | Iterable[Iterable[int]], k: int,
                 node_budget: int = DEFAULT_NODE_BUDGET) -> PrextAnswer:
    """Is there a k-coloring of ``g`` extending ``q``?  Solved on ``G/Q`` with
    ``c_j`` fixed to color ``j``."""
    res = contract(g, q)
    m = res.m
    if k < m:
        return PrextAnswer(False, None, None, res)
    fixed = {res.class_vertex[j - 1]: j for j in range(1, m + 1)}
    found = _color_with_fixed(res.graph.adj, res.graph.n, fixed, k, node_budget)
    if found is None:
        return PrextAnswer(False, None, None, res)
    ext = lift_coloring(res, found)
    return PrextAnswer(True, ext, ext.num_colors, res)


def prext_optimize(g: Graph, q: StableFamily | Iterable[Iterable[int]],
                   node_budget: int = DEFAULT_NODE_BUDGET) -> PrextAnswer:
    """Minimum extension of ``q``; uses exactly ``chi(G/Q)`` colors."""
    res = contract(g, q)
    k, coloring = chromatic_number(res.graph, node_budget)
    ext = lift_coloring(res, coloring)
    assert ext.num_colors == k
    return PrextAnswer(True, ext, k, res)


def co_prext_optimize(g: Graph, q: CliqueFamily | Iterable[Iterable[int]],
                      node_budget: int = DEFAULT_NODE_BUDGET) -> PrextAnswer:
    """Minimum partition of ``g`` into cliques with ``C_j`` inside class ``j``.

    Co-colors the co-contraction ``G^Q`` exactly and lifts the result; the
    extension's color classes are cliques of ``g``.
    """
    res = cocontract(g, q)
    k, coloring = chromatic_number(complement(res.graph), node_budget)
    ext = lift_coloring(res, coloring)
    return PrextAnswer(True, ext, k, res)


def contracted_clique_number(g: Graph, q: StableFamily | Iterable[Iterable[int]]) -> int:
    """``omega(G/Q)``, the lower bound behind the clique condition."""
    res = contract(g, q)
    return popcount(max_clique_mask(res.graph.adj, res.graph.full))


def clique_condition(g: Graph, q: StableFamily | Iterable[Iterable[int]], k: int) -> bool:
    """Whether ``omega(G/Q) <= k``.

    Necessary for a k-extension to exist, and sufficient whenever ``G/Q`` is
    perfect.
    """
    return contracted_clique_number(g, q) <= k
