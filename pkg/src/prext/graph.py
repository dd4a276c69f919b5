"""Immutable simple graphs with bitset adjacency.

Vertices are the dense ids ``0..n-1``.  Row ``adj[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge, so vertex sets are plain ints throughout
the hot paths.  The public functions also accept any iterable of ids where a
vertex set is expected.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

MAX_VERTICES = 63

VertexSet = Union[int, Iterable[int]]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; equality compares the labeled
    adjacency, not isomorphism type.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour id >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.adj)))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee a symmetric irreflexive bitset.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "_hash", hash((n, g.adj)))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, ignoring duplicate and reversed edges."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def to_mask(s: VertexSet, n: int | None = None) -> int:
    """Convert a vertex set to a bitmask, checking ids against ``n``."""
    if isinstance(s, int):
        mask = s
        if mask < 0:
            raise ValueError("negative vertex mask")
    else:
        mask = 0
        for v in s:
            if v < 0:
                raise ValueError(f"vertex id {v} out of range")
            mask |= 1 << v
    if n is not None and mask >> n:
        raise ValueError(f"vertex id {mask.bit_length() - 1} out of range for n={n}")
    return mask


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(h, mapping)`` where ``mapping[i]`` is the id in ``g`` of vertex ``i`` of ``h``."""
    mask = to_mask(s, g.n)
    mapping = tuple(bits(mask))
    return _induced(g.adj, mapping), mapping


def _induced(adj: Sequence[int], mapping: Sequence[int]) -> Graph:
    rows = []
    for old in mapping:
        row = adj[old]
        new = 0
        for i, u in enumerate(mapping):
            if row >> u & 1:
                new |= 1 << i
        rows.append(new)
    return Graph._trusted(len(mapping), rows)


def is_clique(g: Graph, s: VertexSet) -> bool:
    mask = to_mask(s, g.n)
    for v in bits(mask):
        if (mask & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_stable(g: Graph, s: VertexSet) -> bool:
    mask = to_mask(s, g.n)
    return all(not (g.adj[v] & mask) for v in bits(mask))


def is_connected(g: Graph, s: VertexSet | None = None) -> bool:
    """Connectivity of the subgraph induced by ``s`` (all of ``g`` by default).

    The empty set and singletons count as connected.
    """
    mask = g.full if s is None else to_mask(s, g.n)
    return _connected(g.adj, mask)


def _connected(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def induced_paths(adj: Sequence[int], a: int, b: int, allowed: int, max_len: int | None = None) -> Iterator[list[int]]:
    """Chordless ``a``-``b`` paths whose interior lies in ``allowed``.

    Low-level bitset routine shared by the detectors.  ``max_len`` bounds the
    number of edges.
    """
    if adj[a] >> b & 1:
        if max_len is None or max_len >= 1:
            yield [a, b]
        return
    allowed &= ~((1 << a) | (1 << b))
    limit = len(adj) if max_len is None else max_len
    path = [a]

    def extend(blocked: int) -> Iterator[list[int]]:
        # blocked: path vertices plus neighbours of all path vertices but the last
        last = path[-1]
        edges_so_far = len(path) - 1
        cand = adj[last] & allowed & ~blocked
        if edges_so_far + 2 > limit:
            return
        for v in bits(cand):
            if adj[v] >> b & 1:
                yield path + [v, b]
                continue
            path.append(v)
            yield from extend(blocked | adj[last] | (1 << v))
            path.pop()

    # interior vertices adjacent to b close the path immediately, so b never
    # touches an earlier interior vertex
    yield from extend(1 << a)


def chordless_paths_between(g: Graph, u: int, v: int, max_len: int | None = None) -> Iterator[list[int]]:
    """Yield every induced path from ``u`` to ``v`` with at most ``max_len`` edges."""
    if u == v:
        raise ValueError("endpoints must differ")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise ValueError(f"vertex id {w} out of range for n={g.n}")
    yield from induced_paths(g.adj, u, v, g.full, max_len)


# -- small named graphs -------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def house_graph(length: int = 5) -> Graph:
    """Cycle ``0..length-1`` with the single chord ``0-2``."""
    if length < 5:
        raise ValueError("a house has length at least 5")
    return from_edges(length, [(i, (i + 1) % length) for i in range(length)] + [(0, 2)])


def prism_graph(r: int = 1, s: int = 1, t: int = 1) -> Graph:
    """Prism with paths of ``r``, ``s`` and ``t`` edges.

    Vertices are numbered path by path: ``u_0..u_r``, then ``v_0..v_s``,
    then ``w_0..w_t``.
    """
    if min(r, s, t) < 1:
        raise ValueError("prism paths need at least one edge")
    edges = []
    starts = []
    base = 0
    for length in (r, s, t):
        starts.append((base, base + length))
        edges += [(base + i, base + i + 1) for i in range(length)]
        base += length + 1
    (a0, b0), (a1, b1), (a2, b2) = starts
    edges += [(a0, a1), (a0, a2), (a1, a2), (b0, b1), (b0, b2), (b1, b2)]
    return from_edges(base, edges)
