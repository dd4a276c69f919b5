"""Forbidden induced structures and the graph classes defined by them.

All searches grow chordless paths vertex by vertex over bitset adjacency and
close them into cycles, so only induced structures are ever built.  They are
exact: a ``None`` answer means the structure is absent.

Returned witnesses are the smallest structure of their kind, ties broken by
the lexicographically smallest vertex list in the canonical orientation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Sequence

from prext.errors import ResourceLimitError
from prext.graph import Graph, bits, complement, induced_paths, popcount

#: Default vertex cap for the detectors; raise it (up to 63) at your own cost.
MAX_N = 16


class WitnessKind(str, Enum):
    ODD_HOLE = "OddHole"
    EVEN_HOLE = "EvenHole"
    HOUSE = "House"
    ANTIHOLE = "Antihole"
    PRISM = "Prism"
    ODD_CYCLE_FEW_CHORDS = "OddCycleFewChords"


@dataclass(frozen=True)
class Witness:
    """A forbidden structure found in a graph.

    ``vertices`` is in cyclic order for holes, antiholes and cycles; for a
    house it is the cycle order with the chord joining ``vertices[0]`` and
    ``vertices[2]``; for a prism it is the three paths concatenated, each
    running from triangle ``A`` to triangle ``B``.  ``extra`` holds the house
    chord, the prism paths and triangles, and ``host="complement"`` when the
    structure lives in the complement of the graph it was reported for.
    """

    kind: WitnessKind
    vertices: tuple[int, ...]
    extra: dict = field(default_factory=dict, hash=False)

    def to_json(self, labels: Sequence[Any] | None = None) -> dict:
        lab = (lambda v: v) if labels is None else (lambda v: labels[v])
        return {
            "kind": self.kind.value,
            "vertices": [lab(v) for v in self.vertices],
            "extra": _relabel(self.extra, lab),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Witness":
        return cls(WitnessKind(data["kind"]), tuple(data["vertices"]), dict(data.get("extra", {})))

    def relabel(self, mapping: Sequence[int]) -> "Witness":
        return Witness(self.kind, tuple(mapping[v] for v in self.vertices), _relabel(self.extra, lambda v: mapping[v]))


def _relabel(extra: dict, lab) -> dict:
    out = {}
    for key, value in extra.items():
        if key == "host":
            out[key] = value
        elif key == "chord":
            out[key] = [lab(v) for v in value]
        elif key in ("paths", "triangles"):
            out[key] = [[lab(v) for v in part] for part in value]
        else:
            out[key] = value
    return out


def _guard(g: Graph) -> None:
    if g.n > MAX_N:
        raise ResourceLimitError(f"graph has {g.n} vertices; detectors are capped at {MAX_N}")


# -- holes --------------------------------------------------------------------------

def iter_holes(adj: Sequence[int], n: int, roots: int | None = None,
               length: int | None = None) -> Iterator[list[int]]:
    """Yield every hole exactly once, as ``[s, p1, ..., pk]`` with ``p1 < pk``.

    ``s`` is the smallest vertex of the hole lying in ``roots`` (default: all
    vertices), so with ``roots`` given only holes meeting ``roots`` are
    produced.  ``length`` restricts output to holes of exactly that length;
    within one length, holes come out in lexicographic order.
    """
    full = (1 << n) - 1
    if roots is None:
        roots = full
    limit = n if length is None else length
    if limit < 4:
        return
    path: list[int] = []

    def grow(blocked: int, adj_s: int) -> Iterator[list[int]]:
        last = path[-1]
        cand = adj[last] & ~blocked
        size = len(path)
        if size >= 3 and (length is None or size + 1 == length):
            p1 = path[1]
            for v in bits(cand & adj_s):
                if v > p1:
                    yield path + [v]
        if size + 1 < limit:
            nxt = blocked | adj[last]
            for v in bits(cand & ~adj_s):
                path.append(v)
                yield from grow(nxt | (1 << v), adj_s)
                path.pop()

    for s in bits(roots):
        base = (roots & ((1 << (s + 1)) - 1))
        adj_s = adj[s]
        for p1 in bits(adj_s & ~base):
            path[:] = [s, p1]
            # blocked holds s, smaller roots and the path; neighbours of s
            # are split into closers/extenders inside grow
            yield from grow(base | (1 << p1), adj_s)


def _parity_ok(length: int, parity: str) -> bool:
    return parity == "any" or (length % 2 == 1) == (parity == "odd")


def has_hole(adj: Sequence[int], n: int, parity: str = "any", min_len: int = 4,
             roots: int | None = None) -> bool:
    for h in iter_holes(adj, n, roots):
        if len(h) >= min_len and _parity_ok(len(h), parity):
            return True
    return False


def _shortest_hole(adj: Sequence[int], n: int, parity: str, min_len: int) -> list[int] | None:
    for length in range(max(min_len, 4), n + 1):
        if not _parity_ok(length, parity):
            continue
        for h in iter_holes(adj, n, length=length):
            return h
    return None


def find_hole(g: Graph, parity: str = "any", min_len: int = 4) -> Witness | None:
    """Shortest induced cycle of length >= ``min_len`` with the given parity."""
    if parity not in ("odd", "even", "any"):
        raise ValueError(f"parity must be odd, even or any, not {parity!r}")
    if min_len < 4:
        raise ValueError("holes have length at least 4")
    _guard(g)
    h = _shortest_hole(g.adj, g.n, parity, min_len)
    if h is None:
        return None
    kind = WitnessKind.ODD_HOLE if len(h) % 2 else WitnessKind.EVEN_HOLE
    return Witness(kind, tuple(h))


def find_antihole(g: Graph, min_size: int = 5, parity: str = "any") -> Witness | None:
    """Smallest antihole on at least ``min_size`` vertices, as a hole of the complement."""
    if min_size < 5:
        raise ValueError("antiholes are considered from 5 vertices up")
    _guard(g)
    h = _shortest_hole(complement(g).adj, g.n, parity, min_size)
    return None if h is None else Witness(WitnessKind.ANTIHOLE, tuple(h))


# -- houses -------------------------------------------------------------------------

def _house_apexes(adj: Sequence[int], n: int, hole: list[int]) -> Iterator[list[int]]:
    # A house is a hole plus a vertex seeing exactly two consecutive hole vertices.
    hmask = 0
    for v in hole:
        hmask |= 1 << v
    size = len(hole)
    pairs = {(1 << hole[i]) | (1 << hole[(i + 1) % size]): i for i in range(size)}
    for x in bits(((1 << n) - 1) & ~hmask):
        i = pairs.get(adj[x] & hmask)
        if i is None:
            continue
        a, b = hole[i], hole[(i + 1) % size]
        fwd = [a, x, b] + [hole[(i + 1 + k) % size] for k in range(1, size - 1)]
        bwd = [b, x, a] + [hole[(i - k) % size] for k in range(1, size - 1)]
        yield min(fwd, bwd)


def find_house(g: Graph) -> Witness | None:
    """Smallest house: a cycle of length >= 5 whose only chord is ``p1 p3``."""
    _guard(g)
    for length in range(4, g.n):
        best = None
        for h in iter_holes(g.adj, g.n, length=length):
            for house in _house_apexes(g.adj, g.n, h):
                if best is None or house < best:
                    best = house
        if best is not None:
            return Witness(WitnessKind.HOUSE, tuple(best), {"chord": [best[0], best[2]]})
    return None


def has_house(adj: Sequence[int], n: int) -> bool:
    return any(True for h in iter_holes(adj, n) for _ in _house_apexes(adj, n, h))


def meyniel_violation(adj: Sequence[int], n: int, roots: int | None = None) -> bool:
    """True iff there is an odd hole or a house (meeting ``roots`` if given)."""
    for h in iter_holes(adj, n):
        if len(h) % 2:
            if roots is None or any(roots >> v & 1 for v in h):
                return True
            continue
        for house in _house_apexes(adj, n, h):
            if roots is None or any(roots >> v & 1 for v in house):
                return True
    return False


# -- prisms -------------------------------------------------------------------------

def _triangles(adj: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    out = []
    for a in range(n):
        higher = adj[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            for c in bits(higher & adj[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def iter_prisms(adj: Sequence[int], n: int) -> Iterator[tuple[list[int], list[int], list[int]]]:
    """Yield prisms as three paths ``(P1, P2, P3)`` from triangle A to triangle B.

    A prism may be produced more than once (under its symmetries).
    """
    full = (1 << n) - 1
    tris = _triangles(adj, n)
    for i, A in enumerate(tris):
        amask = (1 << A[0]) | (1 << A[1]) | (1 << A[2])
        for B in tris[i + 1:]:
            bmask = (1 << B[0]) | (1 << B[1]) | (1 << B[2])
            if amask & bmask:
                continue
            rest = full & ~amask & ~bmask
            for Bp in itertools.permutations(B):
                if any(adj[A[k]] >> Bp[l] & 1 for k in range(3) for l in range(3) if k != l):
                    continue
                yield from _prism_paths(adj, A, Bp, rest)


def _prism_paths(adj, A, B, rest):
    def nbhd(*vs):
        m = 0
        for v in vs:
            m |= adj[v]
        return m

    allow1 = rest & ~nbhd(A[1], A[2], B[1], B[2])
    for p1 in induced_paths(adj, A[0], B[0], allow1):
        i1 = _interior(p1)
        allow2 = rest & ~i1 & ~_nbhd_mask(adj, i1) & ~nbhd(A[0], A[2], B[0], B[2])
        for p2 in induced_paths(adj, A[1], B[1], allow2):
            i2 = _interior(p2)
            used = i1 | i2
            allow3 = rest & ~used & ~_nbhd_mask(adj, used) & ~nbhd(A[0], A[1], B[0], B[1])
            for p3 in induced_paths(adj, A[2], B[2], allow3):
                yield p1, p2, p3


def _interior(path: list[int]) -> int:
    m = 0
    for v in path[1:-1]:
        m |= 1 << v
    return m


def _nbhd_mask(adj, mask: int) -> int:
    m = 0
    for v in bits(mask):
        m |= adj[v]
    return m


def _canonical_prism(paths) -> tuple[list[int], list[list[int]]]:
    best = None
    for order in itertools.permutations(paths):
        for flip in (False, True):
            ps = [list(reversed(p)) if flip else list(p) for p in order]
            flat = [v for p in ps for v in p]
            if best is None or flat < best[0]:
                best = (flat, ps)
    return best


def _prism_witness(paths) -> Witness:
    flat, ps = _canonical_prism(paths)
    return Witness(WitnessKind.PRISM, tuple(flat), {
        "paths": ps,
        "triangles": [[p[0] for p in ps], [p[-1] for p in ps]],
    })


def find_prism(g: Graph) -> Witness | None:
    _guard(g)
    best = None
    for paths in iter_prisms(g.adj, g.n):
        flat, _ = _canonical_prism(paths)
        if best is None or (len(flat), flat) < (len(best[0]), best[0]):
            best = (flat, paths)
    return None if best is None else _prism_witness(best[1])


def has_prism(adj: Sequence[int], n: int, roots: int | None = None) -> bool:
    for paths in iter_prisms(adj, n):
        if roots is None or any(roots >> v & 1 for p in paths for v in p):
            return True
    return False


# -- classes ------------------------------------------------------------------------

def is_meyniel(g: Graph) -> tuple[bool, Witness | None]:
    """Meyniel iff no odd hole and no house.  The witness is the odd hole if
    there is one, otherwise a house."""
    _guard(g)
    if not meyniel_violation(g.adj, g.n):
        return True, None
    w = find_hole(g, "odd")
    return False, w if w is not None else find_house(g)


def _cycles(adj: Sequence[int], n: int) -> Iterator[list[int]]:
    # Every simple cycle of length >= 3 once: smallest vertex first, p1 < last.
    path: list[int] = []

    def grow(used: int) -> Iterator[list[int]]:
        s, last = path[0], path[-1]
        for v in bits(adj[last] & ~used):
            if v < s:
                continue
            path.append(v)
            if len(path) >= 3 and adj[v] >> s & 1 and path[1] < v:
                yield list(path)
            yield from grow(used | (1 << v))
            path.pop()

    for s in range(n):
        path[:] = [s]
        yield from grow(1 << s)


def _few_chord_odd_cycle(adj: Sequence[int], n: int) -> list[int] | None:
    for cyc in _cycles(adj, n):
        size = len(cyc)
        if size < 5 or size % 2 == 0:
            continue
        mask = 0
        for v in cyc:
            mask |= 1 << v
        inside = sum(popcount(adj[v] & mask) for v in cyc) // 2
        if inside - size < 2:
            return cyc
    return None


def is_meyniel_definitional(g: Graph) -> bool:
    """Check every odd cycle of length >= 5 for two chords, by enumeration.

    Only meant as an oracle for :func:`is_meyniel`; limited to 10 vertices.
    """
    if g.n > 10:
        raise ResourceLimitError("definitional Meyniel check is limited to 10 vertices")
    return _few_chord_odd_cycle(g.adj, g.n) is None


def find_odd_cycle_few_chords(g: Graph) -> Witness | None:
    if g.n > 10:
        raise ResourceLimitError("cycle enumeration is limited to 10 vertices")
    cyc = _few_chord_odd_cycle(g.adj, g.n)
    return None if cyc is None else Witness(WitnessKind.ODD_CYCLE_FEW_CHORDS, tuple(cyc))


def artemis_violation(adj: Sequence[int], n: int, roots: int | None = None) -> str | None:
    """Name of the first Artemis obstruction meeting ``roots``, or None."""
    if has_hole(adj, n, "odd", 5, roots):
        return "oddhole"
    full = (1 << n) - 1
    co = [full & ~row & ~(1 << v) for v, row in enumerate(adj)]
    if has_hole(co, n, "any", 5, roots):
        return "antihole"
    if has_prism(adj, n, roots):
        return "prism"
    return None


def berge_violation(adj: Sequence[int], n: int, roots: int | None = None) -> bool:
    if has_hole(adj, n, "odd", 5, roots):
        return True
    full = (1 << n) - 1
    co = [full & ~row & ~(1 << v) for v, row in enumerate(adj)]
    return has_hole(co, n, "odd", 5, roots)


def is_artemis(g: Graph) -> tuple[bool, Witness | None]:
    """No odd hole, no antihole on five or more vertices, no prism."""
    _guard(g)
    if artemis_violation(g.adj, g.n) is None:
        return True, None
    w = find_hole(g, "odd")
    # prisms before antiholes: the triangular prism is also the 6-antihole
    # and is reported as a prism
    if w is None:
        w = find_prism(g)
    if w is None:
        w = find_antihole(g, 5)
    return w is None, w


def is_berge(g: Graph) -> tuple[bool, Witness | None]:
    """No odd hole and no odd antihole; by the strong perfect graph theorem
    this is exactly perfection."""
    _guard(g)
    if not berge_violation(g.adj, g.n):
        return True, None
    w = find_hole(g, "odd")
    if w is None:
        w = find_antihole(g, 5, parity="odd")
    return w is None, w


@dataclass(frozen=True)
class ClassReport:
    is_meyniel: bool
    is_artemis: bool
    is_berge: bool
    is_co_meyniel: bool
    witnesses: dict = field(default_factory=dict, hash=False)

    def to_json(self, labels: Sequence[Any] | None = None) -> dict:
        return {
            "is_meyniel": self.is_meyniel,
            "is_artemis": self.is_artemis,
            "is_berge": self.is_berge,
            "is_co_meyniel": self.is_co_meyniel,
            "witnesses": {k: w.to_json(labels) for k, w in sorted(self.witnesses.items())},
        }


def classify(g: Graph) -> ClassReport:
    """Meyniel, Artemis, Berge and co-Meyniel membership, with a witness for
    every failed flag.  The co-Meyniel witness lives in the complement."""
    meyniel, wm = is_meyniel(g)
    artemis, wa = is_artemis(g)
    berge, wb = is_berge(g)
    co, wc = is_meyniel(complement(g))
    witnesses = {}
    if wm:
        witnesses["meyniel"] = wm
    if wa:
        witnesses["artemis"] = wa
    if wb:
        witnesses["berge"] = wb
    if wc:
        witnesses["co_meyniel"] = Witness(wc.kind, wc.vertices, {**wc.extra, "host": "complement"})
    return ClassReport(meyniel, artemis, berge, co, witnesses)


# -- independent re-verification ---------------------------------------------------

def _is_cycle_in_order(g: Graph, cyc: Sequence[int]) -> bool:
    size = len(cyc)
    if len(set(cyc)) != size or any(not 0 <= v < g.n for v in cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size))


def _induced_edge_set(g: Graph, vs: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset((u, v)) for u, v in itertools.combinations(vs, 2) if g.has_edge(u, v)}


def _cycle_edge_set(cyc: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}


def verify_witness(g: Graph, w: Witness) -> bool:
    """Re-check a witness against ``g`` from scratch (no detector code)."""
    host = complement(g) if w.extra.get("host") == "complement" else g
    vs = list(w.vertices)
    kind = w.kind
    if kind in (WitnessKind.ODD_HOLE, WitnessKind.EVEN_HOLE, WitnessKind.ANTIHOLE):
        h = complement(host) if kind is WitnessKind.ANTIHOLE else host
        if len(vs) < (5 if kind is WitnessKind.ANTIHOLE else 4):
            return False
        if kind is WitnessKind.ODD_HOLE and len(vs) % 2 == 0:
            return False
        if kind is WitnessKind.EVEN_HOLE and len(vs) % 2 == 1:
            return False
        return _is_cycle_in_order(h, vs) and _induced_edge_set(h, vs) == _cycle_edge_set(vs)
    if kind is WitnessKind.HOUSE:
        if len(vs) < 5 or not _is_cycle_in_order(host, vs):
            return False
        return _induced_edge_set(host, vs) == _cycle_edge_set(vs) | {frozenset((vs[0], vs[2]))}
    if kind is WitnessKind.ODD_CYCLE_FEW_CHORDS:
        if len(vs) < 5 or len(vs) % 2 == 0 or not _is_cycle_in_order(host, vs):
            return False
        return len(_induced_edge_set(host, vs) - _cycle_edge_set(vs)) <= 1
    if kind is WitnessKind.PRISM:
        paths = w.extra.get("paths")
        if not paths or len(paths) != 3 or any(len(p) < 2 for p in paths):
            return False
        flat = [v for p in paths for v in p]
        if flat != vs or len(set(flat)) != len(flat) or any(not 0 <= v < host.n for v in flat):
            return False
        expected = set()
        for p in paths:
            expected |= {frozenset((p[i], p[i + 1])) for i in range(len(p) - 1)}
        for end in (0, -1):
            expected |= {frozenset((a[end], b[end])) for a, b in itertools.combinations(paths, 2)}
        return _induced_edge_set(host, flat) == expected
    return False
