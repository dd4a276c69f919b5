"""Mechanical verification of the co-contraction theorems on small graphs.

Every check enumerates labeled graphs exhaustively up to ``n_max`` and, where
asked, adds seeded random samples above it.  Work is split into independent
items (index ranges of the labeled enumeration, or single samples with their
own sub-seed) so serial and parallel runs produce identical reports.

Speed-ups used throughout the co-contraction loops:

* class vertices of ``G^Q`` carry ids ``0..m-1``, so an obstruction avoiding
  all of them lives in ``G[V - Q]``, which is an induced subgraph of ``G``.
  The family ``Q = {}`` is always checked in full, so for non-empty ``Q``
  the search is restricted to structures meeting a class vertex;
* answers are memoised on the labeled adjacency of ``G^Q``.
"""
from __future__ import annotations

import itertools
import json
import random
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from prext.contraction import CliqueFamily, StableFamily, cocontract, contract, reduce_adjacency
from prext.detect import (
    MAX_N,
    artemis_violation,
    berge_violation,
    find_hole,
    find_house,
    has_hole,
    has_prism,
    is_artemis,
    is_berge,
    iter_holes,
    meyniel_violation,
    verify_witness,
)
from prext.errors import ResourceLimitError
from prext.formats import parse_edge_list, parse_family, write_edge_list, write_family
from prext.graph import Graph, _connected, bits, complement, induced_paths, lowest, prism_graph
from prext.solve import count_extensions

EXHAUSTIVE_MAX_N = 7
CHUNK = 4096


class SamplingBudgetWarning(UserWarning):
    pass


@dataclass
class VerificationReport:
    property: str
    scope: dict
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "scope": self.scope,
            "checked": self.checked,
            "passed": self.passed,
            "violations": self.violations,
            "details": self.details,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        scope = ", ".join(f"{k}={v}" for k, v in sorted(self.scope.items()))
        lines = [f"{self.property}: {status}", f"  scope: {scope}", f"  checked: {self.checked}"]
        for key, value in sorted(self.details.items()):
            lines.append(f"  {key}: {value}")
        for v in self.violations[:20]:
            lines.append(f"  violation [{v['check']}]: graph {v['graph']!r} family {v['family']!r}")
        return "\n".join(lines)


# -- enumeration ---------------------------------------------------------------------------

def edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_from_index(n: int, index: int, pairs: Sequence[tuple[int, int]] | None = None) -> Graph:
    """Labeled graph number ``index``: bit ``e`` selects edge ``edge_pairs(n)[e]``."""
    pairs = edge_pairs(n) if pairs is None else pairs
    rows = [0] * n
    e = 0
    while index:
        if index & 1:
            u, v = pairs[e]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        index >>= 1
        e += 1
    return Graph._trusted(n, rows)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices, in index order."""
    if n > EXHAUSTIVE_MAX_N:
        raise ResourceLimitError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N}")
    pairs = edge_pairs(n)
    for index in range(1 << len(pairs)):
        yield graph_from_index(n, index, pairs)


def _subcliques(cand: int, adj: Sequence[int]) -> list[int]:
    # every clique inside cand, including the empty one
    out = [0]

    def rec(clique: int, cand: int) -> None:
        for u in bits(cand):
            grown = clique | (1 << u)
            out.append(grown)
            rec(grown, cand & adj[u] & ~((1 << (u + 1)) - 1))

    rec(0, cand)
    return out


def iter_clique_family_masks(adj: Sequence[int], n: int) -> Iterator[tuple[int, ...]]:
    """Families of disjoint non-empty cliques as bitmask tuples, each once,
    classes ordered by smallest member."""
    classes: list[int] = []

    def rec(avail: int) -> Iterator[tuple[int, ...]]:
        if not avail:
            yield tuple(classes)
            return
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail & ~low
        yield from rec(rest)
        for extra in _subcliques(adj[v] & rest, adj):
            classes.append(low | extra)
            yield from rec(rest & ~extra)
            classes.pop()

    yield from rec((1 << n) - 1)


def enumerate_clique_families(g: Graph) -> Iterator[CliqueFamily]:
    """Every pre-co-coloring of ``g``, including the empty family."""
    if g.n > 8:
        raise ResourceLimitError("family enumeration is limited to 8 vertices")
    for masks in iter_clique_family_masks(g.adj, g.n):
        yield CliqueFamily(tuple(frozenset(bits(m)) for m in masks))


def enumerate_stable_families(g: Graph) -> Iterator[StableFamily]:
    """Every pre-coloring of ``g`` (with canonical class order)."""
    if g.n > 8:
        raise ResourceLimitError("family enumeration is limited to 8 vertices")
    co = complement(g)
    for masks in iter_clique_family_masks(co.adj, co.n):
        yield StableFamily(tuple(frozenset(bits(m)) for m in masks))


# -- sampling ------------------------------------------------------------------------------

def _sample_one(n: int, seed: int, index: int, co: bool, max_attempts: int, patience: int = 10) -> Graph | None:
    rng = random.Random(f"{'co-meyniel' if co else 'meyniel'}:{seed}:{n}:{index}")
    pairs = edge_pairs(n)
    p = 0.5
    for attempt in range(1, max_attempts + 1):
        rows = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph._trusted(n, rows)
        test = complement(g) if co else g
        if not meyniel_violation(test.adj, n):
            return g
        if attempt % patience == 0:
            # sparse graphs are Meyniel-friendly, dense ones co-Meyniel-friendly
            p = 1 - (1 - p) * 0.9 if co else p * 0.9
    return None


def _sample_guard(n: int) -> None:
    if n > MAX_N:
        raise ResourceLimitError(f"sampling is limited to {MAX_N} vertices, the detector cap")


def _sample(n: int, count: int, seed: int, co: bool, max_attempts: int) -> list[Graph]:
    _sample_guard(n)
    out = []
    for i in range(count):
        g = _sample_one(n, seed, i, co, max_attempts)
        if g is None:
            warnings.warn(f"sample {i} (n={n}, seed={seed}) exhausted {max_attempts} attempts",
                          SamplingBudgetWarning, stacklevel=3)
        else:
            out.append(g)
    return out


def sample_meyniel(n: int, count: int, seed: int, max_attempts: int = 10_000) -> list[Graph]:
    """Seeded rejection sampling of Meyniel graphs on ``n`` vertices.

    Each sample draws from its own sub-seed, starting from edge density 1/2
    and lowering it after repeated rejections.  Samples whose attempts run
    out are skipped with a :class:`SamplingBudgetWarning`.
    """
    return _sample(n, count, seed, False, max_attempts)


def sample_co_meyniel(n: int, count: int, seed: int, max_attempts: int = 10_000) -> list[Graph]:
    """Like :func:`sample_meyniel` for complements of Meyniel graphs (density raised instead)."""
    return _sample(n, count, seed, True, max_attempts)


# -- cached predicates on reduced graphs ---------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _berge_bad(n: int, rows: tuple[int, ...], roots: int | None) -> bool:
    return berge_violation(rows, n, roots)


@lru_cache(maxsize=1 << 18)
def _artemis_bad(n: int, rows: tuple[int, ...], roots: int | None) -> str | None:
    return artemis_violation(rows, n, roots)


@lru_cache(maxsize=1 << 18)
def _lemma_bad(n: int, rows: tuple[int, ...], roots: int | None) -> tuple[bool, bool, bool]:
    full = (1 << n) - 1
    co = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
    return (has_hole(co, n, "any", 6, roots), has_hole(rows, n, "odd", 5, roots), has_prism(rows, n, roots))


def _cocontracted(g: Graph, masks: tuple[int, ...]) -> tuple[int, tuple[int, ...], int | None]:
    rows, _ = reduce_adjacency(g.adj, g.n, masks, co=True)
    roots = (1 << len(masks)) - 1 if masks else None
    return len(rows), tuple(rows), roots


def _violation(check: str, g: Graph, family=(), **extra) -> dict:
    record = {"check": check, "graph": write_edge_list(g), "family": write_family(family)}
    record.update(extra)
    return record


def is_meyniel_graph(g: Graph) -> bool:
    return not meyniel_violation(g.adj, g.n)


def imperfection_witness(g: Graph) -> CliqueFamily:
    """A pre-co-coloring whose co-contraction is imperfect, for non-Meyniel ``g``.

    The empty family when ``g`` has an odd hole; otherwise ``{{x}, {y}}`` for
    the chord ``xy`` of a house, which then has odd length.
    """
    if is_meyniel_graph(g):
        raise ValueError("graph is Meyniel; every co-contraction is perfect")
    if find_hole(g, "odd") is not None:
        return CliqueFamily(())
    house = find_house(g)
    x, y = sorted(house.extra["chord"])
    return CliqueFamily((frozenset([x]), frozenset([y])))


# -- work items ----------------------------------------------------------------------------

def _items(n_max: int, sample_n: int | None, samples: int, seed: int, n_min: int = 1) -> list[tuple]:
    items = []
    for n in range(n_min, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        items += [("exhaustive", n, lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    if samples and sample_n is not None:
        _sample_guard(sample_n)
        items += [("sampled", sample_n, seed, i) for i in range(samples)]
    return items


def _item_graphs(item: tuple, meyniel_only: bool) -> Iterator[Graph]:
    if item[0] == "exhaustive":
        _, n, lo, hi = item
        pairs = edge_pairs(n)
        for index in range(lo, hi):
            g = graph_from_index(n, index, pairs)
            if not meyniel_only or is_meyniel_graph(g):
                yield g
    else:
        _, n, seed, i = item
        g = _sample_one(n, seed, i, False, 10_000)
        if g is None:
            warnings.warn(f"sample {i} (n={n}) exhausted its attempts", SamplingBudgetWarning)
        else:
            yield g


def _run(prop: str, scope: dict, worker: Callable, items: list[tuple], workers: int) -> VerificationReport:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, items, chunksize=max(1, len(items) // (4 * workers))))
    else:
        results = [worker(item) for item in items]
    report = VerificationReport(prop, scope)
    details: Counter = Counter()
    for item, (checked, violations, counts) in zip(items, results):
        report.checked += checked
        report.violations += violations
        details.update(counts)
        if item[0] == "sampled":
            # a sampled item yields one graph unless its attempts ran out
            details["sampled_graphs"] += counts.get("meyniel_graphs", 0)
    report.violations.sort(key=lambda v: (v["check"], v["graph"], v["family"], json.dumps(v, sort_keys=True)))
    report.details = dict(sorted(details.items()))
    return report


def _scope(n_max: int, samples: int = 0, seed: int | None = None, sample_n: int | None = None) -> dict:
    scope = {"n_min": 1, "n_max": n_max, "mode": "exhaustive"}
    if samples:
        scope.update(mode="exhaustive+sampled", samples=samples, seed=seed, sample_n=sample_n)
    return scope


# -- Meyniel iff every co-contraction is Berge ---------------------------------------------

def _theorem1_item(item: tuple):
    checked, violations, counts = 0, [], Counter()
    for g in _item_graphs(item, meyniel_only=False):
        if is_meyniel_graph(g):
            counts["meyniel_graphs"] += 1
            for masks in iter_clique_family_masks(g.adj, g.n):
                checked += 1
                if _berge_bad(*_cocontracted(g, masks)):
                    violations.append(_violation("theorem1-forward", g, masks))
        else:
            counts["non_meyniel_graphs"] += 1
            checked += 1
            q = imperfection_witness(g)
            res = cocontract(g, q)
            ok, w = is_berge(res.graph)
            if ok or not verify_witness(res.graph, w):
                violations.append(_violation("theorem1-reverse", g, q.masks))
    return checked, violations, counts


def verify_theorem1(n_max: int = 6, workers: int = 1) -> VerificationReport:
    """Every co-contraction is Berge exactly when the graph is Meyniel.

    Forward: all families of every Meyniel graph.  Reverse: the constructive
    family from :func:`imperfection_witness`, whose co-contraction must fail
    :func:`is_berge` with a re-verified witness.
    """
    return _run("theorem1", _scope(n_max), _theorem1_item, _items(n_max, None, 0, 0), workers)


# -- Artemis co-contractions and the structural lemmas -------------------------------------

def _theorem2_item(item: tuple):
    checked, violations, counts = 0, [], Counter()
    for g in _item_graphs(item, meyniel_only=True):
        counts["meyniel_graphs"] += 1
        for masks in iter_clique_family_masks(g.adj, g.n):
            checked += 1
            bad = _artemis_bad(*_cocontracted(g, masks))
            if bad:
                violations.append(_violation("theorem2", g, masks, obstruction=bad))
    return checked, violations, counts


def verify_theorem2(n_max: int = 6, sample_budget: int = 0, seed: int = 0,
                    sample_n: int | None = None, workers: int = 1) -> VerificationReport:
    """Every co-contraction of a Meyniel graph is Artemis.

    Exhaustive over Meyniel graphs with ``n <= n_max``; ``sample_budget``
    further Meyniel graphs on ``sample_n`` vertices (default ``n_max + 3``)
    are drawn with :func:`sample_meyniel` semantics.
    """
    sample_n = n_max + 3 if sample_n is None else sample_n
    return _run("theorem2", _scope(n_max, sample_budget, seed, sample_n), _theorem2_item,
                _items(n_max, sample_n, sample_budget, seed), workers)


# -- extension counts through contraction --------------------------------------------------

def _count_reduced(res_graph: Graph, m: int, k: int) -> int:
    # brute force over all color assignments of the uncontracted vertices
    if m > k:
        return 0
    edges = res_graph.edges()
    free = res_graph.n - m
    total = 0
    for tail in itertools.product(range(1, k + 1), repeat=free):
        colors = tuple(range(1, m + 1)) + tail
        if all(colors[u] != colors[v] for u, v in edges):
            total += 1
    return total


def _lemma1_item(item: tuple):
    checked, violations, counts = 0, [], Counter()
    for g in _item_graphs(item, meyniel_only=False):
        for q in enumerate_stable_families(g):
            res = contract(g, q)
            counts["families"] += 1
            for k in range(g.n + 1):
                checked += 1
                lhs = count_extensions(g, q, k)
                rhs = _count_reduced(res.graph, len(q), k)
                if lhs != rhs:
                    violations.append(_violation("lemma1", g, q.masks, k=k, extensions=lhs, reduced=rhs))
    return checked, violations, counts


def verify_lemma1(n_max: int = 5, workers: int = 1) -> VerificationReport:
    """Extensions of ``Q`` with ``k`` colors are counted on ``G`` and, by brute
    force, on ``G/Q`` with ``c_j`` colored ``j``; the counts must agree."""
    if n_max > 6:
        raise ResourceLimitError("lemma1 verification is limited to n_max <= 6")
    return _run("lemma1", _scope(n_max), _lemma1_item, _items(n_max, None, 0, 0), workers)


# -- structural lemmas on Meyniel graphs ---------------------------------------------------

def _all_induced_paths(g: Graph) -> list[list[int]]:
    """Every induced path with at least one edge, one orientation (first < last)."""
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            out += induced_paths(g.adj, a, b, g.full)
    return out


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def check_lemma_meyniel(g: Graph) -> tuple[int, list[dict]]:
    """Path lemma: a vertex seeing both ends of a chordless path sees all of
    it, or the path is even and only even-indexed vertices are seen."""
    checked, bad = 0, []
    adj = g.adj
    for p in _all_induced_paths(g):
        pmask = _mask(p)
        even = _mask(p[0::2])
        for x in bits(adj[p[0]] & adj[p[-1]] & ~pmask):
            checked += 1
            seen = adj[x] & pmask
            if seen == pmask:
                continue
            if (len(p) - 1) % 2 == 0 and not seen & ~even:
                continue
            bad.append(_violation("lemma-meyniel", g, path=p, x=x))
    return checked, bad


def check_lemma_consecutive(g: Graph) -> tuple[int, list[dict]]:
    """A vertex seeing two consecutive vertices of an even hole sees all of it
    or exactly three consecutive ones."""
    checked, bad = 0, []
    adj = g.adj
    for h in iter_holes(adj, g.n):
        if len(h) % 2:
            continue
        size = len(h)
        hmask = _mask(h)
        edges = [(1 << h[i]) | (1 << h[(i + 1) % size]) for i in range(size)]
        triples = {(1 << h[i - 1]) | (1 << h[i]) | (1 << h[(i + 1) % size]) for i in range(size)}
        for x in bits(g.full & ~hmask):
            seen = adj[x] & hmask
            if not any(seen & e == e for e in edges):
                continue
            checked += 1
            if seen != hmask and seen not in triples:
                bad.append(_violation("lemma-consecutive", g, hole=h, x=x))
    return checked, bad


def check_lemma_pqz(g: Graph, z_misses_p0: bool = False) -> tuple[int, list[dict]]:
    """Clique/path/vertex lemma: under its hypotheses ``p_n`` sees all of ``Q``.

    Taken literally the statement is false (smallest counterexample has six
    vertices, with ``z`` adjacent to ``p_0``).  ``z_misses_p0`` adds that
    extra hypothesis, which holds wherever the lemma is applied downstream.
    """
    checked, bad = 0, []
    adj = g.adj
    for path in _all_induced_paths(g):
        if len(path) < 3:
            continue
        for p in (path, path[::-1]):
            p0, p1, pn = p[0], p[1], p[-1]
            pmask = _mask(p)
            for q in _subcliques(adj[p0] & ~pmask, adj):
                if not q or not (q & adj[pn] & ~adj[p1]):
                    continue
                common = g.full
                for v in bits(q):
                    common &= adj[v]
                zs = common & ~pmask & ~adj[p1]
                if z_misses_p0:
                    zs &= ~adj[p0]
                if not zs:
                    continue
                checked += 1
                if q & ~adj[pn]:
                    name = "lemma-pqz-applied" if z_misses_p0 else "lemma-pqz"
                    bad.append(_violation(name, g, clique=list(bits(q)), path=p,
                                          z=lowest(zs)))
    return checked, bad


def check_lemma_notadj(g: Graph) -> tuple[int, list[dict]]:
    """Clique/connected-set lemma: some vertex of ``Q`` misses ``X`` entirely."""
    checked, bad = 0, []
    adj = g.adj
    for q in _subcliques(g.full, adj):
        if not q:
            continue
        common = g.full
        for v in bits(q):
            common &= adj[v]
        if not common:
            continue
        eligible = 0
        for v in bits(g.full & ~q):
            if adj[v] & q != q:
                eligible |= 1 << v
        x = eligible
        while x:
            if _connected(adj, x) and any(not adj[z] & x for z in bits(common)):
                checked += 1
                if not any(not adj[v] & x for v in bits(q)):
                    bad.append(_violation("lemma-notadj", g, clique=list(bits(q)), X=list(bits(x))))
            x = (x - 1) & eligible
    return checked, bad


_PLAIN_LEMMAS = {
    "meyniel": check_lemma_meyniel,
    "consecutive": check_lemma_consecutive,
    "pqz": check_lemma_pqz,
    "pqz-applied": lambda g: check_lemma_pqz(g, z_misses_p0=True),
    "notadj": check_lemma_notadj,
}


def _lemmas_item(item: tuple):
    checked, violations, counts = 0, [], Counter()
    for g in _item_graphs(item, meyniel_only=True):
        counts["meyniel_graphs"] += 1
        for name, fn in _PLAIN_LEMMAS.items():
            c, bad = fn(g)
            counts[name] += c
            checked += c
            violations += bad
        for masks in iter_clique_family_masks(g.adj, g.n):
            antihole, oddhole, prism = _lemma_bad(*_cocontracted(g, masks))
            checked += 3
            for name, hit in (("antihole", antihole), ("oddhole", oddhole), ("prism", prism)):
                counts[name] += 1
                if hit:
                    violations.append(_violation(f"lemma-{name}", g, masks))
    return checked, violations, counts


def verify_structural_lemmas(n_max: int = 6, sample_budget: int = 0, seed: int = 0,
                             sample_n: int | None = None, workers: int = 1) -> VerificationReport:
    """The seven supporting lemmas as universally quantified properties.

    The path, even-hole, clique/path and clique/connected-set lemmas run over
    every configuration matching their hypotheses; the antihole (size >= 6),
    odd-hole and prism lemmas over every co-contraction.  ``details`` holds
    the number of configurations checked per lemma.
    """
    sample_n = n_max + 2 if sample_n is None else sample_n
    return _run("lemmas", _scope(n_max, sample_budget, seed, sample_n), _lemmas_item,
                _items(n_max, sample_n, sample_budget, seed), workers)


# -- closure probe -------------------------------------------------------------------------

def in_perfect_minus(g: Graph) -> bool:
    """Whether every co-contraction of ``g`` is Berge (searching all families)."""
    if _berge_bad(g.n, g.adj, None):
        return False
    for masks in iter_clique_family_masks(g.adj, g.n):
        if masks and _berge_bad(*_cocontracted(g, masks)):
            return False
    return True


def _closure_item(item: tuple):
    checked, violations, counts = 0, [], Counter()
    for g in _item_graphs(item, meyniel_only=False):
        checked += 1
        member = in_perfect_minus(g)
        meyniel = is_meyniel_graph(g)
        counts["perfect_minus"] += member
        if member != meyniel:
            violations.append(_violation("closure-perfect-minus", g, perfect_minus=member, meyniel=meyniel))
    return checked, violations, counts


def strictness_witness() -> dict:
    """The triangular prism: Berge but not Artemis, hence outside the
    co-contraction closure of Meyniel graphs."""
    g = prism_graph(1, 1, 1)
    berge, _ = is_berge(g)
    artemis, w = is_artemis(g)
    return {
        "graph": write_edge_list(g),
        "is_berge": berge,
        "is_artemis": artemis,
        "witness": None if w is None else w.to_json(),
        "witness_verified": w is not None and verify_witness(g, w),
    }


def closure_probe(n_max: int = 5, workers: int = 1) -> VerificationReport:
    """Membership in Perfect^- coincides with Meyniel, plus the certified
    prism separating Meyniel^+ from Perfect."""
    if n_max > 6:
        raise ResourceLimitError("closure probe is limited to n_max <= 6")
    report = _run("closure", _scope(n_max), _closure_item, _items(n_max, None, 0, 0), workers)
    witness = strictness_witness()
    report.details["strictness_witness"] = witness
    report.checked += 1
    ok = witness["is_berge"] and not witness["is_artemis"] and witness["witness_verified"]
    if not ok or witness["witness"]["kind"] != "Prism":
        report.violations.append({"check": "closure-strictness", "graph": witness["graph"], "family": ""})
    return report


# -- replay --------------------------------------------------------------------------------

def replay_violation(record: dict) -> bool:
    """Re-run the failed check of a serialized violation; True if it still fails."""
    g, _ = parse_edge_list(record["graph"])
    classes = parse_family(record["family"])
    check = record["check"]
    if check == "theorem1-forward":
        return not is_berge(cocontract(g, classes).graph)[0]
    if check == "theorem1-reverse":
        return is_berge(cocontract(g, classes).graph)[0]
    if check == "theorem2":
        return not is_artemis(cocontract(g, classes).graph)[0]
    if check == "lemma1":
        k = record["k"]
        return count_extensions(g, classes, k) != _count_reduced(contract(g, classes).graph, len(classes), k)
    if check in ("lemma-antihole", "lemma-oddhole", "lemma-prism"):
        h = cocontract(g, classes).graph
        if check == "lemma-antihole":
            return find_hole(complement(h), "any", 6) is not None
        if check == "lemma-oddhole":
            return find_hole(h, "odd") is not None
        return has_prism(h.adj, h.n)
    if check.startswith("lemma-"):
        name = check[len("lemma-"):]
        _, bad = _PLAIN_LEMMAS[name](g)
        keys = [k for k in record if k not in ("check", "graph", "family")]
        return any(all(b.get(k) == record[k] for k in keys) for b in bad)
    if check == "closure-perfect-minus":
        return in_perfect_minus(g) != is_meyniel_graph(g)
    if check == "closure-strictness":
        w = strictness_witness()
        return not (w["is_berge"] and not w["is_artemis"])
    raise ValueError(f"unknown check {check!r}")
