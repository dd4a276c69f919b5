"""Acceptance suite: every criterion at its stated scope and tolerance.

Each test prints one PASS/FAIL line (repeated in the pytest terminal
summary).  Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import functools
import random
import time

import pytest

import oracles
from acceptance_log import record
from prext import (
    classify, cocontract, complement, from_edges, is_berge, is_meyniel, is_meyniel_definitional,
    max_clique, prism_graph, prext_optimize, verify_witness,
)
from prext.cli import main
from prext.harness import (
    edge_pairs, graph_from_index, imperfection_witness, verify_lemma1, verify_structural_lemmas,
    verify_theorem1, verify_theorem2,
)
from prext.solve import chromatic_number
from prext.detect import find_hole

pytestmark = pytest.mark.slow


def timed(fn, *args, **kwargs):
    t = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t


def by_check(report, name):
    return [v for v in report.violations if v["check"] == name]


# -- extension counts and minimum extensions ---------------------------------------------------

def test_extension_count_bijection():
    report, secs = timed(verify_lemma1, 5)
    ok = report.passed and secs < 600 and report.checked > 0
    assert record("extension-count bijection, all graphs n<=5, all stable families, all k<=n", ok,
                  f"{report.checked} (g, Q, k) triples, {len(report.violations)} mismatches, "
                  f"{report.details['families']} families, {secs:.1f}s (limit 600s)")


def _random_instance(i):
    rng = random.Random(f"prext-optimize:{i}")
    n = rng.randint(1, 9)
    p = rng.uniform(0.15, 0.85)
    g = from_edges(n, [e for e in edge_pairs(n) if rng.random() < p])
    classes: list[set] = []
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        r = rng.random()
        if r < 0.35 and len(classes) < 4:
            classes.append({v})
        elif r < 0.7 and classes:
            c = rng.choice(classes)
            if not any(g.has_edge(v, u) for u in c):
                c.add(v)
    return g, [frozenset(c) for c in classes]


def test_minimum_extension_matches_brute_force():
    t = time.perf_counter()
    bad, sizes = [], []
    for i in range(500):
        g, q = _random_instance(i)
        sizes.append(g.n)
        got = prext_optimize(g, q)
        want = oracles.subset_dp_min_extension(g, q)
        ext = got.extension
        valid = ext.is_proper(g) and all(ext.colors[v] == j for j, c in enumerate(q, 1) for v in c)
        if got.colors_used != want or not valid:
            bad.append((i, got.colors_used, want))
    secs = time.perf_counter() - t
    ok = not bad and secs < 300
    assert record("minimum extension = brute-force minimum, 500 seeded instances n<=9", ok,
                  f"{500 - len(bad)}/500 exact, {sizes.count(9)} instances at n=9, "
                  f"{secs:.1f}s (limit 300s){'' if not bad else f', first mismatch {bad[0]}'}")


# -- the two characterisations -------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def theorem1_report():
    return timed(verify_theorem1, 6)


def test_meyniel_cocontractions_are_berge():
    report, secs = theorem1_report()
    bad = by_check(report, "theorem1-forward")
    forward = report.checked - report.details["non_meyniel_graphs"]
    ok = not bad and secs < 1800
    assert record("every co-contraction of every Meyniel graph n<=6 is Berge", ok,
                  f"{report.details['meyniel_graphs']} Meyniel graphs, {forward} families, "
                  f"{len(bad)} violations, {secs:.1f}s single worker (limit 1800s)")


def test_non_meyniel_graphs_have_imperfect_cocontraction():
    report, _ = theorem1_report()
    bad = by_check(report, "theorem1-reverse")
    # independent spot re-check of the constructive family on a few graphs
    spot = 0
    for index in range(0, 1 << 15, 97):
        g = graph_from_index(6, index)
        if not is_meyniel(g)[0]:
            spot += 1
            assert not is_berge(cocontract(g, imperfection_witness(g)).graph)[0]
    ok = not bad and report.details["non_meyniel_graphs"] > 0
    assert record("every non-Meyniel graph n<=6 has an imperfect co-contraction (constructive)", ok,
                  f"{report.details['non_meyniel_graphs']} non-Meyniel graphs, {len(bad)} failures, "
                  f"{spot} re-checked directly")


def test_meyniel_cocontractions_are_artemis():
    report, secs = timed(verify_theorem2, 6, 1000, 0, 9)
    sampled = report.details.get("sampled_graphs", 0)
    ok = report.passed and report.scope["samples"] == 1000 and sampled == 1000
    assert record("every co-contraction is Artemis: all Meyniel n<=6 plus 1000 sampled at n=9", ok,
                  f"{report.details['meyniel_graphs']} Meyniel graphs ({sampled} sampled), "
                  f"{report.checked} families, {len(report.violations)} violations, {secs:.1f}s")


# -- recognisers against oracles at n <= 7 -------------------------------------------------------

@functools.lru_cache(maxsize=None)
def sweep():
    """One pass over every labeled graph with n <= 7."""
    stats = {"graphs": 0, "meyniel_vs_definitional": [], "meyniel_vs_table": [],
             "hole_any": [], "hole_odd": [], "bad_witness": [], "berge_vs_table": [],
             "chi_ne_omega": [], "berge_graphs": 0}
    t = time.perf_counter()
    for n in range(1, 8):
        meyniel_table = oracles.definitional_meyniel_table(n).tolist()
        first_any, cyc_any = oracles.first_hole_table(n, "any")
        first_odd, cyc_odd = oracles.first_hole_table(n, "odd")
        full = (1 << (n * (n - 1) // 2)) - 1
        odd_free = (first_odd < 0)
        berge_table = (odd_free & odd_free[full ^ oracles.all_graph_indices(n)]).tolist()
        first_any, first_odd = first_any.tolist(), first_odd.tolist()
        pairs = edge_pairs(n)
        for index in range(full + 1):
            g = graph_from_index(n, index, pairs)
            stats["graphs"] += 1
            m = is_meyniel(g)[0]
            if m != is_meyniel_definitional(g):
                stats["meyniel_vs_definitional"].append((n, index))
            if m != meyniel_table[index]:
                stats["meyniel_vs_table"].append((n, index))
            for parity, first, cycles, key in (("any", first_any, cyc_any, "hole_any"),
                                               ("odd", first_odd, cyc_odd, "hole_odd")):
                w = find_hole(g, parity)
                want = None if first[index] < 0 else cycles[first[index]]
                if (w.vertices if w else None) != want:
                    stats[key].append((n, index))
                if w is not None and not verify_witness(g, w):
                    stats["bad_witness"].append((n, index))
            b = is_berge(g)[0]
            if b != berge_table[index]:
                stats["berge_vs_table"].append((n, index))
            if b:
                stats["berge_graphs"] += 1
                if chromatic_number(g)[0] != len(max_clique(g)):
                    stats["chi_ne_omega"].append((n, index))
    stats["seconds"] = time.perf_counter() - t
    return stats


def test_recognisers_match_oracles_n7():
    s = sweep()
    mismatches = {k: len(s[k]) for k in ("meyniel_vs_definitional", "meyniel_vs_table",
                                        "hole_any", "hole_odd", "bad_witness")}
    ok = not any(mismatches.values()) and s["graphs"] == sum(1 << (n * (n - 1) // 2) for n in range(1, 8))
    assert record("Meyniel recogniser = definition, find_hole = subset oracle, all labeled n<=7", ok,
                  f"{s['graphs']} graphs, mismatches {mismatches}, sweep {s['seconds']:.0f}s")


def test_berge_graphs_have_chi_equal_omega_n7():
    s = sweep()
    ok = not s["chi_ne_omega"] and not s["berge_vs_table"] and s["berge_graphs"] > 0
    assert record("chi = omega on every Berge graph, all labeled n<=7", ok,
                  f"{s['berge_graphs']} Berge graphs, {len(s['chi_ne_omega'])} with chi != omega, "
                  f"{len(s['berge_vs_table'])} Berge flags off the hole-table oracle")


# -- structural lemmas ------------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def lemmas_report():
    return timed(verify_structural_lemmas, 6)


@pytest.mark.xfail(strict=True, reason="the clique/path/vertex (pqz) lemma, read literally, has a "
                                       "6-vertex Meyniel counterexample; see README")
def test_structural_lemmas_n6():
    report, secs = lemmas_report()
    counts = {k: report.details[k] for k in ("meyniel", "consecutive", "pqz", "notadj",
                                             "antihole", "oddhole", "prism")}
    checks = sorted({v["check"] for v in report.violations})
    assert record("structural lemmas exhaustively at n<=6 (zero violations)", report.passed,
                  f"configurations {counts}, {len(report.violations)} violations in {checks}, "
                  f"{secs:.1f}s")


def test_structural_lemmas_n6_outside_literal_pqz():
    report, _ = lemmas_report()
    other = [v for v in report.violations if v["check"] != "lemma-pqz"]
    ok = not other and report.details["pqz-applied"] > 0
    assert record("structural lemmas at n<=6 apart from literal pqz; pqz with z missing p0", ok,
                  f"{len(other)} violations; pqz variant checked on {report.details['pqz-applied']} "
                  f"configurations")


# -- closure witness and determinism ---------------------------------------------------------------

def test_prism_separates_closure_from_perfect():
    g = prism_graph(1, 1, 1)
    r = classify(g)
    w = r.witnesses.get("artemis")
    ok = (r.is_berge and not r.is_artemis and w is not None and w.kind.value == "Prism"
          and sorted(w.vertices) == list(range(g.n)) and verify_witness(g, w))
    assert record("triangular prism: Berge, not Artemis, Prism witness is the whole graph", ok,
                  f"is_berge={r.is_berge} is_artemis={r.is_artemis} witness={w.to_json() if w else None}")


def test_verify_output_is_byte_identical(tmp_path):
    commands = [
        ["verify", "theorem1", "--nmax", "5"],
        ["verify", "theorem2", "--nmax", "4", "--samples", "30", "--seed", "11"],
        ["verify", "lemma1", "--nmax", "4"],
        ["verify", "lemmas", "--nmax", "5", "--samples", "5", "--seed", "3"],
        ["verify", "closure", "--nmax", "5"],
    ]
    same = 0
    for i, cmd in enumerate(commands):
        outs = []
        for run in range(2):
            path = tmp_path / f"{i}-{run}.json"
            main(cmd + ["--out", str(path)])
            outs.append(path.read_bytes())
        same += outs[0] == outs[1] and len(outs[0]) > 0
    assert record("repeated verify runs give byte-identical JSON", same == len(commands),
                  f"{same}/{len(commands)} commands identical")
