import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from prext import Graph, from_edges  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def stable_families(draw, g: Graph):
    """Disjoint stable sets built greedily from a random vertex order."""
    order = draw(st.permutations(range(g.n)))
    classes: list[set] = []
    for v in order:
        slot = draw(st.integers(-1, len(classes)))
        if slot == -1:
            continue
        if slot == len(classes):
            classes.append({v})
        elif not any(g.has_edge(v, u) for u in classes[slot]):
            classes[slot].add(v)
    return [frozenset(c) for c in classes]


@st.composite
def clique_families(draw, g: Graph):
    order = draw(st.permutations(range(g.n)))
    classes: list[set] = []
    for v in order:
        slot = draw(st.integers(-1, len(classes)))
        if slot == -1:
            continue
        if slot == len(classes):
            classes.append({v})
        elif all(g.has_edge(v, u) for u in classes[slot]):
            classes[slot].add(v)
    return [frozenset(c) for c in classes]


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
