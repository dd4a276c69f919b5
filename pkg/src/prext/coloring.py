from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from prext.graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Color ``colors[v] >= 1`` for every vertex ``v``; colors in use are exactly ``1..num_colors``."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        used = set(self.colors)
        if used != set(range(1, len(used) + 1)):
            raise ValueError(f"colors in use must be 1..k, got {sorted(used)}")

    @classmethod
    def from_mapping(cls, color: Mapping[int, int], n: int) -> "Coloring":
        return cls(tuple(color[v] for v in range(n)))

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> list[frozenset[int]]:
        """Color classes ``S_1..S_k`` as vertex sets."""
        out: list[set[int]] = [set() for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def is_proper(self, g: Graph) -> bool:
        return is_proper(g, self.colors)


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())
