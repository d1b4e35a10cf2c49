"""All-pairs link costs m(u, v, d) via min-plus fixpoint sweeps.

Every table entry starts at a saturating infinity and only ever
decreases; throughout the sweeps each entry stays an achievable upper
bound on the true cost, so in-place propagation within a round is safe
and at most ``vertex_count`` rounds are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import ColouredGraph, DisconnectedGraph


@dataclass(frozen=True)
class ConnectionTable:
    """Dense (u, v, d) table of minimum link costs."""

    values: np.ndarray
    vertex_count: int
    colour_count: int
    iterations_used: int

    def _check(self, u: int, v: int, d: int | None = None) -> None:
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError(f"vertex pair ({u},{v}) outside 0..{self.vertex_count - 1}")
        if d is not None and not 0 <= d < self.colour_count:
            raise ValueError(f"colour {d} outside 0..{self.colour_count - 1}")

    def query_link(self, u: int, v: int, d: int) -> int:
        """Minimum moves until u and v share a colour-d component."""
        self._check(u, v, d)
        return int(self.values[u, v, d])

    def query_link_any(self, u: int, v: int) -> tuple[int, int]:
        """Minimum over colours, with the smallest minimising colour id."""
        self._check(u, v)
        row = self.values[u, v]
        d = int(np.argmin(row))
        return int(row[d]), d


def _initial(graph: ColouredGraph) -> np.ndarray:
    n, cc = graph.vertex_count, graph.colour_count
    values = np.full((n, n, cc), n * cc + 1, dtype=np.int64)
    idx = np.arange(n)
    values[idx, idx, :] = 1
    values[idx, idx, np.asarray(graph.colours)] = 0
    return values


def _iter_rounds(graph: ColouredGraph) -> Iterator[np.ndarray]:
    """Yield the table after each full sweep, ending when a sweep changes nothing."""
    values = _initial(graph)
    directed = [(a, b) for a, b in graph.edges] + [(b, a) for a, b in graph.edges]
    directed.sort()
    n = graph.vertex_count
    for _ in range(n):
        before = values.copy()
        for x, xp in directed:
            # sums[u, v, d'] = m(u, x, d') + m(x', v, d'); a colour change
            # costs one extra move and frees the colour choice
            sums = values[:, x, :][:, None, :] + values[xp, :, :][None, :, :]
            cand = np.minimum(sums, 1 + sums.min(axis=2, keepdims=True))
            np.minimum(values, cand, out=values)
        yield values.copy()
        if np.array_equal(values, before):
            return


def compute_table(graph: ColouredGraph) -> ConnectionTable:
    """Compute m(u, v, d) exactly for all pairs and colours."""
    if not graph.is_connected():
        raise DisconnectedGraph("connection table needs a connected graph")
    if not graph.is_proper():
        raise ValueError("connection table needs a properly coloured graph")
    values = _initial(graph)
    iterations = 0
    for snapshot in _iter_rounds(graph):
        values = snapshot
        iterations += 1
    values.setflags(write=False)
    return ConnectionTable(values, graph.vertex_count, graph.colour_count, iterations)
