"""Refined dual graphs attached to points of the projective plane.

For a point ``xi`` the graph keeps the faces having an interior edge whose
line passes through ``xi``, joined along those edges.  Convexity bounds the
valence by two, so each component is a path or a cycle; only the cycles
contribute to the constant term of the Hilbert polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .geometry import Complex, LinForm, ProjPoint


class XiGraphError(RuntimeError):
    """An internal consistency check on a xi-graph failed."""


@dataclass(frozen=True)
class XiGraph:
    xi: ProjPoint
    vertices: frozenset[int]
    edges: tuple[tuple[int, int, int], ...]  # (face, face, interior edge index)
    forms: tuple[LinForm, ...]  # line of each entry of ``edges``

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for f, h, e in self.edges:
            g.add_edge(f, h, edge=e)
        return g


@dataclass(frozen=True)
class CycleData:
    xi: ProjPoint
    edge_indices: tuple[int, ...]
    n: int
    length: int
    faces: tuple[int, ...] = ()


def interior_lines(c: Complex) -> list[LinForm]:
    return sorted({c.forms[i] for i in c.interior_edges})


def candidate_xi(c: Complex) -> list[ProjPoint]:
    """All pairwise meets of distinct interior edge lines, in canonical order."""
    lines = interior_lines(c)
    return sorted({l1.meet(l2) for l1, l2 in combinations(lines, 2)})


def build_xi_graph(c: Complex, xi: ProjPoint) -> XiGraph:
    edges, forms = [], []
    verts = set()
    for i in c.interior_edges:
        if c.forms[i].vanishes_at(xi):
            f, h = c.edges[i].faces
            edges.append((f, h, i))
            forms.append(c.forms[i])
            verts.update((f, h))
    xg = XiGraph(xi, frozenset(verts), tuple(edges), tuple(forms))
    degree = {}
    for f, h, _ in edges:
        degree[f] = degree.get(f, 0) + 1
        degree[h] = degree.get(h, 0) + 1
    bad = [f for f, d in degree.items() if d > 2]
    if bad:
        raise XiGraphError(f"faces {sorted(bad)} have valence > 2 at {xi}; a cell is not convex")
    return xg


def classify_components(xg: XiGraph) -> tuple[list[CycleData], list[tuple[int, ...]]]:
    """Split a xi-graph into cycles (with their line counts) and paths."""
    g = xg.graph()
    line_of = {e: form for (_, _, e), form in zip(xg.edges, xg.forms)}
    cycles, segments = [], []
    for comp in sorted(nx.connected_components(g), key=min):
        sub = g.subgraph(comp)
        if all(d == 2 for _, d in sub.degree()):
            edge_ids = tuple(sorted(d["edge"] for _, _, d in sub.edges(data=True)))
            n = len({line_of[e] for e in edge_ids})
            if n < 2:
                raise XiGraphError(f"cycle at {xg.xi} spans a single line")
            cycles.append(CycleData(xg.xi, edge_ids, n, len(edge_ids), tuple(sorted(comp))))
        else:
            ends = [v for v, d in sub.degree() if d <= 1]
            start = min(ends)
            path = [start] + [v for _, v in nx.dfs_edges(sub, start)]
            segments.append(tuple(path))
    return cycles, segments


def all_cycles(c: Complex) -> dict[ProjPoint, list[CycleData]]:
    """Every point carrying at least one cycle, mapped to its cycles."""
    out = {}
    for xi in candidate_xi(c):
        cycles, _ = classify_components(build_xi_graph(c, xi))
        if cycles:
            out[xi] = cycles
    return out
