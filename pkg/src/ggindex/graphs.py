"""Immutable simple graphs, BFS distances, and two connectivity indices.

The central quantity is the Graovac-Ghorbani index

    ABC_GG(G) = sum over edges uv of sqrt((n_u + n_v - 2) / (n_u * n_v))

where n_u counts the vertices strictly closer to u than to v (a vertex
equidistant from u and v is counted on neither side).  The classical,
degree-based ABC index uses d(u), d(v) in place of n_u, n_v.

Both indices are only defined here for connected graphs; disconnected
input is rejected rather than given an ad-hoc meaning.  Each per-edge
term is the square root of a rational formed exactly from integers, and
terms are accumulated in sorted edge order, so results are deterministic
and isomorphism-invariant up to float rounding of equal term multisets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedGraphError, EdgeListFormatError, GraphError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once as (min, max), in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adj[u]


@dataclass(frozen=True)
class EdgeProximity:
    """Per-edge proximity counts and the index term they produce."""

    u: int
    v: int
    n_u: int
    n_v: int
    term: float


@dataclass(frozen=True)
class IndexReport:
    """Total index value plus the per-edge table, sorted by (u, v)."""

    total: float
    per_edge: tuple[EdgeProximity, ...]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated Graph from a vertex count and an edge list.

    Rejects self-loops, out-of-range endpoints and duplicate edges, naming
    the offending pair in the error message.
    """
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v of g becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    return build_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """BFS distances from source; unreachable vertices get UNREACHABLE (-1)."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    frontier = [source]
    adj = g.adj
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def proximity_term(n_u: int, n_v: int) -> float:
    """sqrt((n_u + n_v - 2) / (n_u * n_v)) from exact integer operands."""
    return math.sqrt((n_u + n_v - 2) / (n_u * n_v))


def _proximity_counts(du: list[int], dv: list[int]) -> tuple[int, int]:
    n_u = n_v = 0
    for a, b in zip(du, dv):
        if a < b:
            n_u += 1
        elif b < a:
            n_v += 1
    return n_u, n_v


def edge_proximity(g: Graph, u: int, v: int) -> EdgeProximity:
    """Proximity counts for edge uv of a connected graph.

    n_u = #{w : d(w,u) < d(w,v)} and symmetrically n_v; equidistant
    vertices are counted in neither.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    du = bfs_distances(g, u)
    if UNREACHABLE in du:
        raise DisconnectedGraphError("edge proximity requires a connected graph")
    dv = bfs_distances(g, v)
    n_u, n_v = _proximity_counts(du, dv)
    return EdgeProximity(u, v, n_u, n_v, proximity_term(n_u, n_v))


def abc_gg(g: Graph) -> IndexReport:
    """Graovac-Ghorbani index of a connected graph with per-edge detail."""
    if g.n < 2:
        raise GraphError("index requires at least 2 vertices")
    dist = [bfs_distances(g, s) for s in range(g.n)]
    if UNREACHABLE in dist[0]:
        raise DisconnectedGraphError("index is undefined for disconnected graphs")
    total = 0.0
    per_edge = []
    for u, v in g.edges():
        n_u, n_v = _proximity_counts(dist[u], dist[v])
        term = proximity_term(n_u, n_v)
        total += term
        per_edge.append(EdgeProximity(u, v, n_u, n_v, term))
    return IndexReport(total, tuple(per_edge))


def abc_classic(g: Graph) -> float:
    """Classical degree-based ABC index of a connected graph."""
    if g.n < 2:
        raise GraphError("index requires at least 2 vertices")
    if any(len(nbrs) == 0 for nbrs in g.adj):
        raise GraphError("isolated vertex: degree-based terms are undefined")
    if not is_connected(g):
        raise DisconnectedGraphError("index is undefined for disconnected graphs")
    total = 0.0
    for u, v in g.edges():
        du, dv = len(g.adj[u]), len(g.adj[v])
        total += math.sqrt((du + dv - 2) / (du * dv))
    return total


# Edge-list text format, shared repo-wide:
#   line 1: "n m"; then m lines "u v" (0-based); '#' lines are comments.

def parse_edge_list(text: str) -> Graph:
    """Parse the shared edge-list format into a validated Graph."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise EdgeListFormatError("empty edge-list input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListFormatError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListFormatError(f"line {lineno}: non-integer header {header!r}") from None
    if len(rows) - 1 != m:
        raise EdgeListFormatError(f"header declares {m} edges but {len(rows) - 1} follow")
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: non-integer edge {line!r}") from None
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
