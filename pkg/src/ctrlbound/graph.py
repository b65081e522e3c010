"""Weighted graphs, Laplacians, hop distances, connectivity, edge-list I/O.

Nodes are labeled 1..n in every public interface; internal adjacency
structures are 0-based. Edge weights are strictly positive and are kept
exact (`fractions.Fraction`) whenever they were given as integers or
rationals, so downstream linear algebra can run in exact arithmetic.
Distances are always hop counts: weights shape the dynamics, never the
metric.

Directed graphs follow the influence convention: a stored edge (u, v)
means u is influenced by v, i.e. v's state enters u's update. Row u of
the Laplacian therefore sums the weights of u's influencers, and
dist(u, v) is the length of the shortest directed path u -> v along
stored edges.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import DisconnectedGraphError, EdgeListParseError, GraphValidationError

Weight = Union[Fraction, float]
Edge = tuple[int, int, Weight]
Matrix = list[list[Weight]]

_INT_RE = re.compile(r"[+-]?\d+$")
_RATIONAL_RE = re.compile(r"([+-]?\d+)/(\d+)$")


def _coerce_weight(w) -> Weight:
    if isinstance(w, bool):
        raise GraphValidationError(f"invalid weight type: {w!r}")
    if isinstance(w, (int, Fraction)):
        return Fraction(w)
    if isinstance(w, float):
        return w
    raise GraphValidationError(f"invalid weight type: {w!r}")


@dataclass(frozen=True)
class Graph:
    """Immutable weighted graph on nodes 1..n.

    Undirected edges are stored once, normalized to u < v, and treated
    symmetrically everywhere. Construction validates all invariants:
    ids in range, no self-loops, no duplicates, strictly positive
    weights.
    """

    n: int
    directed: bool
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError(f"node count must be >= 1, got {self.n}")
        normalized = []
        seen: set[tuple[int, int]] = set()
        for edge in self.edges:
            try:
                u, v, w = edge
            except (TypeError, ValueError):
                u, v = edge  # type: ignore[misc]
                w = Fraction(1)
            u, v = int(u), int(v)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphValidationError(f"edge ({u},{v}) references a node outside 1..{self.n}")
            if u == v:
                raise GraphValidationError(f"self-loop at node {u}")
            w = _coerce_weight(w)
            if w <= 0:
                raise GraphValidationError(f"edge ({u},{v}) has nonpositive weight {w}")
            if not self.directed and u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphValidationError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            normalized.append((u, v, w))
        normalized.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def has_exact_weights(self) -> bool:
        return all(isinstance(w, Fraction) for _, _, w in self.edges)

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        """0-based out-neighbor lists (symmetric for undirected graphs)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u - 1].append(v - 1)
            if not self.directed:
                adj[v - 1].append(u - 1)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        """0-based in-neighbor lists (equals `_out` for undirected graphs)."""
        if not self.directed:
            return self._out
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[v - 1].append(u - 1)
        return tuple(tuple(a) for a in adj)

    def reweighted(self, weights: Sequence[Weight]) -> "Graph":
        """Same topology with new weights, given in `self.edges` order."""
        if len(weights) != len(self.edges):
            raise GraphValidationError(
                f"expected {len(self.edges)} weights, got {len(weights)}"
            )
        edges = tuple((u, v, w) for (u, v, _), w in zip(self.edges, weights))
        return Graph(self.n, self.directed, edges)


def build_graph(n: int, edges: Iterable[Sequence], directed: bool = False) -> Graph:
    """Validating constructor accepting (u, v) or (u, v, w) items."""
    return Graph(n=n, directed=directed, edges=tuple(tuple(e) for e in edges))


def _bfs_hops(adj: Sequence[Sequence[int]], source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def bfs_distances(g: Graph) -> list[list[Optional[int]]]:
    """Hop-count distance matrix; entry (i, j) is dist(i, j), None if unreachable.

    For directed graphs, row i holds lengths of shortest directed paths
    leaving i.
    """
    return [_bfs_hops(g._out, s) for s in range(g.n)]


def hops_to(g: Graph, target: int) -> list[Optional[int]]:
    """dist(i, target) for every node i, as a 1-indexed-by-position list of length n.

    Runs one BFS on the reversed graph, so directed distances point
    toward the target.
    """
    if not (1 <= target <= g.n):
        raise GraphValidationError(f"node {target} outside 1..{g.n}")
    return _bfs_hops(g._in, target - 1)


def is_connected(g: Graph) -> bool:
    """Connectivity of the underlying undirected graph."""
    if g.n == 1:
        return True
    if g.directed:
        both: list[list[int]] = [list(a) for a in g._out]
        for u, v, _ in g.edges:
            both[v - 1].append(u - 1)
        return all(d is not None for d in _bfs_hops(both, 0))
    return all(d is not None for d in _bfs_hops(g._out, 0))


def is_strongly_connected(g: Graph) -> bool:
    """Every node reaches every other along directed edges."""
    if g.n == 1:
        return True
    out_ok = all(d is not None for d in _bfs_hops(g._out, 0))
    in_ok = all(d is not None for d in _bfs_hops(g._in, 0))
    return out_ok and in_ok


def require_connected(g: Graph) -> None:
    """Raise DisconnectedGraphError unless g is connected (strongly, if directed)."""
    if g.directed:
        if not is_strongly_connected(g):
            raise DisconnectedGraphError(
                "directed graph is not strongly connected; "
                "distance computations require strong connectivity"
            )
    elif not is_connected(g):
        raise DisconnectedGraphError(
            "graph is not connected; distance computations require a connected graph"
        )


def adjacency_matrix(g: Graph) -> Matrix:
    """Weighted adjacency; symmetric for undirected graphs."""
    exact = g.has_exact_weights
    zero: Weight = Fraction(0) if exact else 0.0
    a: Matrix = [[zero] * g.n for _ in range(g.n)]
    for u, v, w in g.edges:
        w = w if exact else float(w)
        a[u - 1][v - 1] = w
        if not g.directed:
            a[v - 1][u - 1] = w
    return a


def laplacian(g: Graph) -> Matrix:
    """Graph Laplacian: diagonal of neighborhood weight sums minus adjacency.

    Rows sum to zero by construction. Entries are Fractions when every
    weight is exact, floats otherwise.
    """
    a = adjacency_matrix(g)
    lap: Matrix = [[-x for x in row] for row in a]
    for i in range(g.n):
        lap[i][i] = sum(a[i][j] for j in range(g.n) if j != i)
    return lap


def weight_from_text(token: str) -> Weight:
    """Parse a weight token: integer and p/q forms stay exact, the rest are floats."""
    token = token.strip()
    if _INT_RE.fullmatch(token):
        return Fraction(int(token))
    m = _RATIONAL_RE.fullmatch(token)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in weight {token!r}")
        return Fraction(num, den)
    return float(token)


def weight_to_text(w: Weight) -> str:
    """Canonical text form; inverse of `weight_from_text` bit for bit."""
    if isinstance(w, Fraction):
        if w.denominator == 1:
            return str(w.numerator)
        return f"{w.numerator}/{w.denominator}"
    return repr(w)


def parse_edge_list(text: str, force_directed: bool = False) -> Graph:
    """Parse edge-list text.

    Format: a header line ``n <count> [directed]`` followed by one edge
    per line ``u v [w]`` (weight defaults to 1). ``#`` starts a comment,
    blank lines are ignored. Raises EdgeListParseError with the 1-based
    line number of the first problem. `force_directed` reads each edge
    line as a directed edge regardless of the header.
    """
    n: Optional[int] = None
    directed = force_directed
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) not in (2, 3):
                raise EdgeListParseError(
                    "expected header 'n <count> [directed]' before any edge", lineno
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(f"invalid node count {parts[1]!r}", lineno) from None
            if n < 1:
                raise EdgeListParseError(f"node count must be >= 1, got {n}", lineno)
            if len(parts) == 3:
                if parts[2] != "directed":
                    raise EdgeListParseError(
                        f"unexpected header token {parts[2]!r} (only 'directed' is allowed)",
                        lineno,
                    )
                directed = True
            continue
        if len(parts) not in (2, 3):
            raise EdgeListParseError("expected 'u v [w]'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"invalid node ids {parts[0]!r} {parts[1]!r}", lineno) from None
        if len(parts) == 3:
            try:
                w = weight_from_text(parts[2])
            except ValueError:
                raise EdgeListParseError(f"invalid weight {parts[2]!r}", lineno) from None
        else:
            w = Fraction(1)
        # validate inline so errors carry the line number
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListParseError(f"edge ({u},{v}) references a node outside 1..{n}", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at node {u}", lineno)
        if isinstance(w, float) and w != w:  # NaN
            raise EdgeListParseError("weight is NaN", lineno)
        if w <= 0:
            raise EdgeListParseError(f"nonpositive weight {parts[2] if len(parts) == 3 else w}", lineno)
        key = (u, v) if directed or u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append((u, v, w))
    if n is None:
        raise EdgeListParseError("empty input: missing 'n <count>' header", 1)
    return Graph(n=n, directed=directed, edges=tuple(edges))


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format; parse(format(g)) == g."""
    header = f"n {g.n} directed" if g.directed else f"n {g.n}"
    lines = [header]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {weight_to_text(w)}")
    return "\n".join(lines) + "\n"


def load_graph(path, force_directed: bool = False) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), force_directed=force_directed)


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
