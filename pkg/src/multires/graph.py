"""Graph representation, ingestion, distances and classical invariants.

Vertices are dense integers 0..n-1. Graphs are simple, undirected and, for
every dimension computation, connected. All structures here are immutable
after construction and safe to share between workers.
"""

from collections import deque
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    DisconnectedGraphError,
    GraphParseError,
    GraphValidationError,
    NoLeaflessSubgraphError,
)

OMEGA_CAP = 20
CHI_CAP = 16


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    The adjacency structure is a tuple of frozensets; duplicate edges are
    collapsed and loops are rejected.
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n, edges):
        if n < 1:
            raise GraphValidationError("graph needs at least one vertex")
        sets = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u},{v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in sets)
        self._edges = tuple(sorted(seen))

    @property
    def edges(self):
        """Sorted tuple of edges (u, v) with u < v."""
        return self._edges

    def degree(self, u):
        return len(self.adj[u])

    def is_connected(self):
        return self._unreached() is None

    def check_connected(self):
        """Raise DisconnectedGraphError naming two unreachable vertices."""
        far = self._unreached()
        if far is not None:
            raise DisconnectedGraphError(0, far)

    def _unreached(self):
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        if count == self.n:
            return None
        return next(v for v in range(self.n) if not seen[v])

    def induced(self, vertices):
        """Induced subgraph on `vertices`, relabeled 0..len(vertices)-1.

        Returns (subgraph, mapping) where mapping[i] is the original label of
        the subgraph vertex i. `vertices` is taken in sorted order.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(keep), edges), tuple(keep)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"


class DistMatrix:
    """All-pairs shortest path distances (hop counts), immutable."""

    __slots__ = ("n", "d")

    def __init__(self, n, d):
        self.n = n
        self.d = d

    @property
    def diameter(self):
        return max(max(row) for row in self.d)

    def eccentricity(self, w):
        return max(self.d[w])

    def __repr__(self):
        return f"DistMatrix(n={self.n}, diameter={self.diameter})"


@dataclass(frozen=True)
class GraphInvariants:
    diameter: int
    omega: int
    chi: int
    bipartite: bool
    two_coloring: tuple = None  # tuple of 0/1 per vertex when bipartite


def parse_edge_list(text):
    """Parse ASCII edge-list input: one "u v" pair per line, '#' comments.

    The vertex count is 1 + the maximum id seen. The result must be
    connected.
    """
    edges = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two tokens, got {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("vertex ids must be non-negative", lineno)
        if u == v:
            raise GraphValidationError(f"loop edge at vertex {u} (line {lineno})")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise GraphParseError("no edges in input")
    g = Graph(max_id + 1, edges)
    g.check_connected()
    return g


def parse_graph6(text):
    """Decode one graph6 line (standard printable 63-offset encoding)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphParseError("empty graph6 input")
    data = [ord(c) - 63 for c in line]
    if any(b < 0 or b > 63 for b in data):
        raise GraphParseError("invalid graph6 character")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphParseError("unsupported graph6 size header")
    if n < 1:
        raise GraphParseError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError("truncated or oversized graph6 bit vector")
    bits = []
    for b in body:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    g = Graph(n, edges)
    g.check_connected()
    return g


def to_graph6(g):
    """Encode a Graph as a one-line graph6 string (n <= 62)."""
    n = g.n
    if n > 62:
        raise GraphValidationError("graph6 encoder supports n <= 62")
    bits = []
    adj = g.adj
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if u in adj[v] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i : i + 6]:
            b = (b << 1) | bit
        out.append(chr(b + 63))
    return "".join(out)


def to_edge_list(g):
    """Render a Graph in the edge-list interchange format."""
    return "\n".join(f"{u} {v}" for u, v in g.edges)


def all_pairs_distances(g):
    """BFS from every vertex; errors on disconnected input."""
    n = g.n
    adj = g.adj
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue.append(v)
        if -1 in dist:
            raise DisconnectedGraphError(s, dist.index(-1))
        rows.append(tuple(dist))
    return DistMatrix(n, tuple(rows))


def distance_layers(dm, w):
    """Partition V into layers N_0..N_e(w) by distance from w."""
    if not (0 <= w < dm.n):
        raise GraphValidationError(f"vertex {w} out of range")
    ecc = dm.eccentricity(w)
    layers = [[] for _ in range(ecc + 1)]
    for u in range(dm.n):
        layers[dm.d[w][u]].append(u)
    return [tuple(layer) for layer in layers]


def bipartition(g):
    """BFS 2-coloring; returns a tuple of colors or None if non-bipartite."""
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return None
    return tuple(color)


def maximal_cliques(g, cap=OMEGA_CAP):
    """Enumerate all maximal cliques (Bron-Kerbosch with pivoting)."""
    if g.n > cap:
        raise CapExceededError("clique enumeration", g.n, cap)
    adj = g.adj
    out = []

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            out.append(frozenset(clique))
            return
        pivot = max(candidates | excluded, key=lambda p: len(candidates & adj[p]))
        for v in sorted(candidates - adj[pivot]):
            expand(clique + [v], candidates & adj[v], excluded & adj[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand([], frozenset(range(g.n)), frozenset())
    return out


def clique_number(g, cap=OMEGA_CAP, cliques=None):
    if cliques is None:
        cliques = maximal_cliques(g, cap)
    return max(len(c) for c in cliques)


def chromatic_number(g, cap=CHI_CAP, lower=1):
    """Exact chromatic number by backtracking k-colorability, k ascending."""
    if g.n > cap:
        raise CapExceededError("chromatic number", g.n, cap)
    if not g.edges:
        return 1
    if bipartition(g) is not None:
        return 2
    order = sorted(range(g.n), key=g.degree, reverse=True)
    adj = g.adj
    for k in range(max(lower, 3), g.n + 1):
        colors = [-1] * g.n

        def feasible(pos, used):
            if pos == len(order):
                return True
            u = order[pos]
            forbidden = {colors[v] for v in adj[u] if colors[v] >= 0}
            # trying at most one previously unused color kills symmetric branches
            limit = min(used + 1, k)
            for c in range(limit):
                if c in forbidden:
                    continue
                colors[u] = c
                if feasible(pos + 1, max(used, c + 1)):
                    return True
                colors[u] = -1
            return False

        if feasible(0, 0):
            return k
    return g.n


def invariants(g, dm=None, omega_cap=OMEGA_CAP, chi_cap=CHI_CAP):
    """Exact classical invariants: diameter, omega, chi, bipartiteness."""
    if dm is None:
        dm = all_pairs_distances(g)
    coloring = bipartition(g)
    omega = clique_number(g, cap=omega_cap)
    if coloring is not None:
        chi = 1 if not g.edges else 2
    else:
        chi = chromatic_number(g, cap=chi_cap, lower=omega)
    return GraphInvariants(
        diameter=dm.diameter,
        omega=omega,
        chi=chi,
        bipartite=coloring is not None,
        two_coloring=coloring,
    )


def two_core(g):
    """Iteratively strip degree-1 vertices; the maximal leafless subgraph.

    Returns (subgraph, kept_vertices). Raises NoLeaflessSubgraphError when g
    is a tree.
    """
    degree = [g.degree(u) for u in range(g.n)]
    alive = [True] * g.n
    queue = deque(u for u in range(g.n) if degree[u] <= 1)
    while queue:
        u = queue.popleft()
        if not alive[u]:
            continue
        alive[u] = False
        for v in g.adj[u]:
            if alive[v]:
                degree[v] -= 1
                if degree[v] <= 1:
                    queue.append(v)
    kept = [u for u in range(g.n) if alive[u]]
    if not kept:
        raise NoLeaflessSubgraphError()
    sub, mapping = g.induced(kept)
    return sub, mapping


def k_end_structure(g, cap=OMEGA_CAP):
    """K-end vertices per maximal clique of order >= 3.

    A vertex of a clique K_r is a K-end vertex when its degree in the whole
    graph is r - 1, i.e. all of its neighbours lie inside the clique.
    Returns a sorted list of (clique, k_end_vertices) tuples.
    """
    result = []
    for clique in maximal_cliques(g, cap):
        r = len(clique)
        if r < 3:
            continue
        ends = tuple(sorted(u for u in clique if g.degree(u) == r - 1))
        result.append((tuple(sorted(clique)), ends))
    result.sort()
    return result
