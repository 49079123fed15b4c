"""Finite simple connected graphs and their constructors.

Everything downstream (Laplacian spectra, heat kernels, Gabor frames) operates
on the `Graph` type defined here: an undirected, unweighted, loop-free,
connected graph with 0-indexed vertices and a dense adjacency matrix. Dense
storage is deliberate -- the eigendecomposition is the cost bottleneck long
before adjacency memory is, so generators refuse to build graphs above
``MAX_VERTICES`` vertices.

Included graph families: rings (cycles), complete graphs, hypercubes, the
Petersen graph, the Shrikhande graph, and random regular graphs drawn with the
half-edge pairing (configuration) model. Strongly-regular parameter detection
and JSON / edge-list serialization round out the module.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

MAX_VERTICES = 4096

# Attempts before the pairing-model sampler gives up. The probability that a
# random pairing of a k-regular graph is simple falls like exp(-(k*k-1)/4), so
# k=7 already needs a few hundred thousand draws.
DEFAULT_PAIRING_RETRIES = 1_000_000


@dataclass(frozen=True)
class Graph:
    """Undirected simple connected graph on ``n`` vertices.

    ``edges`` holds each edge exactly once as ``(i, j)`` with ``i < j``,
    sorted lexicographically. ``adjacency`` is the dense symmetric 0/1 matrix
    and ``degrees`` its row sums. Instances are immutable and safe to share
    across threads.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: np.ndarray
    degrees: np.ndarray

    def __post_init__(self):
        self.adjacency.setflags(write=False)
        self.degrees.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_regular(self) -> bool:
        return bool((self.degrees == self.degrees[0]).all())


@dataclass(frozen=True)
class SrgParameters:
    """Strongly-regular graph parameters (n, k, a, c).

    k-regular; adjacent vertex pairs share ``a`` common neighbors, non-adjacent
    pairs share ``c``. The feasibility identity k(k-a-1) = (n-1-k)c is checked
    at construction.
    """

    n: int
    k: int
    a: int
    c: int

    def __post_init__(self):
        if self.k * (self.k - self.a - 1) != (self.n - 1 - self.k) * self.c:
            raise ValueError(
                f"inconsistent strongly-regular parameters "
                f"({self.n},{self.k},{self.a},{self.c}): "
                f"k(k-a-1) != (n-1-k)c"
            )


def _is_connected(n: int, adjacency: np.ndarray) -> bool:
    """Breadth-first search from vertex 0 reaches all n vertices."""
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in np.nonzero(adjacency[u])[0]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(int(v))
    return count == n


def build_from_edge_list(n: int, edges) -> Graph:
    """Build a validated Graph from a vertex count and an iterable of pairs.

    Duplicate pairs (in either orientation) collapse to one edge. Rejects
    self-loops, endpoints outside ``0..n-1``, non-positive ``n``, and any edge
    set whose graph is disconnected.
    """
    if not isinstance(n, (int, np.integer)):
        raise TypeError(f"vertex count must be an integer, got {type(n).__name__}")
    n = int(n)
    if n <= 0:
        raise ValueError(f"vertex count must be positive, got {n}")

    normalized = set()
    for pair in edges:
        i, j = pair
        i, j = int(i), int(j)
        if i == j:
            raise ValueError(f"self-loop ({i},{j}) is not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) out of range for n={n}")
        normalized.add((min(i, j), max(i, j)))

    edge_tuple = tuple(sorted(normalized))
    adjacency = np.zeros((n, n), dtype=np.int64)
    for i, j in edge_tuple:
        adjacency[i, j] = 1
        adjacency[j, i] = 1

    if not _is_connected(n, adjacency):
        raise ValueError("graph is disconnected")

    degrees = adjacency.sum(axis=1)
    return Graph(n=n, edges=edge_tuple, adjacency=adjacency, degrees=degrees)


def ring_graph(n: int) -> Graph:
    """Cycle C_n: vertex i adjacent to (i +- 1) mod n. Requires n >= 3."""
    if n < 3:
        raise ValueError(f"ring graph needs at least 3 vertices, got {n}")
    return build_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int, max_vertices: int = MAX_VERTICES) -> Graph:
    """Complete graph K_n. Requires 2 <= n <= max_vertices."""
    if n < 2:
        raise ValueError(f"complete graph needs at least 2 vertices, got {n}")
    if n > max_vertices:
        raise ValueError(f"complete graph on {n} vertices exceeds the {max_vertices}-vertex limit")
    return build_from_edge_list(n, combinations(range(n), 2))


def hypercube_graph(d: int, max_vertices: int = MAX_VERTICES) -> Graph:
    """Hypercube Q_d on 2**d vertices, adjacent iff binary labels differ in one bit."""
    if d < 1:
        raise ValueError(f"hypercube dimension must be >= 1, got {d}")
    n = 2**d
    if n > max_vertices:
        raise ValueError(f"hypercube Q_{d} has {n} vertices, exceeding the {max_vertices}-vertex limit")
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return build_from_edge_list(n, edges)


def petersen_graph() -> Graph:
    """Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    subsets = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return build_from_edge_list(10, edges)


def shrikhande_graph() -> Graph:
    """Shrikhande graph: Cayley graph of Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.

    Vertex (x, y) is numbered 4x + y. The result is 6-regular on 16 vertices
    and strongly regular with parameters (16, 6, 2, 2).
    """
    connection = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for x in range(4):
        for y in range(4):
            for dx, dy in connection:
                u = 4 * x + y
                v = 4 * ((x + dx) % 4) + ((y + dy) % 4)
                if u < v:
                    edges.append((u, v))
    return build_from_edge_list(16, edges)


def random_regular_graph(
    n: int, k: int, seed: int, max_retries: int = DEFAULT_PAIRING_RETRIES
) -> Graph:
    """Random simple connected k-regular graph via the half-edge pairing model.

    Each vertex contributes k labeled half-edges; a uniform perfect matching of
    the n*k half-edges is drawn and projected to a graph. Any pairing that
    produces a self-loop, a repeated edge, or a disconnected graph is rejected
    and the whole matching is redrawn, so accepted graphs are uniform over
    simple connected k-regular graphs. Deterministic for a fixed seed.

    Parameters
    ----------
    n, k : int
        Vertex count and degree; ``n * k`` must be even and ``k < n``.
    seed : int
        Seed for the pairing stream.
    max_retries : int
        Attempts before giving up. Keep generous: the acceptance probability
        of a single pairing decays roughly like exp(-(k*k-1)/4).
    """
    if n <= 0:
        raise ValueError(f"vertex count must be positive, got {n}")
    if k < 0 or k >= n:
        raise ValueError(f"degree must satisfy 0 <= k < n, got k={k}, n={n}")
    if (n * k) % 2 != 0:
        raise ValueError(f"n*k must be even, got n={n}, k={k}")

    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        points = rng.permutation(n * k)
        u = points[0::2] // k
        v = points[1::2] // k
        if (u == v).any():
            continue
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        codes = lo * n + hi
        if np.unique(codes).size != codes.size:
            continue
        adjacency = np.zeros((n, n), dtype=np.int64)
        adjacency[lo, hi] = 1
        adjacency[hi, lo] = 1
        if not _is_connected(n, adjacency):
            continue
        edge_tuple = tuple(sorted(zip(lo.tolist(), hi.tolist())))
        degrees = adjacency.sum(axis=1)
        return Graph(n=n, edges=edge_tuple, adjacency=adjacency, degrees=degrees)
    raise RuntimeError(
        f"pairing model produced no simple connected {k}-regular graph on {n} "
        f"vertices within {max_retries} attempts"
    )


def detect_srg_parameters(g: Graph) -> SrgParameters | None:
    """Brute-force strongly-regular parameter detection.

    Counts common neighbors |N(u) & N(v)| for every vertex pair. Returns the
    parameters (n, k, a, c) when the graph is regular with a constant count
    over adjacent pairs and a constant count over non-adjacent pairs, else
    None. Complete and edgeless graphs are excluded by convention.
    """
    n = g.n
    if g.edge_count == 0 or g.edge_count == n * (n - 1) // 2:
        return None
    if not g.is_regular():
        return None

    common = g.adjacency @ g.adjacency
    off_diagonal = ~np.eye(n, dtype=bool)
    adjacent = (g.adjacency == 1) & off_diagonal
    non_adjacent = (g.adjacency == 0) & off_diagonal

    a_counts = np.unique(common[adjacent])
    c_counts = np.unique(common[non_adjacent])
    if a_counts.size != 1 or c_counts.size != 1:
        return None
    return SrgParameters(n=n, k=int(g.degrees[0]), a=int(a_counts[0]), c=int(c_counts[0]))


def to_json_document(g: Graph) -> dict:
    """Plain-dict form of the graph JSON schema {"n": ..., "edges": [[i, j], ...]}."""
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges]}


def from_json_document(doc) -> Graph:
    """Inverse of :func:`to_json_document`, with full validation."""
    if not isinstance(doc, dict):
        raise ValueError(f"graph document must be an object, got {type(doc).__name__}")
    missing = {"n", "edges"} - doc.keys()
    if missing:
        raise ValueError(f"graph document missing keys: {sorted(missing)}")
    if not isinstance(doc["n"], int):
        raise ValueError("graph document 'n' must be an integer")
    edges = doc["edges"]
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple))
        or len(e) != 2
        or not all(isinstance(v, int) for v in e)
        for e in edges
    ):
        raise ValueError("graph document 'edges' must be a list of integer [i, j] pairs")
    return build_from_edge_list(doc["n"], [tuple(e) for e in edges])


def serialize(g: Graph) -> str:
    """Compact JSON text for a graph; edges appear sorted lexicographically."""
    return json.dumps(to_json_document(g), separators=(",", ":"))


def deserialize(text: str) -> Graph:
    """Parse graph JSON text produced by :func:`serialize` (or compatible)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    return from_json_document(doc)


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Parse the "i j" per-line edge-list text format. '#' starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge-list line {lineno}: expected two vertex indices, got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValueError(f"edge-list line {lineno}: {exc}") from exc
    return edges


def graph_from_edge_list_text(text: str, n: int | None = None) -> Graph:
    """Build a graph from edge-list text; n defaults to max vertex index + 1."""
    edges = parse_edge_list(text)
    if n is None:
        if not edges:
            raise ValueError("cannot infer vertex count from an empty edge list")
        n = max(max(e) for e in edges) + 1
    return build_from_edge_list(n, edges)
