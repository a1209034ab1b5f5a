"""Simple undirected graphs and the defect-coloring verifier.

Vertices are dense integers ``0..n-1``.  All structures are immutable after
construction, so they can be shared freely between concurrent tasks.

``verify_coloring`` is the single source of truth for every coloring claim
made anywhere in this package: constructions check their own output against
it before returning a certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor sets.

    Invariants (enforced by :func:`build_graph`): no self-loops, adjacency
    is symmetric, and no multi-edges (neighbors form a set).
    """

    n: int
    adj: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as sorted pairs, in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph on vertices ``0..n-1`` from an edge list.

    Duplicate edges are collapsed.  Raises ``ValueError`` for out-of-range
    endpoints or self-loops, naming the offending pair.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


@dataclass(frozen=True)
class DefectVector:
    """Coloring target: ordered (defect bound, star flag) pairs.

    A starred entry means the class may contain at most one edge in total;
    the star is only meaningful for defect 1.
    """

    entries: tuple[tuple[int, bool], ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise ValueError("defect vector must have at least one class")
        for i, (d, star) in enumerate(self.entries):
            if d < 0:
                raise ValueError(f"defect d_{i + 1} = {d} is negative")
            if star and d != 1:
                raise ValueError(f"starred defect d_{i + 1} must equal 1, got {d}")

    @property
    def k(self) -> int:
        return len(self.entries)

    @classmethod
    def of(cls, *defects: int, stars: Sequence[int] = ()) -> "DefectVector":
        """Build from plain defects; ``stars`` lists 0-based starred positions."""
        return cls(tuple((d, i in set(stars)) for i, d in enumerate(defects)))

    @classmethod
    def parse(cls, text: str) -> "DefectVector":
        """Parse the external form, e.g. ``"0,0,0,1*"``."""
        entries = []
        for part in text.split(","):
            part = part.strip()
            star = part.endswith("*")
            if star:
                part = part[:-1]
            if not part.isdigit():
                raise ValueError(f"malformed defect entry {part!r} in {text!r}")
            entries.append((int(part), star))
        return cls(tuple(entries))

    def __str__(self) -> str:
        return ",".join(f"{d}*" if star else str(d) for d, star in self.entries)


# A coloring is a total map vertex -> class index in 1..k, stored densely.
Coloring = tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one coloring against one defect vector."""

    valid: bool
    max_degrees: tuple[int, ...]          # per class, max induced degree
    mono_counts: tuple[int, ...]          # per class, monochromatic edge count
    mono_edges: tuple[tuple[tuple[int, int], ...], ...]  # per class, sorted
    first_violation: Optional[tuple[int, object]]  # (class index 1..k, vertex or edge)

    def all_mono_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for per_class in self.mono_edges for e in per_class)


def verify_coloring(g: Graph, coloring: Sequence[int], d: DefectVector) -> VerificationReport:
    """Check that each class i induces max degree <= d_i (and, for starred
    classes, at most one monochromatic edge).

    Pure and deterministic.  Raises ``ValueError`` if the coloring is not a
    total map into ``1..k``.
    """
    k = d.k
    if len(coloring) != g.n:
        raise ValueError(f"coloring covers {len(coloring)} vertices, graph has {g.n}")
    for v, c in enumerate(coloring):
        if not (1 <= c <= k):
            raise ValueError(f"vertex {v} has class {c}, outside 1..{k}")

    mono: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    induced_deg = [0] * g.n
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            mono[coloring[u] - 1].append((u, v))
            induced_deg[u] += 1
            induced_deg[v] += 1

    max_degrees = []
    for c in range(1, k + 1):
        degs = [induced_deg[v] for v in range(g.n) if coloring[v] == c]
        max_degrees.append(max(degs, default=0))

    # Lexicographically first violation: scan classes in order, then the
    # smallest offending vertex (degree bound) before the star budget.
    first_violation: Optional[tuple[int, object]] = None
    for c in range(1, k + 1):
        bound, star = d.entries[c - 1]
        bad = [v for v in range(g.n) if coloring[v] == c and induced_deg[v] > bound]
        if bad:
            first_violation = (c, min(bad))
            break
        if star and len(mono[c - 1]) > 1:
            first_violation = (c, mono[c - 1][1])
            break

    return VerificationReport(
        valid=first_violation is None,
        max_degrees=tuple(max_degrees),
        mono_counts=tuple(len(m) for m in mono),
        mono_edges=tuple(tuple(sorted(m)) for m in mono),
        first_violation=first_violation,
    )


def girth(g: Graph) -> Optional[int]:
    """Length of the shortest cycle, or ``None`` for forests.

    BFS from every vertex; the minimum closed-walk candidate over all roots
    equals the girth.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for w in sorted(g.adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cand = dist[u] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
        if best == 3:
            break
    return best


def degeneracy(g: Graph) -> tuple[int, frozenset[int]]:
    """Degeneracy by min-degree peeling, plus the 6-core.

    Ties in the peeling are broken by smallest vertex index so the result is
    reproducible.  The returned core is the maximal induced subgraph of
    minimum degree at least 6 (empty when the degeneracy is below 6).
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1

    core: set[int] = set()
    if d >= 6:
        core = set(range(g.n))
        cdeg = [g.degree(v) for v in range(g.n)]
        changed = True
        while changed:
            changed = False
            for v in sorted(core):
                if cdeg[v] < 6:
                    core.remove(v)
                    for w in g.adj[v]:
                        if w in core:
                            cdeg[w] -= 1
                    changed = True
    return d, frozenset(core)


def join(g1: Graph, g2: Graph) -> Graph:
    """Graph join: disjoint union plus all edges between the two parts.

    Vertices of ``g2`` are relabeled to ``g1.n .. g1.n + g2.n - 1``.
    """
    off = g1.n
    edges = list(g1.edges())
    edges += [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return build_graph(g1.n + g2.n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``, plus the map new index -> original vertex."""
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(verts), edges), tuple(verts)
