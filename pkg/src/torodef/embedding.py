"""Rotation-system embeddings and the surgeries used by the colorings.

A rotation system (per-vertex cyclic order of neighbors, counterclockwise)
determines an orientable cellular embedding.  This module traces faces,
computes the Euler genus, assigns Z2-homology signatures to edges through a
tree-cotree decomposition, finds shortest non-contractible cycles, and
implements the two surgeries the coloring pipelines need: cutting the torus
along a non-contractible cycle and contracting both copies to single
vertices, and contracting a path into one vertex.

Homology signatures are bitmasks over the ``eg`` leftover edges of the
tree-cotree decomposition; a cycle on the torus is contractible exactly
when its signature is zero (on the torus, contractible = separating =
Z2-null-homologous; the contractibility test refuses other genera rather
than over-claim).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx

from .graph import Graph, build_graph

Dart = tuple[int, int]  # (tail, head); exactly two darts per edge
Edge = tuple[int, int]  # sorted pair


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationSystem:
    """A graph together with a counterclockwise neighbor order at each vertex."""

    graph: Graph
    rot: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rot) != g.n:
            raise ValueError("rotation must list every vertex")
        for v in range(g.n):
            if sorted(self.rot[v]) != sorted(g.adj[v]):
                raise ValueError(f"rotation at vertex {v} does not match its neighbors")


@dataclass(frozen=True)
class CycleCert:
    """A cycle of the embedded graph together with its homology signature."""

    vertices: tuple[int, ...]  # closed, first vertex not repeated
    signature: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def trace_faces(rot: RotationSystem) -> tuple[tuple[Dart, ...], ...]:
    """Partition all darts into facial walks.

    From dart (u -> v) the walk continues with the successor of (v -> u) in
    v's rotation.  Every dart lies in exactly one face, so the face degrees
    sum to twice the edge count.
    """
    g = rot.graph
    pos = [{w: i for i, w in enumerate(rot.rot[v])} for v in range(g.n)]
    unused: set[Dart] = {(u, v) for u in range(g.n) for v in g.adj[u]}
    faces = []
    while unused:
        start = min(unused)
        walk = []
        dart = start
        while True:
            walk.append(dart)
            unused.discard(dart)
            u, v = dart
            nbrs = rot.rot[v]
            dart = (v, nbrs[(pos[v][u] + 1) % len(nbrs)])
            if dart == start:
                break
            if dart not in unused:
                raise ValueError(f"malformed rotation: dart {dart} reused")
        faces.append(tuple(walk))
    return tuple(faces)


def euler_genus(rot: RotationSystem) -> int:
    """Euler genus 2 - (|V| - |E| + |F|); even for rotation systems."""
    g = rot.graph
    eg = 2 - (g.n - g.m + len(trace_faces(rot)))
    if eg < 0 or eg % 2 != 0:
        raise AssertionError(f"impossible Euler genus {eg} from face tracing")
    return eg


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def edge_signatures(rot: RotationSystem) -> dict[Edge, int]:
    """Z2-homology signature of every edge, via tree-cotree decomposition.

    A spanning tree T gets signature 0; a spanning tree of the dual (built
    from edges outside T) is peeled from the leaves so that every facial
    walk sums to zero; the ``eg`` leftover edges each carry one distinct bit.
    """
    g = rot.graph
    if not _connected(g):
        raise ValueError("edge signatures require a connected graph")
    faces = trace_faces(rot)
    eg = 2 - (g.n - g.m + len(faces))

    # BFS spanning tree of the primal graph.
    tree: set[Edge] = set()
    seen = {0} if g.n else set()
    queue = deque([0] if g.n else [])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if w not in seen:
                seen.add(w)
                tree.add(_edge(u, w))
                queue.append(w)

    face_of: dict[Dart, int] = {}
    for fi, walk in enumerate(faces):
        for dart in walk:
            face_of[dart] = fi

    # Spanning tree of the dual restricted to non-tree edges (the cotree).
    cotree: set[Edge] = set()
    dual_parent_edge: dict[int, Edge] = {}
    dual_parent: dict[int, int] = {}
    dual_order: list[int] = []
    dseen = {0}
    dqueue = deque([0])
    nontree = [e for e in g.edges() if e not in tree]
    incident: dict[int, list[Edge]] = {}
    for e in nontree:
        u, v = e
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        incident.setdefault(f1, []).append(e)
        incident.setdefault(f2, []).append(e)
    while dqueue:
        f = dqueue.popleft()
        dual_order.append(f)
        for e in incident.get(f, []):
            u, v = e
            for f2 in (face_of[(u, v)], face_of[(v, u)]):
                if f2 not in dseen:
                    dseen.add(f2)
                    cotree.add(e)
                    dual_parent_edge[f2] = e
                    dual_parent[f2] = f
                    dqueue.append(f2)
    if len(dseen) != len(faces):
        raise AssertionError("dual graph disconnected under non-tree edges")

    leftover = [e for e in nontree if e not in cotree]
    if len(leftover) != eg:
        raise AssertionError(f"{len(leftover)} leftover edges, expected Euler genus {eg}")

    sig: dict[Edge, int] = {e: 0 for e in g.edges()}
    for bit, e in enumerate(sorted(leftover)):
        sig[e] = 1 << bit

    # Peel the dual tree from the leaves: each face constraint determines
    # its parent cotree edge.  Edges appearing twice in one walk cancel.
    for f in reversed(dual_order):
        pe = dual_parent_edge.get(f)
        if pe is None:
            continue
        total = 0
        for u, v in faces[f]:
            e = _edge(u, v)
            if e != pe:
                total ^= sig[e]
        sig[pe] = total

    for walk in faces:
        total = 0
        for u, v in walk:
            total ^= sig[_edge(u, v)]
        if total != 0:
            raise AssertionError("facial walk with nonzero signature")
    return sig


def walk_signature(sig: dict[Edge, int], vertices: Sequence[int]) -> int:
    """Signature of a closed walk: XOR of its edges' signatures."""
    total = 0
    for i in range(len(vertices)):
        total ^= sig[_edge(vertices[i], vertices[(i + 1) % len(vertices)])]
    return total


def make_cycle_cert(rot: RotationSystem, vertices: Sequence[int],
                    sig: Optional[dict[Edge, int]] = None) -> CycleCert:
    """Wrap a vertex sequence as a cycle certificate, computing its signature."""
    vs = tuple(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError("not a simple cycle")
    for i in range(len(vs)):
        if vs[(i + 1) % len(vs)] not in rot.graph.adj[vs[i]]:
            raise ValueError(f"vertices {vs[i]} and {vs[(i + 1) % len(vs)]} not adjacent")
    if sig is None:
        sig = edge_signatures(rot)
    return CycleCert(vs, walk_signature(sig, vs))


def is_contractible(rot: RotationSystem, c: CycleCert) -> bool:
    """On the torus a cycle is contractible iff its signature vanishes.

    Refuses rotation systems of any other genus, where the signature test
    would be unsound.
    """
    if euler_genus(rot) != 2:
        raise ValueError("contractibility is only decided on the torus (Euler genus 2)")
    return c.signature == 0


def _canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation/reflection, anchored at min vertex."""
    vs = list(vertices)
    k = len(vs)
    best = None
    for seq in (vs, vs[::-1]):
        i = seq.index(min(seq))
        rotated = tuple(seq[i:] + seq[:i])
        if best is None or rotated < best:
            best = rotated
    return best


def _reduce_to_simple(walk: list[int], sig: dict[Edge, int]) -> Optional[list[int]]:
    """Extract a simple closed subwalk with nonzero signature, if one exists."""
    if walk_signature(sig, walk) == 0:
        return None
    seen: dict[int, int] = {}
    for i, v in enumerate(walk):
        if v in seen:
            a = walk[seen[v]:i]
            b = walk[:seen[v]] + walk[i:]
            for part in (a, b):
                if len(part) >= 3:
                    got = _reduce_to_simple(part, sig)
                    if got is not None:
                        return got
            return None
        seen[v] = i
    return walk if len(walk) >= 3 else None


def shortest_noncontractible_cycle(rot: RotationSystem) -> CycleCert:
    """Shortest cycle with nonzero homology signature on the torus.

    Per-vertex BFS trees; candidates come from non-tree edges and are
    reduced to simple cycles.  Ties are broken by (length, lexicographic
    canonical vertex sequence).  The output is checked to be induced and to
    have at most 3 neighbors of any vertex on it, both of which must hold
    for a genuinely shortest non-contractible cycle.
    """
    g = rot.graph
    if euler_genus(rot) != 2:
        raise ValueError("shortest non-contractible cycle requires Euler genus 2")
    sig = edge_signatures(rot)

    best: Optional[tuple[int, tuple[int, ...]]] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    order.append(w)
                    queue.append(w)

        def path_to_root(v: int) -> list[int]:
            path = []
            while v != -1:
                path.append(v)
                v = parent[v]
            return path

        for u, w in g.edges():
            if parent.get(u) == w or parent.get(w) == u:
                continue
            cand_len = dist[u] + dist[w] + 1
            if best is not None and cand_len > best[0]:
                continue
            pu = path_to_root(u)[::-1]  # root .. u
            pw = path_to_root(w)       # w .. root
            walk = pu + pw[:-1]        # closed: root..u,w..(root dropped)
            simple = _reduce_to_simple(walk, sig)
            if simple is None:
                continue
            canon = _canonical_cycle(simple)
            key = (len(simple), canon)
            if best is None or key < best:
                best = key

    if best is None:
        raise AssertionError("no non-contractible cycle found on a genus-2 embedding")
    cert = CycleCert(best[1], walk_signature(sig, best[1]))

    cyc = set(cert.vertices)
    for i, v in enumerate(cert.vertices):
        allowed = {cert.vertices[(i - 1) % cert.length], cert.vertices[(i + 1) % cert.length]}
        if (g.adj[v] & cyc) - allowed:
            raise AssertionError("shortest non-contractible cycle is not induced")
    for v in range(g.n):
        if len(g.adj[v] & cyc) > 3:
            raise AssertionError("vertex with more than 3 neighbors on the cycle")
    return cert


@dataclass(frozen=True)
class CutResult:
    """Planar graph obtained by cutting along a cycle and contracting both copies.

    ``orig`` maps each vertex of ``h`` back to the original graph; the two
    contracted vertices ``u`` and ``v`` map to ``None``.
    """

    h: Graph
    u: int
    v: int
    orig: tuple[Optional[int], ...]


def cut_and_contract(rot: RotationSystem, c: CycleCert) -> CutResult:
    """Cut the torus along a shortest non-contractible cycle and contract
    the two resulting boundary copies into single vertices ``u`` and ``v``.

    At each cycle vertex the rotation splits the remaining darts into two
    arcs (between the darts toward its cycle successor and predecessor);
    arc membership decides which contracted vertex a neighbor attaches to.
    ``u`` is the side containing the smallest non-cycle neighbor.  The
    result is deduplicated, and its planarity is asserted.
    """
    g = rot.graph
    if euler_genus(rot) != 2:
        raise ValueError("cut-and-contract requires Euler genus 2")
    if c.signature == 0:
        raise ValueError("cannot cut along a contractible cycle")

    vs = c.vertices
    k = len(vs)
    cyc = set(vs)
    others = sorted(v for v in range(g.n) if v not in cyc)

    if not others:
        # Whole graph is the cycle: both contracted copies, one shared edge.
        h = build_graph(2, [(0, 1)])
        return CutResult(h, 0, 1, (None, None))

    index = {v: i for i, v in enumerate(others)}
    u_idx, v_idx = len(others), len(others) + 1

    side_a: list[int] = []  # non-cycle neighbors on the "A" side, per dart
    side_b: list[int] = []
    for i, ci in enumerate(vs):
        nxt, prv = vs[(i + 1) % k], vs[(i - 1) % k]
        ring = rot.rot[ci]
        deg = len(ring)
        p_nxt, p_prv = ring.index(nxt), ring.index(prv)
        j = (p_nxt + 1) % deg
        while j != p_prv:
            side_a.append(ring[j])
            j = (j + 1) % deg
        j = (p_prv + 1) % deg
        while j != p_nxt:
            side_b.append(ring[j])
            j = (j + 1) % deg

    a_min = min(side_a, default=g.n)
    b_min = min(side_b, default=g.n)
    u_side, v_side = (side_a, side_b) if a_min <= b_min else (side_b, side_a)

    edges: set[Edge] = set()
    for x, y in g.edges():
        if x not in cyc and y not in cyc:
            edges.add(_edge(index[x], index[y]))
    for w in u_side:
        edges.add(_edge(u_idx, index[w]))
    for w in v_side:
        edges.add(_edge(v_idx, index[w]))

    h = build_graph(len(others) + 2, sorted(edges))
    if not planarity_check(h):
        raise AssertionError("cut-and-contract produced a non-planar graph")
    return CutResult(h, u_idx, v_idx, tuple(others) + (None, None))


def shortest_path(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Breadth-first shortest u-v path; ties broken by exploring smaller
    neighbor indices first."""
    if u == v:
        raise ValueError("endpoints must differ")
    parent = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in sorted(g.adj[x]):
            if w not in parent:
                parent[w] = x
                queue.append(w)
    if v not in parent:
        raise ValueError(f"vertex {v} unreachable from {u}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def contract_path(g: Graph, p: Sequence[int]) -> tuple[Graph, int, tuple[Optional[int], ...]]:
    """Contract a path into a single vertex ``vstar``.

    Loops vanish and multi-edges collapse.  Returns the new graph, the index
    of ``vstar``, and a map new index -> original vertex (``None`` for
    ``vstar``).  Surviving vertices keep their relative order.
    """
    path = list(p)
    if len(set(path)) != len(path):
        raise ValueError("path revisits a vertex")
    for a, b in zip(path, path[1:]):
        if b not in g.adj[a]:
            raise ValueError(f"({a}, {b}) is not an edge, so p is not a path")
    pset = set(path)
    others = sorted(v for v in range(g.n) if v not in pset)
    index = {v: i for i, v in enumerate(others)}
    vstar = len(others)
    edges: set[Edge] = set()
    for x, y in g.edges():
        xi = index.get(x, vstar)
        yi = index.get(y, vstar)
        if xi != yi:
            edges.add(_edge(xi, yi))
    return build_graph(len(others) + 1, sorted(edges)), vstar, tuple(others) + (None,)


def planarity_check(g: Graph) -> bool:
    """Sound-and-complete planarity test (left-right algorithm via networkx)."""
    if g.m > max(0, 3 * g.n - 6):
        return False
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(nxg, counterexample=False)
    return bool(ok)
