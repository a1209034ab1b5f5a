"""Graph isomorphism for desk-scale graphs (up to roughly 40 vertices).

Iterative degree/neighborhood refinement narrows candidate images, then a
backtracking matcher extends a partial bijection along edges.  Any witness
returned has been re-checked for adjacency preservation in both directions.
No external canonical-labeling tool is used.
"""
from __future__ import annotations

from typing import Optional

from .graph import Graph


def _refine(g: Graph) -> list[int]:
    """Stable coloring by iterated neighbor-color multisets (1-WL)."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _check_witness(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    for u in range(g1.n):
        if {mapping[w] for w in g1.adj[u]} != set(g2.adj[mapping[u]]):
            return False
    return True


def are_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, Optional[dict[int, int]]]:
    """Decide isomorphism; on success also return a certified bijection.

    Intended for small graphs; beyond a few dozen vertices it may be slow
    but stays correct.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False, None
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False, None

    c1, c2 = _refine(g1), _refine(g2)
    if sorted(c1) != sorted(c2):
        return False, None

    # Order g1's vertices so each one (when possible) touches an earlier one;
    # candidate images are then constrained through mapped neighbors.
    order: list[int] = []
    seen: set[int] = set()
    for start in range(g1.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(g1.adj[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        mapped_nbrs = [w for w in g1.adj[v] if w in mapping]
        if mapped_nbrs:
            cands = set(g2.adj[mapping[mapped_nbrs[0]]])
        else:
            cands = set(range(g2.n))
        for x in sorted(cands):
            if x in used or c1[v] != c2[x]:
                continue
            ok = True
            for w in g1.adj[v]:
                if w in mapping and mapping[w] not in g2.adj[x]:
                    ok = False
                    break
            if ok:
                for w in range(g1.n):
                    if w in mapping and w not in g1.adj[v] and mapping[w] in g2.adj[x]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = x
            used.add(x)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.remove(x)
        return False

    if extend(0):
        if not _check_witness(g1, g2, mapping):
            raise AssertionError("isomorphism witness failed re-check")
        return True, dict(mapping)
    return False, None
