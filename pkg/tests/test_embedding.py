"""Rotation systems, homology, shortest non-contractible cycles, cutting."""
import pytest

from torodef import (GridSpec, build_graph, gen_grid, gen_named, girth,
                     planarity_check)
from torodef.embedding import (RotationSystem, cut_and_contract, contract_path,
                               edge_signatures, euler_genus, is_contractible,
                               make_cycle_cert, shortest_noncontractible_cycle,
                               shortest_path, trace_faces, walk_signature)
from .conftest import all_valid_grids

K4_PLANAR_ROT = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))


def k4_planar():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    return RotationSystem(g, K4_PLANAR_ROT)


# --- face tracing and genus -------------------------------------------------

def test_rotation_system_validates_neighbor_sets():
    g = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        RotationSystem(g, ((1,), (0,), (1,)))  # vertex 1 missing neighbor 2
    with pytest.raises(ValueError):
        RotationSystem(g, ((1,), (0, 2)))  # wrong length


def test_face_counts_on_canonical_embeddings():
    for name, faces in (("t11", 22), ("k7", 14), ("k6", 9)):
        g, rot = gen_named(name)
        assert len(trace_faces(rot)) == faces, name
        assert euler_genus(rot) == 2, name


def test_face_count_equals_edges_minus_vertices_on_torus():
    for spec in (GridSpec(3, 3, 1), GridSpec(5, 5, 2), GridSpec(7, 4, 3)):
        g, rot = gen_grid(spec)
        faces = trace_faces(rot)
        assert len(faces) == g.m - g.n  # Euler on the torus
        assert all(len(f) == 3 for f in faces)


def test_planar_k4_rotation():
    rot = k4_planar()
    assert euler_genus(rot) == 0
    assert len(trace_faces(rot)) == 4


def test_face_darts_partition():
    _, rot = gen_named("t11")
    darts = [d for f in trace_faces(rot) for d in f]
    assert len(darts) == len(set(darts)) == 2 * rot.graph.m


# --- homology signatures ----------------------------------------------------

def test_signatures_on_the_plane_are_all_zero():
    sig = edge_signatures(k4_planar())
    assert set(sig.values()) == {0}


def test_facial_triangles_are_contractible_and_grid_rows_are_not():
    spec = GridSpec(5, 5, 1)
    g, rot = gen_grid(spec)
    face = trace_faces(rot)[0]
    tri = [u for u, _ in face]
    cert = make_cycle_cert(rot, tri)
    assert is_contractible(rot, cert)
    row = [0 * 5 + j for j in range(5)]        # a horizontal cycle
    col = [i * 5 + 0 for i in range(5)]        # a vertical cycle
    for cyc in (row, col):
        cert = make_cycle_cert(rot, cyc)
        assert cert.signature != 0
        assert not is_contractible(rot, cert)


def test_walk_signature_invariant_under_rotation_and_reversal():
    _, rot = gen_grid(GridSpec(5, 5, 1))
    sig = edge_signatures(rot)
    cycle = [0, 1, 2, 3, 4]  # closed implicitly
    base = walk_signature(sig, cycle)
    assert base == walk_signature(sig, cycle[2:] + cycle[:2])
    assert base == walk_signature(sig, list(reversed(cycle)))
    # XOR over the individual edges agrees with the walk sum.
    by_edges = 0
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        by_edges ^= sig[(min(u, v), max(u, v))]
    assert base == by_edges


def test_make_cycle_cert_rejects_non_cycles():
    _, rot = gen_named("k7")
    with pytest.raises(ValueError):
        make_cycle_cert(rot, [0, 1])
    with pytest.raises(ValueError):
        make_cycle_cert(rot, [0, 1, 1])


def test_contractibility_needs_genus_two():
    rot = k4_planar()
    cert = make_cycle_cert(rot, [0, 1, 2])
    with pytest.raises(ValueError):
        is_contractible(rot, cert)


# --- shortest non-contractible cycles --------------------------------------

def _sncc_oracle(rot, bound):
    """Shortest non-contractible cycle length by bounded brute enumeration."""
    g = rot.graph
    sig = edge_signatures(rot)
    best = None
    for start in range(g.n):
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            if best is not None and len(path) >= best:
                continue
            for w in sorted(g.adj[v]):
                if w == start and len(path) >= 3:
                    if walk_signature(sig, path) != 0:
                        best = len(path) if best is None else min(best, len(path))
                elif w > start and w not in path and len(path) < bound:
                    stack.append((w, path + [w]))
    return best


@pytest.mark.parametrize("spec,expect", [
    (GridSpec(3, 7, 1), 3),
    (GridSpec(8, 8, 1), 8),
    (GridSpec(4, 4, 1), 4),
])
def test_sncc_known_lengths(spec, expect):
    _, rot = gen_grid(spec)
    assert shortest_noncontractible_cycle(rot).length == expect


def test_sncc_on_k7_attains_girth():
    g, rot = gen_named("k7")
    cert = shortest_noncontractible_cycle(rot)
    assert cert.length == 3 == girth(g)


def test_sncc_matches_brute_oracle_on_small_grids():
    for spec in all_valid_grids(18):
        if spec.m * spec.n < 7:
            continue
        _, rot = gen_grid(spec)
        cert = shortest_noncontractible_cycle(rot)
        assert cert.signature != 0
        assert not is_contractible(rot, cert)
        oracle = _sncc_oracle(rot, bound=cert.length)
        assert oracle == cert.length, spec.token()


def test_sncc_is_deterministic():
    _, rot = gen_grid(GridSpec(5, 5, 2))
    a = shortest_noncontractible_cycle(rot)
    b = shortest_noncontractible_cycle(rot)
    assert a.vertices == b.vertices


# --- cutting and contracting ------------------------------------------------

def test_cut_and_contract_counts_and_planarity():
    for token in ("k7", "t11"):
        g, rot = gen_named(token)
        cyc = shortest_noncontractible_cycle(rot)
        cut = cut_and_contract(rot, cyc)
        assert cut.h.n == g.n - cyc.length + 2
        assert planarity_check(cut.h)
        assert cut.orig[cut.u] is None and cut.orig[cut.v] is None
        survivors = sorted(v for v in cut.orig if v is not None)
        assert survivors == sorted(set(range(g.n)) - set(cyc.vertices))


def test_cut_rejects_contractible_cycles():
    _, rot = gen_grid(GridSpec(5, 5, 1))
    face = trace_faces(rot)[0]
    cert = make_cycle_cert(rot, [u for u, _ in face])
    with pytest.raises(ValueError):
        cut_and_contract(rot, cert)


def test_shortest_path_and_contract_path():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    assert shortest_path(g, 0, 3) == (0, 1, 3)
    g2, vstar, orig = contract_path(g, (0, 1, 3))
    assert g2.n == 3
    assert orig[vstar] is None
    # 2 and 4 both survive and are adjacent to the contracted vertex.
    idx = {v: i for i, v in enumerate(orig) if v is not None}
    assert g2.has_edge(idx[2], vstar) and g2.has_edge(idx[4], vstar)
    with pytest.raises(ValueError):
        contract_path(g, (0, 2))  # not an edge
    with pytest.raises(ValueError):
        contract_path(g, (0, 1, 0))


def test_planarity_known_answers():
    k5 = gen_named("k5")[0]
    k33 = build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert not planarity_check(k5)
    assert not planarity_check(k33)
    assert planarity_check(gen_named("k4")[0])
    assert planarity_check(gen_named("c10")[0])
    assert planarity_check(build_graph(1, []))
