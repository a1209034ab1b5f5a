"""Shared helpers for the test suite."""
import random

import pytest

from torodef import InvalidSpec, build_graph
from torodef.generators import GridSpec


def all_valid_grids(max_vertices: int):
    """Every valid right-diagonal shifted grid G[m x n, k] with m*n bounded."""
    specs = []
    for m in range(1, max_vertices + 1):
        for n in range(1, max_vertices // m + 1):
            for k in range(1, m + 1):
                try:
                    spec = GridSpec(m, n, k)
                except InvalidSpec:
                    continue
                if spec.valid:
                    specs.append(spec)
    return specs


def random_connected_graph(rng: random.Random, n: int):
    """Uniform spanning-tree skeleton plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    extra = rng.randrange(0, n * (n - 1) // 2 - (n - 1) + 1)
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)
                  if (u, v) not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return build_graph(n, sorted(edges))


@pytest.fixture(scope="session")
def k7_rot():
    from torodef import gen_named
    return gen_named("k7")[1]


@pytest.fixture(scope="session")
def t11_rot():
    from torodef import gen_named
    return gen_named("t11")[1]
