"""Shared graphs and seeded corpora for the test suite."""

from __future__ import annotations

import pytest

from msvc import GeneratorSpec, build_graph, generate


def p3():
    # path a-b-c: 0-1-2, middle vertex 1
    return build_graph(3, [(0, 1), (1, 2)])


def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def k4():
    return build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def star(leaves: int):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star():
    # centers 0, 1 of degree 5 each; eight private leaves
    return generate(GeneratorSpec("double_star", (4, 4)))


def claw_chain6():
    return generate(GeneratorSpec("claw_chain", (6,)))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def gnp_corpus(counts: dict[int, int], ps=(0.25, 0.45, 0.65), seed_base: int = 7):
    """Deterministic list of (seed-tagged) random graphs, |counts[n]| per size."""
    graphs = []
    for n, count in sorted(counts.items()):
        for i in range(count):
            p = ps[i % len(ps)]
            seed = seed_base + 1000 * n + i
            graphs.append(generate(GeneratorSpec("gnp", (n, p), seed=seed)))
    return graphs


@pytest.fixture(scope="session")
def small_corpus():
    """>= 200 seeded random graphs with n <= 8 (acceptance corpus)."""
    counts = {3: 24, 4: 36, 5: 42, 6: 42, 7: 36, 8: 30}
    graphs = gnp_corpus(counts)
    assert len(graphs) >= 200
    return graphs


@pytest.fixture(scope="session")
def brute_profiles(small_corpus):
    """Per-graph list best[c] = optimal total with max charge <= c (or None)."""
    from msvc import brute_force_profile

    return [brute_force_profile(g) for g in small_corpus]
