"""Enumeration of all minimal vertex covers of size at most k.

Recursive edge branching: at the lexicographically smallest uncovered edge uv,
either take u, or permanently exclude u and take all of N(u).  Branches are
pruned once the partial cover exceeds k or would need an excluded vertex;
leaves are filtered for minimality and deduplicated.  The scheme yields at
most 2^k distinct covers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_vertex_cover


@dataclass(frozen=True)
class MinimalCover:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


def is_minimal_cover(g: Graph, s) -> bool:
    """True iff s covers every edge and no proper subset does.

    A cover is minimal exactly when every member has a neighbor outside the
    set (a private edge that only it covers).
    """
    members = set(s)
    if not is_vertex_cover(g, members):
        return False
    for v in members:
        if all(x in members for x in g.adj[v]):
            return False
    return True


def enumerate_minimal_covers(g: Graph, k: int) -> list[MinimalCover]:
    """All minimal vertex covers of size <= k, sorted canonically."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    found: set[tuple[int, ...]] = set()
    edges = g.edges

    def first_uncovered(cover: set[int]):
        for u, v in edges:
            if u not in cover and v not in cover:
                return u, v
        return None

    def explore(cover: set[int], excluded: set[int]) -> None:
        if len(cover) > k:
            return
        edge = first_uncovered(cover)
        if edge is None:
            if is_minimal_cover(g, cover):
                found.add(tuple(sorted(cover)))
            return
        u, _ = edge
        if u not in excluded:
            cover.add(u)
            explore(cover, excluded)
            cover.discard(u)
        need = [x for x in g.adj[u] if x not in cover]
        if any(x in excluded for x in need):
            return
        if len(cover) + len(need) > k:
            return
        cover.update(need)
        excluded.add(u)
        explore(cover, excluded)
        excluded.discard(u)
        cover.difference_update(need)

    explore(set(), set())
    return [MinimalCover(vertices=frozenset(t)) for t in sorted(found)]
