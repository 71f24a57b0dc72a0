"""Ground-truth solvers: full permutation enumeration and a subset dynamic
program over placement prefixes, plus a fast path for regular graphs.

Both oracles return the minimum total charge over all orderings whose maximum
single charge is at most k, together with the lexicographically smallest
witness sequence, or None when no vertex cover of size <= k exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .graph import Graph, Ordering

BRUTE_FORCE_GUARD = 10
SUBSET_DP_GUARD = 24

_CHUNK = 40320  # permutations processed per numpy batch


class OracleGuardError(ValueError):
    """Graph too large for the requested oracle."""


@dataclass(frozen=True)
class DpTable:
    """Prefix-placement table: value[mask] is the minimal total charge of any
    ordering that places exactly the vertices of ``mask`` first.

    Populated layer by layer (subset size 0..k); value[0] == 0.
    """

    value: dict[int, int]


def _perm_batches(n: int):
    batch: list[int] = []
    rows = 0
    for perm in permutations(range(n)):
        batch.extend(perm)
        rows += 1
        if rows == _CHUNK:
            yield np.array(batch, dtype=np.int64).reshape(rows, n)
            batch = []
            rows = 0
    if rows:
        yield np.array(batch, dtype=np.int64).reshape(rows, n)


def brute_force_optimal(g: Graph, k: int, guard: int = BRUTE_FORCE_GUARD):
    """Minimum total charge over all n! orderings with max charge <= k.

    Returns (cost, Ordering) with the lexicographically smallest optimal
    sequence, or None if no ordering satisfies the max-charge bound.
    """
    n = g.n
    if n > guard:
        raise OracleGuardError(f"brute force limited to n <= {guard}, got {n}")
    k_eff = min(k, n)
    if n == 0:
        return 0, Ordering.from_sequence(())
    if g.m == 0:
        return 0, Ordering.identity(n)
    uu = np.array([u for u, _ in g.edges], dtype=np.int64)
    vv = np.array([v for _, v in g.edges], dtype=np.int64)
    best_total = None
    best_seq = None
    for seqs in _perm_batches(n):
        pos = np.argsort(seqs, axis=1) + 1
        costs = np.minimum(pos[:, uu], pos[:, vv])
        totals = costs.sum(axis=1)
        feasible = costs.max(axis=1) <= k_eff
        if not feasible.any():
            continue
        masked = np.where(feasible, totals, np.iinfo(np.int64).max)
        idx = int(np.argmin(masked))
        total = int(masked[idx])
        if best_total is None or total < best_total:
            best_total = total
            best_seq = tuple(int(x) for x in seqs[idx])
    if best_total is None:
        return None
    return best_total, Ordering.from_sequence(best_seq)


def brute_force_profile(g: Graph, guard: int = BRUTE_FORCE_GUARD) -> list:
    """best[c] = minimum total over orderings with max charge <= c, else None.

    One enumeration pass answers every k at once; index c runs 0..n.
    """
    n = g.n
    if n > guard:
        raise OracleGuardError(f"brute force limited to n <= {guard}, got {n}")
    if n == 0 or g.m == 0:
        return [0] * (n + 1)
    uu = np.array([u for u, _ in g.edges], dtype=np.int64)
    vv = np.array([v for _, v in g.edges], dtype=np.int64)
    best = np.full(n + 1, np.iinfo(np.int64).max, dtype=np.int64)
    for seqs in _perm_batches(n):
        pos = np.argsort(seqs, axis=1) + 1
        costs = np.minimum(pos[:, uu], pos[:, vv])
        totals = costs.sum(axis=1)
        maxes = costs.max(axis=1)
        np.minimum.at(best, maxes, totals)
    # min total over max charge <= c is the prefix minimum
    out: list = []
    running = np.iinfo(np.int64).max
    for c in range(n + 1):
        running = min(running, int(best[c]))
        out.append(None if running == np.iinfo(np.int64).max else running)
    return out


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _edge_masks(g: Graph) -> list[int]:
    return [(1 << u) | (1 << v) for u, v in g.edges]


def build_dp_table(g: Graph, k: int, guard: int = SUBSET_DP_GUARD) -> DpTable:
    """Populate the prefix-placement table for all subsets of size <= min(k, n)."""
    n = g.n
    if n > guard:
        raise OracleGuardError(f"subset DP limited to n <= {guard}, got {n}")
    k_eff = min(k, n)
    adj = _adj_masks(g)
    full = (1 << n) - 1
    value: dict[int, int] = {0: 0}
    for size in range(1, k_eff + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            outside = full & ~mask
            best = None
            for v in combo:
                cand = value[mask ^ (1 << v)] + size * (adj[v] & outside).bit_count()
                if best is None or cand < best:
                    best = cand
            value[mask] = best
    return DpTable(value=value)


def _suffix_table(g: Graph, k_eff: int) -> dict[int, int | None]:
    """remaining[mask]: minimal charge still to pay after placing ``mask``
    first, respecting the k_eff bound; None when infeasible."""
    n = g.n
    adj = _adj_masks(g)
    edge_masks = _edge_masks(g)
    remaining: dict[int, int | None] = {}
    for size in range(k_eff, -1, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(mask & em for em in edge_masks):
                remaining[mask] = 0
                continue
            if size == k_eff:
                remaining[mask] = None
                continue
            best: int | None = None
            for v in range(n):
                bit = 1 << v
                if mask & bit:
                    continue
                nxt = remaining[mask | bit]
                if nxt is None:
                    continue
                step = (size + 1) * (adj[v] & ~(mask | bit)).bit_count()
                if best is None or step + nxt < best:
                    best = step + nxt
            remaining[mask] = best
    return remaining


def subset_dp_optimal(g: Graph, k: int, guard: int = SUBSET_DP_GUARD):
    """Subset DP optimum with max charge <= k; None when infeasible.

    The witness is the lexicographically smallest optimal sequence,
    reconstructed by a greedy forward walk over the residual-cost table.
    """
    n = g.n
    if n > guard:
        raise OracleGuardError(f"subset DP limited to n <= {guard}, got {n}")
    k_eff = min(k, n)
    if n == 0:
        return 0, Ordering.from_sequence(())
    adj = _adj_masks(g)
    edge_masks = _edge_masks(g)
    table = build_dp_table(g, k, guard=guard)
    opt = None
    for mask, val in table.value.items():
        if all(mask & em for em in edge_masks):
            if opt is None or val < opt:
                opt = val
    if opt is None:
        return None
    remaining = _suffix_table(g, k_eff)
    assert remaining[0] == opt, "prefix and suffix tables disagree"
    seq: list[int] = []
    mask = 0
    while not all(mask & em for em in edge_masks):
        size = len(seq)
        target = remaining[mask]
        for v in range(n):
            bit = 1 << v
            if mask & bit:
                continue
            nxt = remaining.get(mask | bit)
            if nxt is None:
                continue
            step = (size + 1) * (adj[v] & ~(mask | bit)).bit_count()
            if step + nxt == target:
                seq.append(v)
                mask |= bit
                break
        else:  # pragma: no cover - contradicts table consistency
            raise AssertionError("no tight extension during DP reconstruction")
    placed = set(seq)
    seq.extend(v for v in range(n) if v not in placed)
    return opt, Ordering.from_sequence(seq)


def regular_solve(g: Graph, k: int):
    """Optimum for d-regular graphs.

    Degree 0 and 1 are solved directly; degree >= 3 with n > 2k is infeasible
    without any search (a cover needs at least n/2 vertices); everything else
    is delegated to the subset DP.
    """
    n = g.n
    degs = set(g.degrees)
    if len(degs) > 1:
        raise ValueError("regular_solve requires a regular graph")
    d = degs.pop() if degs else 0
    k_eff = min(k, n)
    if d == 0:
        return 0, Ordering.identity(n)
    if d == 1:
        m = g.m
        if k_eff < m:
            return None
        firsts = sorted(u for u, _ in g.edges)
        rest = sorted(set(range(n)) - set(firsts))
        cost = m * (m + 1) // 2
        return cost, Ordering.from_sequence(firsts + rest)
    if d >= 3 and n > 2 * k_eff:
        return None
    return subset_dp_optimal(g, k)
