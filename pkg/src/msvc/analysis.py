"""Structural audits of optimal orderings and the cover-number cost bound.

The audits check, on concrete optima, the ordering facts the solver relies
on: high-degree vertices sit in the paid prefix, charge counts are
non-increasing, large degree differences force relative order, and vertices
whose neighbors are all high-degree come last.  The bound report compares
the smallest achievable maximum charge against a closed-form function of the
edge count and the vertex cover number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Graph, Ordering, evaluate

VC_NUMBER_N_GUARD = 24
VC_NUMBER_TAU_GUARD = 20
MIN_MAX_GUARD = 20


class AnalysisGuardError(ValueError):
    """Graph too large for the requested exact analysis."""


class BoundDomainError(ValueError):
    """The closed-form bound has no real value for these (m, tau)."""


def vc_number(g: Graph) -> int:
    """Exact minimum vertex cover size via bounded branching."""
    if g.m == 0:
        return 0
    limit = g.n if g.n <= VC_NUMBER_N_GUARD else VC_NUMBER_TAU_GUARD

    def covers_within(edges: list[tuple[int, int]], budget: int) -> bool:
        if not edges:
            return True
        if budget == 0:
            return False
        # a vertex covers at most max-degree edges
        deg: dict[int, int] = {}
        for a, b in edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if len(edges) > budget * max(deg.values()):
            return False
        u, v = edges[0]
        rest_u = [e for e in edges if u not in e]
        if covers_within(rest_u, budget - 1):
            return True
        rest_v = [e for e in edges if v not in e]
        return covers_within(rest_v, budget - 1)

    edges = list(g.edges)
    for size in range(0, limit + 1):
        if covers_within(edges, size):
            return size
    raise AnalysisGuardError(
        f"vertex cover number exceeds {VC_NUMBER_TAU_GUARD} on a graph with n > {VC_NUMBER_N_GUARD}"
    )


def lemma1_bound(m: int, tau: int) -> float:
    """sqrt(m(tau-1) - m^2/tau + m^2/tau^2) + m/tau.

    The radicand factors as m(tau-1)(tau^2 - m)/tau^2, so the expression is
    real only when m <= tau^2 (or tau <= 1); outside that domain a
    BoundDomainError is raised.  For tau = 1 the radicand vanishes and the
    value is exactly m.
    """
    if tau < 0 or m < 0:
        raise ValueError("m and tau must be nonnegative")
    if tau == 0:
        if m > 0:
            raise ValueError("tau = 0 with edges present: no cover exists")
        return 0.0
    if m < tau:
        raise ValueError(f"m = {m} below tau = {tau}: impossible on a graph")
    radicand = m * (tau - 1) - m * m / tau + m * m / (tau * tau)
    if radicand < -1e-9:
        raise BoundDomainError(
            f"bound undefined for m = {m}, tau = {tau} (m exceeds tau^2)"
        )
    return math.sqrt(max(radicand, 0.0)) + m / tau


def min_max_cost_over_optima(g: Graph):
    """(opt_cost, min_max_cost): the unconstrained optimal total charge and
    the smallest maximum charge among orderings achieving it.

    Computed by a full-subset DP minimizing (total, max) lexicographically;
    both components compose monotonically over prefix extensions.
    """
    n = g.n
    if n > MIN_MAX_GUARD:
        raise AnalysisGuardError(f"min-max analysis limited to n <= {MIN_MAX_GUARD}")
    if g.m == 0:
        return 0, 0
    size = 1 << n
    masks = np.arange(size, dtype=np.uint32)
    adj = np.zeros(n, dtype=np.uint32)
    for u, v in g.edges:
        adj[u] |= np.uint32(1 << v)
        adj[v] |= np.uint32(1 << u)
    INF = np.int64(1) << 40
    cost = np.full(size, INF, dtype=np.int64)
    maxc = np.zeros(size, dtype=np.int64)
    cost[0] = 0
    popcnt = np.bitwise_count(masks).astype(np.int64)
    for s in range(1, n + 1):
        layer = masks[popcnt == s]
        for v in range(n):
            bit = np.uint32(1 << v)
            sub = layer[(layer & bit) != 0]
            if sub.size == 0:
                continue
            prev = sub ^ bit
            out = np.bitwise_count(adj[v] & ~sub).astype(np.int64)
            cand_cost = cost[prev] + s * out
            cand_max = np.maximum(maxc[prev], np.where(out > 0, s, 0))
            cur_cost = cost[sub]
            cur_max = maxc[sub]
            better = (cand_cost < cur_cost) | (
                (cand_cost == cur_cost) & (cand_max < cur_max)
            )
            if better.any():
                idx = sub[better]
                cost[idx] = cand_cost[better]
                maxc[idx] = cand_max[better]
    not_cover = np.zeros(size, dtype=bool)
    for u, v in g.edges:
        em = np.uint32((1 << u) | (1 << v))
        not_cover |= (masks & em) == 0
    keys = cost * (n + 1) + maxc
    keys[not_cover] = np.iinfo(np.int64).max
    best = int(np.argmin(keys))
    return int(cost[best]), int(maxc[best])


@dataclass(frozen=True)
class BoundReport:
    tau: int
    m: int
    bound: Optional[float]
    observed_min_max_cost: int
    holds: Optional[bool]

    @property
    def in_domain(self) -> bool:
        return self.bound is not None


def bound_report(g: Graph) -> BoundReport:
    tau = vc_number(g)
    opt, min_max = min_max_cost_over_optima(g)
    try:
        bound = lemma1_bound(g.m, tau)
    except BoundDomainError:
        return BoundReport(tau=tau, m=g.m, bound=None, observed_min_max_cost=min_max, holds=None)
    return BoundReport(
        tau=tau,
        m=g.m,
        bound=bound,
        observed_min_max_cost=min_max,
        holds=min_max <= bound,
    )


@dataclass(frozen=True)
class CheckResult:
    # passed is None when the check was skipped (needs an optimal ordering)
    passed: Optional[bool]
    detail: str = ""


@dataclass(frozen=True)
class AuditReport:
    prop1: CheckResult
    lemma2i: CheckResult
    lemma2ii: CheckResult
    lemma4: CheckResult
    replacement_window: CheckResult  # warning-level: a failure is reported, not fatal

    @property
    def all_passed(self) -> bool:
        checks = (self.prop1, self.lemma2i, self.lemma2ii, self.lemma4)
        return all(c.passed is not False for c in checks)


def structural_audit(
    g: Graph,
    k: int,
    ordering: Ordering,
    is_optimal: bool,
    tau: Optional[int] = None,
) -> AuditReport:
    """Audit one feasible ordering; the optimality-dependent checks run only
    when the ordering came from an exact oracle."""
    report = evaluate(g, ordering)
    k_eff = min(k, g.n)
    if report.max_cost > k_eff:
        raise ValueError(
            f"ordering has max charge {report.max_cost} > k = {k_eff}: not feasible"
        )
    degs = g.degrees
    pos = ordering.position

    bad = [v for v in range(g.n) if degs[v] > k_eff and pos[v] > k_eff]
    prop1 = CheckResult(
        passed=not bad,
        detail="" if not bad else f"degree>{k_eff} vertices outside prefix: {bad}",
    )

    skipped = CheckResult(passed=None, detail="needs an optimal ordering")
    lemma2i = lemma2ii = lemma4 = replacement = skipped
    if is_optimal:
        r = report.r
        viol = next(
            (i for i in range(1, k_eff) if r[i - 1] < r[i]),
            None,
        )
        lemma2i = CheckResult(
            passed=viol is None,
            detail="" if viol is None else f"r rises at positions {viol},{viol + 1}",
        )

        pair = None
        for u in range(g.n):
            for v in range(g.n):
                if degs[u] - k_eff >= degs[v] > 0 and pos[u] > pos[v]:
                    pair = (u, v)
                    break
            if pair:
                break
        lemma2ii = CheckResult(
            passed=pair is None,
            detail="" if pair is None else f"vertex {pair[0]} placed after {pair[1]}",
        )

        offender = None
        for v in range(g.n):
            if g.adj[v] and all(degs[x] > k_eff for x in g.adj[v]):
                if any(pos[v] < pos[x] for x in g.adj[v]):
                    offender = v
                    break
        lemma4 = CheckResult(
            passed=offender is None,
            detail="" if offender is None else f"vertex {offender} precedes a neighbor",
        )

        if tau is None:
            tau = vc_number(g)
        kp = report.max_cost
        if kp > 0 and kp - tau >= 1:
            ok = report.r_at(kp - tau) >= 2
            replacement = CheckResult(
                passed=ok,
                detail="" if ok else f"r({kp}-{tau}) = {report.r_at(kp - tau)} < 2",
            )
        else:
            replacement = CheckResult(passed=True, detail="window empty")
    return AuditReport(
        prop1=prop1,
        lemma2i=lemma2i,
        lemma2ii=lemma2ii,
        lemma4=lemma4,
        replacement_window=replacement,
    )
