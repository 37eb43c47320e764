"""Degree-window repair producing (k,1)-adjacency anonymous transformations.

A singleton probe {v} splits the other vertices into N(v) and V - N[v], so it
is k-adjacency antiresolving iff v is isolated, dominant, or its degree lies
in [k, n-k-1]. The repair first raises low-degree vertices by adding edges,
then lowers high-degree vertices by removing edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .antiresolving import Flavor, anonymity_value, k1_upper_bound
from .errors import InfeasibleError, PreconditionError
from .graph import Graph

ADD = "add"
REMOVE = "remove"


@dataclass
class EditScript:
    edits: list[tuple[str, int, int]] = field(default_factory=list)

    def add(self, u: int, v: int) -> None:
        self.edits.append((ADD, min(u, v), max(u, v)))

    def remove(self, u: int, v: int) -> None:
        self.edits.append((REMOVE, min(u, v), max(u, v)))

    @property
    def additions(self) -> int:
        return sum(1 for op, _, _ in self.edits if op == ADD)

    @property
    def removals(self) -> int:
        return sum(1 for op, _, _ in self.edits if op == REMOVE)

    def __len__(self):
        return len(self.edits)

    def apply(self, g: Graph) -> Graph:
        edges = set(g.edges)
        for op, u, v in self.edits:
            if op == ADD:
                edges.add((u, v))
            else:
                edges.discard((u, v))
        return Graph(g.n, edges, g.labels)

    def to_list(self) -> list[list]:
        return [[op, u, v] for op, u, v in self.edits]


@dataclass
class K1Report:
    k0: int
    k: int
    low_set_initial: list[int]
    high_set_initial: list[int]
    t: int
    t_prime: int
    bounds: dict

    def to_dict(self) -> dict:
        return {
            "k0": self.k0,
            "k": self.k,
            "low_set_initial": self.low_set_initial,
            "high_set_initial": self.high_set_initial,
            "t": self.t,
            "t_prime": self.t_prime,
            "bounds": self.bounds,
        }


def low_set(g: Graph, k: int) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if 1 <= d < k]


def high_set(g: Graph, k: int) -> list[int]:
    n = g.n
    return [v for v, d in enumerate(g.degrees()) if n - k - 1 < d <= n - 2]


def bounds_added(g: Graph, k: int) -> tuple[int, int]:
    missing = sum(k - g.degree(v) for v in low_set(g, k))
    return math.ceil(missing / 2), missing


def bounds_removed(g_t: Graph, g: Graph, k: int, guard_overshoot: bool = True) -> tuple[int, int]:
    """Bounds on removals, given the graph ``g_t`` after the addition phase.

    Only tracked vertices still inside the high window of ``g_t`` contribute,
    so every term is positive. Tracked means the original high set, plus the
    original low set when ``guard_overshoot`` is on.
    """
    n = g.n
    excess = 0
    tracked = high_set(g, k) + (low_set(g, k) if guard_overshoot else [])
    for v in tracked:
        d = g_t.degree(v)
        if n - k - 1 < d <= n - 2:
            excess += k - (n - d - 1)
    return math.ceil(excess / 2), excess


def _argmax(cands, deg):
    return max(cands, key=lambda x: (deg[x], -x))


def _argmin(cands, deg):
    return min(cands, key=lambda x: (deg[x], x))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transform_k1(g: Graph, k: int, k0: int | None = None, guard_overshoot: bool = True):
    """Return ``(g_prime, script, report)`` for target anonymity ``k``.

    Ties in every argmax/argmin go to the smallest vertex id.

    When the window [k, n-k-1] is narrow, the addition phase can push an
    already repaired low vertex above n-k-1. With ``guard_overshoot`` (the
    default) such vertices join the removal phase, and the removal fallback
    only takes an edge from an originally low or high vertex when that
    vertex's degree stays inside the window. Vertices that were fine in
    ``g`` are not protected; the transformation only constrains sets that
    were bad in ``g``. With the guard off, only the original high set is
    repaired and the fallback spares only the original low set; that
    variant can leave bad singletons behind.
    """
    n = g.n
    if n < 2 or g.is_complete() or g.is_empty():
        raise PreconditionError("transform_k1 needs a non-complete, non-empty graph")
    if k0 is None:
        k0 = anonymity_value(g, 1, Flavor.ADJACENCY).k
    upper = k1_upper_bound(g)
    if not k0 < k <= upper:
        raise PreconditionError(f"target k={k} outside [{k0 + 1}, {upper}]")

    adj = [g.adj_mask(v) for v in range(n)]
    deg = g.degrees()
    script = EditScript()

    def link(u, v):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        script.add(u, v)

    def unlink(u, v):
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1
        script.remove(u, v)

    low0 = low_set(g, k)
    high0 = high_set(g, k)
    add_lo, add_hi = bounds_added(g, k)

    low = list(low0)
    while low:
        lmask = sum(1 << x for x in low)
        xs = [x for x in low if lmask & ~adj[x] & ~(1 << x)]
        if xs:
            u = _argmax(xs, deg)
            ys = list(_bits(lmask & ~adj[u] & ~(1 << u)))
            v = _argmax(ys, deg)
        else:
            u = _argmax(low, deg)
            ys = list(_bits(((1 << n) - 1) & ~lmask & ~adj[u]))
            if not ys:
                raise InfeasibleError(
                    f"vertex {u} is adjacent to every vertex outside the low set",
                    vertex=u, phase="add")
            v = _argmin(ys, deg)
        link(u, v)
        low = [x for x in low if 1 <= deg[x] < k]
    t = len(script)

    g_t = script.apply(g)
    rem_lo, rem_hi = bounds_removed(g_t, g, k, guard_overshoot)
    excess_t = rem_hi

    tracked = sorted(high0 + low0) if guard_overshoot else high0
    tracked_mask = sum(1 << x for x in tracked)
    low0_mask = sum(1 << x for x in low0)
    # edges added above are never taken back
    fresh = [0] * n
    for _, a, b in script.edits:
        fresh[a] |= 1 << b
        fresh[b] |= 1 << a
    high = [x for x in tracked if n - k - 1 < deg[x] <= n - 2]
    while high:
        hmask = sum(1 << x for x in high)
        xs = [x for x in high if hmask & adj[x] & ~fresh[x]]
        if xs:
            u = _argmin(xs, deg)
            ys = list(_bits(hmask & adj[u] & ~fresh[u]))
            v = _argmin(ys, deg)
        else:
            u = _argmin(high, deg)
            if guard_overshoot:
                # a tracked partner may only drop while it stays inside the window
                ys = [y for y in _bits(adj[u] & ~fresh[u] & ~hmask)
                      if not tracked_mask >> y & 1 or k <= deg[y] - 1 <= n - k - 1]
            else:
                ys = list(_bits(adj[u] & ~fresh[u] & ~hmask & ~low0_mask))
            if not ys:
                raise InfeasibleError(
                    f"every neighbour of vertex {u} lies in the high or protected set",
                    vertex=u, phase="remove")
            v = _argmax(ys, deg)
        unlink(u, v)
        high = [x for x in high if n - k - 1 < deg[x] <= n - 2]
    t_prime = len(script) - t

    g_prime = script.apply(g)
    report = K1Report(
        k0=k0, k=k, low_set_initial=low0, high_set_initial=high0, t=t, t_prime=t_prime,
        bounds={
            "missing_initial": add_hi,
            "added_lower": add_lo,
            "added_upper": add_hi,
            "excess_at_Gt": excess_t,
            "removed_lower": rem_lo,
            "removed_upper": rem_hi,
        },
    )
    return g_prime, script, report


def degree_window_violations(g: Graph, g_prime: Graph, k: int) -> list[int]:
    """Originally-bad vertices whose new degree is still outside the window."""
    n = g.n
    bad = []
    for v in sorted(set(low_set(g, k)) | set(high_set(g, k))):
        d = g_prime.degree(v)
        if not (d == 0 or d == n - 1 or k <= d <= n - k - 1):
            bad.append(v)
    return bad
