"""Greedy edge addition producing (2, l)-adjacency anonymous transformations.

The bad family is every 1-adjacency antiresolving set of size <= l. Only
non-edges with exactly one endpoint in some bad set can change a bad set's
classes, so every other pair is discarded up front. The survivors are sorted
once by score and added greedily, skipping any edge that would turn an
already-repaired set bad again.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .antiresolving import enumerate_bad_sets
from .errors import PreconditionError, PruningMismatchError, StuckError
from .graph import Graph
from .transform_k1 import EditScript

log = logging.getLogger(__name__)


def _mask(s) -> int:
    m = 0
    for x in s:
        m |= 1 << x
    return m


def _classes(adj: list[int], full: int, s) -> list[int]:
    classes = [full]
    for x in s:
        a = adj[x]
        drop = ~(1 << x)
        out = []
        for c in classes:
            c &= drop
            if not c:
                continue
            inside = c & a
            if inside:
                out.append(inside)
            outside = c & ~a
            if outside:
                out.append(outside)
        classes = out
    return classes


def _has_singleton(classes) -> bool:
    return any(c & (c - 1) == 0 for c in classes)


def _singletons(adj, full, s) -> int:
    """Mask of vertices that sit alone in their class."""
    out = 0
    for c in _classes(adj, full, s):
        if c & (c - 1) == 0:
            out |= c
    return out


@dataclass
class CandidatePool:
    """Scored non-edges, highest score first, ties by (u, v)."""

    pairs: list[tuple[int, int]]
    scores: dict[tuple[int, int], int]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def remove(self, pair) -> None:
        self.pairs.remove(pair)

    def resort(self) -> None:
        self.pairs.sort(key=lambda p: (-self.scores[p], p))


def score_pair(g: Graph, bad_sets, pair) -> int:
    """Count (S, orientation) incidences: one endpoint in S, the other alone."""
    u, v = pair
    adj = [g.adj_mask(x) for x in range(g.n)]
    full = g.vertex_mask
    score = 0
    for s in bad_sets:
        if u in s and v not in s and _singletons(adj, full, s) >> v & 1:
            score += 1
        if v in s and u not in s and _singletons(adj, full, s) >> u & 1:
            score += 1
    return score


def _pool(adj: list[int], n: int, bad_sets) -> CandidatePool:
    full = (1 << n) - 1
    partners = [0] * n
    hits = {}
    for s in bad_sets:
        smask = _mask(s)
        lonely = _singletons(adj, full, s) & ~smask
        for u in s:
            partners[u] |= full & ~smask
            hits.setdefault(u, []).append(lonely)
    scores = {}
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                continue
            if not (partners[u] >> v & 1 or partners[v] >> u & 1):
                continue
            sc = sum(1 for m in hits.get(u, ()) if m >> v & 1)
            sc += sum(1 for m in hits.get(v, ()) if m >> u & 1)
            scores[(u, v)] = sc
    pool = CandidatePool(list(scores), scores)
    pool.resort()
    return pool


def candidate_pairs(g: Graph, bad_sets) -> CandidatePool:
    """Non-edges with exactly one endpoint in at least one bad set, scored."""
    return _pool([g.adj_mask(x) for x in range(g.n)], g.n, bad_sets)


def excluded_pairs(g: Graph, bad_sets) -> list[tuple[int, int]]:
    """Non-edges filtered out of the pool (useless for repairing any bad set)."""
    keep = set(candidate_pairs(g, bad_sets).pairs)
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
            if not g.has_edge(u, v) and (u, v) not in keep]


@dataclass
class PruneStats:
    queries: int = 0
    sets_checked: int = 0
    sets_skipped: int = 0
    full_sets_checked: int = 0
    disagreements: int = 0

    @property
    def skipped_fraction(self) -> float:
        total = self.sets_checked + self.sets_skipped
        return self.sets_skipped / total if total else 0.0

    def to_dict(self) -> dict:
        return {
            "queries": self.queries,
            "sets_checked": self.sets_checked,
            "sets_skipped": self.sets_skipped,
            "skipped_fraction": round(self.skipped_fraction, 6),
            "full_sets_checked": self.full_sets_checked,
            "disagreements": self.disagreements,
        }


@dataclass
class GreedyState:
    base_graph: Graph
    adj: list[int]
    bad_remaining: list[tuple[int, ...]]
    fixed: list[tuple[int, ...]] = field(default_factory=list)
    script: EditScript = field(default_factory=EditScript)
    prune_enabled: bool = True
    paranoid: bool = False
    stats: PruneStats = field(default_factory=PruneStats)

    @classmethod
    def start(cls, g: Graph, bad_sets, prune_enabled=True, paranoid=False):
        return cls(g, [g.adj_mask(x) for x in range(g.n)], list(bad_sets),
                   prune_enabled=prune_enabled, paranoid=paranoid)

    @property
    def n(self) -> int:
        return self.base_graph.n

    def current_graph(self) -> Graph:
        return self.script.apply(self.base_graph)

    def ball2(self, u: int) -> int:
        """Vertices within distance 2 of ``u`` in the current graph."""
        a = self.adj[u]
        out = a | 1 << u
        while a:
            low = a & -a
            out |= self.adj[low.bit_length() - 1]
            a ^= low
        return out

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.script.add(u, v)
        still = []
        full = (1 << self.n) - 1
        for s in self.bad_remaining:
            if _has_singleton(_classes(self.adj, full, s)):
                still.append(s)
            else:
                self.fixed.append(s)
        self.bad_remaining = still


def _rebreaks(state: GreedyState, pair, prune: bool) -> tuple[bool, int, int]:
    u, v = pair
    adj = list(state.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    full = (1 << state.n) - 1
    near = state.ball2(u) | state.ball2(v) if prune else full
    checked = skipped = 0
    for s in state.fixed:
        if prune and not (_mask(s) & near):
            skipped += 1
            continue
        checked += 1
        if _has_singleton(_classes(adj, full, s)):
            return True, checked, skipped
    return False, checked, skipped


def breaks_fixed_sets(state: GreedyState, pair) -> bool:
    """True iff adding ``pair`` makes some repaired set 1-antiresolving again.

    With pruning on, repaired sets lying entirely at distance > 2 from both
    endpoints are skipped. Paranoid mode also runs the exhaustive check and
    raises on any disagreement.
    """
    st = state.stats
    st.queries += 1
    result, checked, skipped = _rebreaks(state, pair, state.prune_enabled)
    st.sets_checked += checked
    st.sets_skipped += skipped
    if state.paranoid:
        full_result, full_checked, _ = _rebreaks(state, pair, False)
        st.full_sets_checked += full_checked
        if full_result != result:
            st.disagreements += 1
            raise PruningMismatchError(
                f"pruned check says {result}, exhaustive says {full_result} for pair {pair}")
    return result


@dataclass
class TwoEllReport:
    ell: int
    bad_sets_initial: int
    pool_size: int
    additions: int
    prune_enabled: bool
    stats: PruneStats

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "bad_sets_initial": self.bad_sets_initial,
            "pool_size": self.pool_size,
            "additions": self.additions,
            "prune_enabled": self.prune_enabled,
            "prune_stats": self.stats.to_dict(),
        }


def transform_2ell(g: Graph, ell: int, prune_enabled: bool = True, paranoid: bool = False,
                   rescore: bool = False, bad_sets=None):
    """Return ``(g_prime, script, report)``; raises StuckError when the pool runs dry.

    ``rescore`` re-sorts the remaining candidates against the current graph
    after every addition instead of keeping the initial ordering.
    """
    if not 1 <= ell < g.n:
        raise PreconditionError(f"ell must lie in [1, n-1], got {ell} for n={g.n}")
    if bad_sets is None:
        bad_sets = enumerate_bad_sets(g, ell)
    state = GreedyState.start(g, bad_sets, prune_enabled, paranoid)
    pool = _pool(state.adj, g.n, bad_sets)
    pool_size = len(pool)

    while state.bad_remaining:
        chosen = None
        for pair in pool:
            if not breaks_fixed_sets(state, pair):
                chosen = pair
                break
        if chosen is None:
            err = StuckError(
                f"no admissible candidate left; {len(state.bad_remaining)} bad sets remain",
                residual=state.bad_remaining, script=state.script,
                graph=state.current_graph())
            err.stats = state.stats
            raise err
        state.add_edge(*chosen)
        pool.remove(chosen)
        if rescore and pool.pairs:
            fresh = _pool(state.adj, g.n, state.bad_remaining)
            pool.scores = {p: fresh.scores.get(p, 0) for p in pool.pairs}
            pool.resort()

    log.debug("2-ell greedy: %d additions, pruning skipped %.1f%% of set checks",
              len(state.script), 100 * state.stats.skipped_fraction)
    report = TwoEllReport(ell=ell, bad_sets_initial=len(bad_sets), pool_size=pool_size,
                          additions=len(state.script), prune_enabled=prune_enabled,
                          stats=state.stats)
    return state.current_graph(), state.script, report
