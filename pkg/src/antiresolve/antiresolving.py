"""Antiresolving sets, equivalence classes and (k, l)-(adjacency) anonymity.

Probe sets are sorted tuples of vertex ids; id order is the total order used
for representation coordinates. Partitions are computed by successive
refinement of bitmasks: the classes for ``S + (x,)`` are the classes for ``S``
with ``x`` removed, split by how ``x`` sees each vertex. Enumeration walks
subsets in (size, lexicographic) order so every witness is deterministic.
"""

from __future__ import annotations

import enum
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import GraphError, PreconditionError
from .graph import Graph, classify_vertices, induced_subgraph, mask_to_list

UNBOUNDED = math.inf


class Flavor(str, enum.Enum):
    METRIC = "metric"
    ADJACENCY = "adjacency"


def as_flavor(flavor) -> Flavor:
    return flavor if isinstance(flavor, Flavor) else Flavor(str(flavor).lower())


def probe_set(members, n: int) -> tuple[int, ...]:
    """Validate and canonicalise a probe set: non-empty, proper, sorted."""
    s = tuple(sorted(set(int(x) for x in members)))
    if not s:
        raise PreconditionError("probe set must be non-empty")
    if s[0] < 0 or s[-1] >= n:
        raise GraphError(f"probe set {s} has ids outside 0..{n - 1}")
    if len(s) >= n:
        raise PreconditionError("probe set must be a proper subset of V")
    return s


@dataclass(frozen=True)
class Representation:
    coords: tuple
    flavor: Flavor


@dataclass(frozen=True)
class ClassPartition:
    probe: tuple[int, ...]
    classes: tuple[frozenset, ...]
    representations: tuple[Representation, ...]
    k_value: int

    def class_of(self, v: int) -> frozenset:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)


@dataclass
class AnonymityReport:
    ell: int
    mode: Flavor
    k: int
    witness: tuple[int, ...]
    sets_examined: int
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, g: Graph | None = None) -> dict:
        witness = list(self.witness)
        out = {"mode": self.mode.value, "ell": self.ell, "k": self.k, "witness": witness}
        if g is not None and g.labels is not None:
            out["witness_labels"] = [g.label(v) for v in self.witness]
        out["sets_examined"] = self.sets_examined
        out["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return out


# low-level partition machinery


def _layers(g: Graph, s: int, flavor: Flavor) -> list[int]:
    if flavor is Flavor.ADJACENCY:
        a = g.adj_mask(s)
        return [a, g.vertex_mask & ~a & ~(1 << s)]
    return g.distance_layers(s)


class _LayerCache:
    def __init__(self, g: Graph, flavor: Flavor):
        self.g = g
        self.flavor = flavor
        self._cache: dict[int, list[int]] = {}

    def __call__(self, s: int) -> list[int]:
        lay = self._cache.get(s)
        if lay is None:
            lay = self._cache[s] = _layers(self.g, s, self.flavor)
        return lay


def _refine(classes: list[int], x: int, layers: list[int]) -> list[int]:
    drop = ~(1 << x)
    out = []
    for c in classes:
        c &= drop
        if not c:
            continue
        for lay in layers:
            part = c & lay
            if part:
                out.append(part)
                c &= ~lay
                if not c:
                    break
    return out


def class_masks(g: Graph, s: Sequence[int], flavor=Flavor.ADJACENCY) -> list[int]:
    """Equivalence classes of V minus S as bitmasks (unordered)."""
    flavor = as_flavor(flavor)
    classes = [g.vertex_mask]
    for x in s:
        classes = _refine(classes, x, _layers(g, x, flavor))
    return classes


def _min_size(classes: list[int]) -> int:
    return min(c.bit_count() for c in classes)


def _has_singleton(classes: list[int]) -> bool:
    return any(c & (c - 1) == 0 for c in classes)


def iter_partitions(g: Graph, size: int, flavor=Flavor.ADJACENCY,
                    candidates: Sequence[int] | None = None,
                    first: int | None = None,
                    layers=None) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    """Yield ``(S, class_masks)`` for every ``size``-subset of ``candidates``.

    Subsets come out in lexicographic order. ``first`` restricts the walk to
    subsets whose smallest element (by position in ``candidates``) is given.
    """
    flavor = as_flavor(flavor)
    cand = list(range(g.n)) if candidates is None else list(candidates)
    layers = layers or _LayerCache(g, flavor)
    full = g.vertex_mask
    if size <= 0 or size > len(cand):
        return
    starts = range(len(cand) - size + 1) if first is None else [cand.index(first)]

    def walk(start: int, chosen: tuple, classes: list[int], left: int):
        for i in range(start, len(cand) - left + 1):
            x = cand[i]
            refined = _refine(classes, x, layers(x))
            s = chosen + (x,)
            if left == 1:
                if refined:
                    yield s, refined
            else:
                yield from walk(i + 1, s, refined, left - 1)

    for i in starts:
        if i > len(cand) - size:
            continue
        x = cand[i]
        refined = _refine([full], x, layers(x))
        if size == 1:
            if refined:
                yield (x,), refined
        else:
            yield from walk(i + 1, (x,), refined, size - 1)


# public operations


def representation(g: Graph, u: int, s, flavor=Flavor.ADJACENCY) -> Representation:
    flavor = as_flavor(flavor)
    s = probe_set(s, g.n)
    g.check(u)
    if u in s:
        raise PreconditionError(f"vertex {u} belongs to the probe set")
    if flavor is Flavor.ADJACENCY:
        coords = tuple(1 if g.has_edge(x, u) else 2 for x in s)
    else:
        coords = tuple(g.bfs(x)[u] for x in s)
    return Representation(coords, flavor)


def partition(g: Graph, s, flavor=Flavor.ADJACENCY) -> ClassPartition:
    flavor = as_flavor(flavor)
    s = probe_set(s, g.n)
    masks = class_masks(g, s, flavor)
    classes = []
    for m in masks:
        members = mask_to_list(m)
        classes.append((representation(g, members[0], s, flavor), frozenset(members)))
    classes.sort(key=lambda rc: min(rc[1]))
    return ClassPartition(
        probe=s,
        classes=tuple(c for _, c in classes),
        representations=tuple(r for r, _ in classes),
        k_value=min(len(c) for _, c in classes),
    )


def antiresolving_k(g: Graph, s, flavor=Flavor.ADJACENCY) -> int:
    s = probe_set(s, g.n)
    return _min_size(class_masks(g, s, flavor))


def k_antidimension(g: Graph, k: int, max_size: int, flavor=Flavor.ADJACENCY):
    """Smallest |S| <= max_size whose antiresolving value is exactly ``k``.

    Returns ``(size, witness)`` or ``None`` when no such set exists in range.
    """
    if g.n < 2:
        raise PreconditionError("antidimension needs n >= 2")
    if not 1 <= max_size < g.n:
        raise PreconditionError("max_size must lie in [1, n-1]")
    for size in range(1, max_size + 1):
        for s, classes in iter_partitions(g, size, flavor):
            if _min_size(classes) == k:
                return size, s
    return None


def k_adjacency_antidimension(g: Graph, k: int, max_size: int):
    """Minimal cardinality of a k-adjacency antiresolving set, or None."""
    found = k_antidimension(g, k, max_size, Flavor.ADJACENCY)
    return None if found is None else found[0]


def _scan(g: Graph, flavor: Flavor, size: int, first: int | None):
    best_k, best_s, count = None, None, 0
    for s, classes in iter_partitions(g, size, flavor, first=first):
        count += 1
        k = _min_size(classes)
        if best_k is None or k < best_k:
            best_k, best_s = k, s
            if k == 1:
                break
    return best_k, best_s, count


def anonymity_value(g: Graph, ell: int, flavor=Flavor.ADJACENCY,
                    threads: int = 1) -> AnonymityReport:
    """(k, ell)-(adjacency) anonymity value of ``g`` by exhaustive search.

    The witness is the first minimiser in (size, lexicographic) order. The
    search stops early once k = 1 is found, since nothing can go lower.
    """
    flavor = as_flavor(flavor)
    if not 1 <= ell < g.n:
        raise PreconditionError(f"ell must lie in [1, n-1], got {ell} for n={g.n}")
    t0 = time.perf_counter()
    best = None
    examined = 0
    if threads <= 1:
        for size in range(1, ell + 1):
            k, s, c = _scan(g, flavor, size, None)
            examined += c
            if k is not None and (best is None or k < best[0]):
                best = (k, s)
            if best[0] == 1:
                break
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for size in range(1, ell + 1):
                firsts = list(range(g.n - size + 1))
                results = pool.map(_scan, itertools.repeat(g), itertools.repeat(flavor),
                                   itertools.repeat(size), firsts)
                # chunks are consumed in order and cut at the first k = 1, so
                # the count and witness match the serial scan
                for k, s, c in results:
                    examined += c
                    if k is not None and (best is None or k < best[0]):
                        best = (k, s)
                    if k == 1:
                        break
                if best[0] == 1:
                    break
    return AnonymityReport(ell=ell, mode=flavor, k=best[0], witness=best[1],
                           sets_examined=examined, elapsed=time.perf_counter() - t0)


def enumerate_bad_sets(g: Graph, ell: int) -> list[tuple[int, ...]]:
    """All 1-adjacency antiresolving sets of size <= ell, (size, lex) ordered."""
    if not 1 <= ell < g.n:
        raise PreconditionError(f"ell must lie in [1, n-1], got {ell} for n={g.n}")
    out = []
    for size in range(1, ell + 1):
        for s, classes in iter_partitions(g, size, Flavor.ADJACENCY):
            if _has_singleton(classes):
                out.append(s)
    return out


def is_bad(g: Graph, s: Sequence[int]) -> bool:
    """True iff ``s`` is a 1-adjacency antiresolving set of ``g``."""
    return _has_singleton(class_masks(g, s, Flavor.ADJACENCY))


@dataclass
class TransformationCheck:
    holds: bool
    counterexample: tuple[int, ...] | None = None
    counterexample_labels: tuple[str, ...] | None = None
    k_original: int | None = None
    k_published: int | None = None
    sets_examined: int = 0

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "counterexample_labels": (None if self.counterexample_labels is None
                                      else list(self.counterexample_labels)),
            "k_original": self.k_original,
            "k_published": self.k_published,
            "sets_examined": self.sets_examined,
        }


def shared_vertices(g1: Graph, g2: Graph) -> list[tuple[int, int]]:
    """Pairs (id in g1, id in g2) of common vertices.

    Vertices are matched by label when both graphs carry labels, otherwise by
    id, so two unlabelled graphs share exactly the ids below ``min(n1, n2)``.
    """
    if g1.labels is None or g2.labels is None:
        return [(i, i) for i in range(min(g1.n, g2.n))]
    index2 = {lab: i for i, lab in enumerate(g2.vertex_labels())}
    return [(i, index2[lab]) for i, lab in enumerate(g1.vertex_labels()) if lab in index2]


def is_transformation(g1: Graph, g2: Graph, k: int, ell: int,
                      flavor=Flavor.ADJACENCY) -> TransformationCheck:
    """Check that every S (|S| <= ell) below k in g1 reaches at least k in g2.

    Returns the first violating set in (size, lexicographic) order of g1 ids.
    """
    flavor = as_flavor(flavor)
    pairs = shared_vertices(g1, g2)
    to2 = dict(pairs)
    common = [a for a, _ in pairs]
    layers2 = _LayerCache(g2, flavor)
    examined = 0
    top = min(ell, len(common), g1.n - 1, g2.n - 1)
    for size in range(1, top + 1):
        for s, classes in iter_partitions(g1, size, flavor, candidates=common):
            examined += 1
            k1 = _min_size(classes)
            if k1 >= k:
                continue
            s2 = sorted(to2[x] for x in s)
            c2 = [g2.vertex_mask]
            for x in s2:
                c2 = _refine(c2, x, layers2(x))
            k2 = _min_size(c2)
            if k2 < k:
                labels = tuple(g1.label(x) for x in s)
                return TransformationCheck(False, s, labels, k1, k2, examined)
    return TransformationCheck(True, sets_examined=examined)


def k1_upper_bound(g: Graph):
    """floor((n-1)/2) for non-complete non-empty graphs, else UNBOUNDED."""
    if g.n < 2:
        raise PreconditionError("need n >= 2")
    if g.is_complete() or g.is_empty():
        return UNBOUNDED
    return (g.n - 1) // 2


def k1_value_formula(g: Graph) -> int:
    """Closed-form (k,1)-adjacency anonymity value from the degree structure."""
    n = g.n
    if n < 2:
        raise PreconditionError("need n >= 2")
    if g.is_complete() or g.is_empty():
        return n - 1
    rep = classify_vertices(g)
    if not rep.isolated and not rep.dominant:
        return min(rep.min_degree, n - rep.max_degree - 1)
    if rep.dominant:
        rest = [v for v in range(n) if v not in rep.dominant]
        sub, _ = induced_subgraph(g, rest)
        return min(rep.min_degree, len(rest) - max(sub.degrees()) - 1)
    rest = [v for v in range(n) if v not in rep.isolated]
    sub, _ = induced_subgraph(g, rest)
    return min(min(sub.degrees()), n - rep.max_degree - 1)


def singleton_values(g: Graph, flavor=Flavor.ADJACENCY) -> list[int]:
    """Antiresolving value of every singleton {v}, indexed by v."""
    return [_min_size(class_masks(g, (v,), flavor)) for v in range(g.n)]

