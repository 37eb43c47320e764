"""Edge-list files, seeded random graphs and the worked-example fixtures.

File format::

    # comments anywhere, blank lines ignored
    n 5
    0 1
    2 4

Ids are 0-based and must be below the header count.
"""

from __future__ import annotations

import random
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    n = None
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>' before any edge", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"malformed edge line {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge line {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(serialize_edge_list(g), encoding="utf-8")


def generate_random(n: int, p: float, seed: int, model: str = "ER") -> Graph:
    """Erdos-Renyi G(n, p) drawn with Python's Mersenne Twister.

    Pairs are visited in lexicographic order and each draws one uniform
    variate, so a seed reproduces the same graph on every platform.
    """
    if model.upper() != "ER":
        raise GraphError(f"unknown random graph model {model!r}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


# Worked-example graphs. Labels follow the drawings; ids are chosen
# so that smallest-id tie-breaking reproduces the drawn edge choices in fig4b.

def _labelled(labels, edges) -> Graph:
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph(len(labels), [(index[a], index[b]) for a, b in edges], labels)


def fixtures() -> dict[str, Graph]:
    return {
        # star: centre v, leaves v1..v3
        "fig2_g1": _labelled(["v", "v1", "v2", "v3"],
                             [("v", "v1"), ("v", "v2"), ("v", "v3")]),
        # v joined to x2, y2, z2; z2 joined to x2 and y2 (no x2-y2 edge)
        "fig2_g2": _labelled(["v", "x2", "y2", "z2"],
                             [("z2", "v"), ("v", "x2"), ("x2", "z2"), ("z2", "y2"),
                              ("y2", "v")]),
        # triangle x2 y2 z2 with v pendant at z2
        "fig2_g3": _labelled(["v", "x2", "y2", "z2"],
                             [("v", "z2"), ("z2", "y2"), ("y2", "x2"), ("x2", "z2")]),
        # hub v joined to the four endpoints of x4-y4-z1-y1-x1 and x2-y2-z2-y3-x3
        "fig3": _labelled(
            ["v", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4", "z1", "z2"],
            [("x4", "y4"), ("y4", "z1"), ("z1", "y1"), ("y1", "x1"),
             ("x2", "y2"), ("y2", "z2"), ("z2", "y3"), ("y3", "x3"),
             ("v", "x4"), ("v", "x1"), ("v", "x3"), ("v", "x2")]),
        # two disjoint edges v1-v3, v2-v4 plus an isolated centre
        "fig4a": _labelled(["c", "v1", "v2", "v3", "v4"],
                           [("v1", "v3"), ("v2", "v4")]),
        # 4-cycle v22-cv2-v32-v52 plus the disjoint edge v12-v42
        "fig4b": _labelled(["v12", "v42", "v22", "v32", "cv2", "v52"],
                           [("v22", "cv2"), ("cv2", "v32"), ("v32", "v52"),
                            ("v52", "v22"), ("v12", "v42")]),
    }


def load_graph(ref: str) -> Graph:
    """Resolve a fixture name or read an edge-list file."""
    fx = fixtures()
    if ref in fx:
        return fx[ref]
    return read_edge_list(ref)
