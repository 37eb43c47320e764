"""Information loss between an original and a perturbed graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph


@dataclass(frozen=True)
class LossReport:
    edge_edit_distance: int
    additions: int
    removals: int
    degree_shift: int
    density_delta: float

    def to_dict(self) -> dict:
        return {
            "edge_edit_distance": self.edge_edit_distance,
            "additions": self.additions,
            "removals": self.removals,
            "degree_shift": self.degree_shift,
            "density_delta": self.density_delta,
        }


def compute_loss(g: Graph, g2: Graph) -> LossReport:
    """Edge edit distance |E xor E'| plus auxiliary utility deltas."""
    if g.n != g2.n or (g.labels is not None and g2.labels is not None
                       and g.labels != g2.labels):
        raise PreconditionError("loss needs two graphs on the same vertex set")
    added = len(g2.edges - g.edges)
    removed = len(g.edges - g2.edges)
    shift = sum(abs(a - b) for a, b in zip(sorted(g.degrees()), sorted(g2.degrees())))
    pairs = g.n * (g.n - 1) // 2
    density = (g2.m - g.m) / pairs if pairs else 0.0
    return LossReport(added + removed, added, removed, shift, round(density, 12))
