"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph construction or an out-of-range vertex id."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. an unreachable target k)."""


class InfeasibleError(RuntimeError):
    """The degree-window repair found no admissible partner for a vertex."""

    def __init__(self, message: str, vertex: int, phase: str):
        self.vertex = vertex
        self.phase = phase
        super().__init__(message)


class StuckError(RuntimeError):
    """Greedy edge addition ran out of candidates while bad sets remain."""

    def __init__(self, message: str, residual, script=None, graph=None):
        self.residual = list(residual)
        self.script = script
        self.graph = graph
        super().__init__(message)


class PruningMismatchError(AssertionError):
    """Pruned and exhaustive re-break checks disagreed (paranoid mode)."""
