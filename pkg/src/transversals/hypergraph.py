"""Hypergraph data model, text/JSON parsing and the reduced systems used
by subset/superset queries."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


class HypergraphError(ValueError):
    """Malformed hypergraph input (bad header, empty edge, vertex range)."""


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count w (vertices are 1..w) plus an ordered list of edges.

    Edges are stored as ascending tuples of distinct vertices; duplicate
    vertices within an edge are collapsed.  Duplicate or nested edges are
    kept as given: they only restate constraints and removing them is not
    this type's job.  An empty edge is rejected because nothing can hit it,
    which would silently make every query answer trivial.
    """

    w: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.w, int) or self.w < 1:
            raise HypergraphError(f"vertex count must be a positive integer, got {self.w!r}")
        cleaned = []
        for edge in self.edges:
            vertices = sorted(set(edge))
            if not vertices:
                raise HypergraphError("empty edge")
            if vertices[0] < 1 or vertices[-1] > self.w:
                raise HypergraphError(
                    f"edge {tuple(edge)} has a vertex outside 1..{self.w}")
            cleaned.append(tuple(vertices))
        object.__setattr__(self, "edges", tuple(cleaned))

    @property
    def h(self) -> int:
        return len(self.edges)

    @property
    def d(self) -> int:
        """Largest edge size (0 when there are no edges)."""
        return max(map(len, self.edges), default=0)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the plain text format: header "w h", then h edge lines."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise HypergraphError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise HypergraphError(f"malformed header {lines[0]!r}, expected 'w h'")
    try:
        w, h = int(header[0]), int(header[1])
    except ValueError as exc:
        raise HypergraphError(f"malformed header {lines[0]!r}") from exc
    if h < 0:
        raise HypergraphError(f"negative edge count {h}")
    if len(lines) - 1 != h:
        raise HypergraphError(
            f"header announces {h} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for line in lines[1:]:
        try:
            edges.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise HypergraphError(f"bad edge line {line!r}") from exc
    return Hypergraph(w, tuple(edges))


def render_hypergraph(hg: Hypergraph) -> str:
    """Canonical text form; parse_hypergraph(render_hypergraph(hg)) == hg."""
    lines = [f"{hg.w} {hg.h}"]
    lines.extend(" ".join(map(str, edge)) for edge in hg.edges)
    return "\n".join(lines) + "\n"


def load_hypergraph(path: str) -> Hypergraph:
    """Load from a file; JSON {"w": int, "edges": [[int]]} when the name
    ends in .json, the plain text format otherwise."""
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    if not str(path).endswith(".json"):
        return parse_hypergraph(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict) or "w" not in data or "edges" not in data:
        raise HypergraphError('JSON hypergraph needs fields "w" and "edges"')
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError('"edges" must be a list of vertex lists')
    return Hypergraph(data["w"], tuple(tuple(e) for e in edges))


def subset_reduced(hg: Hypergraph, allowed: Iterable[int]) -> Hypergraph | None:
    """Intersect every edge with ``allowed``, keeping the original labels.

    Transversals of the result drawn from within ``allowed`` are exactly
    the transversals of ``hg`` contained in ``allowed``.  Returns None when
    some edge misses ``allowed`` entirely, since then no subset of
    ``allowed`` can hit that edge.
    """
    allowed = frozenset(allowed)
    if any(v < 1 or v > hg.w for v in allowed):
        raise ValueError(f"allowed set not within 1..{hg.w}")
    reduced = []
    for edge in hg.edges:
        cut = tuple(v for v in edge if v in allowed)
        if not cut:
            return None
        reduced.append(cut)
    return Hypergraph(hg.w, tuple(reduced))


def superset_reduced(hg: Hypergraph, fixed: Iterable[int]) -> Hypergraph:
    """Keep only the edges disjoint from ``fixed``.

    Transversals of ``hg`` containing ``fixed`` are exactly the unions of
    ``fixed`` with transversals of the result.
    """
    fixed = frozenset(fixed)
    if any(v < 1 or v > hg.w for v in fixed):
        raise ValueError(f"fixed set not within 1..{hg.w}")
    return Hypergraph(hg.w, tuple(e for e in hg.edges if fixed.isdisjoint(e)))
