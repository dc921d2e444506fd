"""Finite paths in a graph, including the length-zero vertex paths.

A path is an anchored sequence of composable edges; every vertex doubles
as the empty path anchored at it, so distinct vertices give distinct
empty paths.  Extra isolated vertices admit only their empty path.

Text syntax: ``@NAME`` (or ``@w[K]`` for an extra vertex) for empty
paths, otherwise edges joined by ``.``, each edge written
``BUNDLE[INDEX]``, e.g. ``a[0].a[1]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CompositionError, ParseError, ValidationError
from .graphs import Graph, extra_vertex_index

_EDGE_RE = re.compile(r"([A-Za-z0-9_]+)\[(\d+)\]\Z")
_VERTEX_PATH_RE = re.compile(r"@([A-Za-z0-9_]+(?:\[\d+\])?)\Z")


@dataclass(frozen=True)
class Edge:
    """One concrete edge: the ``index``-th member of a parallel bundle."""

    bundle: str
    index: int

    def __str__(self) -> str:
        return f"{self.bundle}[{self.index}]"


@dataclass(frozen=True, eq=False)
class Path:
    """An anchored edge sequence with source = anchor and range = the dst
    of the final edge (the anchor itself when empty)."""

    graph: Graph
    anchor: str
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        g = self.graph
        if not g.is_vertex(self.anchor):
            raise ValidationError(f"unknown vertex {self.anchor!r}")
        at = self.anchor
        if self.edges and extra_vertex_index(at) is not None:
            raise ValidationError("extra isolated vertices have no incident edges")
        for e in self.edges:
            if not g.has_bundle(e.bundle):
                raise ValidationError(f"unknown bundle {e.bundle!r}")
            b = g.bundle(e.bundle)
            if e.index < 0 or (b.card.is_finite and e.index >= b.card.size):
                raise ValidationError(
                    f"edge index {e.index} out of range for bundle {e.bundle!r}"
                )
            if b.src != at:
                raise ValidationError(
                    f"edge {e} does not compose: starts at {b.src!r}, needed {at!r}"
                )
            at = b.dst
        object.__setattr__(self, "_range", at)
        object.__setattr__(self, "_hash", hash((self.anchor, self.edges)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return (
            self.anchor == other.anchor
            and self.edges == other.edges
            and (self.graph is other.graph or self.graph == other.graph)
        )

    def __hash__(self) -> int:
        return self._hash

    @property
    def source(self) -> str:
        return self.anchor

    @property
    def range(self) -> str:
        return self._range

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_cycle(self) -> bool:
        """Source equals range.  Every empty path is trivially a cycle;
        cycle-hunting callers must insist on length >= 1 themselves."""
        return self.anchor == self._range

    def concat(self, other: Path) -> Path:
        """Compose self followed by other; requires range = other.source."""
        if self.graph is not other.graph and self.graph != other.graph:
            raise CompositionError("paths over different graphs")
        if self._range != other.anchor:
            raise CompositionError(
                f"cannot compose: range {self._range!r} != source {other.anchor!r}"
            )
        if not other.edges:
            return self
        if not self.edges:
            return other
        return Path(self.graph, self.anchor, self.edges + other.edges)

    def strip_prefix(self, prefix: Path) -> Optional[Path]:
        """The unique w with ``self == prefix.concat(w)``, or None when
        prefix is not an initial segment of self (anchor included)."""
        n = len(prefix.edges)
        if prefix.anchor != self.anchor or self.edges[:n] != prefix.edges:
            return None
        if n == len(self.edges):
            return Path(self.graph, self._range)
        return Path(self.graph, prefix.range, self.edges[n:])

    def last_edge(self) -> Optional[Edge]:
        return self.edges[-1] if self.edges else None

    def __str__(self) -> str:
        if not self.edges:
            return f"@{self.anchor}"
        return ".".join(str(e) for e in self.edges)

    def __repr__(self) -> str:
        return f"Path({self})"


def empty_path(g: Graph, vertex: str) -> Path:
    """The length-zero path sitting at a vertex."""
    return Path(g, vertex)


def edge_path(g: Graph, bundle: str, index: int) -> Path:
    """The length-one path consisting of a single edge."""
    if not g.has_bundle(bundle):
        raise ValidationError(f"unknown bundle {bundle!r}")
    return Path(g, g.bundle(bundle).src, (Edge(bundle, index),))


def parse_path(text: str, g: Graph) -> Path:
    """Parse the path syntax described in the module docstring."""
    text = text.strip()
    if not text:
        raise ParseError("empty path")
    if text.startswith("@"):
        m = _VERTEX_PATH_RE.match(text)
        if not m:
            raise ParseError(f"invalid vertex path {text!r}")
        return Path(g, m.group(1))
    edges = []
    for chunk in text.split("."):
        m = _EDGE_RE.match(chunk)
        if not m:
            raise ParseError(f"invalid edge {chunk!r}")
        edges.append(Edge(m.group(1), int(m.group(2))))
    first = g.bundle(edges[0].bundle) if g.has_bundle(edges[0].bundle) else None
    if first is None:
        raise ValidationError(f"unknown bundle {edges[0].bundle!r}")
    return Path(g, first.src, tuple(edges))


def enumerate_paths(
    g: Graph,
    max_length: int,
    max_index: int,
    extra_count: int = 0,
) -> list[Path]:
    """All paths of length <= max_length whose edge indices are <= max_index
    (and inside finite bundles), in deterministic declaration order.

    ``extra_count`` empty paths at w[0]..w[extra_count-1] are included when
    the graph carries the extra family.
    """
    start: list[Path] = [Path(g, v) for v in g.vertices]
    if g.extra_isolated_vertices:
        start += [Path(g, f"w[{k}]") for k in range(extra_count)]
    result = list(start)
    frontier = [p for p in start if p.anchor in g.vertices]
    for _ in range(max_length):
        nxt: list[Path] = []
        for p in frontier:
            for b in g.out_bundles(p.range):
                top = max_index if not b.card.is_finite else min(max_index, b.card.size - 1)
                for i in range(top + 1):
                    nxt.append(Path(g, p.anchor, p.edges + (Edge(b.name, i),)))
        result += nxt
        frontier = nxt
    return result
