"""Decide whether the inverse semigroup of a graph admits a non-discrete
locally compact semigroup topology.

The decision runs on a purely graph-theoretic criterion: a non-discrete
locally compact semigroup topology exists exactly when the graph has
infinitely many vertices (here: the extra isolated family) or a *bad
pair* of vertices (e, f) with finitely many paths ending at e but
infinitely many edges e -> f.  Otherwise the discrete topology is the
only one.

Finiteness of the path set into a vertex e reduces to reachability: with
R = {v : v reaches e}, the set {u : r(u) = e} is infinite iff some vertex
of R lies on a nonempty cycle or some infinite bundle ends inside R.  In
the remaining case the R-induced subgraph is an acyclic multigraph with
finite bundles, so a backward walk enumerates the complete path list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Graph, INFINITE, edges_between
from .paths import Edge, Path

__all__ = [
    "reaches",
    "CycleReaching",
    "InfiniteBundleReaching",
    "FinitenessVerdict",
    "paths_into_vertex_finite",
    "InfiniteVertexFamily",
    "BadPair",
    "Verdict",
    "find_bad_pair",
    "decide",
    "satisfies_star",
]


def reaches(g: Graph, src: str, dst: str) -> bool:
    """True when a (possibly empty) directed path src -> dst exists,
    treating each bundle as a single arc."""
    g.check_core_vertex(src)
    g.check_core_vertex(dst)
    return dst in _reachable_from(g, src)


def _reachable_from(g: Graph, src: str) -> set[str]:
    seen = {src}
    frontier = [src]
    while frontier:
        v = frontier.pop()
        for b in g.out_bundles(v):
            if b.dst not in seen:
                seen.add(b.dst)
                frontier.append(b.dst)
    return seen


def _reaching(g: Graph, dst: str) -> set[str]:
    """All vertices with a directed path into dst."""
    seen = {dst}
    frontier = [dst]
    while frontier:
        v = frontier.pop()
        for b in g.in_bundles(v):
            if b.src not in seen:
                seen.add(b.src)
                frontier.append(b.src)
    return seen


def _bfs_path(g: Graph, src: str, dst: str) -> Optional[Path]:
    """A shortest path src -> dst realized with index-0 edges, scanning
    bundles in declaration order for determinism."""
    if src == dst:
        return Path(g, src)
    parent: dict[str, tuple[str, str]] = {}
    frontier = [src]
    seen = {src}
    while frontier:
        nxt = []
        for v in frontier:
            for b in g.out_bundles(v):
                if b.dst not in seen:
                    seen.add(b.dst)
                    parent[b.dst] = (v, b.name)
                    if b.dst == dst:
                        edges = []
                        at = dst
                        while at != src:
                            prev, bundle = parent[at]
                            edges.append(Edge(bundle, 0))
                            at = prev
                        return Path(g, src, tuple(reversed(edges)))
                    nxt.append(b.dst)
        frontier = nxt
    return None


@dataclass(frozen=True)
class CycleReaching:
    """Pumping witness: a nonempty cycle whose vertex reaches the queried
    vertex along ``connector``."""

    cycle: Path
    connector: Path


@dataclass(frozen=True)
class InfiniteBundleReaching:
    """An infinite bundle whose destination reaches the queried vertex
    along ``connector``."""

    bundle: str
    connector: Path


@dataclass(frozen=True)
class FinitenessVerdict:
    """Answer to "is the set of paths ending at a vertex finite?".

    When finite, ``paths`` is the complete list; when infinite, ``witness``
    explains the blow-up.
    """

    finite: bool
    paths: tuple[Path, ...] = ()
    witness: Union[CycleReaching, InfiniteBundleReaching, None] = None


def _find_cycle_through(g: Graph, v: str) -> Optional[Path]:
    """A nonempty cycle at v, built from the first bundle (declaration
    order) that closes one, or None."""
    for b in g.bundles:
        if reaches(g, v, b.src) and reaches(g, b.dst, v):
            head = _bfs_path(g, v, b.src)
            tail = _bfs_path(g, b.dst, v)
            return head.concat(Path(g, b.src, (Edge(b.name, 0),))).concat(tail)
    return None


def paths_into_vertex_finite(g: Graph, vertex: str) -> FinitenessVerdict:
    """Classify the set {u : r(u) = vertex} as finite (with the complete
    path list) or infinite (with a cycle or infinite-bundle witness)."""
    g.check_core_vertex(vertex)
    region = _reaching(g, vertex)

    for v in g.vertices:
        if v not in region:
            continue
        cycle = _find_cycle_through(g, v)
        if cycle is not None:
            return FinitenessVerdict(
                finite=False,
                witness=CycleReaching(cycle, _bfs_path(g, v, vertex)),
            )

    for b in g.bundles:
        if not b.card.is_finite and b.dst in region:
            return FinitenessVerdict(
                finite=False,
                witness=InfiniteBundleReaching(b.name, _bfs_path(g, b.dst, vertex)),
            )

    # Acyclic with finite in-bundles: the backward walk terminates.
    memo: dict[str, tuple[Path, ...]] = {}

    def ending_at(v: str) -> tuple[Path, ...]:
        if v in memo:
            return memo[v]
        acc = [Path(g, v)]
        for b in g.in_bundles(v):
            for stem in ending_at(b.src):
                for i in range(b.card.size):
                    acc.append(Path(g, stem.anchor, stem.edges + (Edge(b.name, i),)))
        memo[v] = tuple(acc)
        return memo[v]

    return FinitenessVerdict(finite=True, paths=ending_at(vertex))


@dataclass(frozen=True)
class InfiniteVertexFamily:
    """Witness: the graph carries the infinite isolated-vertex family."""


@dataclass(frozen=True)
class BadPair:
    """Witness: finitely many paths end at e, infinitely many edges e -> f."""

    e: str
    f: str
    bundle: str


@dataclass(frozen=True)
class Verdict:
    """Discrete-only (no witness) or non-discrete with its witness."""

    witness: Union[InfiniteVertexFamily, BadPair, None] = None

    @property
    def discrete_only(self) -> bool:
        return self.witness is None

    def to_report(self) -> dict:
        if self.witness is None:
            return {"verdict": "discrete_only", "witness": None}
        if isinstance(self.witness, InfiniteVertexFamily):
            payload = {"kind": "infinite_vertex_family"}
        else:
            payload = {
                "kind": "bad_pair",
                "e": self.witness.e,
                "f": self.witness.f,
                "bundle": self.witness.bundle,
            }
        return {"verdict": "non_discrete", "witness": payload}

    def __str__(self) -> str:
        if self.witness is None:
            return "discrete_only"
        if isinstance(self.witness, InfiniteVertexFamily):
            return "non_discrete (witness: infinite isolated-vertex family)"
        w = self.witness
        return (
            f"non_discrete (witness: bad pair e={w.e}, f={w.f}, "
            f"infinite bundle {w.bundle})"
        )


def find_bad_pair(g: Graph) -> Optional[tuple[str, str, str]]:
    """First (declaration order) pair (e, f) with a finite path set into e
    and infinitely many edges e -> f, plus the lexicographically first
    infinite bundle realizing it; None when no pair qualifies."""
    for e in g.vertices:
        if not paths_into_vertex_finite(g, e).finite:
            continue
        for f in g.vertices:
            if edges_between(g, e, f) == INFINITE:
                bundle = min(
                    b.name
                    for b in g.bundles
                    if b.src == e and b.dst == f and not b.card.is_finite
                )
                return e, f, bundle
    return None


def decide(g: Graph) -> Verdict:
    """The dichotomy: non-discrete locally compact semigroup topologies
    exist iff the vertex set is infinite or a bad pair exists."""
    if g.extra_isolated_vertices:
        return Verdict(InfiniteVertexFamily())
    pair = find_bad_pair(g)
    if pair is not None:
        return Verdict(BadPair(*pair))
    return Verdict(None)


def satisfies_star(g: Graph) -> bool:
    """True exactly when the discrete topology is the only locally compact
    semigroup topology on the inverse semigroup of g."""
    return decide(g).discrete_only
