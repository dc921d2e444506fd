"""Countable neighborhood bases at zero witnessing non-discreteness.

When the decider reports a non-discrete verdict, one of two explicit
topologies exists.  Both make every nonzero element isolated and give
zero the decreasing countable base U_1 ⊇ U_2 ⊇ ...:

* infinite isolated-vertex family: U_n = {w[k] idempotents : k > n} ∪ {0};
* bad pair (e, f) with infinite bundle M: with intoE the (finite, complete)
  list of paths ending at e,
  U_n = {u.M[k] * (v.M[k])^-1 : u, v ∈ intoE, k > n} ∪ {0}.

Membership in U_n is decidable exactly: for the bundle case a nonzero
element belongs iff its two paths are nonempty and share one and the same
final edge, that edge lies in M, and its index exceeds n.  (Equivalent to
the factorization through intoE: a path whose final edge lies in M ends
at the bundle's destination, and everything before that edge is a path
into e, hence listed in intoE.  Completeness of intoE is what the slice
check in `verify_base_axioms` pins down.)

The verifiers re-check, on finite truncations, the algebraic facts that
make these families semigroup topologies: nestedness, symmetry under
inversion, product closure, and annihilation of each U_n under outside
multipliers.  Left multiplication is not swept separately for the bundle
case: it follows from the right-multiplication cases through the
inversion symmetry U_n^-1 = U_n, which `base_symmetric` certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .elements import ZERO, Element, enumerate_elements, multiply
from .errors import GraphMismatch, WitnessMismatch
from .graphs import Graph, extra_vertex, extra_vertex_index
from .paths import Edge, Path
from .reports import Report, Sweep
from .topology import BadPair, InfiniteVertexFamily, paths_into_vertex_finite

__all__ = [
    "NeighborhoodBase",
    "VertexFamilyBase",
    "BundleBase",
    "construct_base",
    "verify_base_axioms",
    "verify_continuity",
]


class NeighborhoodBase:
    """Shared behavior of the two base constructions.

    The admission threshold lives in one place so that verification
    harnesses can study deliberately corrupted variants by overriding it.
    """

    graph: Graph

    def _index_admitted(self, index: int, n: int) -> bool:
        return index > n

    def member(self, n: int, x: Element) -> bool:
        raise NotImplementedError

    def enumerate_truncated(self, n: int, max_index: int) -> set[Element]:
        raise NotImplementedError

    def _check_graph(self, x: Element) -> None:
        if x.graph is not None and x.graph != self.graph:
            raise GraphMismatch("element lives over a different graph")


@dataclass(frozen=True)
class VertexFamilyBase(NeighborhoodBase):
    """Base built on the extra isolated vertices w[0], w[1], ..."""

    graph: Graph

    def member(self, n: int, x: Element) -> bool:
        """x ∈ U_n: zero, or the idempotent at w[k] with admitted k."""
        if x.is_zero:
            return True
        self._check_graph(x)
        if x.u != x.v or len(x.u) != 0:
            return False
        k = extra_vertex_index(x.u.anchor)
        return k is not None and self._index_admitted(k, n)

    def enumerate_truncated(self, n: int, max_index: int) -> set[Element]:
        """All members with vertex index <= max_index, plus zero."""
        out = {ZERO}
        for k in range(max_index + 1):
            if self._index_admitted(k, n):
                p = Path(self.graph, extra_vertex(k))
                out.add(Element(p, p))
        return out

    def to_dict(self) -> dict:
        return {"kind": "vertex_family"}

    def __str__(self) -> str:
        return "base over the infinite isolated-vertex family w[0], w[1], ..."


@dataclass(frozen=True)
class BundleBase(NeighborhoodBase):
    """Base built on a bad pair (e, f) and an infinite bundle e -> f.

    ``into_e`` must be the complete list of paths ending at e; construct
    through `construct_base` to get it right.  The slice check of
    `verify_base_axioms` fails on incomplete lists.
    """

    graph: Graph
    e: str
    f: str
    bundle: str
    into_e: tuple[Path, ...]

    def __post_init__(self):
        g = self.graph
        if not (g.is_core_vertex(self.e) and g.is_core_vertex(self.f)):
            raise WitnessMismatch("bad pair names unknown vertices")
        if not g.has_bundle(self.bundle):
            raise WitnessMismatch(f"unknown bundle {self.bundle!r}")
        b = g.bundle(self.bundle)
        if b.src != self.e or b.dst != self.f or b.card.is_finite:
            raise WitnessMismatch(
                f"bundle {self.bundle!r} is not an infinite bundle {self.e} -> {self.f}"
            )

    def bundle_edge(self, index: int) -> Path:
        """The length-one path through the index-th edge of the bundle."""
        return Path(self.graph, self.e, (Edge(self.bundle, index),))

    def member(self, n: int, x: Element) -> bool:
        """x ∈ U_n: zero, or u and v end with one and the same edge of the
        infinite bundle, with admitted index."""
        if x.is_zero:
            return True
        self._check_graph(x)
        last_u = x.u.last_edge()
        last_v = x.v.last_edge()
        if last_u is None or last_u != last_v:
            return False
        return last_u.bundle == self.bundle and self._index_admitted(last_u.index, n)

    def enumerate_truncated(self, n: int, max_index: int) -> set[Element]:
        """All members with bundle index <= max_index, plus zero."""
        out = {ZERO}
        for k in range(max_index + 1):
            if not self._index_admitted(k, n):
                continue
            tail = self.bundle_edge(k)
            stems = [u.concat(tail) for u in self.into_e]
            for p in stems:
                for q in stems:
                    out.add(Element(p, q))
        return out

    def to_dict(self) -> dict:
        return {
            "kind": "bundle",
            "e": self.e,
            "f": self.f,
            "bundle": self.bundle,
            "into_e": [str(p) for p in self.into_e],
        }

    def __str__(self) -> str:
        paths = ", ".join(str(p) for p in self.into_e)
        return (
            f"base over infinite bundle {self.bundle}: {self.e} -> {self.f} "
            f"(paths into {self.e}: {{{paths}}})"
        )


def construct_base(
    g: Graph, witness: Union[InfiniteVertexFamily, BadPair]
) -> NeighborhoodBase:
    """Build the neighborhood base matching a non-discreteness witness.

    Raises WitnessMismatch when the witness does not actually hold in g
    (no extra family, or the named pair has an infinite path set into e,
    or the bundle is not an infinite e -> f bundle).
    """
    if isinstance(witness, InfiniteVertexFamily):
        if not g.extra_isolated_vertices:
            raise WitnessMismatch("graph has no infinite isolated-vertex family")
        return VertexFamilyBase(g)
    if isinstance(witness, BadPair):
        g.check_core_vertex(witness.e)
        g.check_core_vertex(witness.f)
        verdict = paths_into_vertex_finite(g, witness.e)
        if not verdict.finite:
            raise WitnessMismatch(
                f"infinitely many paths end at {witness.e!r}; not a bad pair"
            )
        return BundleBase(g, witness.e, witness.f, witness.bundle, verdict.paths)
    raise WitnessMismatch(f"not a non-discreteness witness: {witness!r}")


# ---------------------------------------------------------------------------
# verification sweeps
# ---------------------------------------------------------------------------


def _reference_by_index(base: NeighborhoodBase, max_index: int) -> dict[int, set[Element]]:
    """Members grouped by index, derived from the graph rather than from
    the base's own stored data (so corrupted bases disagree with it)."""
    if isinstance(base, VertexFamilyBase):
        out = {}
        for k in range(max_index + 1):
            p = Path(base.graph, extra_vertex(k))
            out[k] = {Element(p, p)}
        return out
    fresh = paths_into_vertex_finite(base.graph, base.e)
    if not fresh.finite:
        raise WitnessMismatch(f"infinitely many paths end at {base.e!r}")
    out = {}
    for k in range(max_index + 1):
        tail = base.bundle_edge(k)
        stems = [u.concat(tail) for u in fresh.paths]
        out[k] = {Element(p, q) for p in stems for q in stems}
    return out


def _probe_elements(base: NeighborhoodBase, max_length: int, max_index: int):
    extra = max_index + 1 if base.graph.extra_isolated_vertices else 0
    return enumerate_elements(
        base.graph, max_length, max_index, extra_count=extra, include_zero=False
    )


def verify_base_axioms(base: NeighborhoodBase, max_index: int = 20) -> Report:
    """Filter-base sanity on truncations up to ``max_index``:

    * base_nested    - U_{n+1} ⊆ U_n, membership-checked;
    * base_slices    - U_n \\ U_m is finite and is exactly the index slice
                       n < k <= m, cross-checked three ways (enumeration
                       difference, membership over a graph-derived
                       reference universe, reference index slice);
    * base_symmetric - U_n is closed under inversion, membership-checked
                       both on members and on nearby non-members.
    """
    if max_index < 2:
        raise ValueError("max_index must be >= 2")
    K = max_index

    nested = Sweep("base_nested")
    for n in range(K):
        for x in base.enumerate_truncated(n + 1, K):
            nested.record(base.member(n, x), n=n, x=x)

    slices = Sweep("base_slices")
    reference = _reference_by_index(base, K)
    universe = set().union(*reference.values())
    enums = {n: base.enumerate_truncated(n, K) for n in range(K + 1)}
    for n in range(K + 1):
        for m in range(n + 1, K + 1):
            diff = enums[n] - enums[m]
            by_member = {
                x for x in universe if base.member(n, x) and not base.member(m, x)
            }
            by_index = set().union(*(reference[k] for k in range(n + 1, m + 1)))
            slices.record(
                diff == by_member == by_index,
                n=n,
                m=m,
                enumerated=len(diff),
                by_member=len(by_member),
                by_index=len(by_index),
            )

    symmetric = Sweep("base_symmetric")
    probes = list(universe) + _probe_elements(base, 2, min(K, 8))
    for n in range(1, K + 1):
        for x in probes:
            symmetric.record(
                base.member(n, x) == base.member(n, x.inverse()), n=n, x=x
            )

    return Report([nested.done(), slices.done(), symmetric.done()])


def _classify_probe(base: BundleBase, c: Path):
    """Sort the right-hand path of a multiplier b.c^-1 into the three
    annihilation cases:

    ("extends_into_e", None) - c extends to a path ending at e, so products
        against U_k rotate members into members;
    ("through_bundle", n0)   - c passes through bundle edge n0 right after
        a path into e, so every U_m with m >= n0 is annihilated;
    ("unrelated", None)      - everything else: already U_1 is annihilated.

    At most one path into e is a prefix of c (two comparable paths with
    range e would differ by a cycle at e, and the bad-pair invariant rules
    cycles out), so the classification is unambiguous.
    """
    if any(u.strip_prefix(c) is not None for u in base.into_e):
        return "extends_into_e", None
    for u in base.into_e:
        rest = c.strip_prefix(u)
        if rest is not None and len(rest) > 0 and rest.edges[0].bundle == base.bundle:
            return "through_bundle", rest.edges[0].index
    return "unrelated", None


def verify_continuity(
    base: NeighborhoodBase, max_index: int = 20, max_length: int = 4
) -> Report:
    """Continuity of multiplication on truncations, following the shape of
    the two constructions.

    Vertex-family base:

    * U_mul_closed        - products of U_n members stay in U_n;
    * vertex_annihilation - a multiplier a.b^-1 annihilates all of U_n
                            except possibly the idempotent at its inner
                            vertex (s(b) from the left, s(a) from the
                            right), which only exists inside U_n when that
                            vertex belongs to the extra family.

    Bundle base, classifying every multiplier s = b.c^-1 by
    `_classify_probe` on c:

    * case_1_1  - extends_into_e: s·U_k ⊆ U_k;
    * case_1_2  - through_bundle at n0: s·U_{max(n0,k)} = {0}.  The exact
                  threshold is max(n0, k) - one finer than the coarse
                  max(n0+1, k) that also suffices - so an off-by-one
                  corruption of the admission rule is caught here;
    * case_1_3  - unrelated: s·U_1 = {0};
    * UU_closed - products of U_k members stay in U_k (matching final
                  indices survive, everything else collapses to zero).

    Left multiplication follows from these plus `base_symmetric`.
    """
    if max_index < 2 or max_length < 1:
        raise ValueError("need max_index >= 2 and max_length >= 1")
    K = max_index
    probes = _probe_elements(base, max_length, K)

    if isinstance(base, VertexFamilyBase):
        closed = Sweep("U_mul_closed")
        for n in range(1, K):
            members = base.enumerate_truncated(n, K)
            for x in members:
                for y in members:
                    closed.record(base.member(n, multiply(x, y)), n=n, x=x, y=y)

        annihilation = Sweep("vertex_annihilation")
        for s in probes:
            left_exception = Element(
                Path(base.graph, s.v.anchor), Path(base.graph, s.v.anchor)
            )
            right_exception = Element(
                Path(base.graph, s.u.anchor), Path(base.graph, s.u.anchor)
            )
            for n in range(1, K + 1):
                for x in base.enumerate_truncated(n, K):
                    if x.is_zero:
                        continue
                    if x != left_exception:
                        annihilation.record(
                            multiply(s, x) == ZERO, s=s, n=n, x=x, side="left"
                        )
                    if x != right_exception:
                        annihilation.record(
                            multiply(x, s) == ZERO, s=s, n=n, x=x, side="right"
                        )
        return Report([closed.done(), annihilation.done()])

    assert isinstance(base, BundleBase)
    case_1_1 = Sweep("case_1_1")
    case_1_2 = Sweep("case_1_2")
    case_1_3 = Sweep("case_1_3")
    for s in probes:
        kind, n0 = _classify_probe(base, s.v)
        if kind == "extends_into_e":
            for k in range(1, K):
                for x in base.enumerate_truncated(k, K):
                    case_1_1.record(base.member(k, multiply(s, x)), s=s, k=k, x=x)
        elif kind == "through_bundle":
            for k in range(1, K + 1):
                m = max(n0, k)
                for x in base.enumerate_truncated(m, m + K):
                    case_1_2.record(multiply(s, x) == ZERO, s=s, k=k, n0=n0, x=x)
        else:
            for x in base.enumerate_truncated(1, 1 + K):
                case_1_3.record(multiply(s, x) == ZERO, s=s, x=x)

    uu_closed = Sweep("UU_closed")
    for k in range(1, K):
        members = base.enumerate_truncated(k, K)
        for x in members:
            for y in members:
                uu_closed.record(base.member(k, multiply(x, y)), k=k, x=x, y=y)

    return Report(
        [case_1_1.done(), case_1_2.done(), case_1_3.done(), uu_closed.done()]
    )
