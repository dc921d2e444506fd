"""Hypothesis strategies for random graphs, paths, and elements."""

from hypothesis import assume, strategies as st

from graphinverse import Bundle, Cardinality, Graph, INFINITE, Path
from graphinverse.paths import Edge

_names = ["v0", "v1", "v2", "v3", "e", "f", "h"]


@st.composite
def graphs(draw, max_vertices=4, max_bundles=5, allow_extra=True):
    n = draw(st.integers(1, max_vertices))
    vertices = tuple(_names[:n])
    n_bundles = draw(st.integers(0, max_bundles))
    bundles = []
    for i in range(n_bundles):
        src = draw(st.sampled_from(vertices))
        dst = draw(st.sampled_from(vertices))
        card = draw(st.one_of(st.integers(1, 3).map(Cardinality), st.just(INFINITE)))
        bundles.append(Bundle(f"b{i}", src, dst, card))
    extra = draw(st.booleans()) if allow_extra else False
    return Graph(vertices, tuple(bundles), extra)


@st.composite
def paths_in(draw, g, max_length=4, max_index=3):
    """A random walk in g, possibly empty."""
    anchor = draw(st.sampled_from(g.vertices))
    edges = []
    at = anchor
    for _ in range(draw(st.integers(0, max_length))):
        options = [b for b in g.out_bundles(at)]
        if not options:
            break
        b = draw(st.sampled_from(options))
        top = max_index if not b.card.is_finite else min(max_index, b.card.size - 1)
        i = draw(st.integers(0, top))
        edges.append(Edge(b.name, i))
        at = b.dst
    return Path(g, anchor, tuple(edges))
