"""Verification sweeps for the defining relations and the inverse
semigroup laws, run with the normal-form multiplication itself.

The four defining relations, for vertices a, b and edges e, f:

  (i)   a.b = a when a = b, otherwise 0
  (ii)  s(e).e = e.r(e) = e
  (iii) e^-1.s(e) = r(e).e^-1 = e^-1
  (iv)  e^-1.f = r(e) when e = f, otherwise 0

Infinite bundles are sampled up to a caller-chosen index bound.
"""

from __future__ import annotations

from .elements import ZERO, Element, enumerate_elements, multiply, path_element, vertex_element
from .graphs import Graph
from .paths import Path, edge_path
from .reports import Check, Report, Sweep


def _edge_elements(g: Graph, index_bound: int) -> list:
    """One (path, element, inverse-element) triple per concrete edge with
    index < index_bound (clamped into finite bundles)."""
    out = []
    for b in g.bundles:
        top = index_bound if not b.card.is_finite else min(index_bound, b.card.size)
        for i in range(top):
            p = edge_path(g, b.name, i)
            out.append((p, path_element(p), path_element(p).inverse()))
    return out


def verify_relations(g: Graph, index_bound: int = 5) -> Report:
    """Check relations (i)-(iv) over all core vertices and all edges with
    bundle index < index_bound; each relation becomes one named check and
    the first counterexample is reported."""
    if index_bound < 1:
        raise ValueError("index_bound must be >= 1")
    vertex_elems = {v: vertex_element(g, v) for v in g.vertices}
    edges = _edge_elements(g, index_bound)

    rel_i = Sweep("relation_i")
    for a, ea in vertex_elems.items():
        for b, eb in vertex_elems.items():
            expected = ea if a == b else ZERO
            got = multiply(ea, eb)
            rel_i.record(got == expected, a=a, b=b, got=got, expected=expected)

    rel_ii = Sweep("relation_ii")
    rel_iii = Sweep("relation_iii")
    for p, e, e_inv in edges:
        src = vertex_elems[p.source]
        rng = vertex_elems[p.range]
        rel_ii.record(multiply(src, e) == e and multiply(e, rng) == e, edge=p)
        rel_iii.record(
            multiply(e_inv, src) == e_inv and multiply(rng, e_inv) == e_inv, edge=p
        )

    rel_iv = Sweep("relation_iv")
    for p, _, p_inv in edges:
        for q, eq, _ in edges:
            expected = vertex_elems[p.range] if p == q else ZERO
            got = multiply(p_inv, eq)
            rel_iv.record(got == expected, e=p, f=q, got=got, expected=expected)

    return Report([rel_i.done(), rel_ii.done(), rel_iii.done(), rel_iv.done()])


def verify_laws(
    g: Graph,
    max_length: int = 2,
    max_index: int = 2,
    extra_count: int = 2,
) -> Report:
    """Exhaustive inverse-semigroup law suite over all elements with
    |u|, |v| <= max_length and edge indices < max_index:

    associativity, x.x^-1.x = x (and dually), (x.y)^-1 = y^-1.x^-1,
    zero absorption, and the characterization of idempotents as the
    u = v pairs.
    """
    elems = enumerate_elements(
        g, max_length, max_index - 1, extra_count=extra_count, include_zero=True
    )

    inverse_laws = Sweep("inverse_laws")
    idempotents = Sweep("idempotents")
    zero_absorbing = Sweep("zero_absorbing")
    for x in elems:
        xi = x.inverse()
        inverse_laws.record(
            multiply(multiply(x, xi), x) == x and multiply(multiply(xi, x), xi) == xi,
            x=x,
        )
        idempotents.record((multiply(x, x) == x) == x.is_idempotent, x=x)
        zero_absorbing.record(
            multiply(x, ZERO) == ZERO and multiply(ZERO, x) == ZERO, x=x
        )

    antihom = Sweep("antihomomorphism")
    products: dict[tuple[int, int], Element] = {}
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            xy = multiply(x, y)
            products[i, j] = xy
            antihom.record(
                xy.inverse() == multiply(y.inverse(), x.inverse()), x=x, y=y
            )

    assoc = Sweep("associativity")
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            xy = products[i, j]
            for k, z in enumerate(elems):
                assoc.record(
                    multiply(xy, z) == multiply(x, products[j, k]), x=x, y=y, z=z
                )

    return Report(
        [
            assoc.done(),
            inverse_laws.done(),
            antihom.done(),
            zero_absorbing.done(),
            idempotents.done(),
        ]
    )
