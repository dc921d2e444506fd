"""Shared graph catalogue for the test suite.

Each entry is small enough for exhaustive sweeps but exercises a distinct
configuration of the discreteness criterion.
"""

from graphinverse import Graph, parse_graph, polycyclic_graph


def p1() -> Graph:
    """Bicyclic monoid with zero: one vertex, one loop."""
    return polycyclic_graph(1)


def p2() -> Graph:
    """Polycyclic monoid on two generators."""
    return polycyclic_graph(2)


def pomega() -> Graph:
    """Infinitely many loops at one vertex."""
    return parse_graph("vertex v\nbundle a v v inf\n")


def badpair() -> Graph:
    """Two vertices joined by an infinite bundle: the minimal graph whose
    semigroup carries a non-discrete locally compact topology."""
    return parse_graph("vertex e\nvertex f\nbundle b e f inf\n")


def chain3() -> Graph:
    """Three vertices in a line, single finite bundles."""
    return parse_graph(
        "vertex e\nvertex f\nvertex h\nbundle x e f 1\nbundle y f h 1\n"
    )


def loop_plus_inf() -> Graph:
    """A loop feeding an infinite bundle: the loop pumps infinitely many
    paths into e, so the infinite bundle does not make a bad pair."""
    return parse_graph("vertex e\nvertex f\nbundle a e e 1\nbundle b e f inf\n")


def extra_family() -> Graph:
    """A loop core plus the infinite isolated-vertex family."""
    return parse_graph("vertex v\nbundle a v v 1\nextra_isolated_vertices inf\n")


def deep_badpair() -> Graph:
    """A bad pair fed by a two-edge bundle and drained by a tail, so the
    path list into e has three members and continuity probes can pass
    through the infinite bundle."""
    return parse_graph(
        "vertex c0\nvertex e\nvertex f\nvertex h\n"
        "bundle g0 c0 e 2\nbundle b e f inf\nbundle t f h 1\n"
    )


CATALOGUE = {
    "p1": p1,
    "p2": p2,
    "pomega": pomega,
    "badpair": badpair,
    "chain3": chain3,
    "loop_plus_inf": loop_plus_inf,
    "extra_family": extra_family,
}

#: The five graphs the relation sweep runs on.
RELATION_CATALOGUE = ("p1", "p2", "pomega", "badpair", "chain3")
