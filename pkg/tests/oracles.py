"""Independent oracles the library is tested against.

`rewrite_product` multiplies elements by naive word rewriting with the
four defining relations, never touching the normal-form case split.
`brute_force_paths_into` enumerates paths by plain forward walks, never
touching the reachability analysis.  Both deliberately reimplement what
the library computes smarter.
"""

from graphinverse import Element, Graph, Path, ZERO
from graphinverse.paths import Edge

# Letters: ("v", name) a vertex, ("e", bundle, i) an edge, ("i", bundle, i)
# a formal edge inverse.


def _src(g: Graph, letter) -> str:
    kind = letter[0]
    if kind == "v":
        return letter[1]
    b = g.bundle(letter[1])
    return b.src if kind == "e" else b.dst


def _rng(g: Graph, letter) -> str:
    kind = letter[0]
    if kind == "v":
        return letter[1]
    b = g.bundle(letter[1])
    return b.dst if kind == "e" else b.src


def element_to_word(x: Element) -> list:
    """Letters of u * v^-1: the edges of u, then the edges of v reversed
    and inverted; an empty path contributes its vertex letter."""
    assert not x.is_zero
    word = []
    if x.u.edges:
        word += [("e", e.bundle, e.index) for e in x.u.edges]
    else:
        word.append(("v", x.u.anchor))
    if x.v.edges:
        word += [("i", e.bundle, e.index) for e in reversed(x.v.edges)]
    else:
        word.append(("v", x.v.anchor))
    return word


def _reduce_once(g: Graph, word):
    """Apply the leftmost applicable relation; None when irreducible,
    "zero" when the word collapses."""
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        # mismatched endpoints force zero: x.y = x.(r(x).s(y)).y = x.0.y
        if _rng(g, x) != _src(g, y):
            return "zero"
        if x[0] == "v" and y[0] == "v":
            return word[:i] + [x] + word[i + 2:]          # (i)  a.a = a
        if x[0] == "v" and y[0] != "v":
            return word[:i] + [y] + word[i + 2:]          # (ii)/(iii) left unit
        if x[0] != "v" and y[0] == "v":
            return word[:i] + [x] + word[i + 2:]          # (ii)/(iii) right unit
        if x[0] == "i" and y[0] == "e":
            if x[1:] == y[1:]:
                # (iv) e^-1.e = r(e), the edge's destination vertex
                return word[:i] + [("v", _src(g, x))] + word[i + 2:]
            return "zero"                                  # (iv) e^-1.f = 0
    return None


def reduce_word(g: Graph, word) -> Element:
    """Rewrite to the irreducible form and read off the element."""
    word = list(word)
    while True:
        step = _reduce_once(g, word)
        if step == "zero":
            return ZERO
        if step is None:
            break
        word = step
    if len(word) == 1 and word[0][0] == "v":
        p = Path(g, word[0][1])
        return Element(p, p)
    # irreducible nonzero words look like e1 ... ek f1^-1 ... fm^-1
    split = len(word)
    for i, letter in enumerate(word):
        assert letter[0] in ("e", "i")
        if letter[0] == "i":
            split = i
            break
    ups = word[:split]
    downs = word[split:]
    assert all(l[0] == "e" for l in ups) and all(l[0] == "i" for l in downs)
    if ups:
        u = Path(g, g.bundle(ups[0][1]).src, tuple(Edge(b, i) for _, b, i in ups))
    else:
        u = Path(g, _src(g, downs[0]))
    if downs:
        rev = list(reversed(downs))
        v = Path(g, g.bundle(rev[0][1]).src, tuple(Edge(b, i) for _, b, i in rev))
    else:
        v = Path(g, u.range)
    return Element(u, v)


def rewrite_product(x: Element, y: Element) -> Element:
    """Product of x and y computed purely by relation rewriting."""
    if x.is_zero or y.is_zero:
        return ZERO
    g = x.graph
    return reduce_word(g, element_to_word(x) + element_to_word(y))


def word_length(x: Element) -> int:
    return len(element_to_word(x))


def brute_force_paths_into(g: Graph, vertex: str, max_len: int, max_idx: int):
    """Every path of length <= max_len with edge indices <= max_idx that
    ends at the given vertex, found by forward walks from each vertex."""
    found = []
    stack = [(v, ()) for v in reversed(g.vertices)]
    while stack:
        anchor, edges = stack.pop()
        at = anchor
        for bname, _ in edges:
            at = g.bundle(bname).dst
        if at == vertex:
            found.append(Path(g, anchor, tuple(Edge(b, i) for b, i in edges)))
        if len(edges) == max_len:
            continue
        for b in g.bundles:
            if b.src != at:
                continue
            top = max_idx if not b.card.is_finite else min(max_idx, b.card.size - 1)
            for i in range(top + 1):
                stack.append((anchor, edges + ((b.name, i),)))
    return found
