"""Finitely presented directed multigraphs with infinite parallel-edge bundles.

A graph here is a finite core (vertices plus edge *bundles*, where a bundle
stands for a family of parallel edges of finite or countably infinite
cardinality) together with an optional countably infinite family of extra
isolated vertices ``w[0], w[1], ...``.  This presentation class is exactly
what the topology decider and the base constructors need: it keeps every
question about path-set finiteness decidable while still realizing graphs
whose inverse semigroups carry non-discrete locally compact topologies.

Text format (line oriented, ``#`` starts a comment, blank lines ignored)::

    vertex  NAME
    bundle  NAME SRC DST CARD      # CARD is a positive integer or "inf"
    extra_isolated_vertices inf
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ParseError, UnknownVertex, ValidationError

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

#: Reserved spelling of the extra isolated vertices.  They are written
#: ``w[0], w[1], ...`` which cannot collide with core names (no brackets).
EXTRA_FAMILY = "w"

_EXTRA_RE = re.compile(r"w\[(\d+)\]\Z")


def extra_vertex(index: int) -> str:
    """Vertex id of the index-th extra isolated vertex."""
    if index < 0:
        raise ValueError("extra vertex index must be nonnegative")
    return f"{EXTRA_FAMILY}[{index}]"


def extra_vertex_index(name: str) -> Optional[int]:
    """Index k when ``name`` spells the extra vertex w[k], else None."""
    m = _EXTRA_RE.match(name)
    return int(m.group(1)) if m else None


@dataclass(frozen=True)
class Cardinality:
    """Size of a parallel-edge bundle: a nonnegative integer or countably
    infinite (encoded as ``size=None``).  Bundles themselves must be
    nonempty; the zero cardinality only occurs as an `edges_between`
    summary."""

    size: Optional[int] = None

    def __post_init__(self):
        if self.size is not None and self.size < 0:
            raise ValidationError(f"negative cardinality {self.size}")

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def __str__(self) -> str:
        return "inf" if self.size is None else str(self.size)


#: The countably infinite cardinality.
INFINITE = Cardinality(None)


@dataclass(frozen=True)
class Bundle:
    """A named family of parallel edges src -> dst.

    The individual edges are addressed as ``name[0], name[1], ...``; for a
    finite bundle of cardinality n the indices are 0..n-1.
    """

    name: str
    src: str
    dst: str
    card: Cardinality

    def __str__(self) -> str:
        return f"bundle {self.name} {self.src} {self.dst} {self.card}"


@dataclass(frozen=True, eq=False)
class Graph:
    """An immutable graph presentation.

    ``vertices`` and ``bundles`` keep declaration order, which downstream
    code uses for deterministic witness tie-breaking.  When
    ``extra_isolated_vertices`` is set the graph additionally contains the
    countably infinite family w[0], w[1], ... of vertices with no incident
    edges.
    """

    vertices: tuple[str, ...]
    bundles: tuple[Bundle, ...]
    extra_isolated_vertices: bool = False

    _by_name: dict = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "bundles", tuple(self.bundles))
        seen: set[str] = set()
        for v in self.vertices:
            if not NAME_RE.match(v):
                raise ValidationError(f"invalid vertex name {v!r}")
            if v in seen:
                raise ValidationError(f"duplicate id {v!r}")
            seen.add(v)
        by_name: dict[str, Bundle] = {}
        for b in self.bundles:
            if not NAME_RE.match(b.name):
                raise ValidationError(f"invalid bundle name {b.name!r}")
            if b.name in seen:
                raise ValidationError(f"duplicate id {b.name!r}")
            seen.add(b.name)
            for endpoint in (b.src, b.dst):
                if endpoint not in self.vertices:
                    raise ValidationError(
                        f"bundle {b.name!r} endpoint {endpoint!r} is not a declared vertex"
                    )
            if b.card.size == 0:
                raise ValidationError(f"bundle {b.name!r} has cardinality 0")
            by_name[b.name] = b
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(
            self,
            "_hash",
            hash((self.vertices, self.bundles, self.extra_isolated_vertices)),
        )

    # Structural equality; the identity shortcut keeps hot loops cheap.
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.bundles == other.bundles
            and self.extra_isolated_vertices == other.extra_isolated_vertices
        )

    def __hash__(self) -> int:
        return self._hash

    def bundle(self, name: str) -> Bundle:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown bundle {name!r}") from None

    def has_bundle(self, name: str) -> bool:
        return name in self._by_name

    def is_core_vertex(self, v: str) -> bool:
        return v in self.vertices

    def is_vertex(self, v: str) -> bool:
        """Core vertex, or extra vertex w[k] when the family is present."""
        if v in self.vertices:
            return True
        return self.extra_isolated_vertices and extra_vertex_index(v) is not None

    def check_core_vertex(self, v: str) -> None:
        if v not in self.vertices:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def out_bundles(self, v: str) -> tuple[Bundle, ...]:
        return tuple(b for b in self.bundles if b.src == v)

    def in_bundles(self, v: str) -> tuple[Bundle, ...]:
        return tuple(b for b in self.bundles if b.dst == v)

    def __str__(self) -> str:
        return format_graph(self)


def polycyclic_graph(loops: int | Cardinality) -> Graph:
    """The one-vertex graph whose inverse semigroup is the polycyclic
    monoid on ``loops`` generators: a single loop bundle ``a`` at vertex
    ``v``.  ``loops=1`` presents the bicyclic monoid with adjoined zero.
    """
    card = Cardinality(loops) if isinstance(loops, int) else loops
    return Graph(("v",), (Bundle("a", "v", "v", card),))


def edges_between(g: Graph, src: str, dst: str) -> Cardinality:
    """Total number of parallel edges src -> dst, summed over bundles.

    Countably infinite as soon as one contributing bundle is infinite.
    """
    g.check_core_vertex(src)
    g.check_core_vertex(dst)
    total = 0
    for b in g.bundles:
        if b.src == src and b.dst == dst:
            if not b.card.is_finite:
                return INFINITE
            total += b.card.size
    return Cardinality(total)


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format; see the module docstring.

    Raises ParseError (with line and column) on grammar violations and
    ValidationError on semantic ones (unknown endpoints, duplicate ids,
    zero cardinality).
    """
    vertices: list[str] = []
    bundles: list[Bundle] = []
    extra = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokenize_line(line, lineno)
        keyword = tokens[0].text
        if keyword == "vertex":
            _expect_arity(tokens, 2, lineno, "vertex NAME")
            vertices.append(_expect_name(tokens[1], lineno))
        elif keyword == "bundle":
            _expect_arity(tokens, 5, lineno, "bundle NAME SRC DST CARD")
            name = _expect_name(tokens[1], lineno)
            src = _expect_name(tokens[2], lineno)
            dst = _expect_name(tokens[3], lineno)
            card = _parse_card(tokens[4], lineno)
            bundles.append(Bundle(name, src, dst, card))
        elif keyword == "extra_isolated_vertices":
            _expect_arity(tokens, 2, lineno, "extra_isolated_vertices inf")
            if tokens[1].text != "inf":
                raise ParseError(
                    f"expected 'inf', got {tokens[1].text!r}", lineno, tokens[1].column
                )
            extra = True
        else:
            raise ParseError(
                f"unknown declaration {keyword!r}", lineno, tokens[0].column
            )

    return Graph(tuple(vertices), tuple(bundles), extra)


def format_graph(g: Graph) -> str:
    """Serialize a graph so that ``parse_graph(format_graph(g)) == g``."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [str(b) for b in g.bundles]
    if g.extra_isolated_vertices:
        lines.append("extra_isolated_vertices inf")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class _Token:
    text: str
    column: int


def _tokenize_line(line: str, lineno: int) -> list[_Token]:
    tokens = []
    col = 0
    for part in re.finditer(r"\S+", line):
        tokens.append(_Token(part.group(), part.start() + 1))
        col = part.start() + 1
    if not tokens:
        raise ParseError("empty declaration", lineno, col)
    return tokens


def _expect_arity(tokens: list[_Token], n: int, lineno: int, usage: str) -> None:
    if len(tokens) != n:
        bad = tokens[min(n, len(tokens) - 1)]
        raise ParseError(f"expected '{usage}'", lineno, bad.column)


def _expect_name(token: _Token, lineno: int) -> str:
    if not NAME_RE.match(token.text):
        raise ParseError(f"invalid name {token.text!r}", lineno, token.column)
    return token.text


def _parse_card(token: _Token, lineno: int) -> Cardinality:
    if token.text == "inf":
        return INFINITE
    if not token.text.isdigit():
        raise ParseError(
            f"expected cardinality (positive integer or 'inf'), got {token.text!r}",
            lineno,
            token.column,
        )
    return Cardinality(int(token.text))
