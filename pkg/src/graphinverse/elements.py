"""Elements of the graph inverse semigroup over a graph.

Every nonzero element has a unique normal form u * v^-1 where u and v are
paths with the same range; the vertex idempotents are the pairs with
u = v = @vertex and the zero element absorbs everything.  Equality is
syntactic equality of normal forms, which makes the word problem a tuple
comparison.

Element grammar: ``0`` | PATH | PATH^-1 | PATH * PATH^-1 (whitespace
around ``*`` does not matter).  A bare path p abbreviates p * @r(p)^-1
and p^-1 abbreviates @r(p) * p^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GraphMismatch, ParseError, ValidationError
from .graphs import Graph
from .paths import Path, enumerate_paths, parse_path


@dataclass(frozen=True, eq=False)
class Element:
    """Zero (both components None) or the normal form u * v^-1."""

    u: Optional[Path]
    v: Optional[Path]

    def __post_init__(self):
        if (self.u is None) != (self.v is None):
            raise ValidationError("zero element has no path components")
        if self.u is not None:
            if self.u.graph is not self.v.graph and self.u.graph != self.v.graph:
                raise GraphMismatch("u and v live over different graphs")
            if self.u.range != self.v.range:
                raise ValidationError(
                    f"range mismatch: r({self.u}) = {self.u.range!r} "
                    f"but r({self.v}) = {self.v.range!r}"
                )
        object.__setattr__(self, "_hash", hash((self.u, self.v)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_zero(self) -> bool:
        return self.u is None

    @property
    def graph(self) -> Optional[Graph]:
        """The underlying graph; None for the (graph-agnostic) zero."""
        return None if self.u is None else self.u.graph

    @property
    def is_idempotent(self) -> bool:
        """Zero and the elements u * u^-1 are exactly the idempotents."""
        return self.u is None or self.u == self.v

    def inverse(self) -> "Element":
        """(u * v^-1)^-1 = v * u^-1; zero is self-inverse."""
        if self.u is None:
            return self
        return Element(self.v, self.u)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __str__(self) -> str:
        if self.u is None:
            return "0"
        return f"{self.u} * {self.v}^-1"

    def __repr__(self) -> str:
        return f"Element({self})"


#: The absorbing zero.  It belongs to every graph inverse semigroup, so it
#: carries no graph of its own.
ZERO = Element(None, None)


def vertex_element(g: Graph, vertex: str) -> Element:
    """The idempotent @vertex * @vertex^-1."""
    p = Path(g, vertex)
    return Element(p, p)


def path_element(p: Path) -> Element:
    """The element p * @r(p)^-1 represented by a bare path."""
    return Element(p, Path(p.graph, p.range))


def multiply(x: Element, y: Element) -> Element:
    """Product in the semigroup.

    With x = u1 * v1^-1 and y = u2 * v2^-1 the product is
    u1.w * v2^-1 when u2 = v1.w, u1 * (v2.w)^-1 when v1 = u2.w,
    and zero when neither path extends the other (or either factor
    is zero).
    """
    if x.u is None or y.u is None:
        return ZERO
    if x.u.graph is not y.u.graph and x.u.graph != y.u.graph:
        raise GraphMismatch("cannot multiply elements over different graphs")
    v1, u2 = x.v, y.u
    w = u2.strip_prefix(v1)
    if w is not None:
        return Element(x.u.concat(w), y.v)
    w = v1.strip_prefix(u2)
    if w is not None:
        return Element(x.u, y.v.concat(w))
    return ZERO


def invert(x: Element) -> Element:
    return x.inverse()


def parse_element(text: str, g: Graph) -> Element:
    """Parse the element grammar; see the module docstring."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty element")
    if stripped == "0":
        return ZERO
    parts = [part.strip() for part in stripped.split("*")]
    if len(parts) == 1:
        part = parts[0]
        if part.endswith("^-1"):
            p = parse_path(part[: -len("^-1")], g)
            return Element(Path(g, p.range), p)
        p = parse_path(part, g)
        return Element(p, Path(g, p.range))
    if len(parts) == 2:
        left, right = parts
        if not right.endswith("^-1"):
            raise ParseError(f"expected PATH^-1 after '*', got {right!r}")
        u = parse_path(left, g)
        v = parse_path(right[: -len("^-1")], g)
        return Element(u, v)
    raise ParseError(f"too many '*' in element {text!r}")


def enumerate_elements(
    g: Graph,
    max_length: int,
    max_index: int,
    extra_count: int = 0,
    include_zero: bool = True,
) -> list[Element]:
    """All elements u * v^-1 with |u|, |v| <= max_length and edge indices
    <= max_index, grouped by the shared range, plus zero when asked."""
    paths = enumerate_paths(g, max_length, max_index, extra_count)
    by_range: dict[str, list[Path]] = {}
    for p in paths:
        by_range.setdefault(p.range, []).append(p)
    out: list[Element] = [ZERO] if include_zero else []
    for group in by_range.values():
        for u in group:
            for v in group:
                out.append(Element(u, v))
    return out
