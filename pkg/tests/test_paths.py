import itertools

import pytest
from hypothesis import given

import strategies
from catalogue import badpair, extra_family, p2
from graphinverse import (
    CompositionError,
    Path,
    ValidationError,
    edge_path,
    empty_path,
    enumerate_paths,
    parse_path,
)
from graphinverse.paths import Edge


@pytest.fixture
def g():
    return p2()


class TestEndpoints:
    def test_vertex_path(self, g):
        p = empty_path(g, "v")
        assert (p.source, p.range, len(p)) == ("v", "v", 0)

    def test_two_step_loop(self, g):
        p = parse_path("a[0].a[1]", g)
        assert (p.source, p.range, len(p)) == ("v", "v", 2)

    def test_infinite_bundle_edge(self):
        p = parse_path("b[3]", badpair())
        assert (p.source, p.range, len(p)) == ("e", "f", 1)


class TestConcat:
    def test_left_identity(self, g):
        a0 = parse_path("a[0]", g)
        assert empty_path(g, "v").concat(a0) == a0
        assert a0.concat(empty_path(g, "v")) == a0

    def test_two_edges(self, g):
        assert parse_path("a[0]", g).concat(parse_path("a[1]", g)) == parse_path(
            "a[0].a[1]", g
        )

    def test_mismatch(self):
        g = badpair()
        with pytest.raises(CompositionError):
            parse_path("b[0]", g).concat(parse_path("b[0]", g))

    def test_length_additive(self, g):
        p, q = parse_path("a[0]", g), parse_path("a[1].a[0]", g)
        assert len(p.concat(q)) == len(p) + len(q)


class TestStripPrefix:
    def test_proper_prefix(self, g):
        w = parse_path("a[0].a[1]", g).strip_prefix(parse_path("a[0]", g))
        assert w == parse_path("a[1]", g)

    def test_whole_path(self, g):
        p = parse_path("a[0].a[1]", g)
        assert p.strip_prefix(p) == empty_path(g, "v")

    def test_not_a_prefix(self, g):
        assert parse_path("a[0].a[1]", g).strip_prefix(parse_path("a[1]", g)) is None

    def test_roundtrip_exhaustive(self, g):
        paths = enumerate_paths(g, 3, 1)
        for p, q in itertools.product(paths, paths):
            w = q.strip_prefix(p)
            if w is not None:
                assert p.concat(w) == q

    def test_trichotomy(self, g):
        paths = enumerate_paths(g, 3, 1)
        for p, q in itertools.product(paths, paths):
            forward = q.strip_prefix(p) is not None
            backward = p.strip_prefix(q) is not None
            if p == q:
                assert forward and backward
            else:
                assert not (forward and backward)


class TestIsCycle:
    def test_loop_edge(self, g):
        assert parse_path("a[0]", g).is_cycle

    def test_crossing_edge(self):
        assert not parse_path("b[0]", badpair()).is_cycle

    def test_empty_path_degenerate(self, g):
        assert empty_path(g, "v").is_cycle


class TestValidation:
    def test_unknown_anchor(self, g):
        with pytest.raises(ValidationError):
            Path(g, "nope")

    def test_non_composing_edges(self):
        g = badpair()
        with pytest.raises(ValidationError):
            Path(g, "e", (Edge("b", 0), Edge("b", 0)))

    def test_index_out_of_finite_bundle(self, g):
        with pytest.raises(ValidationError):
            edge_path(g, "a", 2)

    def test_extra_vertex_path(self):
        g = extra_family()
        p = parse_path("@w[3]", g)
        assert (p.source, p.range, len(p)) == ("w[3]", "w[3]", 0)

    def test_extra_vertex_without_flag(self, g):
        with pytest.raises(ValidationError):
            parse_path("@w[3]", g)

    def test_extra_vertices_have_no_edges(self):
        g = extra_family()
        with pytest.raises(ValidationError):
            Path(g, "w[0]", (Edge("a", 0),))


class TestText:
    @pytest.mark.parametrize("text", ["@v", "a[0]", "a[0].a[1].a[0]"])
    def test_roundtrip(self, g, text):
        assert str(parse_path(text, g)) == text

    def test_garbage(self, g):
        from graphinverse import ParseError

        with pytest.raises(ParseError):
            parse_path("a[0]..a[1]", g)


@given(strategies.graphs(allow_extra=False).flatmap(
    lambda g: strategies.paths_in(g).flatmap(
        lambda p: strategies.paths_in(g).map(lambda q: (g, p, q))
    )
))
def test_strip_prefix_concat_roundtrip_random(gpq):
    _, p, q = gpq
    if p.range == q.source:
        joined = p.concat(q)
        assert joined.strip_prefix(p) == q
        assert len(joined) == len(p) + len(q)


@given(strategies.graphs(allow_extra=False).flatmap(
    lambda g: strategies.paths_in(g, max_length=2).flatmap(
        lambda p: strategies.paths_in(g, max_length=2).flatmap(
            lambda q: strategies.paths_in(g, max_length=2).map(
                lambda r: (g, p, q, r)
            )
        )
    )
))
def test_concat_associative_random(gpqr):
    _, p, q, r = gpqr
    if p.range == q.source and q.range == r.source:
        assert p.concat(q).concat(r) == p.concat(q.concat(r))
