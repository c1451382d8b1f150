import pytest
from hypothesis import given, strategies as st

from pathalg import (
    CompositionError,
    Path,
    PathAlgError,
    Quiver,
    compose,
    divides,
    divides_left,
    divides_right,
    factorizations,
    is_reduced,
)
from tests.conftest import words


def test_compose_free_concatenation(two_loop):
    w = words(two_loop)
    assert compose(w("x"), w("y")) == w("xy")


def test_compose_vertex_identity(two_loop):
    w = words(two_loop)
    e = two_loop.vertex_path("e")
    assert compose(e, w("x")) == w("x")
    assert compose(w("x"), e) == w("x")


def test_compose_endpoint_mismatch():
    q = Quiver.build(["u", "v"], [("a", "u", "v")])
    a = q.path("a")
    with pytest.raises(CompositionError):
        compose(a, a)


def test_quiver_validation():
    with pytest.raises(PathAlgError):
        Quiver.build(["u", "u"], [])
    with pytest.raises(PathAlgError):
        Quiver.build(["u"], [("a", "u", "w")])
    with pytest.raises(PathAlgError):
        Quiver.build(["u"], [("u", "u", "u")])


def test_factorizations_unique_occurrence(two_loop):
    w = words(two_loop)
    assert factorizations(w("xy"), w("xxyy")) == [(w("x"), w("y"))]


def test_factorizations_prefix_case(two_loop):
    w = words(two_loop)
    e = two_loop.vertex_path("e")
    assert factorizations(w("xxx"), w("xxxyyy")) == [(e, w("yyy"))]
    assert divides_left(w("xxx"), w("xxxyyy"))
    assert not divides_right(w("xxx"), w("xxxyyy"))


def test_factorizations_all_shifts(two_loop):
    w = words(two_loop)
    e = two_loop.vertex_path("e")
    assert factorizations(w("x"), w("xxx")) == [(e, w("xx")), (w("x"), w("x")), (w("xx"), e)]


def test_is_reduced(two_loop):
    w = words(two_loop)
    assert is_reduced([w("xxyyy"), w("xxx")])
    assert not is_reduced([w("xx"), w("xxx")])
    assert is_reduced([])
    with pytest.raises(PathAlgError):
        is_reduced([w("x")])


def test_left_right_divisibility_imply_divides(two_loop):
    w = words(two_loop)
    assert divides_left(w("xy"), w("xyx")) and divides(w("xy"), w("xyx"))
    assert divides_right(w("yx"), w("xyx")) and divides(w("yx"), w("xyx"))


arrow_words = st.lists(st.sampled_from("xy"), min_size=0, max_size=6)


@given(arrow_words, arrow_words, arrow_words)
def test_compose_associative(a, b, c):
    q = Quiver.build(["e"], [("x", "e", "e"), ("y", "e", "e")])
    w = words(q)
    pa = w(a) if a else q.vertex_path("e")
    pb = w(b) if b else q.vertex_path("e")
    pc = w(c) if c else q.vertex_path("e")
    assert (pa * pb) * pc == pa * (pb * pc)
    assert (pa * pb).length == pa.length + pb.length


@given(arrow_words.filter(bool), arrow_words.filter(bool))
def test_factorization_count_bound(a, b):
    q = Quiver.build(["e"], [("x", "e", "e"), ("y", "e", "e")])
    w = words(q)
    p, big = w(a), w(b)
    occ = factorizations(p, big)
    assert len(occ) <= max(0, big.length - p.length + 1)
    assert bool(occ) == divides(p, big)
    for u, v in occ:
        assert (u * p) * v == big


def test_multi_vertex_paths():
    q = Quiver.build(["u", "v", "w"], [("a", "u", "v"), ("b", "v", "w"), ("c", "v", "v")])
    ab = q.path("a*b")
    assert ab.source == "u" and ab.target == "w" and ab.length == 2
    acb = q.path("a*c*b")
    assert factorizations(q.path("c"), acb) == [(q.path("a"), q.path("b"))]
    # vertex path occurrences
    vpath = q.vertex_path("v")
    assert len(factorizations(vpath, acb)) == 2
