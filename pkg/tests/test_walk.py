import pytest
from hypothesis import given

from tests.strategies import walks
from walk_partitions.walk_partitions.walk import ZERO, MixedHeadsException, Walk, \
    ZeroWalkException, classify, kleene_closure, nest, nest_all, nestable

W = Walk.parse


@pytest.mark.parametrize("text, vertices", [
    ("12321", ("1", "2", "3", "2", "1")),
    ("1,2,3,2,1", ("1", "2", "3", "2", "1")),
    ("a, b ,a", ("a", "b", "a")),
    ("(7)", ("7",)),
    ("10,11", ("10", "11")),
    ("0", ()),
])
def test_parse(text, vertices):
    assert W(text).vertices == vertices


@pytest.mark.parametrize("text", ["1,,2", "()", "(1,2)", ","])
def test_parse_rejects_empty_labels(text):
    with pytest.raises(ValueError):
        W(text)


def test_str_forms():
    assert str(W("12321")) == "1,2,3,2,1"
    assert str(Walk.trivial("1")) == "(1)"
    assert str(ZERO) == "0"


@given(walks())
def test_text_form_reparses(w):
    assert W(str(w)) == w


def test_basic_properties():
    w = W("1231")
    assert (w.head, w.tail, w.length, w.is_closed) == ("1", "1", 3, True)
    assert list(w.edges()) == [("1", "2"), ("2", "3"), ("3", "1")]
    assert Walk.trivial("1").length == 0


def test_zero_walk_has_no_head():
    with pytest.raises(ZeroWalkException):
        ZERO.head
    with pytest.raises(ZeroWalkException):
        ZERO.length


def test_concat():
    assert W("12").concat(W("232")) == W("1232")
    with pytest.raises(ValueError):
        W("12").concat(W("13"))


@pytest.mark.parametrize("w1, w2, expected", [
    ("11", "131", "1131"),
    ("131", "11", "1311"),
    ("12", "242", "1242"),
    ("1242", "11", "11242"),
    ("242", "11", "0"),
    ("1231", "343", "123431"),
    ("123", "343", "12343"),
])
def test_nest(w1, w2, expected):
    assert nest(W(w1), W(w2)) == W(expected)


def test_nest_is_not_associative():
    assert nest(nest(W("12"), W("242")), W("11")) == W("11242")
    assert nest(W("12"), nest(W("242"), W("11"))) == ZERO


def test_nest_requires_disjoint_prefix():
    # 1 is visited before 2 and belongs to 212
    assert not nestable(W("12"), W("212"))
    assert nest(W("12"), W("212")) == ZERO
    assert not nestable(W("12"), W("23"))


def test_nest_absorbs_zero():
    assert nest(ZERO, W("11")) == ZERO
    assert nest(W("11"), ZERO) == ZERO


@given(walks())
def test_trivial_walk_is_neutral(w):
    for v in set(w.vertices):
        assert nest(w, Walk.trivial(v)) == w
    if w.is_closed:
        assert nest(Walk.trivial(w.head), w) == w


def test_nest_all():
    assert nest_all(W("12"), W("242"), W("11")) == W("11242")
    assert nest_all(W("1")) == W("1")
    with pytest.raises(ValueError):
        nest_all()


@pytest.mark.parametrize("text, flags", [
    ("1231", (True, True, True, False)),
    ("12321", (True, True, False, False)),
    ("1211", (True, False, False, False)),
    ("(1)", (True, False, False, True)),
    ("123", (False, False, False, True)),
    ("1223", (False, False, False, False)),
])
def test_classify(text, flags):
    assert tuple(classify(W(text))) == flags


def test_kleene_closure_of_one_loop():
    assert kleene_closure([W("11")], 2) == [W("1"), W("11"), W("111")]


def test_kleene_closure_mixes_cycles():
    closure = kleene_closure([W("11"), W("121")], 3)
    assert closure == [W("1"), W("11"), W("111"), W("1111"), W("1121"),
                       W("121"), W("1211")]


def test_kleene_closure_of_nothing():
    assert kleene_closure([], 5, vertex="1") == [W("1")]


def test_kleene_closure_needs_common_head():
    with pytest.raises(MixedHeadsException):
        kleene_closure([W("11"), W("22")], 3)
    with pytest.raises(ValueError):
        kleene_closure([W("12")], 3)
