import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from msvc import (
    Instance,
    Ordering,
    ParseError,
    build_graph,
    parse_instance,
    parse_ordering,
    write_instance,
    write_ordering,
)

from conftest import p3


def test_write_instance_canonical():
    inst = Instance(p3(), w=2, k=1)
    assert write_instance(inst) == "p msvc 3 2 1 2\ne 1 2\ne 2 3\n"


def test_parse_instance_roundtrip():
    inst = Instance(p3(), w=2, k=1)
    text = write_instance(inst)
    back = parse_instance(text)
    assert back == inst
    assert write_instance(back) == text


def test_parse_instance_comments_and_blanks():
    text = "c hello\n\np msvc 2 1 1 3\nc mid\ne 1 2\n"
    inst = parse_instance(text)
    assert inst.graph.m == 1 and inst.k == 1 and inst.w == 3


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",  # edge before header
        "p msvc 2 1 1\n",  # short header
        "p other 2 1 1 3\ne 1 2\n",  # wrong format tag
        "p msvc 2 2 1 3\ne 1 2\n",  # m mismatch
        "p msvc 2 1 1 3\ne 1 3\n",  # endpoint out of range
        "p msvc 2 1 1 3\ne 1 1\n",  # self loop
        "p msvc 2 2 1 3\ne 1 2\ne 2 1\n",  # duplicate edge
        "p msvc 2 1 -1 3\ne 1 2\n",  # negative k
        "p msvc 2 1 1 3\nq 1 2\n",  # unknown record
        "p msvc 2 1 1 3\ne 1 2\np msvc 2 1 1 3\n",  # duplicate header
    ],
)
def test_parse_instance_rejects(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_ordering_roundtrip():
    ordering = Ordering.from_sequence([1, 0, 2])
    text = write_ordering(ordering)
    assert text == "2 1 3\n"
    assert parse_ordering(text, 3) == ordering


def test_parse_ordering_rejects_repeat():
    with pytest.raises(ParseError):
        parse_ordering("1 1 2\n", 3)


def test_parse_ordering_rejects_wrong_length():
    with pytest.raises(ParseError):
        parse_ordering("1 2\n", 3)


@st.composite
def instances(draw):
    n = draw(st.integers(min_value=0, max_value=9))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))) if possible else []
    g = build_graph(n, edges)
    k = draw(st.integers(min_value=0, max_value=n))
    w = draw(st.integers(min_value=0, max_value=50))
    return Instance(g, w=w, k=k)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_roundtrip_bit_exact(inst):
    text = write_instance(inst)
    assert parse_instance(text) == inst
    assert write_instance(parse_instance(text)) == text
