"""
graph6 编解码与边列表解析测试
"""

import networkx as nx
import pytest
from hypothesis import given, settings as hsettings

from core.exceptions import GraphFormatError
from modules.graph_core import (
    complete,
    cycle,
    empty,
    from_graph6,
    parse_edge_list,
    petersen,
    to_graph6,
)
from strategies import graphs


@pytest.mark.parametrize("text, graph", [
    ("?", empty(0)),
    ("@", empty(1)),
    ("A_", complete(2)),
    ("Bw", complete(3)),
    ("C~", complete(4)),
    ("Dhc", cycle(5)),
    ("IheA@GUAo", petersen()),
])
def test_known_encodings(text, graph):
    assert to_graph6(graph) == text
    assert from_graph6(text) == graph


def test_header_and_newline_are_accepted():
    assert from_graph6(">>graph6<<Bw\n") == complete(3)


def test_long_length_prefix():
    g = cycle(63)
    text = to_graph6(g)
    assert text.startswith("~??~")
    assert from_graph6(text) == g


@hsettings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_encoding_matches_networkx(g):
    expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip().decode("ascii")
    assert to_graph6(g) == expected


def test_invalid_byte_reports_offset():
    with pytest.raises(GraphFormatError) as info:
        from_graph6("D h")
    assert info.value.offset == 1
    assert info.value.details["offset"] == 1


def test_non_ascii_reports_offset():
    with pytest.raises(GraphFormatError) as info:
        from_graph6("B\u00e9")
    assert info.value.offset == 1
    assert "Non-ASCII" in info.value.message
    with pytest.raises(GraphFormatError) as info:
        from_graph6(">>graph6<<B\u00e9")
    assert info.value.offset == len(">>graph6<<") + 1


def test_truncated_body_reports_offset():
    with pytest.raises(GraphFormatError) as info:
        from_graph6("Dh")
    assert info.value.offset == 2


def test_trailing_garbage_rejected():
    with pytest.raises(GraphFormatError) as info:
        from_graph6("Bw?")
    assert info.value.offset == 2


def test_nonzero_padding_rejected():
    # n=2 只有 1 个邻接位，其余 5 位必须为 0
    with pytest.raises(GraphFormatError):
        from_graph6("A`")


def test_empty_string_rejected():
    with pytest.raises(GraphFormatError):
        from_graph6("")


def test_edge_list_parsing():
    g = parse_edge_list("# 五圈\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert g == cycle(5)
    assert parse_edge_list("n 4\n0 1\n").n == 4


def test_edge_list_errors_carry_line_number():
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list("0 1\n1 x\n")
    assert info.value.line_number == 2
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list("0 1\n\n2 2\n")
    assert info.value.line_number == 3
