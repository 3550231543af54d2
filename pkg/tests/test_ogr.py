import pytest
from hypothesis import given

from conftest import oriented_graphs
from homhom.errors import FormatError
from homhom.ogr import format_ogr, parse_ogr, read_ogr, write_ogr


def test_parse_with_comments():
    g = parse_ogr("# header comment\nogr 3\n0 1  # arc\n\n1 2\n2 0\n")
    assert g.order == 3 and g.arcs == {(0, 1), (1, 2), (2, 0)}


@pytest.mark.parametrize(
    "text",
    [
        "",
        "graph 3\n",
        "ogr x\n",
        "ogr 3\n0 1 2\n",
        "ogr 3\n0 1\n0 1\n",
        "ogr 2\n0 0\n",
        "ogr 2\n0 1\n1 0\n",
        "ogr 2\n0 5\n",
    ],
)
def test_rejects_bad_input(text):
    with pytest.raises(FormatError):
        parse_ogr(text)


@given(oriented_graphs(max_order=6))
def test_roundtrip(g):
    assert parse_ogr(format_ogr(g, "a\nb")) == g


def test_file_roundtrip(tmp_path):
    g = parse_ogr("ogr 2\n1 0\n")
    write_ogr(g, tmp_path / "g.ogr")
    assert read_ogr(tmp_path / "g.ogr") == g
