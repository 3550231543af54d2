import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homhom.census import enumerate_tournaments
from homhom.configurations import ConfigName, circular_tournament, cycle_c3, get_config, transitive_tournament
from homhom.errors import DegeneratePlacement, FormatError, NotATournament, NotEncodable, NotLocalOrder
from homhom.graph import blowup, empty_graph, is_isomorphic, k_copies, new_graph
from homhom.localorder import (
    all_words,
    decode,
    encode,
    format_sigma_word,
    graph_to_sigma_word,
    is_local_order,
    is_local_order_by_forbidden,
    parse_sigma_word,
    sigma_embedding_vertex_map,
    sigma_subword_embeddings,
    sigma_word_to_graph,
    subword_embeddings,
    tournament_to_word,
    word_to_tournament,
    word_to_tournament_geometric,
)

words = st.text(alphabet="01", min_size=1, max_size=8)
sigma_words = st.lists(st.tuples(st.sampled_from((0, 1)), st.sampled_from((1, 2))), min_size=1, max_size=5)


def shift(arcs):
    return {(u + 1, v + 1) for u, v in arcs}


def test_figure_word():
    t = word_to_tournament("0101")
    assert shift(t.arcs) == {(2, 1), (1, 3), (4, 1), (3, 2), (2, 4), (4, 3)}
    assert is_isomorphic(t, word_to_tournament("1011"))


def test_small_words():
    assert word_to_tournament("0").order == 1
    assert word_to_tournament("000") == transitive_tournament(3)
    assert word_to_tournament("01").arcs == {(1, 0)}


def test_bad_words():
    for bad in ("", "012", "ab"):
        with pytest.raises(FormatError):
            word_to_tournament(bad)


@pytest.mark.parametrize("side", [1, -1])
def test_geometric_oracle_all_words(side):
    for n in range(1, 9):
        for w in all_words(n):
            assert word_to_tournament_geometric(w, side=side) == word_to_tournament(w)


@settings(max_examples=50, deadline=None)
@given(words, st.data())
def test_geometric_mixed_sides_and_epsilons(w, data):
    sides = data.draw(st.lists(st.sampled_from((1, -1)), min_size=len(w), max_size=len(w)))
    eps = Fraction(1, data.draw(st.integers(100, 10**6)))
    assert word_to_tournament_geometric(w, epsilon=eps, side=sides) == word_to_tournament(w)


def test_geometric_degenerate():
    with pytest.raises(DegeneratePlacement):
        word_to_tournament_geometric("01", epsilon=0)
    with pytest.raises(DegeneratePlacement):
        word_to_tournament_geometric("01", side=[1])
    # epsilon large enough to push a flipped point onto another point's antipode
    with pytest.raises(DegeneratePlacement):
        word_to_tournament_geometric("01", epsilon=30, side=-1)


@given(words)
def test_complement_gives_identical_tournament(w):
    flipped = "".join("1" if c == "0" else "0" for c in w)
    assert word_to_tournament(flipped) == word_to_tournament(w)


def test_functoriality():
    for n2 in range(1, 7):
        for w2 in all_words(n2):
            t2 = word_to_tournament(w2)
            for n1 in range(1, n2 + 1):
                for w1 in all_words(n1):
                    t1 = word_to_tournament(w1)
                    for pos in subword_embeddings(w1, w2):
                        assert t2.induced_subgraph(pos) == t1


def test_tournament_to_word():
    assert tournament_to_word(cycle_c3()) == "010"
    # lex-least among the words for this tournament; "0101" and "1011" also encode it
    assert tournament_to_word(word_to_tournament("0101")) == "0010"
    with pytest.raises(NotLocalOrder):
        tournament_to_word(get_config(ConfigName.D))
    with pytest.raises(NotATournament):
        tournament_to_word(get_config(ConfigName.P2))


def test_local_order_examples():
    c3, dstar, s7 = cycle_c3(), get_config(ConfigName.Dstar), circular_tournament(3)
    for t, expected in [(c3, True), (dstar, False), (s7, True)]:
        assert is_local_order(t) is expected
        assert is_local_order_by_forbidden(t) is expected
    with pytest.raises(NotATournament):
        is_local_order(empty_graph(2))


def test_local_order_characterisations_agree_up_to_six():
    seen = 0
    for n in range(1, 7):
        for g in enumerate_tournaments(n):
            seen += 1
            lo = is_local_order(g)
            assert lo == is_local_order_by_forbidden(g)
            if lo:
                assert is_isomorphic(word_to_tournament(tournament_to_word(g)), g)
    assert seen == 1 + 1 + 2 + 4 + 12 + 56


def test_sigma_word_examples():
    fig = sigma_word_to_graph([(1, 1), (0, 1), (1, 2), (1, 1)])
    assert fig == blowup(word_to_tournament("1011"), (1, 1, 2, 1))
    assert sigma_word_to_graph([(0, 2)]) == empty_graph(2)
    assert sigma_word_to_graph([(0, 1), (1, 1), (1, 1)]) == word_to_tournament("011")


def test_sigma_figure_graph():
    # five points p1..p4 plus the twin of p4; indices 0..4 with the twin last
    arcs = [(0, 2), (2, 1), (1, 3), (3, 0), (1, 4), (4, 0), (3, 2), (4, 2), (1, 0)]
    fig = new_graph(5, arcs)
    assert is_isomorphic(fig, sigma_word_to_graph([(1, 1), (0, 1), (1, 2), (1, 1)]))
    w = graph_to_sigma_word(fig)
    assert w <= ((1, 1), (0, 1), (1, 2), (1, 1))
    assert is_isomorphic(sigma_word_to_graph(w), fig)


def test_sigma_not_encodable():
    with pytest.raises(NotEncodable):
        graph_to_sigma_word(k_copies(cycle_c3(), 2))
    with pytest.raises(NotEncodable):
        graph_to_sigma_word(blowup(cycle_c3(), (3, 1, 1)))
    with pytest.raises(NotEncodable):
        graph_to_sigma_word(get_config(ConfigName.D))


@settings(max_examples=40, deadline=None)
@given(sigma_words)
def test_sigma_roundtrip(w):
    g = sigma_word_to_graph(w)
    least = graph_to_sigma_word(g)
    assert least <= tuple(w)
    assert is_isomorphic(sigma_word_to_graph(least), g)


def test_sigma_functoriality():
    letters = list(itertools.product((0, 1), (1, 2)))
    for n2 in range(1, 4):
        for w2 in itertools.product(letters, repeat=n2):
            g2 = sigma_word_to_graph(w2)
            for n1 in range(1, n2 + 1):
                for w1 in itertools.product(letters, repeat=n1):
                    g1 = sigma_word_to_graph(w1)
                    for pos in sigma_subword_embeddings(w1, w2):
                        vmap = sigma_embedding_vertex_map(w1, w2, pos)
                        assert g2.induced_subgraph(vmap) == g1


def test_text_codec():
    assert parse_sigma_word("1:1 0:1 1:2") == ((1, 1), (0, 1), (1, 2))
    assert format_sigma_word(((0, 2), (1, 1))) == "0:2 1:1"
    for bad in ("1:3", "2:1", "1-1", ""):
        with pytest.raises(FormatError):
            parse_sigma_word(bad)
    assert is_isomorphic(decode("010"), cycle_c3())
    assert encode(cycle_c3()) == "010"
    g = blowup(cycle_c3(), (2, 1, 1))
    assert is_isomorphic(decode(encode(g)), g)
