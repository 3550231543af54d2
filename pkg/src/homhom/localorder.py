"""Word codec for finite local orders and their 2-fold blow-ups.

A binary word ``w`` encodes the tournament ``T_w`` on letter positions
``0..len(w)-1``: for positions ``i < j`` the arc is ``i -> j`` when the
letters agree and ``j -> i`` when they differ. This combinatorial rule is
checked against :func:`word_to_tournament_geometric`, which places points on
a circle and reads arcs off the counter-clockwise angle, using exact
rational arithmetic.

Sigma words ``(a_1, m_1) ... (a_n, m_n)`` with ``m_i`` in ``{1, 2}`` encode
``blowup(T_{a_1...a_n}, (m_1, ..., m_n))``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .configurations import ConfigName, get_config
from .errors import DegeneratePlacement, FormatError, NotATournament, NotEncodable, NotLocalOrder, NotReducible
from .graph import (
    OrientedGraph,
    blowup,
    contains_configuration,
    is_isomorphic,
    is_tournament,
    is_transitive_relation,
    isomorphisms,
    iter_bits,
    quotient_by_nonarc,
)

SigmaWord = tuple[tuple[int, int], ...]

DEFAULT_EPSILON = Fraction(1, 1000)


def check_word(w: str) -> str:
    if not w or any(c not in "01" for c in w):
        raise FormatError(f"word must be a non-empty string over 0/1, got {w!r}")
    return w


def word_to_tournament(w: str) -> OrientedGraph:
    check_word(w)
    n = len(w)
    arcs = ((i, j) if w[i] == w[j] else (j, i) for i in range(n) for j in range(i + 1, n))
    return OrientedGraph(n, frozenset(arcs))


def _ccw(x: Fraction, y: Fraction) -> Fraction:
    return (y - x) % 360


def word_to_tournament_geometric(w: str, epsilon: Fraction = DEFAULT_EPSILON, side=1) -> OrientedGraph:
    """Place the letters on a circle and read off the circular tournament.

    Base angles increase strictly inside the open quarter arc (0, 90) degrees
    below the top point. Letter-1 points move to the antipode shifted by
    ``side * epsilon``; ``side`` is +1, -1 or one sign per position. An arc
    ``x -> y`` is drawn when going counter-clockwise from ``x`` to ``y``
    covers less than 180 degrees.
    """
    check_word(w)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DegeneratePlacement("epsilon must be positive")
    n = len(w)
    sides = [side] * n if isinstance(side, int) else list(side)
    if len(sides) != n or any(s not in (1, -1) for s in sides):
        raise DegeneratePlacement(f"bad side argument {side!r}")
    points = []
    for i, letter in enumerate(w):
        theta = Fraction(90 * (i + 1), n + 1)
        if letter == "1":
            theta = (theta + 180 + sides[i] * epsilon) % 360
        points.append(theta)
    for i, j in itertools.combinations(range(n), 2):
        gap = _ccw(points[i], points[j])
        if gap == 0 or gap == 180:
            raise DegeneratePlacement(f"points {i} and {j} coincide or are antipodal")
    arcs = set()
    for i, j in itertools.combinations(range(n), 2):
        if _ccw(points[i], points[j]) < 180:
            arcs.add((i, j))
        else:
            arcs.add((j, i))
    return OrientedGraph(n, frozenset(arcs))


def _require_tournament(t: OrientedGraph):
    if not is_tournament(t):
        raise NotATournament("expected a tournament")


def all_words(n: int):
    """Binary words of length ``n`` in lexicographic order (0 < 1)."""
    return ("".join(bits) for bits in itertools.product("01", repeat=n))


def tournament_to_word(t: OrientedGraph) -> str:
    """Lexicographically least word whose tournament is isomorphic to ``t``."""
    _require_tournament(t)
    for w in all_words(t.order):
        if is_isomorphic(word_to_tournament(w), t):
            return w
    raise NotLocalOrder("no word encodes this tournament")


def _transitive_on(t: OrientedGraph, mask: int) -> bool:
    if not mask:
        return True
    return is_transitive_relation(t.induced_subgraph(list(iter_bits(mask))))


def is_local_order(t: OrientedGraph) -> bool:
    """Every in- and out-neighbourhood induces a transitive subtournament."""
    _require_tournament(t)
    return all(
        _transitive_on(t, t.out_masks[v]) and _transitive_on(t, t.in_masks[v])
        for v in t.vertices
    )


def is_local_order_by_forbidden(t: OrientedGraph) -> bool:
    """No induced D and no induced D*."""
    _require_tournament(t)
    return not (
        contains_configuration(t, get_config(ConfigName.D))
        or contains_configuration(t, get_config(ConfigName.Dstar))
    )


def check_sigma_word(w: Sequence[tuple[int, int]]) -> SigmaWord:
    w = tuple((int(a), int(m)) for a, m in w)
    if not w:
        raise FormatError("sigma word must be non-empty")
    for a, m in w:
        if a not in (0, 1) or m not in (1, 2):
            raise FormatError(f"bad sigma letter ({a},{m})")
    return w


def sigma_word_to_graph(w: Sequence[tuple[int, int]]) -> OrientedGraph:
    w = check_sigma_word(w)
    letters = "".join(str(a) for a, _ in w)
    return blowup(word_to_tournament(letters), [m for _, m in w])


def graph_to_sigma_word(g: OrientedGraph) -> SigmaWord:
    """Lexicographically least sigma word whose graph is isomorphic to ``g``."""
    try:
        quotient = quotient_by_nonarc(g)
    except NotReducible as exc:
        raise NotEncodable(f"not a blow-up of a tournament ({exc.kind}: {exc.certificate})") from exc
    t, sizes = quotient.tournament, quotient.sizes
    if max(sizes) > 2:
        raise NotEncodable(f"non-arc class of size {max(sizes)} exceeds 2")
    if not is_local_order(t):
        raise NotEncodable("quotient tournament is not a local order")
    best = None
    for w in all_words(t.order):
        tw = word_to_tournament(w)
        for iso in isomorphisms(tw, t):
            cand = tuple((int(a), sizes[iso[i]]) for i, a in enumerate(w))
            if best is None or cand < best:
                best = cand
        if best is not None and best[0][0] == 0 and w[0] == "1":
            break
    assert best is not None, "local order without a word"
    return best


def format_sigma_word(w: Sequence[tuple[int, int]]) -> str:
    return " ".join(f"{a}:{m}" for a, m in w)


def parse_sigma_word(text: str) -> SigmaWord:
    letters = []
    for tok in text.split():
        a, sep, m = tok.partition(":")
        if not sep or not a.isdigit() or not m.isdigit():
            raise FormatError(f"bad sigma letter {tok!r}")
        letters.append((int(a), int(m)))
    return check_sigma_word(letters)


def encode(g: OrientedGraph) -> str:
    """Binary word for tournaments, sigma word text otherwise."""
    if is_tournament(g):
        return tournament_to_word(g)
    return format_sigma_word(graph_to_sigma_word(g))


def decode(text: str) -> OrientedGraph:
    text = text.strip()
    if ":" in text:
        return sigma_word_to_graph(parse_sigma_word(text))
    return word_to_tournament(check_word(text))


def subword_embeddings(w1: str, w2: str):
    """Strictly increasing position maps sending each letter of w1 to an equal letter of w2."""
    for pos in itertools.combinations(range(len(w2)), len(w1)):
        if all(w1[i] == w2[p] for i, p in enumerate(pos)):
            yield pos


def sigma_subword_embeddings(w1: SigmaWord, w2: SigmaWord):
    """Increasing maps with the image letter at least the source letter
    (same bit, multiplicity not smaller)."""
    for pos in itertools.combinations(range(len(w2)), len(w1)):
        if all(w1[i][0] == w2[p][0] and w1[i][1] <= w2[p][1] for i, p in enumerate(pos)):
            yield pos


def sigma_embedding_vertex_map(w1: SigmaWord, w2: SigmaWord, pos) -> tuple[int, ...]:
    """Vertex map Gamma_{w1} -> Gamma_{w2} induced by a sigma word embedding."""
    starts2 = list(itertools.accumulate([0] + [m for _, m in w2[:-1]]))
    vmap = []
    for i, (_, m) in enumerate(w1):
        vmap.extend(starts2[pos[i]] + c for c in range(m))
    return tuple(vmap)
