"""Finite oriented graphs: the value type, constructions and isomorphism tools.

Vertices are the integers ``0..order-1``. Adjacency is cached as bitmasks, so
``g.out_masks[v] >> w & 1`` tells whether ``v -> w``.

Index layouts of the constructions are fixed so results are reproducible:

* :func:`direct_power` numbers the tuple ``(v_1, ..., v_n)`` row-major, i.e.
  ``sum(v_i * order**(n - i))``.
* :func:`blowup` replaces base vertex ``i`` by a block of ``m[i]`` consecutive
  indices, blocks in base-vertex order.
* :func:`disjoint_union` stacks the inputs block-diagonally in list order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import caps as _caps
from .errors import (
    EmptyList,
    IndexOutOfRange,
    LoopArc,
    NotEquivalence,
    NotReducible,
    SymmetricPair,
    ZeroMultiplicity,
)

Partition = tuple[tuple[int, ...], ...]
Multiplicity = tuple[int, ...]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class OrientedGraph:
    """Loop-free digraph with an asymmetric arc relation."""

    order: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.order < 1:
            raise IndexOutOfRange(f"order must be >= 1, got {self.order}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise IndexOutOfRange(f"arc ({u}, {v}) outside 0..{self.order - 1}")
            if u == v:
                raise LoopArc(f"loop at vertex {u}")
            if (v, u) in arcs:
                raise SymmetricPair(f"both ({u}, {v}) and ({v}, {u}) given")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.order
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.order
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        return tuple(o | i for o, i in zip(self.out_masks, self.in_masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def vertices(self) -> range:
        return range(self.order)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr_masks[u] >> v & 1)

    def out_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.in_masks[v]))

    def out_degree(self, v: int) -> int:
        return popcount(self.out_masks[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.in_masks[v])

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def induced_subgraph(self, vertices: Iterable[int]) -> "OrientedGraph":
        """Subgraph on ``vertices``, relabelled in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        arcs = {(index[u], index[v]) for u, v in self.arcs if u in index and v in index}
        return OrientedGraph(len(vertices), arcs)

    def relabel(self, perm: Sequence[int]) -> "OrientedGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return OrientedGraph(self.order, {(perm[u], perm[v]) for u, v in self.arcs})

    def __repr__(self):
        return f"OrientedGraph({self.order}, {self.sorted_arcs()})"


def new_graph(order: int, arcs: Iterable[tuple[int, int]] = ()) -> OrientedGraph:
    return OrientedGraph(order, frozenset(arcs))


def empty_graph(k: int) -> OrientedGraph:
    """The arcless graph I_k."""
    return OrientedGraph(k, frozenset())


# constructions


def direct_power(g: OrientedGraph, n: int, cap: int | None = None) -> OrientedGraph:
    if n < 1:
        raise ValueError(f"power exponent must be >= 1, got {n}")
    cap = _caps.current_caps().power if cap is None else cap
    size = g.order**n
    _caps.check("direct_power", size, cap)
    weights = [g.order ** (n - 1 - i) for i in range(n)]
    arcs = set()
    for combo in itertools.product(sorted(g.arcs), repeat=n):
        src = sum(w * a[0] for w, a in zip(weights, combo))
        dst = sum(w * a[1] for w, a in zip(weights, combo))
        arcs.add((src, dst))
    return OrientedGraph(size, frozenset(arcs))


def power_index(g: OrientedGraph, coords: Sequence[int]) -> int:
    """Vertex index of a coordinate tuple in :func:`direct_power`."""
    idx = 0
    for c in coords:
        idx = idx * g.order + c
    return idx


def blowup(t: OrientedGraph, m: Sequence[int]) -> OrientedGraph:
    """Replace vertex ``i`` of ``t`` by ``m[i]`` pairwise non-adjacent copies."""
    m = tuple(m)
    if len(m) != t.order:
        raise ValueError(f"multiplicity has {len(m)} entries, graph has {t.order} vertices")
    if any(k < 1 for k in m):
        raise ZeroMultiplicity(f"multiplicities must be positive: {m}")
    starts = list(itertools.accumulate((0,) + m[:-1]))
    arcs = set()
    for u, v in t.arcs:
        for a in range(starts[u], starts[u] + m[u]):
            for b in range(starts[v], starts[v] + m[v]):
                arcs.add((a, b))
    return OrientedGraph(sum(m), frozenset(arcs))


def blowup_blocks(m: Sequence[int]) -> Partition:
    """Vertex blocks produced by :func:`blowup` for multiplicity ``m``."""
    blocks, start = [], 0
    for k in m:
        blocks.append(tuple(range(start, start + k)))
        start += k
    return tuple(blocks)


def disjoint_union(gs: Sequence[OrientedGraph]) -> OrientedGraph:
    gs = list(gs)
    if not gs:
        raise EmptyList("disjoint_union needs at least one graph")
    arcs, offset = set(), 0
    for g in gs:
        arcs.update((u + offset, v + offset) for u, v in g.arcs)
        offset += g.order
    return OrientedGraph(offset, frozenset(arcs))


def k_copies(g: OrientedGraph, k: int) -> OrientedGraph:
    if k < 1:
        raise EmptyList(f"k must be >= 1, got {k}")
    return disjoint_union([g] * k)


def weakly_connected_components(g: OrientedGraph) -> Partition:
    seen = 0
    blocks = []
    for v in g.vertices:
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.nbr_masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        blocks.append(tuple(iter_bits(comp)))
    return tuple(blocks)


def nonarc_partition(g: OrientedGraph) -> Partition:
    """Classes of the reflexive non-arc relation.

    Raises :class:`NotEquivalence` with a violating triple when the relation
    is not transitive.
    """
    full = g.full_mask
    closed = [full & ~g.nbr_masks[v] for v in g.vertices]  # includes v itself
    for x in g.vertices:
        for y in iter_bits(closed[x]):
            if closed[y] == closed[x]:
                continue
            extra = closed[y] & ~closed[x]
            if extra:
                z = next(iter_bits(extra))
                raise NotEquivalence((x, y, z))
            z = next(iter_bits(closed[x] & ~closed[y]))
            raise NotEquivalence((y, x, z))
    blocks = {}
    for v in g.vertices:
        blocks.setdefault(closed[v], v)
    return tuple(tuple(iter_bits(mask)) for mask, _ in sorted(blocks.items(), key=lambda kv: kv[1]))


class Quotient(NamedTuple):
    tournament: OrientedGraph
    classes: Partition

    @property
    def sizes(self) -> Multiplicity:
        return tuple(len(c) for c in self.classes)


def quotient_by_nonarc(g: OrientedGraph) -> Quotient:
    """Collapse the non-arc classes of ``g`` into a tournament.

    Raises :class:`NotReducible` unless ``g`` is a blow-up of a tournament.
    """
    try:
        classes = nonarc_partition(g)
    except NotEquivalence as exc:
        raise NotReducible("nonarc", exc.triple) from exc
    arcs = set()
    for i, j in itertools.combinations(range(len(classes)), 2):
        forward = [(a, b) for a in classes[i] for b in classes[j] if g.has_arc(a, b)]
        backward = [(b, a) for a in classes[i] for b in classes[j] if g.has_arc(b, a)]
        if forward and backward:
            raise NotReducible("mixed", (classes[i], classes[j], forward[0], backward[0]))
        arcs.add((i, j) if forward else (j, i))
    return Quotient(OrientedGraph(len(classes), frozenset(arcs)), classes)


# predicates


def is_tournament(g: OrientedGraph) -> bool:
    return len(g.arcs) == g.order * (g.order - 1) // 2


def is_acyclic(g: OrientedGraph) -> bool:
    indeg = [g.in_degree(v) for v in g.vertices]
    ready = [v for v in g.vertices if indeg[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for w in iter_bits(g.out_masks[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return removed == g.order


def is_transitive_relation(g: OrientedGraph) -> bool:
    out = g.out_masks
    return all(out[y] & ~out[x] == 0 for y in g.vertices for x in iter_bits(g.in_masks[y]))


def _reach(masks, start):
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= masks[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(g: OrientedGraph) -> bool:
    full = g.full_mask
    return _reach(g.out_masks, 0) == full and _reach(g.in_masks, 0) == full


def is_weakly_connected(g: OrientedGraph) -> bool:
    return len(weakly_connected_components(g)) == 1


# canonical forms


class CanonicalForm(NamedTuple):
    """Order plus the adjacency bit code of the canonical relabelling.

    Bit ``i * order + j`` is set iff ``i -> j`` after relabelling.
    """

    order: int
    code: int

    def graph(self) -> OrientedGraph:
        n = self.order
        arcs = {divmod(b, n) for b in iter_bits(self.code)}
        return OrientedGraph(n, frozenset(arcs))


def _refine(g: OrientedGraph, colors: list[int]) -> list[int]:
    out, inn = g.out_masks, g.in_masks
    ncells = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[u] for u in iter_bits(out[v]))),
                tuple(sorted(colors[u] for u in iter_bits(inn[v]))),
            )
            for v in g.vertices
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return colors
        ncells = len(rank)


def _code(g: OrientedGraph, pos: Sequence[int]) -> int:
    n = g.order
    code = 0
    for u, v in g.arcs:
        code |= 1 << (pos[u] * n + pos[v])
    return code


def canonical_labeling(g: OrientedGraph, cap: int | None = None) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form and a labelling ``pos`` realising it (``pos[v]`` = new index).

    Colour refinement on (in, out) neighbourhoods, then individualisation of
    the first non-singleton cell; twin vertices are tried once per cell.
    """
    cap = _caps.current_caps().canonical if cap is None else cap
    _caps.check("canonical_form", g.order, cap)
    twin_key = [(g.out_masks[v], g.in_masks[v]) for v in g.vertices]
    best = [None, None]

    def search(colors):
        colors = _refine(g, colors)
        if len(set(colors)) == g.order:
            code = _code(g, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(colors)
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried = set()
        for v in g.vertices:
            if colors[v] != target or twin_key[v] in tried:
                continue
            tried.add(twin_key[v])
            child = [2 * c + 1 for c in colors]
            child[v] -= 1
            search(child)

    search([0] * g.order)
    return CanonicalForm(g.order, best[0]), best[1]


def canonical_form(g: OrientedGraph, cap: int | None = None) -> CanonicalForm:
    return canonical_labeling(g, cap)[0]


def canonical_graph(g: OrientedGraph, cap: int | None = None) -> OrientedGraph:
    return canonical_form(g, cap).graph()


def _degree_profile(g):
    return sorted((g.out_degree(v), g.in_degree(v)) for v in g.vertices)


def is_isomorphic(g: OrientedGraph, h: OrientedGraph, cap: int | None = None) -> bool:
    """Isomorphism test.

    Uses canonical forms up to the canonical cap; larger graphs fall back to
    an exact backtracking search, which has no cap.
    """
    if g.order != h.order or len(g.arcs) != len(h.arcs):
        return False
    if _degree_profile(g) != _degree_profile(h):
        return False
    cap = _caps.current_caps().canonical if cap is None else cap
    if g.order <= cap:
        return canonical_form(g, cap) == canonical_form(h, cap)
    return find_embedding(g, h) is not None


# induced embeddings


def _search_order(p: OrientedGraph) -> list[int]:
    deg = [popcount(m) for m in p.nbr_masks]
    remaining = set(p.vertices)
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda u: (popcount(p.nbr_masks[u] & placed), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def embeddings(pattern: OrientedGraph, host: OrientedGraph) -> Iterator[tuple[int, ...]]:
    """All induced embeddings of ``pattern`` into ``host``.

    Yields tuples ``e`` with ``e[p]`` the host image of pattern vertex ``p``.
    Pattern vertices are matched in descending-degree, connectivity-first
    order; the yield order is deterministic.
    """
    if pattern.order > host.order:
        return
    order = _search_order(pattern)
    exact = pattern.order == host.order
    out, inn, nbr = host.out_masks, host.in_masks, host.nbr_masks
    hdeg = [(popcount(out[v]), popcount(inn[v])) for v in host.vertices]
    allowed = []
    for p in order:
        want = (pattern.out_degree(p), pattern.in_degree(p))
        mask = 0
        for v in host.vertices:
            got = hdeg[v]
            ok = got == want if exact else (got[0] >= want[0] and got[1] >= want[1])
            if ok:
                mask |= 1 << v
        allowed.append(mask)
    # relation of order[i] to each earlier order[j]: 1 = j->i, 2 = i->j, 0 = none
    constraints = []
    for i, p in enumerate(order):
        cons = []
        for j in range(i):
            q = order[j]
            if pattern.has_arc(q, p):
                cons.append((j, 1))
            elif pattern.has_arc(p, q):
                cons.append((j, 2))
            else:
                cons.append((j, 0))
        constraints.append(cons)

    k = pattern.order
    images = [0] * k
    full = host.full_mask

    def rec(i, used):
        if i == k:
            result = [0] * k
            for j, p in enumerate(order):
                result[p] = images[j]
            yield tuple(result)
            return
        mask = allowed[i] & ~used
        for j, rel in constraints[i]:
            y = images[j]
            if rel == 1:
                mask &= out[y]
            elif rel == 2:
                mask &= inn[y]
            else:
                mask &= full & ~nbr[y]
            if not mask:
                return
        for v in iter_bits(mask):
            images[i] = v
            yield from rec(i + 1, used | (1 << v))

    yield from rec(0, 0)


def find_embedding(pattern: OrientedGraph, host: OrientedGraph) -> tuple[int, ...] | None:
    return next(embeddings(pattern, host), None)


def contains_configuration(g: OrientedGraph, pattern: OrientedGraph) -> bool:
    """True iff some induced subgraph of ``g`` is isomorphic to ``pattern``."""
    return find_embedding(pattern, g) is not None


def embeds(small: OrientedGraph, big: OrientedGraph) -> bool:
    return find_embedding(small, big) is not None


def isomorphisms(g: OrientedGraph, h: OrientedGraph) -> Iterator[tuple[int, ...]]:
    if g.order != h.order or len(g.arcs) != len(h.arcs):
        return iter(())
    return embeddings(g, h)
