"""Local homomorphisms, witnesses and the homogeneity deciders.

A local homomorphism is a map ``h`` from a finite vertex set ``A`` into the
graph such that ``a -> b`` implies ``h(a) -> h(b)``. A *witness* is a
quadruple ``(A, B, h, v)`` with ``B = h[A]`` and ``v`` outside ``A`` such that
no extension of ``h`` to ``A + {v}`` is a local homomorphism. A finite graph
is homomorphism homogeneous exactly when it has no witness, since one-point
extensions can be chained up to a full endomorphism.

Witness search order: domain size ascending, then domains in lexicographic
order, then images lexicographically, then ``v`` ascending. The first
witness found therefore has minimal ``|A|``. Only domains contained in the
neighbourhood of some vertex are visited: a minimal witness always has
``A`` inside the neighbourhood of ``v``, because non-neighbours of ``v``
impose no constraint on its image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from . import caps as _caps
from .configurations import ConfigName, get_config
from .errors import InvalidPartialHom, NotATournament, NoWitness
from .graph import (
    OrientedGraph,
    blowup,
    direct_power,
    embeddings,
    embeds,
    find_embedding,
    is_tournament,
    iter_bits,
    power_index,
    _search_order,
)


@dataclass(frozen=True)
class PartialHom:
    """A local homomorphism of ``graph``; ``pairs`` is sorted by domain vertex."""

    graph: OrientedGraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        g = self.graph
        dom = [a for a, _ in pairs]
        if len(set(dom)) != len(dom):
            raise InvalidPartialHom(f"repeated domain vertex in {pairs}")
        for a, b in pairs:
            if not (0 <= a < g.order and 0 <= b < g.order):
                raise InvalidPartialHom(f"pair ({a}, {b}) out of range")
        m = dict(pairs)
        for a in dom:
            for b in dom:
                if g.has_arc(a, b) and not g.has_arc(m[a], m[b]):
                    raise InvalidPartialHom(f"arc {a}->{b} not preserved by {pairs}")

    @classmethod
    def from_mapping(cls, graph: OrientedGraph, mapping: Mapping[int, int]) -> "PartialHom":
        return cls(graph, tuple(mapping.items()))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted({b for _, b in self.pairs}))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __call__(self, a: int) -> int:
        return self.as_dict()[a]


def _extension_mask(g: OrientedGraph, pairs, v: int) -> int:
    mask = g.full_mask
    for a, b in pairs:
        if g.has_arc(a, v):
            mask &= g.out_masks[b]
        elif g.has_arc(v, a):
            mask &= g.in_masks[b]
    return mask


def extension_candidates(g: OrientedGraph, h: PartialHom, v: int) -> list[int]:
    if v in h.domain:
        raise InvalidPartialHom(f"vertex {v} already in the domain")
    return list(iter_bits(_extension_mask(g, h.pairs, v)))


def extend_one_point(g: OrientedGraph, h: PartialHom, v: int) -> int | None:
    """Smallest ``w`` such that ``h + {v: w}`` is a local homomorphism."""
    if h.graph != g:
        raise InvalidPartialHom("partial homomorphism belongs to another graph")
    if v in h.domain:
        raise InvalidPartialHom(f"vertex {v} already in the domain")
    mask = _extension_mask(g, h.pairs, v)
    return (mask & -mask).bit_length() - 1 if mask else None


@dataclass(frozen=True)
class Witness:
    A: tuple[int, ...]
    B: tuple[int, ...]
    h: PartialHom
    v: int

    def verify(self) -> bool:
        g = self.h.graph
        return (
            self.h.domain == tuple(sorted(self.A))
            and self.h.image == tuple(sorted(self.B))
            and self.v not in self.A
            and 0 <= self.v < g.order
            and extend_one_point(g, self.h, self.v) is None
        )

    def to_dict(self) -> dict:
        return {
            "A": list(self.A),
            "B": list(self.B),
            "h": {str(a): b for a, b in self.h.pairs},
            "v": self.v,
        }


def make_witness(g: OrientedGraph, mapping: Mapping[int, int], v: int) -> Witness:
    h = PartialHom.from_mapping(g, mapping)
    return Witness(h.domain, h.image, h, v)


def is_witness(g: OrientedGraph, mapping: Mapping[int, int], v: int) -> bool:
    try:
        return make_witness(g, mapping, v).verify()
    except InvalidPartialHom:
        return False


def local_homs(g: OrientedGraph, domain: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Image tuples of all local homomorphisms with the given domain, lexicographically."""
    k = len(domain)
    cons = []
    for i, a in enumerate(domain):
        row = []
        for j in range(i):
            if g.has_arc(domain[j], a):
                row.append((j, g.out_masks))
            elif g.has_arc(a, domain[j]):
                row.append((j, g.in_masks))
        cons.append(row)
    img = [0] * k
    full = g.full_mask

    def rec(i):
        if i == k:
            yield tuple(img)
            return
        mask = full
        for j, masks in cons[i]:
            mask &= masks[img[j]]
            if not mask:
                return
        for b in iter_bits(mask):
            img[i] = b
            yield from rec(i + 1)

    yield from rec(0)


def _candidate_domains(g: OrientedGraph, k: int, pruned: bool) -> list[tuple[int, ...]]:
    if not pruned:
        return list(itertools.combinations(range(g.order), k))
    found = set()
    for v in g.vertices:
        found.update(itertools.combinations(list(iter_bits(g.nbr_masks[v])), k))
    return sorted(found)


def _witness_search(g: OrientedGraph, pruned: bool = True) -> Witness | None:
    if pruned:
        kmax = max((bin(m).count("1") for m in g.nbr_masks), default=0)
    else:
        kmax = g.order - 1
    for k in range(1, kmax + 1):
        for A in _candidate_domains(g, k, pruned):
            amask = sum(1 << a for a in A)
            checks = []
            for v in g.vertices:
                if amask >> v & 1:
                    continue
                if pruned and amask & ~g.nbr_masks[v]:
                    continue
                row = []
                for j, a in enumerate(A):
                    if g.has_arc(a, v):
                        row.append((j, g.out_masks))
                    elif g.has_arc(v, a):
                        row.append((j, g.in_masks))
                checks.append((v, row))
            if not checks:
                continue
            full = g.full_mask
            for img in local_homs(g, A):
                for v, row in checks:
                    mask = full
                    for j, masks in row:
                        mask &= masks[img[j]]
                        if not mask:
                            break
                    if not mask:
                        h = PartialHom(g, tuple(zip(A, img)))
                        return Witness(tuple(A), h.image, h, v)
    return None


def find_witness(g: OrientedGraph, cap: int | None = None, pruned: bool = True) -> Witness | None:
    """First witness in the documented search order, or None if ``g`` is HH.

    ``pruned=False`` visits every domain instead of neighbourhood subsets;
    it returns the same witness and exists as a cross-check.
    """
    cap = _caps.current_caps().general if cap is None else cap
    _caps.check("witness search", g.order, cap)
    return _witness_search(g, pruned)


def find_minimal_witness(g: OrientedGraph, cap: int | None = None) -> Witness | None:
    # the search is size-ascending, so the first witness is already minimal
    return find_witness(g, cap)


def is_hh(g: OrientedGraph, cap: int | None = None) -> bool:
    return find_witness(g, cap) is None


def is_homogeneous(g: OrientedGraph, cap: int | None = None) -> bool:
    """Every partial isomorphism extends by one point to every vertex.

    For finite graphs this one-point property is equivalent to homogeneity.
    """
    cap = _caps.current_caps().general if cap is None else cap
    _caps.check("homogeneity search", g.order, cap)
    full = g.full_mask
    out, inn, nbr = g.out_masks, g.in_masks, g.nbr_masks
    for k in range(1, g.order):
        for A in itertools.combinations(range(g.order), k):
            sub = g.induced_subgraph(A)
            rows = []
            for v in g.vertices:
                if v in A:
                    continue
                row = []
                for j, a in enumerate(A):
                    if g.has_arc(a, v):
                        row.append((j, out))
                    elif g.has_arc(v, a):
                        row.append((j, inn))
                    else:
                        row.append((j, None))
                rows.append(row)
            for img in embeddings(sub, g):
                used = sum(1 << b for b in img)
                for row in rows:
                    mask = full & ~used
                    for j, masks in row:
                        mask &= masks[img[j]] if masks is not None else ~nbr[img[j]]
                        if not mask:
                            return False
    return True


def is_ph_up_to(g: OrientedGraph, nmax: int, cap: int | None = None) -> bool:
    """Bounded PH check: every power ``g**n`` with ``n <= nmax`` is HH.

    This refutes PH soundly but never confirms it.
    """
    cap = _caps.current_caps().power if cap is None else cap
    for n in range(1, nmax + 1):
        p = g if n == 1 else direct_power(g, n, cap=cap)
        if not is_hh(p, cap=cap):
            return False
    return True


@dataclass(frozen=True)
class KCertificate:
    """Configuration K on ``(a, b, c, d)`` and the induced 2-path it yields in the square."""

    a: int
    b: int
    c: int
    d: int

    @property
    def path(self) -> tuple[tuple[int, int], ...]:
        return ((self.b, self.d), (self.c, self.a), (self.d, self.b))

    def path_indices(self, g: OrientedGraph) -> tuple[int, int, int]:
        return tuple(power_index(g, p) for p in self.path)

    def verify(self, g: OrientedGraph, square: OrientedGraph | None = None) -> bool:
        """The path is an induced 2-path ``x -> y -> z`` with ``x``, ``z`` non-adjacent."""
        square = direct_power(g, 2) if square is None else square
        x, y, z = self.path_indices(g)
        return square.has_arc(x, y) and square.has_arc(y, z) and not square.adjacent(x, z)


def refute_ph_via_K(g: OrientedGraph) -> KCertificate | None:
    if g.order < 4:
        return None
    emb = find_embedding(get_config(ConfigName.K), g)
    if emb is None:
        return None
    return KCertificate(*emb)


def homomorphisms(src: OrientedGraph, dst: OrientedGraph, target_mask: int | None = None) -> Iterator[tuple[int, ...]]:
    """All homomorphisms ``src -> dst`` (images restricted to ``target_mask``)."""
    order = _search_order(src)
    pos = {p: i for i, p in enumerate(order)}
    cons = []
    for i, p in enumerate(order):
        row = []
        for q in order[:i]:
            if src.has_arc(q, p):
                row.append((pos[q], dst.out_masks))
            elif src.has_arc(p, q):
                row.append((pos[q], dst.in_masks))
        cons.append(row)
    base = dst.full_mask if target_mask is None else target_mask
    img = [0] * src.order

    def rec(i):
        if i == src.order:
            result = [0] * src.order
            for j, p in enumerate(order):
                result[p] = img[j]
            yield tuple(result)
            return
        mask = base
        for j, masks in cons[i]:
            mask &= masks[img[j]]
            if not mask:
                return
        for b in iter_bits(mask):
            img[i] = b
            yield from rec(i + 1)

    yield from rec(0)


def find_homomorphism(src: OrientedGraph, dst: OrientedGraph, target_mask: int | None = None) -> tuple[int, ...] | None:
    return next(homomorphisms(src, dst, target_mask), None)


def hom_equivalent(g: OrientedGraph, h: OrientedGraph, cap: int | None = None) -> bool:
    cap = _caps.current_caps().general if cap is None else cap
    _caps.check("homomorphism search", max(g.order, h.order), cap)
    return find_homomorphism(g, h) is not None and find_homomorphism(h, g) is not None


def core_vertices(g: OrientedGraph, cap: int | None = None) -> tuple[int, ...]:
    """Vertex set of a core of ``g`` that is also a retract image.

    Repeatedly drops the smallest vertex ``x`` for which the current graph maps
    homomorphically into itself minus ``x``.
    """
    cap = _caps.current_caps().general if cap is None else cap
    _caps.check("core search", g.order, cap)
    current = list(g.vertices)
    shrunk = True
    while shrunk and len(current) > 1:
        shrunk = False
        sub = g.induced_subgraph(current)
        for i in range(len(current)):
            target = sub.full_mask & ~(1 << i)
            if find_homomorphism(sub, sub, target) is not None:
                del current[i]
                shrunk = True
                break
    return tuple(current)


def compute_core(g: OrientedGraph, cap: int | None = None) -> OrientedGraph:
    return g.induced_subgraph(core_vertices(g, cap))


def is_core(g: OrientedGraph, cap: int | None = None) -> bool:
    return len(core_vertices(g, cap)) == g.order


@dataclass(frozen=True)
class MinWitnessReport:
    witness: Witness
    h_bijective: bool
    b_is_tournament: bool
    all_adjacent_to_v: bool
    a_not_tournament: bool
    b_hat: OrientedGraph | None
    b_hat_in_age: bool | None
    proper_subgraphs_in_age: bool | None

    @property
    def lemma_holds(self) -> bool:
        return (
            self.h_bijective
            and self.b_is_tournament
            and self.all_adjacent_to_v
            and self.a_not_tournament
            and self.b_hat_in_age is False
        )


def b_hat(g: OrientedGraph, w: Witness) -> OrientedGraph:
    """B plus a new last vertex ``v^`` with ``h(a) -> v^`` iff ``a -> v``.

    Requires an injective ``h`` whose domain is adjacent to ``v``.
    """
    hmap = w.h.as_dict()
    B = list(w.B)
    index = {b: i for i, b in enumerate(B)}
    vhat = len(B)
    arcs = {(index[x], index[y]) for x in B for y in B if g.has_arc(x, y)}
    for a in w.A:
        if g.has_arc(a, w.v):
            arcs.add((index[hmap[a]], vhat))
        else:
            arcs.add((vhat, index[hmap[a]]))
    return OrientedGraph(len(B) + 1, frozenset(arcs))


def check_minimal_witness(t: OrientedGraph, m: Sequence[int], age_sample_order: int | None = None,
                          cap: int | None = None) -> MinWitnessReport:
    """Inspect the minimal witness of ``blowup(t, m)``.

    Age membership of B^ is decided against the induced subgraphs of ``t``
    of order at most ``age_sample_order`` (default: all of them).
    """
    if not is_tournament(t):
        raise NotATournament("check_minimal_witness needs a tournament")
    g = blowup(t, m)
    w = find_minimal_witness(g, cap)
    if w is None:
        raise NoWitness(f"blowup with multiplicities {tuple(m)} is homomorphism homogeneous")
    sample = t.order if age_sample_order is None else age_sample_order
    images = [b for _, b in w.h.pairs]
    bijective = len(set(images)) == len(images)
    all_adjacent = all(g.adjacent(a, w.v) for a in w.A)
    bh = in_age = proper = None
    if bijective and all_adjacent:
        bh = b_hat(g, w)
        in_age = bh.order <= sample and embeds(bh, t)
        proper = all(
            embeds(bh.induced_subgraph([x for x in bh.vertices if x != drop]), t)
            for drop in bh.vertices
        )
    return MinWitnessReport(
        witness=w,
        h_bijective=bijective,
        b_is_tournament=is_tournament(g.induced_subgraph(w.B)),
        all_adjacent_to_v=all_adjacent,
        a_not_tournament=not is_tournament(g.induced_subgraph(w.A)),
        b_hat=bh,
        b_hat_in_age=in_age,
        proper_subgraphs_in_age=proper,
    )
