"""Theorem-driven labels for finite oriented graphs.

The only finite homomorphism homogeneous oriented graphs are the arcless
graphs ``I_k`` and disjoint unions ``k * C_3``: every other class of the
countable classification is infinite. Finite PH graphs are the same two
families. Labels that say "not HH" carry a certificate, chosen in this order:

1. an induced directed 2-path (forbidden in any HH graph);
2. for disconnected graphs: a component that is not a tournament, two
   components with different ages, or a component that is not homogeneous;
3. a raw witness from :func:`homhom.homogeneity.find_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .configurations import ConfigName, cycle_c3, get_config
from .graph import (
    OrientedGraph,
    embeds,
    find_embedding,
    is_isomorphic,
    iter_bits,
    weakly_connected_components,
)
from .homogeneity import KCertificate, Witness, find_witness, is_homogeneous, is_hh, refute_ph_via_K


@dataclass(frozen=True)
class InducedP2:
    embedding: tuple[int, int, int]

    def verify(self, g: OrientedGraph) -> bool:
        x, y, z = self.embedding
        return g.has_arc(x, y) and g.has_arc(y, z) and not g.adjacent(x, z)


@dataclass(frozen=True)
class ComponentNotTournamentButDisconnected:
    """``x``, ``y`` non-adjacent in one component; ``z`` in another."""

    x: int
    y: int
    z: int

    def verify(self, g: OrientedGraph) -> bool:
        comp = {v: i for i, block in enumerate(weakly_connected_components(g)) for v in block}
        return comp[self.x] == comp[self.y] != comp[self.z] and not g.adjacent(self.x, self.y) and self.x != self.y


@dataclass(frozen=True)
class ComponentAgesDiffer:
    """``first`` does not embed into ``second`` (both are components)."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def verify(self, g: OrientedGraph) -> bool:
        comps = set(weakly_connected_components(g))
        if self.first not in comps or self.second not in comps:
            return False
        return not embeds(g.induced_subgraph(self.first), g.induced_subgraph(self.second))


@dataclass(frozen=True)
class ComponentNotHomogeneous:
    component: tuple[int, ...]

    def verify(self, g: OrientedGraph) -> bool:
        return (self.component in set(weakly_connected_components(g))
                and not is_homogeneous(g.induced_subgraph(self.component)))


@dataclass(frozen=True)
class WitnessReason:
    witness: Witness

    def verify(self, g: OrientedGraph) -> bool:
        return self.witness.h.graph == g and self.witness.verify()


Reason = Union[InducedP2, ComponentNotTournamentButDisconnected, ComponentAgesDiffer,
               ComponentNotHomogeneous, WitnessReason]


@dataclass(frozen=True)
class EmptyGraph:
    k: int


@dataclass(frozen=True)
class DisjointC3:
    k: int


@dataclass(frozen=True)
class NotHH:
    reason: Reason
    # set by classify_ph_finite when the graph contains configuration K
    k_certificate: KCertificate | None = field(default=None, compare=False)


HHLabel = Union[EmptyGraph, DisjointC3, NotHH]


class TheoremViolation(RuntimeError):
    """A graph outside the finite classification had no witness."""


def _p2(g: OrientedGraph):
    emb = find_embedding(get_config(ConfigName.P2), g)
    return None if emb is None else InducedP2(tuple(emb))


def _component_reason(g: OrientedGraph, comps) -> Reason | None:
    for ci, block in enumerate(comps):
        mask = sum(1 << v for v in block)
        for x in block:
            missing = mask & ~g.nbr_masks[x] & ~(1 << x)
            if missing:
                y = next(iter_bits(missing))
                z = comps[(ci + 1) % len(comps)][0]
                return ComponentNotTournamentButDisconnected(x, y, z)
    subs = [g.induced_subgraph(b) for b in comps]
    for i, si in enumerate(subs):
        for j, sj in enumerate(subs):
            if i != j and not embeds(si, sj):
                return ComponentAgesDiffer(comps[i], comps[j])
    for block, sub in zip(comps, subs):
        if not is_homogeneous(sub):
            return ComponentNotHomogeneous(block)
    return None


def classify_hh_finite(g: OrientedGraph, cap: int | None = None) -> HHLabel:
    if not g.arcs:
        return EmptyGraph(g.order)
    comps = weakly_connected_components(g)
    c3 = cycle_c3()
    if all(len(b) == 3 and is_isomorphic(g.induced_subgraph(b), c3) for b in comps):
        return DisjointC3(len(comps))
    reason = _p2(g)
    if reason is None and len(comps) > 1:
        reason = _component_reason(g, comps)
    if reason is None:
        w = find_witness(g, cap)
        if w is None:
            raise TheoremViolation(f"no witness found for {g!r}")
        reason = WitnessReason(w)
    return NotHH(reason)


def classify_ph_finite(g: OrientedGraph, cap: int | None = None) -> HHLabel:
    """Same labels as :func:`classify_hh_finite`; finite PH and HH coincide.

    Negative labels additionally carry a K-configuration certificate when
    the graph contains K.
    """
    label = classify_hh_finite(g, cap)
    if isinstance(label, NotHH):
        cert = refute_ph_via_K(g)
        if cert is not None:
            return NotHH(label.reason, cert)
    return label


def label_is_hh(label: HHLabel) -> bool:
    return not isinstance(label, NotHH)


def verify_against_bruteforce(nmax: int, workers: int = 1) -> list[tuple[OrientedGraph, str]]:
    """Compare classifier labels with the witness search on every graph up to ``nmax`` vertices.

    Returns ``(graph, description)`` pairs for every disagreement or
    certificate that fails to re-verify.
    """
    from .census import enumerate_oriented_graphs

    discrepancies = []
    for n in range(1, nmax + 1):
        for g in enumerate_oriented_graphs(n, workers=workers):
            try:
                label = classify_hh_finite(g)
            except TheoremViolation as exc:
                discrepancies.append((g, str(exc)))
                continue
            brute = is_hh(g)
            if label_is_hh(label) != brute:
                discrepancies.append((g, f"label {label} but is_hh={brute}"))
            elif isinstance(label, NotHH) and not label.reason.verify(g):
                discrepancies.append((g, f"certificate {label.reason} does not verify"))
    return discrepancies


def describe(label: HHLabel) -> str:
    if isinstance(label, EmptyGraph):
        return f"EmptyGraph({label.k}): arcless, homomorphism homogeneous and PH"
    if isinstance(label, DisjointC3):
        return f"DisjointC3({label.k}): {label.k} disjoint 3-cycles, homomorphism homogeneous and PH"
    r = label.reason
    if isinstance(r, InducedP2):
        x, y, z = r.embedding
        text = f"induced 2-path {x}->{y}->{z} with {x},{z} non-adjacent"
    elif isinstance(r, ComponentNotTournamentButDisconnected):
        text = f"disconnected, but {r.x},{r.y} are non-adjacent in one component ({r.z} lies in another)"
    elif isinstance(r, ComponentAgesDiffer):
        text = f"component {list(r.first)} does not embed into component {list(r.second)}"
    elif isinstance(r, ComponentNotHomogeneous):
        text = f"component {list(r.component)} is not a homogeneous tournament"
    else:
        w = r.witness
        text = f"witness A={list(w.A)} B={list(w.B)} h={w.h.as_dict()} v={w.v}"
    out = f"NotHH: {text}"
    if label.k_certificate is not None:
        c = label.k_certificate
        out += f"; contains K on {(c.a, c.b, c.c, c.d)}, so the square has induced 2-path {list(c.path)}"
    return out


def reason_to_dict(r: Reason) -> dict:
    if isinstance(r, InducedP2):
        return {"kind": "InducedP2", "embedding": list(r.embedding)}
    if isinstance(r, ComponentNotTournamentButDisconnected):
        return {"kind": "ComponentNotTournamentButDisconnected", "x": r.x, "y": r.y, "z": r.z}
    if isinstance(r, ComponentAgesDiffer):
        return {"kind": "ComponentAgesDiffer", "first": list(r.first), "second": list(r.second)}
    if isinstance(r, ComponentNotHomogeneous):
        return {"kind": "ComponentNotHomogeneous", "component": list(r.component)}
    return {"kind": "Witness", "witness": r.witness.to_dict()}


def label_to_dict(label: HHLabel) -> dict:
    if isinstance(label, EmptyGraph):
        return {"label": "EmptyGraph", "k": label.k}
    if isinstance(label, DisjointC3):
        return {"label": "DisjointC3", "k": label.k}
    out = {"label": "NotHH", "reason": reason_to_dict(label.reason)}
    if label.k_certificate is not None:
        c = label.k_certificate
        out["k_certificate"] = {"K": [c.a, c.b, c.c, c.d], "square_path": [list(p) for p in c.path]}
    return out
