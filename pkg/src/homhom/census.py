"""Isomorph-free enumeration of oriented graphs and predicate tallies.

Generation is by canonical augmentation. Every canonical graph on ``n - 1``
vertices (the parent) is extended by one new vertex in all ``3 ** (n - 1)``
ways. A child survives if deleting the vertex that sits last in its
canonical labelling gives back the parent class. Each isomorphism class of
children therefore has exactly one parent. Surviving children are then
deduplicated by canonical form within that parent.

Reports are deterministic. Graphs are sorted by canonical form before
predicates run, and results are collected in input order, so the worker
count never changes a byte of the output.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from . import __version__
from . import caps as _caps
from .graph import (
    CanonicalForm,
    OrientedGraph,
    canonical_form,
    canonical_labeling,
    is_tournament,
)
from .homogeneity import is_hh, is_homogeneous, is_ph_up_to
from .localorder import is_local_order

PREDICATES = ("hh", "ph2", "homog", "tournament", "localorder")


def _children(parent: CanonicalForm, states=(0, 1, 2)) -> list[CanonicalForm]:
    """Canonical children of one parent, sorted by code."""
    n = parent.order + 1
    base = parent.graph()
    base_arcs = list(base.arcs)
    new = n - 1
    found = set()
    seen = set()
    # state 0: no arc, 1: u -> new, 2: new -> u
    for choice in itertools.product(states, repeat=n - 1):
        arcs = list(base_arcs)
        for u, s in enumerate(choice):
            if s == 1:
                arcs.append((u, new))
            elif s == 2:
                arcs.append((new, u))
        child = OrientedGraph(n, frozenset(arcs))
        form, pos = canonical_labeling(child, cap=n)
        if form in seen:
            continue
        seen.add(form)
        last = pos.index(n - 1)
        rest = [v for v in range(n) if v != last]
        if canonical_form(child.induced_subgraph(rest), cap=n) == parent:
            found.add(form)
    return sorted(found, key=lambda f: f.code)


def _map(fn, items: Sequence, workers: int, chunksize: int = 1) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


@lru_cache(maxsize=None)
def _forms_serial(n: int) -> tuple[CanonicalForm, ...]:
    if n == 1:
        return (canonical_form(OrientedGraph(1, frozenset())),)
    out = set()
    for parent in _forms_serial(n - 1):
        out.update(_children(parent))
    return tuple(sorted(out, key=lambda f: f.code))


def canonical_forms(n: int, workers: int = 1) -> tuple[CanonicalForm, ...]:
    """Canonical forms of all oriented graphs on ``n`` vertices, sorted by code."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _caps.check("enumeration", n, _caps.current_caps().enumeration)
    if workers <= 1 or n <= 2:
        return _forms_serial(n)
    parents = canonical_forms(n - 1, workers)
    out = set()
    for kids in _map(_children, parents, workers, chunksize=max(1, len(parents) // (8 * workers))):
        out.update(kids)
    return tuple(sorted(out, key=lambda f: f.code))


@lru_cache(maxsize=None)
def tournament_forms(n: int) -> tuple[CanonicalForm, ...]:
    """Canonical forms of all tournaments on ``n`` vertices.

    Deleting a vertex of a tournament leaves a tournament, so augmenting
    tournaments by arcs only reaches every class.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _caps.check("enumeration", n, _caps.current_caps().enumeration)
    if n == 1:
        return _forms_serial(1)
    out = set()
    for parent in tournament_forms(n - 1):
        out.update(_children(parent, states=(1, 2)))
    return tuple(sorted(out, key=lambda f: f.code))


def enumerate_tournaments(n: int) -> Iterator[OrientedGraph]:
    for form in tournament_forms(n):
        yield form.graph()


def enumerate_oriented_graphs(n: int, workers: int = 1) -> Iterator[OrientedGraph]:
    """One representative per isomorphism class, in canonical-form order."""
    for form in canonical_forms(n, workers):
        yield form.graph()


def enumerate_bruteforce(n: int) -> list[CanonicalForm]:
    """Every arc assignment on ``n`` labelled vertices, deduplicated by canonical form.

    Slow oracle for the augmentation path; fine up to ``n = 5`` (59049 labelled graphs).
    """
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = [(u, v) if s == 1 else (v, u) for (u, v), s in zip(pairs, states) if s]
        forms.add(canonical_form(OrientedGraph(n, frozenset(arcs)), cap=max(n, 1)))
    return sorted(forms, key=lambda f: f.code)


@dataclass(frozen=True)
class CliConfig:
    nmax: int
    predicates: tuple[str, ...] = ("hh",)
    out: Path | None = None
    format: str = "csv"
    workers: int = 1
    caps: _caps.SizeCaps = field(default_factory=_caps.current_caps)

    def __post_init__(self):
        if self.nmax < 1:
            raise ValueError("nmax must be >= 1")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        bad = [p for p in self.predicates if p not in PREDICATES]
        if bad:
            raise ValueError(f"unknown predicates {bad}; choose from {', '.join(PREDICATES)}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        _caps.check("enumeration", self.nmax, self.caps.enumeration)


@dataclass
class CensusReport:
    version: str
    caps: _caps.SizeCaps
    predicates: tuple[str, ...]
    totals: dict[int, int]
    counts: dict[int, dict[str, int]]
    # canonical codes of HH graphs per n; only filled when "hh" is selected
    hh_forms: dict[int, list[int]]

    def rows(self) -> list[list[int]]:
        return [[n, self.totals[n], *(self.counts[n][p] for p in self.predicates)]
                for n in sorted(self.totals)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# homhom {self.version}\n")
        buf.write("# caps " + " ".join(f"{k}={v}" for k, v in asdict(self.caps).items()) + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "total", *self.predicates])
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "version": self.version,
            "caps": asdict(self.caps),
            "predicates": list(self.predicates),
            "rows": [
                {"n": n, "total": self.totals[n], **{p: self.counts[n][p] for p in self.predicates}}
                for n in sorted(self.totals)
            ],
            "hh_graphs": {str(n): [{"order": n, "code": c} for c in codes]
                          for n, codes in sorted(self.hh_forms.items())},
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _evaluate(args) -> tuple[int, dict[str, bool]]:
    form, predicates, caps_ = args
    g = form.graph()
    out = {}
    hh = is_hh(g, caps_.general) if ("hh" in predicates or "ph2" in predicates) else None
    for p in predicates:
        if p == "hh":
            out[p] = hh
        elif p == "ph2":
            # a non-HH graph is a retract of its square, so the square is not HH either
            out[p] = hh and is_ph_up_to(g, 2, caps_.power)
        elif p == "homog":
            out[p] = is_homogeneous(g, caps_.general)
        elif p == "tournament":
            out[p] = is_tournament(g)
        elif p == "localorder":
            out[p] = is_tournament(g) and is_local_order(g)
    return form.code, out


def run_census(cfg: CliConfig) -> CensusReport:
    totals, counts, hh_forms = {}, {}, {}
    for n in range(1, cfg.nmax + 1):
        forms = canonical_forms(n, cfg.workers)
        jobs = [(f, cfg.predicates, cfg.caps) for f in forms]
        results = _map(_evaluate, jobs, cfg.workers, chunksize=max(1, len(jobs) // (8 * cfg.workers)))
        totals[n] = len(forms)
        counts[n] = {p: sum(r[p] for _, r in results) for p in cfg.predicates}
        if "hh" in cfg.predicates:
            hh_forms[n] = [code for code, r in results if r["hh"]]
    report = CensusReport(__version__, cfg.caps, tuple(cfg.predicates), totals, counts, hh_forms)
    if cfg.out is not None:
        write_atomic(Path(cfg.out), report.render(cfg.format))
    return report


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
