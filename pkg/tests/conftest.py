import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from homhom.graph import OrientedGraph


@st.composite
def oriented_graphs(draw, min_order=1, max_order=6):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    states = draw(st.lists(st.sampled_from((0, 1, 2)), min_size=len(pairs), max_size=len(pairs)))
    arcs = [(u, v) if s == 1 else (v, u) for (u, v), s in zip(pairs, states) if s]
    return OrientedGraph(n, frozenset(arcs))


@st.composite
def tournaments(draw, min_order=1, max_order=6):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    flips = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return OrientedGraph(n, frozenset((v, u) if f else (u, v) for (u, v), f in zip(pairs, flips)))


def permutations_of(g: OrientedGraph):
    return st.permutations(list(range(g.order)))


def adjacency(g: OrientedGraph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.uint8)
    for u, v in g.arcs:
        a[u, v] = 1
    return a


def perm_table_form(g: OrientedGraph) -> bytes:
    """Independent canonical form: least adjacency matrix over all n! relabellings."""
    a = adjacency(g)
    perms = np.array(list(itertools.permutations(range(g.order))), dtype=np.intp)
    mats = a[perms[:, :, None], perms[:, None, :]].reshape(len(perms), -1)
    order = np.lexsort(mats.T[::-1])
    return bytes([g.order]) + mats[order[0]].tobytes()


def naive_is_hh(g: OrientedGraph) -> bool:
    """Every local homomorphism extends to a total endomorphism (explicit enumeration)."""
    a = adjacency(g).astype(bool)
    n = g.order
    arcs = np.array(sorted(g.arcs), dtype=np.intp).reshape(-1, 2)
    maps = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.intp)
    if len(arcs):
        ok = a[maps[:, arcs[:, 0]], maps[:, arcs[:, 1]]].all(axis=1)
    else:
        ok = np.ones(len(maps), dtype=bool)
    endos = maps[ok]
    for k in range(1, n + 1):
        for dom in itertools.combinations(range(n), k):
            dom = list(dom)
            sub = [(i, j) for i, x in enumerate(dom) for j, y in enumerate(dom) if a[x, y]]
            restrictions = set(map(tuple, endos[:, dom].tolist()))
            for img in itertools.product(range(n), repeat=k):
                if all(a[img[i], img[j]] for i, j in sub) and img not in restrictions:
                    return False
    return True


@pytest.fixture(scope="session")
def graphs_upto5():
    from homhom.census import enumerate_oriented_graphs

    return {n: list(enumerate_oriented_graphs(n)) for n in range(1, 6)}
