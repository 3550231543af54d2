"""Named configurations and tournament families.

Each configuration has a fixed vertex indexing so tests are reproducible;
compare against them up to isomorphism.

======  =========================================================
name    arcs
======  =========================================================
P2      0->1, 1->2 (0, 2 non-adjacent)
L1      0->2, 1->2
L2      2->0, 2->1
A       3->2, 2->1, 1->3, 2->0, 0->3
B       0->1, vertex 2 isolated
C1      0->1, 0->2, 3->2
C2      C1 plus 1->2
K       0->1, 1->2, 2->3, 3->0, 3->1, 0->2
D       3-cycle 0->1->2->0, plus 3->0, 3->1, 3->2
Dstar   3-cycle 0->1->2->0, plus 0->3, 1->3, 2->3
X4      0->2, 0->3, 1->2, 1->3
X5      X4 plus 0->4, 1->4, 4->2, 4->3
======  =========================================================
"""

from enum import Enum

from .graph import OrientedGraph, empty_graph, new_graph


class ConfigName(str, Enum):
    P2 = "P2"
    L1 = "L1"
    L2 = "L2"
    A = "A"
    B = "B"
    C1 = "C1"
    C2 = "C2"
    K = "K"
    D = "D"
    Dstar = "Dstar"
    X4 = "X4"
    X5 = "X5"


_CYCLE = [(0, 1), (1, 2), (2, 0)]
_X4 = [(0, 2), (0, 3), (1, 2), (1, 3)]
_C1 = [(0, 1), (0, 2), (3, 2)]

_CATALOG = {
    ConfigName.P2: (3, [(0, 1), (1, 2)]),
    ConfigName.L1: (3, [(0, 2), (1, 2)]),
    ConfigName.L2: (3, [(2, 0), (2, 1)]),
    ConfigName.A: (4, [(3, 2), (2, 1), (1, 3), (2, 0), (0, 3)]),
    ConfigName.B: (3, [(0, 1)]),
    ConfigName.C1: (4, _C1),
    ConfigName.C2: (4, _C1 + [(1, 2)]),
    ConfigName.K: (4, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 1), (0, 2)]),
    ConfigName.D: (4, _CYCLE + [(3, 0), (3, 1), (3, 2)]),
    ConfigName.Dstar: (4, _CYCLE + [(0, 3), (1, 3), (2, 3)]),
    ConfigName.X4: (4, _X4),
    ConfigName.X5: (5, _X4 + [(0, 4), (1, 4), (4, 2), (4, 3)]),
}


def get_config(name) -> OrientedGraph:
    order, arcs = _CATALOG[ConfigName(name)]
    return new_graph(order, arcs)


def transitive_tournament(n: int) -> OrientedGraph:
    """L_n: arcs i->j for all i < j."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return new_graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_c3() -> OrientedGraph:
    return new_graph(3, _CYCLE)


def circular_tournament(m: int) -> OrientedGraph:
    """S(2m+1): vertex i beats the next m vertices around the cycle."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m + 1
    return new_graph(n, ((i, (i + d) % n) for i in range(n) for d in range(1, m + 1)))


def henson_A(n: int) -> OrientedGraph:
    """Tournament on 0..n+2 with a->b iff b == a+1 or b+1 < a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    verts = range(n + 3)
    return new_graph(n + 3, ((a, b) for a in verts for b in verts if b == a + 1 or b + 1 < a))


def henson_B(n: int) -> OrientedGraph:
    """henson_A(n) plus alpha = n+3 with alpha->0, alpha->n+2, b->alpha otherwise."""
    base = henson_A(n)
    alpha = n + 3
    arcs = set(base.arcs) | {(alpha, 0), (alpha, n + 2)}
    arcs |= {(b, alpha) for b in range(1, n + 2)}
    return new_graph(n + 4, arcs)


def graph_from_name(text: str) -> OrientedGraph:
    """Build a graph from a configuration name, ``An:k``, ``Bn:k``, ``S:m``, ``Ln:k``,
    ``I:k`` or ``C3``."""
    text = text.strip()
    if text == "C3":
        return cycle_c3()
    if ":" in text:
        family, _, arg = text.partition(":")
        if not arg.isdigit():
            raise ValueError(f"bad family argument in {text!r}")
        k = int(arg)
        builders = {
            "An": henson_A,
            "Bn": henson_B,
            "S": circular_tournament,
            "Ln": transitive_tournament,
            "I": empty_graph,
        }
        if family not in builders:
            raise ValueError(f"unknown family {family!r}")
        return builders[family](k)
    try:
        return get_config(text)
    except ValueError:
        raise ValueError(f"unknown configuration {text!r}") from None
