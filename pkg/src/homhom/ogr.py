"""The ``.ogr`` interchange format.

::

    ogr 3
    # comment
    0 1
    1 2
    2 0

Line one is ``ogr <order>``; every further non-empty line is one arc ``u v``
(0-indexed). ``#`` starts a comment anywhere on a line. Duplicate arcs are
rejected, as are loops and opposite pairs.
"""

from pathlib import Path

from .errors import FormatError, GraphValueError
from .graph import OrientedGraph


def parse_ogr(text: str) -> OrientedGraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise FormatError("empty .ogr input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "ogr" or not parts[1].isdigit():
        raise FormatError(f"line {lineno}: expected 'ogr <order>', got {header!r}")
    order = int(parts[1])
    arcs = set()
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'u v', got {body!r}")
        arc = (int(parts[0]), int(parts[1]))
        if arc in arcs:
            raise FormatError(f"line {lineno}: duplicate arc {arc}")
        arcs.add(arc)
    try:
        return OrientedGraph(order, frozenset(arcs))
    except GraphValueError as exc:
        raise FormatError(str(exc)) from exc


def format_ogr(g: OrientedGraph, comment: str | None = None) -> str:
    out = [f"ogr {g.order}"]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(out) + "\n"


def read_ogr(path) -> OrientedGraph:
    return parse_ogr(Path(path).read_text())


def write_ogr(g: OrientedGraph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_ogr(g, comment))
