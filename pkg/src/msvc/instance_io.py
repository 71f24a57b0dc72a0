"""Text formats for instances and orderings.

Instance files are DIMACS-flavored::

    c optional comment
    p msvc <n> <m> <k> <w>
    e <u> <v>        (m lines, 1-indexed endpoints)

Ordering files hold n whitespace-separated 1-indexed vertex ids in position
order.  Writers emit canonical text (sorted edges, no comments) so that
write -> parse -> write round-trips bit-exactly.
"""

from __future__ import annotations

from .graph import Instance, Ordering, OrderingError, build_graph


class ParseError(ValueError):
    """Malformed instance or ordering text."""


def write_instance(inst: Instance) -> str:
    g = inst.graph
    lines = [f"p msvc {g.n} {g.m} {inst.k} {inst.w}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    n = m = k = w = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(parts) != 6 or parts[1] != "msvc":
                raise ParseError(f"line {lineno}: expected 'p msvc <n> <m> <k> <w>'")
            try:
                n, m, k, w = (int(x) for x in parts[2:])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: non-integer header field") from exc
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative n or m")
            if k < 0 or w < 0:
                raise ParseError(f"line {lineno}: negative k or w")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: non-integer endpoint") from exc
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(f"line {lineno}: endpoint outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'p msvc' header")
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges, found {len(edges)}")
    try:
        graph = build_graph(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return Instance(graph=graph, w=w, k=k)


def write_ordering(ordering: Ordering) -> str:
    return " ".join(str(v + 1) for v in ordering.sequence) + "\n"


def parse_ordering(text: str, n: int) -> Ordering:
    tokens = text.split()
    if len(tokens) != n:
        raise ParseError(f"expected {n} vertex ids, found {len(tokens)}")
    try:
        seq = [int(t) - 1 for t in tokens]
    except ValueError as exc:
        raise ParseError("non-integer vertex id in ordering") from exc
    try:
        return Ordering.from_sequence(seq)
    except OrderingError as exc:
        raise ParseError(str(exc)) from exc


def read_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def read_ordering(path: str, n: int) -> Ordering:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ordering(fh.read(), n)
