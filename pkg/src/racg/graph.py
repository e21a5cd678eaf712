"""Finite simple graphs: links, stars, cliques and small induced-pattern search.

A graph defines a right-angled Coxeter group: vertices are involutive
generators, adjacent generators commute.  The vertex order fixed here is the
total order used for ShortLex normal forms everywhere else in the package.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    """Raised on malformed graph text; carries a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnknownVertexError(GraphError):
    pass


class SimpleGraph:
    """Immutable undirected simple graph with named vertices.

    Vertices are ordered (lexicographically by default, or by an explicit
    order list); the order is significant downstream.
    """

    __slots__ = ("vertices", "index", "adj", "_edges", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        order: Optional[Iterable[str]] = None,
    ):
        vs = list(vertices)
        if any(not isinstance(v, str) or not v for v in vs):
            raise GraphError("vertex names must be nonempty strings")
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex names")
        if order is not None:
            order = list(order)
            if sorted(order) != sorted(vs):
                raise GraphError("order list must be a permutation of the vertices")
            vs = order
        else:
            vs = sorted(vs)
        self.vertices: tuple[str, ...] = tuple(vs)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        es = set()
        for u, v in edges:
            if u not in self.index:
                raise UnknownVertexError(f"unknown edge endpoint {u!r}")
            if v not in self.index:
                raise UnknownVertexError(f"unknown edge endpoint {v!r}")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
            es.add(frozenset((u, v)))
        self.adj = {v: frozenset(s) for v, s in adj.items()}
        self._edges = frozenset(es)
        self._hash = hash((self.vertices, self._edges))

    # -- basic queries ----------------------------------------------------

    def __contains__(self, v: str) -> bool:
        return v in self.index

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: str, v: str) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.adj[u]

    @property
    def edges(self) -> frozenset:
        return self._edges

    def check_vertex(self, v: str) -> None:
        if v not in self.index:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def check_subset(self, s: Iterable[str]) -> frozenset:
        s = frozenset(s)
        for v in s:
            self.check_vertex(v)
        return s

    def sorted(self, s: Iterable[str]) -> list[str]:
        """Vertices of ``s`` in this graph's vertex order."""
        return sorted(s, key=self.index.__getitem__)

    def induced(self, s: Iterable[str]) -> "SimpleGraph":
        s = self.check_subset(s)
        keep = self.sorted(s)
        edges = [(u, v) for u, v in combinations(keep, 2) if v in self.adj[u]]
        return SimpleGraph(keep, edges, order=keep)

    def with_edge(self, u: str, v: str) -> "SimpleGraph":
        self.check_vertex(u)
        self.check_vertex(v)
        edges = [tuple(e) for e in self._edges] + [(u, v)]
        return SimpleGraph(self.vertices, edges, order=self.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.vertices == other.vertices
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        es = sorted(tuple(self.sorted(e)) for e in self._edges)
        return f"SimpleGraph({list(self.vertices)}, {es})"

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        for e in sorted(tuple(self.sorted(e)) for e in self._edges):
            lines.append(f"edge: {e[0]} {e[1]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimpleGraph":
        """Parse the graph text format.

        Line 1: ``vertices: v1 v2 ...``; then ``edge: u v`` lines; ``#``
        comments ignored; an optional ``order: ...`` line overrides the
        ShortLex vertex order.  Errors report line numbers.
        """
        vertices: Optional[list[str]] = None
        order: Optional[list[str]] = None
        edges: list[tuple[str, str]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise GraphParseError(lineno, f"expected 'key: ...', got {raw!r}")
            key, _, rest = line.partition(":")
            key = key.strip()
            fields = rest.split()
            if key == "vertices":
                if vertices is not None:
                    raise GraphParseError(lineno, "duplicate 'vertices:' line")
                if not fields:
                    raise GraphParseError(lineno, "empty vertex list")
                vertices = fields
            elif key == "edge":
                if vertices is None:
                    raise GraphParseError(lineno, "'edge:' before 'vertices:'")
                if len(fields) != 2:
                    raise GraphParseError(lineno, "edge needs exactly two endpoints")
                u, v = fields
                for x in (u, v):
                    if x not in vertices:
                        raise GraphParseError(lineno, f"unknown vertex {x!r}")
                if u == v:
                    raise GraphParseError(lineno, f"self-loop at {u!r}")
                edges.append((u, v))
            elif key == "order":
                if vertices is None:
                    raise GraphParseError(lineno, "'order:' before 'vertices:'")
                if sorted(fields) != sorted(vertices):
                    raise GraphParseError(
                        lineno, "order list must be a permutation of the vertices"
                    )
                order = fields
            else:
                raise GraphParseError(lineno, f"unknown key {key!r}")
        if vertices is None:
            raise GraphParseError(1, "missing 'vertices:' line")
        return cls(vertices, edges, order=order)


# -- link / star / cliques ----------------------------------------------


def link(g: SimpleGraph, s: Iterable[str]) -> frozenset:
    """Vertices adjacent to every member of ``s``.

    For empty ``s`` this is all vertices (intersection over an empty family).
    """
    s = g.check_subset(s)
    if not s:
        return frozenset(g.vertices)
    result = None
    for v in s:
        result = g.adj[v] if result is None else result & g.adj[v]
    return frozenset(result)


def star(g: SimpleGraph, v: str) -> frozenset:
    g.check_vertex(v)
    return frozenset({v}) | g.adj[v]


def is_clique(g: SimpleGraph, s: Iterable[str]) -> bool:
    s = g.check_subset(s)
    return all(v in g.adj[u] for u, v in combinations(s, 2))


def center_clique(g: SimpleGraph) -> frozenset:
    """Vertices adjacent to everything else: the intersection of all stars."""
    if not g.vertices:
        raise GraphError("empty graph")
    result = frozenset(g.vertices)
    for v in g.vertices:
        result &= star(g, v)
    return result


# -- fixed pattern graphs ------------------------------------------------

L = "L"
L_PLUS = "L_PLUS"
K23 = "K23"
K23_PLUS = "K23_PLUS"
C4 = "C4"

PATTERNS: dict[str, SimpleGraph] = {
    L: SimpleGraph(["x1", "x2", "x3"], [], order=["x1", "x2", "x3"]),
    L_PLUS: SimpleGraph(["x1", "x2", "x3"], [("x1", "x2")], order=["x1", "x2", "x3"]),
    K23: SimpleGraph(
        ["a1", "a2", "b1", "b2", "b3"],
        [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")],
        order=["a1", "a2", "b1", "b2", "b3"],
    ),
    K23_PLUS: SimpleGraph(
        ["a1", "a2", "b1", "b2", "b3"],
        [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")] + [("b1", "b2")],
        order=["a1", "a2", "b1", "b2", "b3"],
    ),
    C4: SimpleGraph(
        ["c1", "c2", "c3", "c4"],
        [("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c1")],
        order=["c1", "c2", "c3", "c4"],
    ),
}


def find_induced(g: SimpleGraph, pattern: str) -> Optional[dict[str, str]]:
    """First induced embedding of a named pattern, or None.

    The returned map sends pattern vertices to graph vertices, is injective
    and preserves both edges and non-edges.  Deterministic: backtracking in
    pattern-vertex order with candidates in graph vertex order.
    """
    if pattern not in PATTERNS:
        raise GraphError(f"unknown pattern {pattern!r}")
    p = PATTERNS[pattern]
    pverts = p.vertices
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(pverts):
            return True
        pv = pverts[k]
        for gv in g.vertices:
            if gv in used:
                continue
            ok = True
            for prev in pverts[:k]:
                if p.adjacent(pv, prev) != g.adjacent(gv, assignment[prev]):
                    ok = False
                    break
            if ok:
                assignment[pv] = gv
                used.add(gv)
                if extend(k + 1):
                    return True
                used.discard(gv)
                del assignment[pv]
        return False

    return dict(assignment) if extend(0) else None


def has_induced(g: SimpleGraph, pattern: str) -> bool:
    return find_induced(g, pattern) is not None
