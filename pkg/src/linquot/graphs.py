"""Simple graphs, their edge ideals, and the named graph families.

Vertices are 0-based internally; every user-facing text form (files, CLI,
error messages) is 1-based.  Family constructors return a canonically
ordered edge ideal so downstream orderings never have to re-derive the
generator order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (DuplicateEdgeError, FamilyParameterError, GraphError,
                     LoopEdgeError, VertexIndexError)
from .monomials import Monomial, VariableContext


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonically indexed edge list."""

    context: VariableContext
    edges: tuple[tuple[int, int], ...]   # 0-based pairs (i, j), i < j

    @property
    def n(self) -> int:
        return self.context.n

    def edge_monomial(self, t: int) -> Monomial:
        i, j = self.edges[t]
        e = [0] * self.n
        e[i] += 1
        e[j] += 1
        return Monomial(tuple(e))

    def complement(self) -> "Graph":
        present = set(self.edges)
        comp = tuple((i, j) for i in range(self.n) for j in range(i + 1, self.n)
                     if (i, j) not in present)
        return Graph(self.context, comp)

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1 and self.is_connected()

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i + 1, j + 1] for (i, j) in self.edges]}

    def to_text(self) -> str:
        lines = [f"vertices: {self.n}"]
        lines += [f"{i + 1} {j + 1}" for (i, j) in self.edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EdgeIdeal:
    """The edge ideal of a graph: one quadratic generator per edge, in the
    graph's edge-list order."""

    graph: Graph

    @property
    def context(self) -> VariableContext:
        return self.graph.context

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(self.graph.edge_monomial(t) for t in range(len(self.graph.edges)))

    def __len__(self) -> int:
        return len(self.graph.edges)

    def reordered(self, monomials: list[Monomial]) -> "EdgeIdeal":
        """The same ideal with its edge list permuted to match ``monomials``."""
        lookup = {self.graph.edge_monomial(t): self.graph.edges[t]
                  for t in range(len(self.graph.edges))}
        try:
            edges = tuple(lookup[m] for m in monomials)
        except KeyError as e:
            raise GraphError(f"{e.args[0]} is not an edge generator") from None
        if len(edges) != len(self.graph.edges):
            raise GraphError("reordering must use every edge exactly once")
        return EdgeIdeal(Graph(self.context, edges))


def graph_from_edges(n: int, pairs, context: VariableContext | None = None) -> Graph:
    """Build a normalized graph from 1-based vertex pairs."""
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    ctx = context or VariableContext.default(n)
    if ctx.n != n:
        raise GraphError(f"context has {ctx.n} names for {n} vertices")
    edges: list[tuple[int, int]] = []
    seen = set()
    for (a, b) in pairs:
        if not (1 <= a <= n and 1 <= b <= n):
            raise VertexIndexError(f"edge ({a}, {b}) leaves the vertex range 1..{n}")
        if a == b:
            raise LoopEdgeError(f"loop at vertex {a}")
        i, j = (a - 1, b - 1) if a < b else (b - 1, a - 1)
        if (i, j) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({i + 1}, {j + 1})")
        seen.add((i, j))
        edges.append((i, j))
    return Graph(ctx, tuple(edges))


def complement(g: Graph) -> Graph:
    return g.complement()


def is_tree(g: Graph) -> bool:
    return g.is_tree()


# ---------------------------------------------------------------- families

def cycle(n: int) -> EdgeIdeal:
    """C_n with edges (1,2), (2,3), ..., (n-1,n), (1,n)."""
    if n < 3:
        raise FamilyParameterError("cycle needs n >= 3")
    pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return EdgeIdeal(graph_from_edges(n, pairs))


def star(r: int) -> EdgeIdeal:
    """K_{1,r}: centre x1 with leaves x2..x_{r+1}."""
    if r < 1:
        raise FamilyParameterError("star needs r >= 1")
    return EdgeIdeal(graph_from_edges(r + 1, [(1, j) for j in range(2, r + 2)]))


def antipath(n: int) -> EdgeIdeal:
    """Complement of the path x1-...-xn; generators ordered as the nested
    display x1x3, x1x4, ..., x1xn, x2x4, ..., x_{n-2}xn."""
    if n < 4:
        raise FamilyParameterError("antipath needs n >= 4")
    pairs = [(i, j) for i in range(1, n - 1) for j in range(i + 2, n + 1)]
    return EdgeIdeal(graph_from_edges(n, pairs))


def anticycle(n: int) -> EdgeIdeal:
    """Complement of the cycle on n vertices: the antipath minus x1xn."""
    if n < 5:
        raise FamilyParameterError("anticycle needs n >= 5")
    pairs = [(i, j) for i in range(1, n - 1) for j in range(i + 2, n + 1)
             if not (i == 1 and j == n)]
    return EdgeIdeal(graph_from_edges(n, pairs))


def whisker_graph(r: int, l: int) -> tuple[Graph, EdgeIdeal]:
    """Central edge xR-xL with r whiskers y_i at xR and l whiskers z_j at xL.

    The variable order is fixed as (xR, xL, y1..yr, z1..zl) so that the
    canonical generator ordering (a, b1..br, c1..cl) is the identity
    permutation of the edge list.
    """
    if r < 0 or l < 0:
        raise FamilyParameterError("whisker counts must be non-negative")
    names = ["xR", "xL"] + [f"y{i + 1}" for i in range(r)] + [f"z{j + 1}" for j in range(l)]
    ctx = VariableContext(tuple(names))
    pairs = [(1, 2)]
    pairs += [(1, 2 + i + 1) for i in range(r)]
    pairs += [(2, 2 + r + j + 1) for j in range(l)]
    g = graph_from_edges(r + l + 2, pairs, context=ctx)
    return g, EdgeIdeal(g)


def whisker_counts(g: Graph) -> tuple[int, int]:
    """Recover (r, l) from a whisker graph built by :func:`whisker_graph`."""
    expected = whisker_graph(*_count_pendant(g))[0]
    if expected.edges != g.edges:
        raise GraphError("graph is not a canonical whisker graph")
    return _count_pendant(g)


def _count_pendant(g: Graph) -> tuple[int, int]:
    r = sum(1 for (i, j) in g.edges if i == 0 and j >= 2)
    l = sum(1 for (i, j) in g.edges if i == 1 and j >= 2)
    return r, l


FAMILIES = {
    "cycle": (cycle, 1, "cycle:n        the n-cycle (n >= 3)"),
    "star": (star, 1, "star:r         K_{1,r} (r >= 1)"),
    "antipath": (antipath, 1, "antipath:n     complement of the n-path (n >= 4)"),
    "anticycle": (anticycle, 1, "anticycle:n    complement of the n-cycle (n >= 5)"),
    "whisker": (None, 2, "whisker:r,l    central edge with r+l pendant edges"),
}


def family_ideal(spec: str) -> EdgeIdeal:
    """Resolve a ``name:params`` family spec to its edge ideal."""
    name, _, params = spec.partition(":")
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise FamilyParameterError(f"unknown family {name!r}; known families: {known}")
    _, arity, _ = FAMILIES[name]
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise FamilyParameterError(f"family parameters must be integers: {spec!r}")
    if len(args) != arity:
        raise FamilyParameterError(f"family {name!r} takes {arity} parameter(s)")
    if name == "whisker":
        if args[0] + args[1] < 1:
            raise FamilyParameterError("whisker needs r + l >= 1")
        return whisker_graph(args[0], args[1])[1]
    return FAMILIES[name][0](*args)


# ---------------------------------------------------------------- file I/O

def parse_graph_text(text: str) -> Graph:
    """Parse the line-oriented graph format: ``vertices: n`` then ``i j``
    edge lines, 1-based, with ``#`` comments ignored."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.lower().startswith("vertices:"):
                raise GraphError(f"line {lineno}: expected 'vertices: n' header")
            try:
                n = int(line.split(":", 1)[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphError(f"line {lineno}: expected 'i j'")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: edge endpoints must be integers")
    if n is None:
        raise GraphError("missing 'vertices: n' header")
    return graph_from_edges(n, pairs)


def parse_graph_json(text: str) -> Graph:
    data = json.loads(text)
    return graph_from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)
