"""Decorated bipartite dual graphs of boundary divisors.

A boundary divisor of the space of admissible degree-d covers is encoded by
a two-sided graph: vertices carry (genus, degree), edges join the two sides
and carry the local degree of the cover at the corresponding node.  The
degree sums on the two sides both equal d, the local degrees at a vertex
sum to its degree, and the total arithmetic genus is

    g = sum of vertex genera + #edges - #vertices + 1.

Vertex counts of satellite (genus-zero, degree-one) vertices are always
derived from the degree-sum rule, never taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvalidGraph, OutOfRange


@dataclass(frozen=True)
class Vertex:
    ident: str
    side: str           # "L" or "R"
    genus: int
    degree: int


@dataclass(frozen=True)
class Edge:
    left: str
    right: str
    local_degree: int


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def vertex(self, ident: str) -> Vertex:
        for v in self.vertices:
            if v.ident == ident:
                return v
        raise InvalidGraph(f"no vertex {ident!r}")

    def side(self, side: str) -> list[Vertex]:
        return [v for v in self.vertices if v.side == side]

    def swap_sides(self) -> "DualGraph":
        flip = {"L": "R", "R": "L"}
        return DualGraph(
            tuple(Vertex(v.ident, flip[v.side], v.genus, v.degree)
                  for v in self.vertices),
            tuple(Edge(e.right, e.left, e.local_degree) for e in self.edges))

    def to_json(self) -> dict:
        return {
            "L": [[v.ident, v.genus, v.degree] for v in self.side("L")],
            "R": [[v.ident, v.genus, v.degree] for v in self.side("R")],
            "edges": [[e.left, e.right, e.local_degree] for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DualGraph":
        vertices = tuple(Vertex(i, side, g, d)
                         for side in ("L", "R")
                         for i, g, d in data[side])
        edges = tuple(Edge(l, r, k) for l, r, k in data["edges"])
        return cls(vertices, edges)


def violations(gr: DualGraph, d: int, g: int) -> list[str]:
    """Structured list of convention violations; empty iff the graph is a
    valid boundary-divisor graph for degree d and genus g."""
    problems: list[str] = []
    by_id = {v.ident: v for v in gr.vertices}
    if len(by_id) != len(gr.vertices):
        problems.append("duplicate vertex identifiers")
    for v in gr.vertices:
        if v.side not in ("L", "R"):
            problems.append(f"vertex {v.ident} on unknown side {v.side!r}")
        if v.degree < 1 or v.genus < 0:
            problems.append(f"vertex {v.ident} has invalid decorations")
    for e in gr.edges:
        if e.local_degree < 1:
            problems.append(f"edge {e.left}-{e.right} has nonpositive local degree")
        lv, rv = by_id.get(e.left), by_id.get(e.right)
        if lv is None or rv is None:
            problems.append(f"edge {e.left}-{e.right} references a missing vertex")
        elif not (lv.side == "L" and rv.side == "R"):
            problems.append(f"edge {e.left}-{e.right} does not join L to R")
    for v in gr.vertices:
        incident = sum(e.local_degree for e in gr.edges
                       if v.ident in (e.left, e.right))
        if incident != v.degree:
            problems.append(
                f"vertex {v.ident}: local degrees sum to {incident}, not {v.degree}")
    for side in ("L", "R"):
        total = sum(v.degree for v in gr.side(side))
        if total != d:
            problems.append(f"side {side} has total degree {total}, not {d}")
    total_genus = (sum(v.genus for v in gr.vertices)
                   + len(gr.edges) - len(gr.vertices) + 1)
    if total_genus != g:
        problems.append(f"arithmetic genus {total_genus}, expected {g}")
    return problems


def validate(gr: DualGraph, d: int, g: int) -> bool:
    return not violations(gr, d, g)


def _check_structure(gr: DualGraph) -> None:
    by_id = {v.ident: v for v in gr.vertices}
    for e in gr.edges:
        lv, rv = by_id.get(e.left), by_id.get(e.right)
        if lv is None or rv is None or lv.side != "L" or rv.side != "R":
            raise InvalidGraph("edges must join an L-vertex to an R-vertex")
    for v in gr.vertices:
        incident = sum(e.local_degree for e in gr.edges
                       if v.ident in (e.left, e.right))
        if incident != v.degree:
            raise InvalidGraph(f"vertex {v.ident} degree mismatch")


def ramification_index(gr: DualGraph) -> int:
    """Sum of (local degree - 1) over all edges; zero iff unramified."""
    _check_structure(gr)
    return sum(e.local_degree - 1 for e in gr.edges)


def excess(gr: DualGraph) -> int:
    """min over the two sides of (ramification index + side's total genus).
    Zero exactly for unramified graphs with an all-rational side."""
    r = ramification_index(gr)
    genus_l = sum(v.genus for v in gr.side("L"))
    genus_r = sum(v.genus for v in gr.side("R"))
    return r + min(genus_l, genus_r)


def boundary_multiplicity(profile: tuple[int, ...], node_degree: int) -> Fraction:
    """Intersection multiplicity of a one-parameter family inside a
    boundary divisor: the degree of the node's normal-bundle tensor divided
    by lcm of the local degrees over the node."""
    if not profile or any(m < 1 for m in profile):
        raise OutOfRange("profile must consist of positive integers")
    return Fraction(node_degree, lcm(*profile))


# ---------------------------------------------------------------------------
# Canonical labels (invariant under the left-right symmetry)
# ---------------------------------------------------------------------------

def _one_sided_label(gr: DualGraph) -> str:
    sides = []
    for side in ("L", "R"):
        decorations = sorted((v.genus, v.degree) for v in gr.side(side))
        sides.append(",".join(f"{g}g{d}" for g, d in decorations))
    by_id = {v.ident: v for v in gr.vertices}
    edge_desc = sorted(
        (by_id[e.left].genus, by_id[e.left].degree,
         by_id[e.right].genus, by_id[e.right].degree, e.local_degree)
        for e in gr.edges)
    edges = ";".join(f"({gl}g{dl}|{gr_}g{dr}|{k})"
                     for gl, dl, gr_, dr, k in edge_desc)
    return f"L[{sides[0]}]R[{sides[1]}]E[{edges}]"


def canonical_label(gr: DualGraph) -> str:
    """Deterministic label, identical for a graph and its side-swap."""
    return min(_one_sided_label(gr), _one_sided_label(gr.swap_sides()))


# ---------------------------------------------------------------------------
# Constructors for the standard shapes
# ---------------------------------------------------------------------------

def two_vertex_graph(d: int, profile: tuple[int, ...],
                     genus_left: int, genus_right: int) -> DualGraph:
    """One vertex per side, edges with the given local-degree profile."""
    if sum(profile) != d or any(m < 1 for m in profile):
        raise InvalidGraph(f"{profile} is not a partition of {d}")
    vertices = (Vertex("l", "L", genus_left, d), Vertex("r", "R", genus_right, d))
    edges = tuple(Edge("l", "r", m) for m in sorted(profile, reverse=True))
    return DualGraph(vertices, edges)


def graph_irreducible_node(d: int, g: int) -> DualGraph:
    """Left (genus g-1, degree d); right: a degree-two rational vertex
    joined twice, plus d-2 satellites."""
    vertices = [Vertex("l", "L", g - 1, d), Vertex("w", "R", 0, 2)]
    edges = [Edge("l", "w", 1), Edge("l", "w", 1)]
    for i in range(d - 2):
        vertices.append(Vertex(f"a{i}", "R", 0, 1))
        edges.append(Edge("l", f"a{i}", 1))
    return DualGraph(tuple(vertices), tuple(edges))


def graph_triple_point(d: int, g: int) -> DualGraph:
    """Left (g, d); right: one vertex on a local-degree-3 edge plus d-3
    satellites (the satellite count follows from the degree-sum rule)."""
    vertices = [Vertex("l", "L", g, d), Vertex("t", "R", 0, 3)]
    edges = [Edge("l", "t", 3)]
    for i in range(d - 3):
        vertices.append(Vertex(f"a{i}", "R", 0, 1))
        edges.append(Edge("l", f"a{i}", 1))
    return DualGraph(tuple(vertices), tuple(edges))


def graph_double_pair(d: int, g: int) -> DualGraph:
    """Left (g, d); right: two vertices on local-degree-2 edges plus d-4
    satellites."""
    vertices = [Vertex("l", "L", g, d), Vertex("t1", "R", 0, 2),
                Vertex("t2", "R", 0, 2)]
    edges = [Edge("l", "t1", 2), Edge("l", "t2", 2)]
    for i in range(d - 4):
        vertices.append(Vertex(f"a{i}", "R", 0, 1))
        edges.append(Edge("l", f"a{i}", 1))
    return DualGraph(tuple(vertices), tuple(edges))


def graph_three_vertex_d3(genus_left: int, genus_right: int) -> DualGraph:
    """Degree three, three vertices: left (gL, 3); right a hyperelliptic
    vertex (gR, 2) joined twice plus one satellite."""
    vertices = (Vertex("l", "L", genus_left, 3),
                Vertex("h", "R", genus_right, 2),
                Vertex("a", "R", 0, 1))
    edges = (Edge("l", "h", 1), Edge("l", "h", 1), Edge("l", "a", 1))
    return DualGraph(vertices, edges)


def graph_four_vertex_d3(genus_left: int, genus_right: int) -> DualGraph:
    """Degree three, four vertices: two on each side, with the
    hyperelliptic vertex (gR, 2) joined to both left vertices."""
    vertices = (Vertex("l", "L", genus_left, 2), Vertex("l2", "L", 0, 1),
                Vertex("h", "R", genus_right, 2), Vertex("a", "R", 0, 1))
    edges = (Edge("l", "h", 1), Edge("l2", "h", 1), Edge("l", "a", 1))
    return DualGraph(vertices, edges)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n, parts in non-increasing order."""
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def enumerate_two_vertex(d: int, g: int) -> list[DualGraph]:
    """All two-vertex boundary graphs for degree d and total genus g: every
    partition of d as the edge profile and every genus split compatible
    with the genus formula, deduplicated under the side swap."""
    if d not in (3, 4, 5):
        raise OutOfRange("two-vertex enumeration is wired for d in {3, 4, 5}")
    seen: dict[str, DualGraph] = {}
    for profile in partitions(d):
        edge_count = len(profile)
        genus_total = g - edge_count + 1
        if genus_total < 0:
            continue
        for genus_left in range(genus_total + 1):
            graph = two_vertex_graph(d, profile, genus_left,
                                     genus_total - genus_left)
            if not validate(graph, d, g):
                raise InvalidGraph("enumeration produced an invalid graph")
            seen.setdefault(canonical_label(graph), graph)
    return [seen[label] for label in sorted(seen)]
