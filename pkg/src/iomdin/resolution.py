"""Decorated resolution graphs and their exact graph calculus.

A ResGraph carries the three classical decorations of an (embedded)
resolution graph: multiplicities, genera and self-intersections, plus
arrowheads with multiplicities for the strict transform of the function.
Multiplicities and self-intersections may be partially absent while a
graph is under construction.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .errors import InconsistentMultiplicities, NotPlaneCurveGraph
from .graphs import Edge, MultiGraph
from . import matrices


class Arrow(NamedTuple):
    id: str
    on: str
    mult: int


class EulerViolation(NamedTuple):
    vertex: str
    residual: object   # int, or None when a decoration is missing
    reason: str


@dataclass(frozen=True)
class ResGraph:
    graph: MultiGraph
    mult: dict = field(default_factory=dict)
    genus: dict = field(default_factory=dict)
    selfint: dict = field(default_factory=dict)
    arrows: tuple = ()

    @staticmethod
    def build(graph, mult=None, genus=None, selfint=None, arrows=()):
        arrows = tuple(sorted(Arrow(*a) for a in arrows))
        seen = set()
        for a in arrows:
            if a.id in seen:
                raise ValueError("duplicate arrowhead id %r" % (a.id,))
            seen.add(a.id)
            if not graph.has_vertex(a.on):
                raise ValueError("arrowhead %r sits on unknown vertex %r" % (a.id, a.on))
            if a.mult < 1:
                raise ValueError("arrowhead %r must have positive multiplicity" % (a.id,))
        return ResGraph(graph, dict(mult or {}), dict(genus or {}),
                        dict(selfint or {}), arrows)

    def arrows_at(self, v):
        return tuple(a for a in self.arrows if a.on == v)

    def vertex_count(self) -> int:
        return len(self.graph.vertices)


def euler_residue(g: ResGraph, v) -> int:
    """e_v*m_v + sum of adjacent multiplicities (loops twice, arrows included)."""
    r = g.selfint[v] * g.mult[v]
    for e, u in g.graph.incidences(v):
        r += g.mult[u]
    for a in g.arrows_at(v):
        r += a.mult
    return r


def euler_check(g: ResGraph):
    """Violations of the multiplicity/self-intersection balance, per vertex.

    Empty result means the relation holds everywhere; a missing decoration
    is reported as its own violation.
    """
    out = []
    for v in g.graph.vertices:
        missing = [name for name, d in (("mult", g.mult), ("selfint", g.selfint))
                   if v not in d]
        for e, u in g.graph.incidences(v):
            if u not in g.mult and "adjacent mult" not in missing:
                missing.append("adjacent mult")
        if missing:
            out.append(EulerViolation(v, None, "missing " + ", ".join(missing)))
            continue
        r = euler_residue(g, v)
        if r != 0:
            out.append(EulerViolation(v, r, "residual %d" % r))
    return out


def solve_selfints(g: ResGraph) -> ResGraph:
    """Fill in the missing self-intersections from the multiplicities.

    For each undecorated vertex, e_v = -(sum of adjacent multiplicities,
    loops counted twice, arrowheads included) / m_v; a non-integral
    quotient means the multiplicities cannot belong to a resolution.
    """
    selfint = dict(g.selfint)
    for v in g.graph.vertices:
        if v in selfint:
            continue
        if v not in g.mult:
            raise InconsistentMultiplicities("vertex %r has no multiplicity" % (v,))
        total = sum(g.mult[u] for _, u in g.graph.incidences(v))
        total += sum(a.mult for a in g.arrows_at(v))
        if total % g.mult[v] != 0:
            raise InconsistentMultiplicities(
                "inconsistent multiplicities at vertex %r: %d not divisible by %d"
                % (v, total, g.mult[v]))
        selfint[v] = -total // g.mult[v]
    return replace(g, selfint=selfint)


@dataclass(frozen=True)
class IntersectionMatrix:
    order: tuple
    rows: tuple


def intersection_matrix(g: ResGraph) -> IntersectionMatrix:
    """Diagonal e_v (+2 per loop), off-diagonal the number of joining edges."""
    order = tuple(g.graph.vertices)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    m = [[0] * n for _ in range(n)]
    for v in order:
        m[idx[v]][idx[v]] = g.selfint[v] + 2 * len(g.graph.loops_at(v))
    for e in g.graph.edges:
        if not e.is_loop:
            m[idx[e.a]][idx[e.b]] += 1
            m[idx[e.b]][idx[e.a]] += 1
    return IntersectionMatrix(order, tuple(tuple(r) for r in m))


def det_abs(m: IntersectionMatrix) -> int:
    return matrices.det_abs([list(r) for r in m.rows])


def is_negative_definite(m: IntersectionMatrix) -> bool:
    return matrices.is_negative_definite([list(r) for r in m.rows])


def lattice_profile(g: ResGraph):
    """(|det|, negative definite?) of the intersection form, sparsely."""
    diag = {v: g.selfint[v] + 2 * len(g.graph.loops_at(v)) for v in g.graph.vertices}
    off = {}
    for e in g.graph.edges:
        if not e.is_loop:
            key = frozenset((e.a, e.b))
            off[key] = off.get(key, 0) + 1
    return matrices.graph_lattice_profile(diag, off)


def _plane_curve_guard(g: ResGraph):
    if not g.graph.is_tree():
        raise NotPlaneCurveGraph("not a plane-curve graph: underlying graph is not a tree")
    for v in g.graph.vertices:
        if g.genus.get(v, 0) != 0:
            raise NotPlaneCurveGraph("not a plane-curve graph: vertex %r has genus > 0" % (v,))
        if g.mult.get(v, 0) < 1:
            raise NotPlaneCurveGraph("vertex %r lacks a positive multiplicity" % (v,))
    for a in g.arrows:
        if a.mult != 1:
            raise NotPlaneCurveGraph("arrowhead %r must have multiplicity 1" % (a.id,))


def acampo_chi(g: ResGraph) -> int:
    """Euler characteristic of the smoothing, from the weighted dual tree.

    chi = sum over vertices of m_v * (2 - delta_v) with delta_v the valence
    counting arrowheads (and loops twice, though a valid input has none).
    """
    _plane_curve_guard(g)
    chi = 0
    for v in g.graph.vertices:
        delta = g.graph.valence(v) + len(g.arrows_at(v))
        chi += g.mult[v] * (2 - delta)
    return chi


def milnor_from_plane_graph(g: ResGraph) -> int:
    return 1 - acampo_chi(g)


def strip_for_minimization(g: ResGraph) -> ResGraph:
    """Drop arrowheads and multiplicities, keeping genus and self-intersection."""
    return ResGraph(g.graph, {}, dict(g.genus), dict(g.selfint), ())


def blow_down(g: ResGraph, aggressive: bool = False) -> ResGraph:
    """Contract rational (-1)-vertices until none is eligible.

    Default mode only removes vertices of valence <= 2 (staying inside
    normal-crossing configurations); aggressive mode removes any rational
    (-1)-vertex, joining all former neighbour incidences pairwise.  Each
    incidence adds +1 to the neighbour's self-intersection and each pair of
    incidences becomes a new edge (a loop if they share the endpoint).
    Vertices are processed lowest id first, so the result is deterministic.
    """
    if g.arrows:
        raise ValueError("strip arrowheads before minimizing")
    graph = g.graph
    genus = dict(g.genus)
    selfint = dict(g.selfint)

    def eligible(v):
        if genus.get(v, 0) != 0 or selfint.get(v) != -1 or graph.loops_at(v):
            return False
        return aggressive or graph.valence(v) <= 2

    heap = [v for v in graph.vertices if eligible(v)]
    heapq.heapify(heap)
    eids = {e.id for e in graph.edges}
    fresh = 0
    while heap:
        v = heapq.heappop(heap)
        if not graph.has_vertex(v) or not eligible(v):
            continue
        incid = graph.incidences(v)
        others = [u for _, u in incid]
        graph = graph.without_vertex(v)
        new_edges = []
        for i in range(len(others)):
            selfint[others[i]] += 1
            for j in range(i + 1, len(others)):
                while "bd%d" % fresh in eids:
                    fresh += 1
                eids.add("bd%d" % fresh)
                new_edges.append(("bd%d" % fresh, others[i], others[j]))
                fresh += 1
        graph = graph.with_edges(new_edges)
        del selfint[v]
        genus.pop(v, None)
        for u in set(others):
            if eligible(u):
                heapq.heappush(heap, u)
    return ResGraph(graph, {}, genus, selfint, ())


def export(g: ResGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return serialize_resgraph(g)
    raise ValueError("unknown export format %r (expected 'dot' or 'json')" % (fmt,))


def to_dot(g: ResGraph) -> str:
    lines = ["graph {"]
    for v in g.graph.vertices:
        parts = []
        if v in g.mult:
            parts.append("(%d)" % g.mult[v])
        parts.append("g=%d" % g.genus.get(v, 0))
        if v in g.selfint:
            parts.append("e=%d" % g.selfint[v])
        lines.append('  "%s" [label="%s %s"];' % (v, v, " ".join(parts)))
    for a in g.arrows:
        lines.append('  "%s" [shape=rarrow, label="(%d)"];' % (a.id, a.mult))
    for e in g.graph.edges:
        lines.append('  "%s" -- "%s";' % (e.a, e.b))
    for a in g.arrows:
        lines.append('  "%s" -- "%s";' % (a.on, a.id))
    lines.append("}")
    return "\n".join(lines) + "\n"


def resgraph_to_doc(g: ResGraph) -> dict:
    vertices = []
    for v in g.graph.vertices:
        entry = {"id": v, "genus": g.genus.get(v, 0)}
        if v in g.mult:
            entry["mult"] = g.mult[v]
        if v in g.selfint:
            entry["selfint"] = g.selfint[v]
        vertices.append(entry)
    return {
        "vertices": vertices,
        "arrowheads": [{"id": a.id, "on": a.on, "mult": a.mult} for a in g.arrows],
        "edges": [{"ends": sorted((e.a, e.b))} for e in sorted(g.graph.edges)],
    }


def serialize_resgraph(g: ResGraph) -> str:
    return json.dumps(resgraph_to_doc(g), indent=2, sort_keys=True) + "\n"


def resgraph_from_doc(doc: dict) -> ResGraph:
    vertices = [v["id"] for v in doc.get("vertices", [])]
    edges = [("e%d" % i, e["ends"][0], e["ends"][1])
             for i, e in enumerate(doc.get("edges", []))]
    graph = MultiGraph.build(vertices, edges)
    mult = {v["id"]: v["mult"] for v in doc["vertices"] if "mult" in v}
    genus = {v["id"]: v.get("genus", 0) for v in doc["vertices"]}
    selfint = {v["id"]: v["selfint"] for v in doc["vertices"] if "selfint" in v}
    arrows = [(a["id"], a["on"], a.get("mult", 1)) for a in doc.get("arrowheads", [])]
    return ResGraph.build(graph, mult, genus, selfint, arrows)
