"""Undirected multigraphs with opaque string ids.

This is the bare substrate shared by every other module: parallel edges
and loops are allowed, vertices and edges are identified by strings, and
instances are immutable once built.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class Edge(NamedTuple):
    id: str
    a: str
    b: str

    @property
    def is_loop(self) -> bool:
        return self.a == self.b

    def other(self, v):
        """The endpoint opposite to ``v`` (equal to ``v`` on a loop)."""
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise ValueError("vertex %r is not an endpoint of edge %r" % (v, self.id))


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple
    edges: tuple

    @staticmethod
    def build(vertices: Iterable, edges: Iterable = ()) -> "MultiGraph":
        """Build a graph from vertex ids and ``(edge_id, a, b)`` triples."""
        vs = tuple(sorted(vertices))
        seen = set()
        for v in vs:
            if v in seen:
                raise ValueError("duplicate vertex id %r" % (v,))
            seen.add(v)
        es = []
        eids = set()
        for e in edges:
            e = Edge(*e)
            if e.id in eids:
                raise ValueError("duplicate edge id %r" % (e.id,))
            eids.add(e.id)
            for end in (e.a, e.b):
                if end not in seen:
                    raise ValueError("edge %r references unknown vertex %r" % (e.id, end))
            es.append(e)
        es.sort()
        return MultiGraph(vs, tuple(es))

    @cached_property
    def _adj(self):
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.a].append(e)
            if not e.is_loop:
                adj[e.b].append(e)
        return {v: tuple(lst) for v, lst in adj.items()}

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def edges_at(self, v):
        """Edges incident to ``v``; a loop appears once."""
        return self._adj[v]

    def incidences(self, v):
        """(edge, other endpoint) pairs at ``v``; a loop contributes two."""
        out = []
        for e in self._adj[v]:
            out.append((e, e.other(v)))
            if e.is_loop:
                out.append((e, v))
        return out

    def valence(self, v) -> int:
        """Number of edge ends at ``v`` (loops count twice)."""
        return len(self.incidences(v))

    def loops_at(self, v):
        return tuple(e for e in self._adj[v] if e.is_loop)

    @cached_property
    def components(self):
        """Connected components as a sorted tuple of frozensets."""
        remaining = set(self.vertices)
        comps = []
        while remaining:
            start = min(remaining)
            stack = [start]
            comp = {start}
            remaining.discard(start)
            while stack:
                v = stack.pop()
                for e in self._adj[v]:
                    u = e.other(v)
                    if u in remaining:
                        remaining.discard(u)
                        comp.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        comps.sort(key=min)
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def is_tree(self) -> bool:
        # loops or parallel edges raise the edge count above |V| - 1
        if not self.vertices:
            return True
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def subgraph(self, keep_vertices, keep_edge=None) -> "MultiGraph":
        """Induced subgraph on ``keep_vertices``, optionally filtered by edge."""
        keep = set(keep_vertices)
        es = [e for e in self.edges
              if e.a in keep and e.b in keep and (keep_edge is None or keep_edge(e))]
        return MultiGraph(tuple(sorted(keep)), tuple(sorted(es)))

    def without_vertex(self, v) -> "MultiGraph":
        vs = tuple(x for x in self.vertices if x != v)
        es = tuple(e for e in self.edges if v not in (e.a, e.b))
        return MultiGraph(vs, es)

    def with_edges(self, extra) -> "MultiGraph":
        es = list(self.edges)
        eids = {e.id for e in es}
        for e in extra:
            e = Edge(*e)
            if e.id in eids:
                raise ValueError("duplicate edge id %r" % (e.id,))
            eids.add(e.id)
            es.append(e)
        es.sort()
        return MultiGraph(self.vertices, tuple(es))
