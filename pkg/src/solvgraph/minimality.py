"""Minimal prime graphs: the predicate, vertex duplication, enumeration,
and the structural facts every minimal graph satisfies.

A realizable graph is minimal when it has more than one vertex, is
connected, and deleting any single edge destroys realizability.  Edge
deletion is the only move checked: removing a non-edge changes nothing,
so the definition is read over existing edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .analysis import analyze
from .errors import LimitExceeded
from .graphs import (
    LabeledGraph,
    Orientation,
    canonical_form,
    complement,
    color_with_at_most,
    is_connected,
    lex_least_coloring,
    without_edge,
)
from .realizability import is_solvable_prime_graph, orient_from_coloring


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    failing_edge: tuple[str, str] | None
    connectivity_ok: bool
    nontrivial_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "schema": "solvgraph.minimal/1",
            "minimal": self.minimal,
            "failing_edge": list(self.failing_edge) if self.failing_edge else None,
            "connectivity_ok": self.connectivity_ok,
            "nontrivial_ok": self.nontrivial_ok,
        }


def is_minimal(g: LabeledGraph) -> MinimalityReport:
    """Minimality report for a realizable graph.

    failing_edge is the first edge in lexicographic order whose removal
    leaves a realizable graph; its presence refutes minimality.
    """
    if not is_solvable_prime_graph(g).realizable:
        raise ValueError("graph is not realizable; minimality is undefined")
    nontrivial_ok = g.n > 1
    connectivity_ok = is_connected(g)
    failing_edge = None
    if nontrivial_ok and connectivity_ok:
        for u, v in g.sorted_edges():
            if is_solvable_prime_graph(without_edge(g, u, v)).realizable:
                failing_edge = (u, v)
                break
    minimal = nontrivial_ok and connectivity_ok and failing_edge is None
    return MinimalityReport(minimal, failing_edge, connectivity_ok, nontrivial_ok)


def linked_vertex_duplication(
    g: LabeledGraph, v: str, new_label: str | None = None
) -> LabeledGraph:
    """Add a twin of v adjacent to v and to every neighbor of v.

    The default fresh label is v with prime marks appended.
    """
    if v not in g.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    if new_label is None:
        new_label = v + "'"
        while new_label in g.vertices:
            new_label += "'"
    elif new_label in g.vertices:
        raise ValueError(f"label {new_label!r} already in use")
    adj = g.adjacency()
    edges = set(g.edges)
    edges.add((v, new_label))
    edges.update((w, new_label) for w in adj[v])
    return LabeledGraph(g.vertices + (new_label,), edges)


def enumerate_minimal(n: int) -> tuple[LabeledGraph, ...]:
    """All minimal prime graphs on exactly n vertices up to isomorphism.

    Candidates are complements of triangle-free graphs (minimal graphs
    are realizable, so their complements are triangle-free); generation
    runs up to isomorphism and the minimality filter does the rest.
    Deterministic order by canonical form.
    """
    if not 1 <= n <= 9:
        raise ValueError("n must be between 1 and 9")
    return _enumerate_minimal(n)


@lru_cache(maxsize=None)
def _enumerate_minimal(n: int) -> tuple[LabeledGraph, ...]:
    from .graphs import enumerate_graphs

    found: list[tuple[bytes, LabeledGraph]] = []
    for t in enumerate_graphs(n, triangle_free=True):
        g = complement(t)
        if not is_solvable_prime_graph(g).realizable:
            continue
        if is_minimal(g).minimal:
            found.append((canonical_form(g), g))
    found.sort(key=lambda pair: pair[0])
    return tuple(g for _, g in found)


def contains_induced_c5(g: LabeledGraph) -> tuple[str, ...] | None:
    """First vertex subset (in lexicographic order) inducing a 5-cycle."""
    if g.n < 5:
        return None
    adj = g.adjacency()
    for subset in combinations(g.vertices, 5):
        chosen = set(subset)
        degrees = [len(adj[v] & chosen) for v in subset]
        if degrees != [2, 2, 2, 2, 2]:
            continue
        # connected 2-regular on 5 vertices is the 5-cycle
        seen = {subset[0]}
        stack = [subset[0]]
        while stack:
            for w in adj[stack.pop()] & chosen:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == 5:
            return subset
    return None


def canonical_orientation(g: LabeledGraph) -> Orientation:
    """Orientation of the complement induced by its lexicographically least
    proper 3-coloring; the deterministic digraph used for lemma checks."""
    co = complement(g)
    coloring = lex_least_coloring(co, 3)
    if coloring is None:
        raise ValueError("complement is not 3-colorable")
    return orient_from_coloring(co, coloring)


@dataclass(frozen=True)
class MinimalLemmaReport:
    complement_not_2_colorable: bool
    no_complement_singletons: bool
    has_induced_c5: bool
    partition_classes_nonempty: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.complement_not_2_colorable
            and self.no_complement_singletons
            and self.has_induced_c5
            and self.partition_classes_nonempty
        )


def check_minimal_lemmas(g: LabeledGraph) -> MinimalLemmaReport:
    """Structural facts that hold for every minimal graph.

    Checked: the complement is not 2-colorable and has no isolated
    vertices, the graph contains an induced 5-cycle, and sources, doubles
    and sinks are all nonempty on the canonical orientation.
    """
    if not is_minimal(g).minimal:
        raise ValueError("lemma checks apply to minimal graphs only")
    co = complement(g)
    not_2_colorable = color_with_at_most(co, 2) is None
    no_singletons = all(co.degree(v) > 0 for v in co.vertices)
    induced_c5 = contains_induced_c5(g) is not None
    a = analyze(canonical_orientation(g))
    nonempty = bool(a.o_set) and bool(a.d_set) and bool(a.i_set)
    return MinimalLemmaReport(
        complement_not_2_colorable=not_2_colorable,
        no_complement_singletons=no_singletons,
        has_induced_c5=induced_c5,
        partition_classes_nonempty=nonempty,
    )


def duplication_reachable(
    start: LabeledGraph, max_vertices: int
) -> frozenset[bytes]:
    """Canonical forms of graphs reachable from start by repeated linked
    vertex duplication, up to max_vertices vertices (bounded BFS)."""
    if max_vertices > 12:
        raise LimitExceeded("duplication closure explored up to 12 vertices only")
    seen: set[bytes] = set()
    frontier = [start]
    seen.add(canonical_form(start, max_vertices))
    while frontier:
        nxt = []
        for g in frontier:
            if g.n >= max_vertices:
                continue
            for v in g.vertices:
                child = linked_vertex_duplication(g, v)
                key = canonical_form(child, max_vertices)
                if key not in seen:
                    seen.add(key)
                    nxt.append(child)
        frontier = nxt
    return frozenset(seen)
