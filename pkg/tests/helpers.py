"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's algorithms: coloring by
enumerating all labelings, triangles by scanning vertex triples, girth by
trying every cycle length, and orientation existence by backtracking over
edge directions.  They are the second route in every dual check.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from solvgraph import (
    LabeledGraph,
    Orientation,
    cycle_graph,
    enumerate_graphs,
    find_triangle,
    synthesize,
)
from solvgraph.model import GroupModel


# -- named graphs -----------------------------------------------------------


def mycielski(g: LabeledGraph) -> LabeledGraph:
    """Triangle-free chromatic-number lift: each vertex gets a mirror tied
    to its neighborhood, plus a hub over the mirrors."""
    mirror = {v: v + "~" for v in g.vertices}
    hub = "hub"
    vertices = list(g.vertices) + [mirror[v] for v in g.vertices] + [hub]
    edges = list(g.edges)
    adj = g.adjacency()
    for v in g.vertices:
        edges.extend((mirror[v], w) for w in adj[v])
        edges.append((mirror[v], hub))
    return LabeledGraph(vertices, edges)


def grotzsch() -> LabeledGraph:
    return mycielski(cycle_graph("abcde"))


def six_prime_example_orientation() -> Orientation:
    """The 6-vertex digraph on {2,3,5,11,23,31} used as a running example."""
    from solvgraph import orientation_from_arcs

    return orientation_from_arcs(
        ["2", "3", "5", "11", "23", "31"],
        [
            ("2", "23"),
            ("3", "23"),
            ("2", "31"),
            ("3", "31"),
            ("5", "11"),
            ("5", "31"),
            ("11", "23"),
        ],
    )


def six_prime_example_graph() -> LabeledGraph:
    return LabeledGraph(
        ["2", "3", "5", "11", "23", "31"],
        [
            ("2", "3"),
            ("2", "5"),
            ("2", "11"),
            ("3", "5"),
            ("3", "11"),
            ("5", "23"),
            ("11", "31"),
            ("23", "31"),
        ],
    )


def pentagon_orientation() -> Orientation:
    """The unique (up to isomorphism) valid orientation of the 5-cycle's
    complement: two sources, one double, two sinks."""
    from solvgraph import orientation_from_arcs

    return orientation_from_arcs(
        ["p1", "p2", "p3", "p4", "p5"],
        [("p1", "p3"), ("p3", "p4"), ("p1", "p5"), ("p2", "p4"), ("p2", "p5")],
    )


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> LabeledGraph:
    labels = [str(i) for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return LabeledGraph(labels, edges)


def relabeled(g: LabeledGraph, rng: random.Random) -> LabeledGraph:
    new = [f"r{i}" for i in range(g.n)]
    rng.shuffle(new)
    rename = dict(zip(g.vertices, new))
    return LabeledGraph(
        sorted(new), [(rename[u], rename[v]) for u, v in g.edges]
    )


# -- brute-force oracles -----------------------------------------------------


def oracle_has_triangle(g: LabeledGraph) -> bool:
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in combinations(g.vertices, 3)
    )


def oracle_colorable(g: LabeledGraph, k: int) -> bool:
    """Try all k**n color assignments."""
    for assignment in product(range(k), repeat=g.n):
        colors = dict(zip(g.vertices, assignment))
        if all(colors[u] != colors[v] for u, v in g.edges):
            return True
    return False


def oracle_girth(g: LabeledGraph):
    """Smallest L such that some L-subset carries a spanning cycle."""
    import math

    for length in range(3, g.n + 1):
        for subset in combinations(g.vertices, length):
            first = subset[0]
            for rest in permutations(subset[1:]):
                cycle = (first,) + rest
                if all(
                    g.has_edge(cycle[i], cycle[(i + 1) % length])
                    for i in range(length)
                ):
                    return length
    return math.inf


def oracle_max_clique(g: LabeledGraph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(g.vertices, size):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return best


def all_valid_orientations(f: LabeledGraph):
    """Backtracking search over edge directions, independent of coloring.

    Yields exactly the orientations accepted by the validator: partial
    assignments are pruned on directed cycles and directed 3-paths, and a
    triangle in f rules everything out up front.
    """
    if find_triangle(f) is not None:
        return
    edges = f.sorted_edges()
    arcs: list[tuple[str, str]] = []
    out: dict[str, set[str]] = {v: set() for v in f.vertices}

    def has_cycle() -> bool:
        state: dict[str, int] = {}

        def visit(v: str) -> bool:
            state[v] = 1
            for w in out[v]:
                s = state.get(w)
                if s == 1:
                    return True
                if s is None and visit(w):
                    return True
            state[v] = 2
            return False

        return any(state.get(v) is None and visit(v) for v in f.vertices)

    def longest_path_arcs() -> int:
        memo: dict[str, int] = {}

        def down(v: str) -> int:
            if v in memo:
                return memo[v]
            memo[v] = 0
            memo[v] = max((1 + down(w) for w in out[v]), default=0)
            return memo[v]

        return max((down(v) for v in f.vertices), default=0)

    def rec(i: int):
        if i == len(edges):
            yield Orientation(f, list(arcs))
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            out[a].add(b)
            arcs.append((a, b))
            if not has_cycle() and longest_path_arcs() <= 2:
                yield from rec(i + 1)
            out[a].remove(b)
            arcs.pop()

    yield from rec(0)


def model_sigma_by_enumeration(model: GroupModel) -> int:
    """Max distinct primes in one element order, from the K sweep used by
    the brute-force edge oracle."""
    import numpy as np

    from solvgraph import modmat

    best = 0
    ranges = [range(p) for _, p, _ in model.k_factors]
    for k in product(*ranges):
        n_k = model.k_order(k)
        count = sum(1 for _, p, _ in model.k_factors if n_k % p == 0)
        for j, f in enumerate(model.modules):
            transfer = modmat.geometric_sum(model.rho(j, k), n_k, f.prime)
            if np.any(transfer):
                count += 1
        best = max(best, count)
    return best


# -- shared synthesized corpus ------------------------------------------------


@lru_cache(maxsize=1)
def orientation_sweep(max_n: int = 6) -> tuple[Orientation, ...]:
    """Every validated orientation on up to max_n vertices, one underlying
    graph per isomorphism class of triangle-free graphs."""
    found = []
    for n in range(1, max_n + 1):
        for t in enumerate_graphs(n, triangle_free=True):
            found.extend(all_valid_orientations(t))
    return tuple(found)


@lru_cache(maxsize=1)
def sweep_plans(max_n: int = 6):
    """Per-arc synthesized plans for the whole orientation sweep."""
    return tuple(
        (o, synthesize(o, congruence="per-arc")) for o in orientation_sweep(max_n)
    )
