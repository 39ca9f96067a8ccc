"""Executable finite-group arithmetic for synthesized plans.

A model realizes G = J x| K with K = U x| T.  Elements are coordinate
tuples: one exponent per top-level cyclic factor (the K part) and one
vector per module factor (the J part).  Multiplication implements the
semidirect twist directly,

    (v1, k1) (v2, k2) = (v1 + k1 . v2,  k1 k2),

where k1 . v2 applies the module action of k1, and the K product twists
double coordinates by the exponent actions of the source part.  Keeping
elements as coordinates makes groups of order well past 10**6 cheap to
handle.

The module doubles as the oracle that closes the constructive loop: the
prime graph and its arc structure are recomputed from the model alone
and compared against the plan's orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import modmat
from .analysis import analyze
from .errors import LimitExceeded
from .graphs import LabeledGraph, Orientation, orientation_from_arcs
from .synthesis import GroupPlan, phi_sets

SIGMA_PRIME_LIMIT = 12
BRUTE_FORCE_CAP = 2_000_000


@dataclass(frozen=True)
class GroupElement:
    """K-part exponents plus one coordinate vector per module factor."""

    k: tuple[int, ...]
    mods: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class _ModuleFactor:
    vertex: str
    prime: int
    dim: int
    action: dict[str, np.ndarray]  # acting vertex -> matrix, trivial omitted


class GroupModel:
    """Concrete group built from a GroupPlan; immutable once constructed."""

    def __init__(self, plan: GroupPlan):
        self.plan = plan
        o = plan.orientation
        a = analyze(o)
        self.k_factors: tuple[tuple[str, int, str], ...] = tuple(
            (v, plan.prime_of[v], "O" if v in a.o_set else "D")
            for v in o.vertices
            if v in a.o_set or v in a.d_set
        )
        self.k_index = {v: i for i, (v, _, _) in enumerate(self.k_factors)}
        self.k_exponents = dict(plan.k_actions)
        factors = []
        for v in o.vertices:
            if v not in a.i_set:
                continue
            if v in plan.modules:
                spec = plan.modules[v]
                action = {
                    w: modmat.from_rows(rows, spec.characteristic)
                    for w, rows in spec.generator_action.items()
                }
                factors.append(
                    _ModuleFactor(v, spec.characteristic, spec.dimension, action)
                )
            else:
                factors.append(_ModuleFactor(v, plan.prime_of[v], 1, {}))
        self.modules: tuple[_ModuleFactor, ...] = tuple(factors)
        self._rho_cache: dict[tuple[int, tuple[int, ...]], np.ndarray] = {}

    # -- element plumbing --------------------------------------------------

    def identity(self) -> GroupElement:
        return GroupElement(
            k=tuple(0 for _ in self.k_factors),
            mods=tuple((0,) * f.dim for f in self.modules),
        )

    def element(self, k_part: dict[str, int], module_parts: dict[str, tuple[int, ...]]) -> GroupElement:
        """Build an element from per-vertex coordinates, reducing as needed."""
        k = []
        for v, p, _ in self.k_factors:
            k.append(k_part.get(v, 0) % p)
        mods = []
        for f in self.modules:
            vec = module_parts.get(f.vertex, (0,) * f.dim)
            if len(vec) != f.dim:
                raise ValueError(f"module part for {f.vertex!r} has wrong length")
            mods.append(tuple(x % f.prime for x in vec))
        return GroupElement(tuple(k), tuple(mods))

    def random_element(self, rng) -> GroupElement:
        k = tuple(rng.randrange(p) for _, p, _ in self.k_factors)
        mods = tuple(
            tuple(rng.randrange(f.prime) for _ in range(f.dim)) for f in self.modules
        )
        return GroupElement(k, mods)

    def group_order(self) -> int:
        total = 1
        for _, p, _ in self.k_factors:
            total *= p
        for f in self.modules:
            total *= f.prime**f.dim
        return total

    def primes(self) -> tuple[int, ...]:
        return tuple(p for _, p, _ in self.k_factors) + tuple(
            f.prime for f in self.modules
        )

    # -- K arithmetic --------------------------------------------------------

    def _twist(self, t_exponents: dict[str, int], q_vertex: str, q: int) -> int:
        e = 1
        for (p_vertex, target), exponent in self.k_exponents.items():
            if target != q_vertex:
                continue
            power = t_exponents.get(p_vertex, 0)
            if power:
                e = e * pow(exponent, power, q) % q
        return e

    def k_multiply(self, k1: tuple[int, ...], k2: tuple[int, ...]) -> tuple[int, ...]:
        t1 = {
            v: k1[i]
            for i, (v, _, role) in enumerate(self.k_factors)
            if role == "O" and k1[i]
        }
        out = []
        for i, (v, p, role) in enumerate(self.k_factors):
            if role == "O":
                out.append((k1[i] + k2[i]) % p)
            else:
                out.append((k1[i] + k2[i] * self._twist(t1, v, p)) % p)
        return tuple(out)

    def k_power(self, k: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = tuple(0 for _ in self.k_factors)
        base = k
        while e > 0:
            if e & 1:
                result = self.k_multiply(result, base)
            base = self.k_multiply(base, base)
            e >>= 1
        return result

    def k_order(self, k: tuple[int, ...]) -> int:
        exponent = 1
        for _, p, _ in self.k_factors:
            exponent *= p
        zero = tuple(0 for _ in self.k_factors)
        order = exponent
        for _, p, _ in self.k_factors:
            if order % p == 0 and self.k_power(k, order // p) == zero:
                order //= p
        return order

    # -- module action ---------------------------------------------------------

    def rho(self, j: int, k: tuple[int, ...]) -> np.ndarray:
        """Action matrix of the K-element k on module j.

        The element factors as (double part) times (source part), and the
        matrix multiplies in the same order; coordinates without a stored
        action act trivially.
        """
        f = self.modules[j]
        key_parts = tuple(
            k[i] if self.k_factors[i][0] in f.action else 0
            for i in range(len(self.k_factors))
        )
        cached = self._rho_cache.get((j, key_parts))
        if cached is not None:
            return cached
        mat = modmat.identity(f.dim)
        for role_wanted in ("D", "O"):
            for i, (v, _, role) in enumerate(self.k_factors):
                if role != role_wanted or not key_parts[i] or v not in f.action:
                    continue
                mat = modmat.mat_mul(
                    mat, modmat.mat_pow(f.action[v], key_parts[i], f.prime), f.prime
                )
        if len(self._rho_cache) > 20_000:
            self._rho_cache.clear()
        self._rho_cache[(j, key_parts)] = mat
        return mat

    # -- group arithmetic -------------------------------------------------------

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        if len(x.k) != len(self.k_factors) or len(y.k) != len(self.k_factors):
            raise ValueError("element shape does not match the model")
        mods = []
        for j, f in enumerate(self.modules):
            if len(x.mods[j]) != f.dim or len(y.mods[j]) != f.dim:
                raise ValueError("element shape does not match the model")
            mat = self.rho(j, x.k)
            vec = np.array(y.mods[j], dtype=np.int64)
            moved = modmat.mat_vec(mat, vec, f.prime)
            mods.append(
                tuple(int((a + b) % f.prime) for a, b in zip(x.mods[j], moved))
            )
        return GroupElement(self.k_multiply(x.k, y.k), tuple(mods))

    def inverse(self, x: GroupElement) -> GroupElement:
        n = self.order(x)
        return self.power(x, n - 1)

    def power(self, x: GroupElement, e: int) -> GroupElement:
        result = self.identity()
        base = x
        while e > 0:
            if e & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            e >>= 1
        return result

    def order(self, x: GroupElement) -> int:
        """Structural element order.

        The K-part order n comes from cyclic-tower arithmetic; a module
        prime divides the order exactly when the transfer sum
        (I + M + ... + M**(n-1)) applied to that coordinate is nonzero,
        M being the action of the K part.
        """
        n_k = self.k_order(x.k)
        total = n_k
        for j, f in enumerate(self.modules):
            if not any(x.mods[j]):
                continue
            mat = self.rho(j, x.k)
            transfer = modmat.geometric_sum(mat, n_k, f.prime)
            moved = modmat.mat_vec(transfer, np.array(x.mods[j], dtype=np.int64), f.prime)
            if np.any(moved):
                total *= f.prime
        return total

    def iterative_order(self, x: GroupElement, limit: int | None = None) -> int:
        """Order by repeated multiplication; the slow cross-check for order()."""
        if limit is None:
            limit = self.group_order()
        identity = self.identity()
        rhos = [self.rho(j, x.k) for j in range(len(self.modules))]
        primes = [f.prime for f in self.modules]
        current = x
        n = 1
        while current != identity:
            mods = []
            for j, f in enumerate(self.modules):
                vec = np.array(current.mods[j], dtype=np.int64)
                moved = (rhos[j] @ vec) % primes[j]
                mods.append(
                    tuple(int((a + b) % primes[j]) for a, b in zip(x.mods[j], moved))
                )
            current = GroupElement(self.k_multiply(x.k, current.k), tuple(mods))
            n += 1
            if n > limit:
                raise AssertionError("order exceeds the group order; broken model")
        return n

    # -- prime graph and digraph -------------------------------------------------

    def _prime_labels(self) -> tuple[str, ...]:
        return tuple(str(p) for p in self.primes())

    def _fixed_space_somewhere(self, f: _ModuleFactor, vertex: str, p: int) -> bool:
        """Some power of the canonical generator of ``vertex`` (all powers
        have order p) fixes a nonzero vector of module f."""
        if vertex not in f.action:
            return True
        mat = f.action[vertex]
        mono = modmat.monomial_parts(mat)
        if mono is not None:
            power = mono
            for _ in range(1, p):
                if modmat.monomial_has_fixed_vector(power[0], power[1], f.prime):
                    return True
                power = modmat.monomial_mul(power, mono, f.prime)
            return False
        power = mat
        for _ in range(1, p):
            if modmat.has_fixed_vector(power, f.prime):
                return True
            power = modmat.mat_mul(power, mat, f.prime)
        return False

    def compute_prime_graph(self) -> LabeledGraph:
        """Structural prime graph: one vertex per prime, edges by action rules.

        Top-level pairs of equal role commute (direct products), so they
        are adjacent; a source-double pair is adjacent exactly when no
        action exponent links them; module pairs are always adjacent; a
        top-level prime meets a module prime exactly when some power of
        its generator has a nonzero fixed space there (trivial action
        included).
        """
        labels = self._prime_labels()
        edges = []
        nk = len(self.k_factors)
        for i, j in combinations(range(len(labels)), 2):
            if i < nk and j < nk:
                vi, _, role_i = self.k_factors[i]
                vj, _, role_j = self.k_factors[j]
                if role_i == role_j:
                    edges.append((labels[i], labels[j]))
                elif (vi, vj) not in self.k_exponents and (vj, vi) not in self.k_exponents:
                    edges.append((labels[i], labels[j]))
            elif i < nk <= j:
                v, p, _ = self.k_factors[i]
                f = self.modules[j - nk]
                if self._fixed_space_somewhere(f, v, p):
                    edges.append((labels[i], labels[j]))
            else:
                edges.append((labels[i], labels[j]))
        return LabeledGraph(labels, edges)

    def compute_frobenius_digraph(self) -> Orientation:
        """Arcs actor -> acted-upon on the non-edges of the prime graph."""
        graph = self.compute_prime_graph()
        labels = self._prime_labels()
        nk = len(self.k_factors)
        arcs = []
        for i, j in combinations(range(len(labels)), 2):
            if graph.has_edge(labels[i], labels[j]):
                continue
            if i < nk and j < nk:
                vi, _, _ = self.k_factors[i]
                vj, _, _ = self.k_factors[j]
                if (vi, vj) in self.k_exponents:
                    arcs.append((labels[i], labels[j]))
                elif (vj, vi) in self.k_exponents:
                    arcs.append((labels[j], labels[i]))
                else:
                    raise ValueError(
                        f"non-edge {labels[i]}-{labels[j]} without an action; "
                        "model is not plan-shaped"
                    )
            elif i < nk <= j:
                arcs.append((labels[i], labels[j]))
            else:
                raise ValueError(
                    f"non-edge {labels[i]}-{labels[j]} between modules; "
                    "model is not plan-shaped"
                )
        return orientation_from_arcs(labels, arcs)

    # -- element-order statistics ---------------------------------------------

    def sigma_of_model(self) -> int:
        """Largest number of distinct primes dividing one element order.

        Subset search with a single witness per candidate set: unit
        exponents on the chosen top-level coordinates, and a common
        fixed-vector requirement (nonzero kernel of action minus
        identity) for every chosen module.
        """
        labels = self.primes()
        if len(labels) > SIGMA_PRIME_LIMIT:
            raise LimitExceeded(
                f"sigma search limited to {SIGMA_PRIME_LIMIT} primes"
            )
        nk = len(self.k_factors)
        best = 0
        indices = list(range(len(labels)))
        for mask in range(1 << len(labels)):
            size = mask.bit_count()
            if size <= best:
                continue
            chosen = [i for i in indices if mask >> i & 1]
            witness = tuple(
                1 if (i < nk and mask >> i & 1) else 0 for i in range(nk)
            )
            target = 1
            for i in chosen:
                if i < nk:
                    target *= self.k_factors[i][1]
            if self.k_order(witness) != target:
                continue
            ok = True
            for i in chosen:
                if i < nk:
                    continue
                f = self.modules[i - nk]
                mat = self.rho(i - nk, witness)
                if not modmat.has_fixed_vector(mat, f.prime):
                    ok = False
                    break
            if ok:
                best = size
        return best

    def brute_force_prime_graph(self, cap: int = BRUTE_FORCE_CAP) -> LabeledGraph:
        """Prime graph by exhausting the group elements.

        Iterates every K element; powers of (w, k) accumulate the
        transfer sum of w, so the primes realized together with k's order
        are read off the transfer matrices.  Independent of the
        structural rules in compute_prime_graph.
        """
        if self.group_order() > cap:
            raise LimitExceeded(
                f"group order {self.group_order()} exceeds the cap {cap}"
            )
        labels = self._prime_labels()
        edges: set[tuple[str, str]] = set()
        ranges = [range(p) for _, p, _ in self.k_factors]
        for k in product(*ranges):
            n_k = self.k_order(k)
            realized = [
                str(p) for _, p, _ in self.k_factors if n_k % p == 0
            ]
            for j, f in enumerate(self.modules):
                transfer = modmat.geometric_sum(self.rho(j, k), n_k, f.prime)
                if np.any(transfer):
                    realized.append(str(f.prime))
            for u, v in combinations(realized, 2):
                edges.add((u, v))
        return LabeledGraph(labels, edges)


def model_from_plan(plan: GroupPlan) -> GroupModel:
    return GroupModel(plan)


def round_trip_report(plan: GroupPlan) -> dict:
    """Recompute the digraph and prime graph from the model and compare
    with the plan's orientation under the vertex-to-prime relabeling."""
    from .graphs import complement
    from .synthesis import validate_plan

    model = GroupModel(plan)
    o = plan.orientation
    rename = {v: str(plan.prime_of[v]) for v in o.vertices}
    expected_arcs = {(rename[u], rename[v]) for u, v in o.arcs}
    digraph = model.compute_frobenius_digraph()
    prime_graph = model.compute_prime_graph()
    expected_graph = LabeledGraph(
        [rename[v] for v in o.vertices],
        [(rename[u], rename[v]) for u, v in complement(o.underlying).edges],
    )
    return {
        "schema": "solvgraph.verify/1",
        "plan_valid": not validate_plan(plan),
        "digraph_matches": set(digraph.arcs) == expected_arcs,
        "prime_graph_matches": (
            set(prime_graph.vertices) == set(expected_graph.vertices)
            and {frozenset(e) for e in prime_graph.edges}
            == {frozenset(e) for e in expected_graph.edges}
        ),
        "group_order": model.group_order(),
    }
