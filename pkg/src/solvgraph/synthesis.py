"""From a validated orientation to an explicit solvable-group recipe.

The construction realizes an orientation as the fixed-point structure of
a group G = J x| (U x| T):

* sources get distinct primes p and a torus T, the direct product of the
  groups C_p;
* doubles get primes q with the congruences needed for a fixed-point-free
  action of C_p on C_q along each arc p -> q, assembled into U;
* each sink v gets a prime r and a module over the r-element field.  The
  module is induced from a faithful linear character of the cyclic group
  A spanned by the 1-in-neighborhood of v: the basis is indexed by the
  cyclic group B spanned by the 2-in-neighborhood, A acts diagonally with
  a B-conjugation twist, and B permutes the basis regularly.

Irreducibility of the modules is never assumed.  What the prime graph
actually depends on is verified directly: generator orders, fixed-point
freeness of the A-part, and a nonzero fixed space for every B-generator.
A verify-and-retry loop (next character, then next admissible prime)
covers the unlikely failure of a candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import modmat
from .analysis import analyze
from .errors import LimitExceeded
from .graphs import LabeledGraph, Orientation, directed_neighborhood
from .primes import elements_of_order, is_prime, smallest_prime
from .realizability import validate_frobenius_orientation

PLAN_SCHEMA = "solvgraph.plan/1"

CONGRUENCE_GLOBAL = "global"
CONGRUENCE_PER_ARC = "per-arc"

DEFAULT_PRIME_CAP = 10**6
DEFAULT_MODULE_RETRIES = 32


@dataclass(frozen=True)
class ModuleSpec:
    """Module over a prime field with one action matrix per acting vertex.

    Matrices are row-major tuples over the field with ``characteristic``
    elements; vertices absent from the map act trivially.
    """

    characteristic: int
    dimension: int
    generator_action: dict[str, tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class GroupPlan:
    orientation: Orientation
    prime_of: dict[str, int]
    k_actions: dict[tuple[str, str], int]
    modules: dict[str, ModuleSpec]
    congruence: str


def phi_sets(o: Orientation, v: str) -> tuple[frozenset[str], frozenset[str]]:
    """(1-in-neighborhood, 2-in-neighborhood) of a sink v.

    Disjoint whenever the underlying graph is triangle-free, since the
    two distances cannot coincide.
    """
    if v not in o.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    if o.out_neighbors()[v]:
        raise ValueError(f"vertex {v!r} has outgoing arcs; phi sets need a sink")
    return (
        directed_neighborhood(o, v, 1, "in"),
        directed_neighborhood(o, v, 2, "in"),
    )


def select_primes(
    o: Orientation,
    congruence: str = CONGRUENCE_GLOBAL,
    cap: int = DEFAULT_PRIME_CAP,
) -> dict[str, int]:
    """Assign distinct primes to vertices, smallest admissible first.

    Sources take the smallest unused primes in vertex order.  Doubles
    need q = 1 (mod p): in global mode p is the product of all source
    primes, in per-arc mode only of the in-neighbor primes.  A sink with
    a nonempty 1-in-neighborhood needs r = 1 modulo the product of those
    primes; other sinks take the smallest unused prime.
    """
    if congruence not in (CONGRUENCE_GLOBAL, CONGRUENCE_PER_ARC):
        raise ValueError(f"unknown congruence mode {congruence!r}")
    a = analyze(o)
    into = o.in_neighbors()
    assigned: dict[str, int] = {}
    used: set[int] = set()

    def take(modulus: int) -> int:
        p = smallest_prime(modulus, 1 % modulus if modulus > 1 else 0, used, cap)
        used.add(p)
        return p

    for v in o.vertices:
        if v in a.o_set:
            assigned[v] = take(1)
    o_product = 1
    for v in o.vertices:
        if v in a.o_set:
            o_product *= assigned[v]
    for v in o.vertices:
        if v in a.d_set:
            if congruence == CONGRUENCE_GLOBAL:
                modulus = o_product
            else:
                modulus = 1
                for u in into[v]:
                    modulus *= assigned[u]
            assigned[v] = take(modulus)
    for v in o.vertices:
        if v in a.i_set:
            phi1, _ = phi_sets(o, v)
            modulus = 1
            for u in phi1:
                modulus *= assigned[u]
            assigned[v] = take(modulus)
    return assigned


def build_k_action(p: int, q: int) -> int:
    """Smallest exponent e > 1 of multiplicative order exactly p mod q."""
    if q % p != 1:
        raise ValueError(f"{q} is not 1 mod {p}")
    for e in range(2, q):
        if pow(e, p, q) == 1:
            # order divides the prime p and is not 1
            return e
    raise ValueError(f"no element of order {p} mod {q}")


def _b_generator_data(
    o: Orientation,
    phi1: list[str],
    phi2: list[str],
    primes: dict[str, int],
    k_actions: dict[tuple[str, str], int],
) -> tuple[int, dict[str, int], dict[str, int]]:
    """Dimension d, shift amounts for B-generators, conjugation exponents.

    B is cyclic of order d, the product of the 2-in-neighborhood primes;
    its canonical generator b is the product of the per-vertex
    generators.  shift[s] is the basis rotation realizing the generator
    of vertex s, and conj[w] is the exponent by which b conjugates the
    cyclic factor of a 1-in-neighbor w.
    """
    d = 1
    for s in phi2:
        d *= primes[s]
    shift: dict[str, int] = {}
    for s in phi2:
        p_s = primes[s]
        rest = d // p_s
        # 1 mod p_s, 0 mod the complementary part
        shift[s] = (pow(rest, -1, p_s) * rest) % d if d > 1 else 0
    conj: dict[str, int] = {}
    for w in phi1:
        p_w = primes[w]
        e = 1
        for s in phi2:
            e = e * k_actions.get((s, w), 1) % p_w
        conj[w] = e
    return d, shift, conj


def build_module(
    o: Orientation,
    v: str,
    primes: dict[str, int],
    k_actions: dict[tuple[str, str], int],
    max_character_tries: int = 8,
) -> ModuleSpec:
    """Module for sink v over the field with primes[v] elements.

    Tries the admissible faithful characters smallest-first and verifies
    every invariant before returning; raises LimitExceeded when all
    candidates fail (callers may then move to the next admissible prime).
    """
    phi1_set, phi2_set = phi_sets(o, v)
    if not phi1_set:
        raise ValueError(f"sink {v!r} has an empty 1-in-neighborhood; use a plain cyclic factor")
    order = {u: i for i, u in enumerate(o.vertices)}
    phi1 = sorted(phi1_set, key=order.get)
    phi2 = sorted(phi2_set, key=order.get)
    r = primes[v]
    m = 1
    for w in phi1:
        m *= primes[w]
    if (r - 1) % m != 0:
        raise ValueError(f"module prime {r} is not 1 mod {m}")
    d, shift, conj = _b_generator_data(o, phi1, phi2, primes, k_actions)
    m_factors = tuple(primes[w] for w in phi1)

    tries = 0
    failures: list[str] = []
    for lam in elements_of_order(m, m_factors, r):
        tries += 1
        if tries > max_character_tries:
            break
        action: dict[str, tuple[tuple[int, ...], ...]] = {}
        for w in phi1:
            p_w = primes[w]
            lam_w = pow(lam, m // p_w, r)
            inv = pow(conj[w], -1, p_w)
            diag = []
            exponent = 1
            for _ in range(d):
                diag.append(pow(lam_w, exponent, r))
                exponent = exponent * inv % p_w
            action[w] = tuple(
                tuple(diag[i] if i == j else 0 for j in range(d)) for i in range(d)
            )
        for s in phi2:
            rows = [[0] * d for _ in range(d)]
            for j in range(d):
                rows[(j + shift[s]) % d][j] = 1
            action[s] = tuple(tuple(row) for row in rows)
        spec = ModuleSpec(characteristic=r, dimension=d, generator_action=action)
        problems = verify_module(spec, {w: primes[w] for w in phi1 + phi2}, set(phi1), set(phi2))
        if not problems:
            return spec
        failures.extend(problems)
    raise LimitExceeded(
        f"no verified module for sink {v!r} over {r}: {failures[:3]}"
    )


def verify_module(
    spec: ModuleSpec,
    acting_primes: dict[str, int],
    phi1: set[str],
    phi2: set[str],
) -> list[str]:
    """Check every module invariant; empty list means verified.

    Conditions: each matrix has the multiplicative order of its vertex
    prime; the matrices of the 1-in-neighborhood commute and the cyclic
    group they span acts fixed-point-freely; every 2-in-neighborhood
    matrix has a power of prime order with a nonzero fixed space.
    """
    r = spec.characteristic
    d = spec.dimension
    problems = []
    if set(spec.generator_action) != phi1 | phi2:
        return [f"acting vertices {sorted(spec.generator_action)} do not match the in-neighborhoods"]
    mats = {}
    for w, rows in spec.generator_action.items():
        mat = modmat.from_rows(rows, r)
        if mat.shape != (d, d):
            return [f"matrix for {w!r} has wrong shape"]
        mats[w] = mat
    identity = modmat.identity(d)
    for w, mat in mats.items():
        p_w = acting_primes[w]
        if np.array_equal(mat, identity):
            problems.append(f"matrix for {w!r} is the identity")
        elif not np.array_equal(modmat.mat_pow(mat, p_w, r), identity):
            problems.append(f"matrix for {w!r} does not have order {p_w}")
    phi1_list = sorted(phi1)
    for i, w in enumerate(phi1_list):
        for u in phi1_list[i + 1 :]:
            if not np.array_equal(
                modmat.mat_mul(mats[w], mats[u], r), modmat.mat_mul(mats[u], mats[w], r)
            ):
                problems.append(f"matrices for {w!r} and {u!r} do not commute")
    if problems:
        return problems

    m = 1
    for w in phi1:
        m *= acting_primes[w]
    generator = identity
    for w in phi1_list:
        generator = modmat.mat_mul(generator, mats[w], r)
    diag_entries = _diagonal_or_none(generator)
    if diag_entries is not None:
        m_factors = [acting_primes[w] for w in phi1]
        for entry in diag_entries:
            if pow(entry, m, r) != 1 or any(
                pow(entry, m // f, r) == 1 for f in m_factors
            ):
                problems.append(
                    "fixed point: a diagonal entry of the spanning generator "
                    f"has order below {m}"
                )
                break
    else:
        if m > 50_000:
            raise LimitExceeded("fixed-point-freeness check too large for dense matrices")
        power = generator
        for _ in range(m - 1):
            if modmat.has_fixed_vector(power, r):
                problems.append("fixed point in the span of the 1-in-neighborhood action")
                break
            power = modmat.mat_mul(power, generator, r)
    for s in sorted(phi2):
        p_s = acting_primes[s]
        power = mats[s]
        for _ in range(1, p_s):
            if modmat.has_fixed_vector(power, r):
                break
            power = modmat.mat_mul(power, mats[s], r)
        else:
            problems.append(f"no fixed space for any power of the matrix of {s!r}")
    return problems


def _diagonal_or_none(mat: np.ndarray) -> list[int] | None:
    if np.count_nonzero(mat - np.diag(np.diagonal(mat))):
        return None
    return [int(x) for x in np.diagonal(mat)]


def synthesize(
    o: Orientation,
    congruence: str = CONGRUENCE_GLOBAL,
    prime_cap: int = DEFAULT_PRIME_CAP,
    max_retries: int = DEFAULT_MODULE_RETRIES,
) -> GroupPlan:
    """Full recipe for a group whose fixed-point digraph is o.

    Deterministic given o and its vertex order.  Arcs between sources and
    doubles become cyclic action exponents; arcs into sinks become module
    actions.  Raises LimitExceeded when prime searches or module
    verification exhaust their budgets.
    """
    violations = validate_frobenius_orientation(o)
    if violations:
        raise ValueError(
            "orientation fails validation: "
            + ", ".join(sorted({v.kind for v in violations}))
        )
    a = analyze(o)
    primes = select_primes(o, congruence, prime_cap)
    into = o.in_neighbors()
    k_actions: dict[tuple[str, str], int] = {}
    for u, v in o.sorted_arcs():
        if u in a.o_set and v in a.d_set:
            k_actions[(u, v)] = build_k_action(primes[u], primes[v])
    modules: dict[str, ModuleSpec] = {}
    used = set(primes.values())
    for v in o.vertices:
        if v not in a.i_set or not into[v]:
            continue
        attempts = 0
        while True:
            try:
                modules[v] = build_module(o, v, primes, k_actions)
                break
            except LimitExceeded:
                attempts += 1
                if attempts >= max_retries:
                    raise
                m = 1
                for u in phi_sets(o, v)[0]:
                    m *= primes[u]
                replacement = smallest_prime(m, 1 % m, used, prime_cap)
                used.add(replacement)
                primes = dict(primes, **{v: replacement})
    plan = GroupPlan(
        orientation=o,
        prime_of=primes,
        k_actions=k_actions,
        modules=modules,
        congruence=congruence,
    )
    leftover = validate_plan(plan)
    if leftover:
        raise AssertionError(f"synthesized plan fails validation: {leftover}")
    return plan


def estimate_order(plan: GroupPlan) -> int:
    """Group order: top primes times r**dim per module times plain sink primes."""
    a = analyze(plan.orientation)
    total = 1
    for v in plan.orientation.vertices:
        if v in a.o_set or v in a.d_set:
            total *= plan.prime_of[v]
        elif v in plan.modules:
            spec = plan.modules[v]
            total *= spec.characteristic**spec.dimension
        else:
            total *= plan.prime_of[v]
    return total


def validate_plan(plan: GroupPlan) -> list[str]:
    """Independent re-check of every plan invariant; empty list means valid."""
    problems: list[str] = []
    o = plan.orientation
    if validate_frobenius_orientation(o):
        return ["orientation fails validation"]
    a = analyze(o)
    values = list(plan.prime_of.values())
    if sorted(plan.prime_of) != sorted(o.vertices):
        problems.append("prime map does not cover the vertex set")
        return problems
    if len(set(values)) != len(values):
        problems.append("primes are not distinct")
    for v, p in plan.prime_of.items():
        if not is_prime(p):
            problems.append(f"{p} (vertex {v!r}) is not prime")
    if plan.congruence not in (CONGRUENCE_GLOBAL, CONGRUENCE_PER_ARC):
        problems.append(f"unknown congruence mode {plan.congruence!r}")
    if plan.congruence == CONGRUENCE_GLOBAL:
        o_product = 1
        for v in a.o_set:
            o_product *= plan.prime_of[v]
        for v in a.d_set:
            if plan.prime_of[v] % o_product != 1 % o_product:
                problems.append(f"double prime {plan.prime_of[v]} is not 1 mod {o_product}")
    expected_actions = set()
    for u, v in o.arcs:
        if u in a.o_set and v in a.d_set:
            expected_actions.add((u, v))
            if plan.prime_of[v] % plan.prime_of[u] != 1:
                problems.append(
                    f"arc {u!r}->{v!r}: {plan.prime_of[v]} is not 1 mod {plan.prime_of[u]}"
                )
    if set(plan.k_actions) != expected_actions:
        problems.append("action exponents do not match the source-to-double arcs")
    for (u, v), e in plan.k_actions.items():
        p, q = plan.prime_of[u], plan.prime_of[v]
        if not 1 < e < q or pow(e, p, q) != 1 or e % q == 1:
            problems.append(f"exponent {e} for {u!r}->{v!r} has wrong order")
    into = o.in_neighbors()
    for v in a.i_set:
        if into[v] and v not in plan.modules:
            problems.append(f"sink {v!r} is missing a module")
        if not into[v] and v in plan.modules:
            problems.append(f"isolated sink {v!r} should be a plain cyclic factor")
    for v, spec in plan.modules.items():
        phi1, phi2 = phi_sets(o, v)
        m = 1
        for w in phi1:
            m *= plan.prime_of[w]
        d = 1
        for s in phi2:
            d *= plan.prime_of[s]
        if (spec.characteristic - 1) % m != 0:
            problems.append(f"module prime {spec.characteristic} is not 1 mod {m}")
        if spec.characteristic != plan.prime_of[v]:
            problems.append(f"module prime for {v!r} disagrees with the prime map")
        if spec.dimension != d:
            problems.append(f"module for {v!r} has dimension {spec.dimension}, expected {d}")
        module_problems = verify_module(
            spec,
            {w: plan.prime_of[w] for w in phi1 | phi2},
            set(phi1),
            set(phi2),
        )
        problems.extend(module_problems)
        if not module_problems:
            problems.extend(_check_module_compatibility(plan, a, v, spec, phi1, phi2))
    return problems


def _check_module_compatibility(plan, a, v, spec: ModuleSpec, phi1, phi2) -> list[str]:
    """Actor matrices must define a single action of the top group.

    Within each of the two abelian layers the matrices must commute, and
    conjugating a double's matrix by a source's matrix must match the
    exponent action on the cyclic factor.
    """
    problems = []
    r = spec.characteristic
    mats = {w: modmat.from_rows(rows, r) for w, rows in spec.generator_action.items()}
    u_actors = sorted(w for w in phi1 if w in a.d_set)
    t_actors = sorted(w for w in (phi1 | phi2) if w in a.o_set)
    for group in (u_actors, t_actors):
        for i, w in enumerate(group):
            for u in group[i + 1 :]:
                left = modmat.mat_mul(mats[w], mats[u], r)
                right = modmat.mat_mul(mats[u], mats[w], r)
                if not np.array_equal(left, right):
                    problems.append(
                        f"module {v!r}: matrices of {w!r} and {u!r} must commute"
                    )
    for s in t_actors:
        for w in u_actors:
            e = plan.k_actions.get((s, w), 1)
            inv = modmat.mat_pow(mats[s], _matrix_order(mats[s], plan.prime_of[s], r) - 1, r)
            conjugated = modmat.mat_mul(modmat.mat_mul(mats[s], mats[w], r), inv, r)
            expected = modmat.mat_pow(mats[w], e, r)
            if not np.array_equal(conjugated, expected):
                problems.append(
                    f"module {v!r}: conjugation by {s!r} disagrees with the "
                    f"exponent action on {w!r}"
                )
    return problems


def _matrix_order(mat: np.ndarray, claimed: int, r: int) -> int:
    if np.array_equal(modmat.mat_pow(mat, claimed, r), modmat.identity(mat.shape[0])):
        return claimed
    raise ValueError("matrix order does not match its vertex prime")


# -- serialization -----------------------------------------------------------


def plan_to_json_dict(plan: GroupPlan) -> dict:
    o = plan.orientation
    return {
        "schema": PLAN_SCHEMA,
        "congruence": plan.congruence,
        # three stacked abelian layers (modules, doubles, sources)
        "fitting_length_bound": 3,
        "vertices": list(o.vertices),
        "arcs": [[u, v] for u, v in o.sorted_arcs()],
        "primes": {v: str(plan.prime_of[v]) for v in o.vertices},
        "k_actions": [
            {"actor": u, "target": v, "exponent": e}
            for (u, v), e in sorted(
                plan.k_actions.items(),
                key=lambda kv: (o.vertices.index(kv[0][0]), o.vertices.index(kv[0][1])),
            )
        ],
        "modules": {
            v: {
                "characteristic": str(spec.characteristic),
                "dimension": spec.dimension,
                "actions": {
                    w: [list(row) for row in rows]
                    for w, rows in sorted(
                        spec.generator_action.items(), key=lambda kv: o.vertices.index(kv[0])
                    )
                },
            }
            for v, spec in sorted(plan.modules.items(), key=lambda kv: o.vertices.index(kv[0]))
        },
    }


def plan_from_json_dict(doc: dict) -> GroupPlan:
    if doc.get("schema") != PLAN_SCHEMA:
        raise ValueError(f"unsupported plan schema {doc.get('schema')!r}")
    from .graphs import orientation_from_arcs

    vertices = [str(v) for v in doc["vertices"]]
    if vertices and "arcs" in doc:
        underlying_arcs = [(str(u), str(v)) for u, v in doc["arcs"]]
    else:
        underlying_arcs = []
    o = orientation_from_arcs(vertices, underlying_arcs)
    prime_of = {str(v): int(p) for v, p in doc["primes"].items()}
    k_actions = {
        (str(item["actor"]), str(item["target"])): int(item["exponent"])
        for item in doc.get("k_actions", [])
    }
    modules = {}
    for v, body in doc.get("modules", {}).items():
        modules[str(v)] = ModuleSpec(
            characteristic=int(body["characteristic"]),
            dimension=int(body["dimension"]),
            generator_action={
                str(w): tuple(tuple(int(x) for x in row) for row in rows)
                for w, rows in body.get("actions", {}).items()
            },
        )
    return GroupPlan(
        orientation=o,
        prime_of=prime_of,
        k_actions=k_actions,
        modules=modules,
        congruence=str(doc.get("congruence", CONGRUENCE_GLOBAL)),
    )
