"""Polynomial kernel for K_t-free edge deletion.

Three stages: encode the t-cliques of ``G`` as a hitting-set family, shrink
the family with the sunflower rule and the size rule, then rebuild a graph
whose t-cliques are exactly the surviving members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial
from typing import Any

from .graph import Edge, Graph, VertexSet, edge_set_of, enumerate_t_cliques, vertex_set
from .hitting_set import SetFamily, find_sunflower, sunflower_threshold


class KernelInvariantError(AssertionError):
    """A guarantee of the kernelization was violated at runtime."""


class Decision(str, Enum):
    PROCEED = "proceed"
    NO_INSTANCE = "no-instance"


@dataclass(frozen=True)
class RuleRecord:
    edge: Edge
    core: VertexSet
    petals: tuple[VertexSet, ...]
    removed: tuple[VertexSet, ...]
    added: VertexSet

    def to_json(self) -> dict[str, Any]:
        return {
            "edge": list(self.edge),
            "core": list(self.core),
            "removed": len(self.removed),
            "added": list(self.added),
        }


@dataclass(frozen=True)
class KernelTrace:
    t: int
    k: int
    initial_family_size: int
    rule1_applications: tuple[RuleRecord, ...]
    rule2_fired: bool
    final_family_size: int
    kernel_vertices: int
    kernel_edges: int

    def replay(self, initial: SetFamily) -> SetFamily:
        family = initial
        for rec in self.rule1_applications:
            family = family.replace(rec.removed, [rec.added])
        return family

    def to_json(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "k": self.k,
            "initial_family_size": self.initial_family_size,
            "rule1_applications": [r.to_json() for r in self.rule1_applications],
            "rule2_fired": self.rule2_fired,
            "final_family_size": self.final_family_size,
            "kernel_vertices": self.kernel_vertices,
            "kernel_edges": self.kernel_edges,
        }


@dataclass(frozen=True)
class KernelResult:
    kernel_graph: Graph
    kernel_budget: int
    reduced_family: SetFamily
    trace: KernelTrace
    fresh_vertex_map: dict[VertexSet, VertexSet] = field(default_factory=dict)
    # kernel vertex id -> original vertex id, or a fresh id >= original n
    vertex_labels: tuple[int, ...] = ()
    no_instance: bool = False


def _check_t(t: int) -> None:
    if t < 3:
        raise ValueError(f"clique size t must be >= 3, got {t}")


def build_family(g: Graph, t: int) -> SetFamily:
    _check_t(t)
    return SetFamily(tuple(enumerate_t_cliques(g, t)))


def compute_link_family(family: SetFamily, x: int, y: int) -> list[VertexSet]:
    """Members through both ``x`` and ``y``, with ``x`` and ``y`` stripped."""
    return [tuple(v for v in z if v != x and v != y) for z in family if x in z and y in z]


def sunflower_rule_threshold(k: int, t: int) -> int:
    return sunflower_threshold(t - 2, k + 1)


def size_rule_threshold(k: int, t: int) -> int:
    return 2 * factorial(t - 2) * k ** (t - 1)


def apply_sunflower_rule(family: SetFamily, k: int, t: int) -> tuple[SetFamily, RuleRecord] | None:
    """Apply the sunflower rule once at the first eligible edge, or return ``None``.

    An edge ``(x, y)`` is eligible when its link family is larger than
    ``2 * (t-2)! * k^(t-2)``. Every member containing ``Y + {x, y}`` is
    replaced by that single set, where ``Y`` is the core of a ``(k+1)``-petal
    sunflower in the link family.
    """
    if k < 1:
        raise ValueError("sunflower rule needs k >= 1")
    _check_t(t)
    limit = sunflower_rule_threshold(k, t)
    for x, y in family.universe():
        link = compute_link_family(family, x, y)
        if len(link) <= limit:
            continue
        candidates = [s for s in link if s]
        flower = find_sunflower(candidates, t - 2, k + 1)
        if flower is not None:
            core, petals = flower.core, flower.petals
        elif len(candidates) < len(link):
            # {x, y} is itself a member; every other member through (x, y) is redundant.
            core, petals = (), ()
        else:
            raise KernelInvariantError(
                f"no {k + 1}-petal sunflower among {len(link)} link sets of edge ({x}, {y})"
            )
        added = vertex_set(core + (x, y))
        need = set(added)
        removed = tuple(z for z in family if need.issubset(z))
        new = family.replace(removed, [added])
        return new, RuleRecord((x, y), core, petals, removed, added)
    return None


def apply_size_rule(family: SetFamily, k: int, t: int) -> Decision:
    if len(family) > size_rule_threshold(k, t):
        return Decision.NO_INSTANCE
    return Decision.PROCEED


def reconstruct_graph(
    family: SetFamily, t: int, n: int | None = None
) -> tuple[Graph, dict[VertexSet, VertexSet], tuple[int, ...]]:
    """Build the kernel graph: a t-clique on ``X`` padded with ``t - |X|`` fresh vertices.

    Fresh ids are allocated contiguously from ``n`` in member order. The
    returned graph is compacted onto the vertices actually used; the third
    element maps each compact id back to its original or fresh id.
    """
    if n is None:
        n = 1 + max((v for x in family for v in x), default=-1)
    fresh: dict[VertexSet, VertexSet] = {}
    next_id = n
    cliques = []
    for x in family:
        if not 2 <= len(x) <= t:
            raise ValueError(f"member {x} has size outside [2, {t}]")
        if len(x) < t:
            fresh[x] = tuple(range(next_id, next_id + t - len(x)))
            next_id += t - len(x)
            cliques.append(x + fresh[x])
        else:
            cliques.append(x)
    labels = tuple(sorted({v for c in cliques for v in c}))
    index = {v: i for i, v in enumerate(labels)}
    edges = {(index[u], index[v]) for c in cliques for u, v in edge_set_of(c)}
    return Graph(len(labels), tuple(edges)), fresh, labels


def fixed_no_instance(t: int) -> tuple[Graph, int]:
    """A t-clique with budget 0."""
    return Graph.complete(t), 0


def kernelize(g: Graph, k: int, t: int) -> KernelResult:
    _check_t(t)
    if k < 0:
        raise ValueError("budget must be nonnegative")
    initial = build_family(g, t)
    family = initial
    records: list[RuleRecord] = []
    if k >= 1:
        while True:
            step = apply_sunflower_rule(family, k, t)
            if step is None:
                break
            family, rec = step
            records.append(rec)

    if apply_size_rule(family, k, t) is Decision.NO_INSTANCE:
        kg, kb = fixed_no_instance(t)
        trace = KernelTrace(t, k, len(initial), tuple(records), True, len(family), kg.n, kg.m)
        result = KernelResult(kg, kb, family, trace, {}, tuple(range(t)), no_instance=True)
        check_kernel_invariants(result, initial, g)
        return result

    kg, fresh, labels = reconstruct_graph(family, t, g.n)
    trace = KernelTrace(t, k, len(initial), tuple(records), False, len(family), kg.n, kg.m)
    result = KernelResult(kg, k, family, trace, fresh, labels)
    check_kernel_invariants(result, initial, g)
    return result


def check_kernel_invariants(result: KernelResult, initial: SetFamily, g: Graph) -> None:
    """Raise ``KernelInvariantError`` if ``result`` breaks a size or structure guarantee."""
    trace = result.trace
    if trace.replay(initial) != result.reduced_family:
        raise KernelInvariantError("trace replay does not reproduce the reduced family")
    for x in result.reduced_family:
        for u, v in edge_set_of(x):
            if not g.has_edge(u, v):
                raise KernelInvariantError(f"member {x} spans non-edge ({u}, {v})")
    if result.no_instance:
        return
    t, k = trace.t, trace.k
    f = len(result.reduced_family)
    kg = result.kernel_graph
    if f > size_rule_threshold(k, t):
        raise KernelInvariantError(f"family size {f} exceeds {size_rule_threshold(k, t)}")
    if kg.n > t * f:
        raise KernelInvariantError(f"kernel has {kg.n} vertices > {t} * {f}")
    if kg.m > comb(t, 2) * f:
        raise KernelInvariantError(f"kernel has {kg.m} edges > C({t},2) * {f}")
    index = {v: i for i, v in enumerate(result.vertex_labels)}
    for x, pad in result.fresh_vertex_map.items():
        allowed = {index[v] for v in x + pad}
        for v in pad:
            if not set(kg.neighbors(index[v])) <= allowed:
                raise KernelInvariantError(f"fresh vertex {v} of {x} leaks outside its clique")
