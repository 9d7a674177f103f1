"""Exact bounded-search-tree solver for K_t-free edge deletion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import EdgeSet, Graph, edge_set, edge_set_of, first_t_clique
from .kernel import KernelResult, KernelTrace, kernelize


@dataclass(frozen=True)
class DeletionInstance:
    graph: Graph
    budget: int
    t: int

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")
        if self.t < 3:
            raise ValueError(f"clique size t must be >= 3, got {self.t}")


@dataclass(frozen=True)
class Verdict:
    answer: bool
    witness: EdgeSet | None = None

    def __str__(self) -> str:
        return "yes" if self.answer else "no"


def exact_solve(inst: DeletionInstance) -> Verdict:
    """Decide the instance by branching on the edges of the first remaining t-clique.

    At most ``C(t, 2) ** budget`` leaves; the witness returned on ``yes`` is
    the first one found in canonical order and is re-checked before return.
    """
    g, t = inst.graph, inst.t
    adj = list(g.adj)

    def search(removed: list, budget: int) -> list | None:
        clique = first_t_clique(_Masked(g.n, adj), t)
        if clique is None:
            return removed
        if budget == 0:
            return None
        for u, v in edge_set_of(clique):
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            found = search(removed + [(u, v)], budget - 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            if found is not None:
                return found
        return None

    found = search([], inst.budget)
    if found is None:
        return Verdict(False)
    witness = edge_set(found)
    if len(witness) > inst.budget or first_t_clique(g.without_edges(witness), t) is not None:
        raise AssertionError(f"solver produced an invalid witness {witness}")
    return Verdict(True, witness)


class _Masked:
    # duck-typed stand-in for Graph during search; only n and adj are read
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int]):
        self.n = n
        self.adj = adj


class EquivalenceError(AssertionError):
    def __init__(self, report: EquivalenceReport):
        self.report = report
        super().__init__(
            f"verdict mismatch: original {report.original}, kernel {report.kernel}"
        )


@dataclass(frozen=True)
class EquivalenceReport:
    graph: Graph
    k: int
    t: int
    original: Verdict
    kernel: Verdict
    result: KernelResult = field(repr=False)

    @property
    def agree(self) -> bool:
        return self.original.answer == self.kernel.answer

    @property
    def trace(self) -> KernelTrace:
        return self.result.trace


def verify_equivalence(g: Graph, k: int, t: int, *, kernelize_fn=kernelize, strict: bool = True) -> EquivalenceReport:
    """Kernelize ``(g, k)`` and solve both instances exactly.

    With ``strict`` a disagreement raises ``EquivalenceError`` carrying the
    report (and so the kernel trace).
    """
    result = kernelize_fn(g, k, t)
    original = exact_solve(DeletionInstance(g, k, t))
    reduced = exact_solve(DeletionInstance(result.kernel_graph, result.kernel_budget, t))
    report = EquivalenceReport(g, k, t, original, reduced, result)
    if strict and not report.agree:
        raise EquivalenceError(report)
    return report
