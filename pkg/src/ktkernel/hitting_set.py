"""Set families over edge sets ``E_X``, sunflower search, and exact hitting set."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Hashable, Iterable, Sequence

from .graph import Edge, EdgeSet, VertexSet, edge_set, edge_set_of, vertex_set


@dataclass(frozen=True)
class SetFamily:
    """A set of vertex sets ``X``, each standing for the edge set ``E_X``.

    Members are kept sorted and deduplicated so iteration order is canonical.
    """

    members: tuple[VertexSet, ...] = ()

    def __post_init__(self) -> None:
        normal = sorted({vertex_set(x) for x in self.members})
        for x in normal:
            if len(x) < 2:
                raise ValueError(f"family member {x} has fewer than 2 vertices")
        object.__setattr__(self, "members", tuple(normal))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return vertex_set(x) in set(self.members)

    @property
    def max_member_size(self) -> int:
        return max((len(x) for x in self.members), default=0)

    def universe(self) -> EdgeSet:
        return edge_set(e for x in self.members for e in edge_set_of(x))

    def replace(self, removed: Iterable[VertexSet], added: Iterable[VertexSet]) -> SetFamily:
        drop = set(removed)
        kept = [x for x in self.members if x not in drop]
        return SetFamily(tuple(kept) + tuple(added))


@dataclass(frozen=True)
class HittingSetInstance:
    family: SetFamily
    budget: int

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")


@dataclass(frozen=True)
class Sunflower:
    petals: tuple[tuple, ...]
    core: tuple

    def is_valid(self) -> bool:
        core = set(self.core)
        sets = [set(s) for s in self.petals]
        if len(set(map(frozenset, sets))) != len(sets):
            return False
        if any(not (s - core) or not core <= s for s in sets):
            return False
        return all(a & b == core for a, b in combinations(sets, 2))


def sunflower_threshold(d: int, p: int) -> int:
    """Family size above which a ``p``-petal sunflower is guaranteed: ``2 * d! * (p-1)^d``."""
    return 2 * factorial(d) * (p - 1) ** d


def find_sunflower(family: Sequence[Iterable[Hashable]], d: int, p: int) -> Sunflower | None:
    """Find a sunflower with exactly ``p`` petals in ``family``.

    Always succeeds when ``len(family) > sunflower_threshold(d, p)``; below
    that it returns ``None`` if its search comes up empty. Petals are
    preferred in canonical (sorted) order.
    """
    if p < 1:
        raise ValueError("petal count must be >= 1")
    sets = sorted({tuple(sorted(s)) for s in family})
    if len(sets) != len(family):
        raise ValueError("family members must be distinct")
    for s in sets:
        if not s:
            raise ValueError("empty set cannot be a sunflower petal")
        if len(s) > d:
            raise ValueError(f"set {s} exceeds size bound d={d}")

    if len(sets) < p:
        return None
    if p == 1:
        return Sunflower((sets[0],), ())
    if p == 2:
        # Two sets form a sunflower iff neither contains the other.
        frozen = [frozenset(s) for s in sets]
        for i, j in combinations(range(len(sets)), 2):
            if not (frozen[i] <= frozen[j] or frozen[j] <= frozen[i]):
                return Sunflower((sets[i], sets[j]), tuple(sorted(frozen[i] & frozen[j])))
        return None

    found = _erdos_rado([frozenset(s) for s in sets], p)
    if found is None:
        return None
    petals, core = found
    return Sunflower(tuple(tuple(sorted(s)) for s in petals), tuple(sorted(core)))


def _erdos_rado(sets: list[frozenset], p: int) -> tuple[list[frozenset], frozenset] | None:
    # sets: distinct, nonempty, in canonical order
    chosen: list[frozenset] = []
    covered: set = set()
    for s in sets:
        if covered.isdisjoint(s):
            chosen.append(s)
            covered |= s
            if len(chosen) == p:
                return chosen, frozenset()
    if not covered:
        return None
    counts = Counter(v for s in sets for v in s if v in covered)
    x = min(covered, key=lambda v: (-counts[v], v))
    link = sorted(
        (s - {x} for s in sets if x in s and len(s) > 1),
        key=lambda s: tuple(sorted(s)),
    )
    if len(link) < p:
        return None
    sub = _erdos_rado(link, p)
    if sub is None:
        return None
    petals, core = sub
    return [s | {x} for s in petals], core | {x}


def is_hitting_set(s: Iterable[Edge], family: Iterable[VertexSet]) -> bool:
    hit = set(s)
    return all(any(e in hit for e in combinations(x, 2)) for x in family)


def brute_force_hitting_set(inst: HittingSetInstance) -> EdgeSet | None:
    """Return a hitting set of size at most ``inst.budget``, or ``None``.

    Bounded search tree: pick the first unhit member and branch on each of
    its edges, so the tree has at most ``C(t, 2) ** budget`` leaves.
    """
    members = [edge_set_of(x) for x in inst.family]

    def search(chosen: list[Edge], budget: int) -> list[Edge] | None:
        hit = set(chosen)
        unhit = next((es for es in members if hit.isdisjoint(es)), None)
        if unhit is None:
            return chosen
        if budget == 0:
            return None
        for e in unhit:
            found = search(chosen + [e], budget - 1)
            if found is not None:
                return found
        return None

    found = search([], inst.budget)
    return None if found is None else edge_set(found)
