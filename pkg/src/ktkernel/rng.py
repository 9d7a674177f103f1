"""Portable seeded randomness (SplitMix64) and random graph generation."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator; the same seed gives the same stream on any platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] (modulo reduction)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.next_u64() % len(seq)]


def gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    """Erdos-Renyi G(n, p): one draw per vertex pair in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_instances(count, seed, n_max, t_values=(3,), k_max=2, p_values=(0.3, 0.5, 0.7)):
    """Yield ``(graph, k, t)`` triples from one seeded stream."""
    rng = SplitMix64(seed)
    for _ in range(count):
        t = rng.choice(t_values)
        n = rng.randint(min(t, n_max), n_max)
        p = rng.choice(p_values)
        k = rng.randint(0, k_max)
        yield gnp(n, p, rng), k, t
