"""Seeded random instances for benchmarks and oracle cross-checks.

Arguments are named ``a1 .. an``. For every ordered pair ``(i, j)`` with
``i != j``, visited row-major, one draw from ``random.Random(seed)`` decides
the attack with probability ``p``. When ``self_attack`` is positive a second
pass draws one self-loop decision per argument in order.
"""

import random

from .framework import ArgumentationFramework


def random_af(n, p, seed, self_attack=0.0):
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0 or not 0.0 <= self_attack <= 1.0:
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p]
    if self_attack > 0:
        edges += [(i, i) for i in range(n) if rng.random() < self_attack]
    return ArgumentationFramework.from_edges([f"a{i + 1}" for i in range(n)], edges)


def gen(n, p, seed, self_attack=0.0):
    """Instance text in apx format."""
    return random_af(n, p, seed, self_attack).to_apx()
