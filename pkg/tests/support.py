"""Shared construction helpers for the test suite.

Every random object is derived from an explicit master seed so the whole
suite is reproducible bit for bit.
"""

import numpy as np

from hoinfo import (
    JointDistribution,
    build_distribution,
    random_distribution,
)

# Uniform inputs with the last variable their XOR: the canonical pure
# three-way synergy. Dyadic masses, so all derived sums are exact.
XOR_TRIPLE_ENTRIES = [
    ((0, 0, 0), 0.25),
    ((0, 1, 1), 0.25),
    ((1, 0, 1), 0.25),
    ((1, 1, 0), 0.25),
]


def xor_triple() -> JointDistribution:
    return build_distribution([2, 2, 2], XOR_TRIPLE_ENTRIES)


def random_suite(count: int, master_seed: int = 20240817,
                 n_range=(2, 5), cards=(2, 3)) -> list[JointDistribution]:
    """Seeded random distributions with mixed per-variable cardinalities."""
    master = np.random.default_rng(master_seed)
    suite = []
    for _ in range(count):
        n = int(master.integers(n_range[0], n_range[1] + 1))
        per_var = [int(master.choice(cards)) for _ in range(n)]
        concentration = float(master.choice([0.5, 1.0, 2.0]))
        seed = int(master.integers(0, 2**63 - 1))
        suite.append(
            random_distribution(n, per_var, seed, concentration)
        )
    return suite


def dyadic_random_table(rng: np.random.Generator, cards,
                        resolution_bits: int = 30) -> JointDistribution:
    """Random dense table whose masses are exact binary fractions.

    Sums of such masses are exact at every grouping, which makes
    marginalization associativity testable as exact equality.
    """
    n_states = int(np.prod(cards))
    weights = rng.integers(1, 1 << 16, size=n_states).astype(np.int64)
    total = int(weights.sum())
    target = 1 << resolution_bits
    assert target >= total
    weights[0] += target - total
    masses = weights / float(target)
    entries = []
    state = [0] * len(cards)
    for flat, mass in enumerate(masses):
        idx = flat
        for pos in range(len(cards) - 1, -1, -1):
            state[pos] = idx % cards[pos]
            idx //= cards[pos]
        entries.append((tuple(state), float(mass)))
    return build_distribution(cards, entries)
