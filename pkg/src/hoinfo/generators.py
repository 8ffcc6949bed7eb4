"""Synthetic discrete systems: pure redundancies, pure synergies,
independent compositions, point masses, and seeded random tables.

The two canonical gadgets pin down the extremes of the order-k hierarchy:

* :func:`giant_bit`: k identical copies of one uniform variable, the pure
  order-k redundancy. T = (k-1)*log2(a), D = log2(a), S = k*log2(a).
* :func:`parity`: k variables whose last coordinate is the modular sum of
  the first k-1 (XOR for binary), the pure order-k synergy: removing any
  single variable leaves a fully independent system, so every leave-one-out
  marginal has zero total correlation.

All constructors are pure; randomness enters only through explicitly
passed seeds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .distribution import (
    DEFAULT_CONFIG,
    EstimatorConfig,
    JointDistribution,
    _fold_1d,
    build_distribution,
    product,
)
from .errors import EmptyInputError, InvalidOrderError, TableTooLargeError

GENERATOR_KINDS = (
    "giant_bit",
    "parity",
    "independent_product",
    "random_dirichlet_like",
    "point_mass",
)


@dataclass(frozen=True, slots=True)
class GeneratorSpec:
    """Declarative description of a synthetic system.

    ``order`` applies to giant_bit and parity (their variable count k);
    ``n_vars`` to random and point-mass kinds; ``seed`` and
    ``concentration`` to the random kind; ``components`` holds the child
    specs of an independent_product.
    """

    kind: str
    order: int | None = None
    alphabet: int = 2
    n_vars: int | None = None
    seed: int | None = None
    concentration: float = 1.0
    components: tuple["GeneratorSpec", ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise InvalidOrderError(
                f"unknown generator kind {self.kind!r}; "
                f"expected one of {GENERATOR_KINDS}"
            )
        if self.components and self.kind != "independent_product":
            raise InvalidOrderError(
                "components are only valid for kind='independent_product'"
            )

    def describe(self) -> str:
        """Canonical provenance string, e.g. ``gen:parity(order=3, alphabet=2)``."""
        if self.kind == "independent_product":
            inner = ", ".join(c.describe() for c in self.components)
            return f"gen:independent_product[{inner}]"
        parts = []
        if self.order is not None:
            parts.append(f"order={self.order}")
        if self.n_vars is not None:
            parts.append(f"n_vars={self.n_vars}")
        parts.append(f"alphabet={self.alphabet}")
        if self.kind == "random_dirichlet_like":
            parts.append(f"seed={self.seed}")
            parts.append(f"concentration={self.concentration}")
        return f"gen:{self.kind}({', '.join(parts)})"

    def as_dict(self) -> dict:
        """JSON-ready form; inverse of :func:`spec_from_dict`."""
        out: dict = {"kind": self.kind}
        if self.order is not None:
            out["order"] = self.order
        out["alphabet"] = self.alphabet
        if self.n_vars is not None:
            out["n_vars"] = self.n_vars
        if self.seed is not None:
            out["seed"] = self.seed
        if self.kind == "random_dirichlet_like":
            out["concentration"] = self.concentration
        if self.components:
            out["components"] = [c.as_dict() for c in self.components]
        return out


def spec_from_dict(obj: Mapping) -> GeneratorSpec:
    """Build a GeneratorSpec from its JSON object form."""
    if "kind" not in obj:
        raise InvalidOrderError("generator spec is missing 'kind'")
    known = {"kind", "order", "alphabet", "n_vars", "seed", "concentration",
             "components"}
    unknown = set(obj) - known
    if unknown:
        raise InvalidOrderError(f"unknown generator spec keys: {sorted(unknown)}")
    components = tuple(
        spec_from_dict(c) for c in obj.get("components", ())
    )
    return GeneratorSpec(
        kind=str(obj["kind"]),
        order=None if obj.get("order") is None else int(obj["order"]),
        alphabet=int(obj.get("alphabet", 2)),
        n_vars=None if obj.get("n_vars") is None else int(obj["n_vars"]),
        seed=None if obj.get("seed") is None else int(obj["seed"]),
        concentration=float(obj.get("concentration", 1.0)),
        components=components,
    )


def giant_bit(
    order: int, alphabet: int = 2, config: EstimatorConfig | None = None
) -> JointDistribution:
    """k identical copies of one uniform variable: the pure order-k redundancy.

    Uniform over the diagonal states (a, a, ..., a). Knowing any one
    variable determines all others.
    """
    if order < 2:
        raise InvalidOrderError(f"giant bit needs order >= 2, got {order}")
    if alphabet < 2:
        raise InvalidOrderError(f"giant bit needs alphabet >= 2, got {alphabet}")
    mass = 1.0 / alphabet
    entries = [((a,) * order, mass) for a in range(alphabet)]
    return build_distribution((alphabet,) * order, entries, config)


def parity(
    order: int, alphabet: int = 2, config: EstimatorConfig | None = None
) -> JointDistribution:
    """k variables whose last is the modular sum of the rest: pure order-k synergy.

    The first k-1 variables are independent and uniform; the last equals
    their sum mod ``alphabet`` (XOR when binary). Dropping any single
    variable leaves the remaining k-1 fully independent and uniform, so
    every leave-one-out marginal carries zero total correlation.
    """
    if order < 2:
        raise InvalidOrderError(f"parity needs order >= 2, got {order}")
    if alphabet < 2:
        raise InvalidOrderError(f"parity needs alphabet >= 2, got {alphabet}")
    mass = 1.0 / alphabet ** (order - 1)
    entries = []
    for inputs in itertools.product(range(alphabet), repeat=order - 1):
        check = sum(inputs) % alphabet
        entries.append((inputs + (check,), mass))
    return build_distribution((alphabet,) * order, entries, config)


def point_mass(
    n_vars: int = 1, alphabet: int = 1, config: EstimatorConfig | None = None
) -> JointDistribution:
    """Deterministic system: all mass on the all-zeros state.

    The additive identity for independent composition; contributes nothing
    to any measure.
    """
    if n_vars < 1:
        raise InvalidOrderError(f"point mass needs n_vars >= 1, got {n_vars}")
    if alphabet < 1:
        raise InvalidOrderError(f"point mass needs alphabet >= 1, got {alphabet}")
    return build_distribution(
        (alphabet,) * n_vars, [((0,) * n_vars, 1.0)], config
    )


def random_distribution(
    n_vars: int,
    alphabet: int | Sequence[int],
    seed: int,
    concentration: float = 1.0,
    config: EstimatorConfig | None = None,
) -> JointDistribution:
    """Seeded random table with strictly positive mass on every state.

    Scheme (fixed for reproducibility): draw one uniform deviate u per
    state from ``numpy.random.default_rng(seed)``, shape it into a weight
    w = (1 - u) ** (1 / concentration), then quantize the normalized
    weights to integer multiples of 2**-B (B in [40, 48], chosen from the
    state count) with every state kept at >= 1 quantum. The quantization
    residual is spread deterministically by fractional part, largest
    first, with stable index tie-breaks. Quantized masses are exact binary
    fractions, so the table sums to exactly 1.0.

    Small concentration concentrates mass on few states; as concentration
    grows the table approaches uniform. ``alphabet`` is either one shared
    cardinality or a per-variable sequence.
    """
    cfg = config if config is not None else DEFAULT_CONFIG
    if n_vars < 1:
        raise InvalidOrderError(f"random system needs n_vars >= 1, got {n_vars}")
    if isinstance(alphabet, (int, np.integer)):
        cards = (int(alphabet),) * n_vars
    else:
        cards = tuple(int(a) for a in alphabet)
        if len(cards) != n_vars:
            raise InvalidOrderError(
                f"got {len(cards)} cardinalities for {n_vars} variables"
            )
    if any(c < 1 for c in cards):
        raise InvalidOrderError(f"cardinalities must be >= 1: {cards}")
    if not concentration > 0.0:
        raise InvalidOrderError(
            f"concentration must be positive, got {concentration}"
        )
    n_states = math.prod(cards)
    if n_states > cfg.max_dense_states:
        raise TableTooLargeError(
            f"random table of {n_states} states exceeds max_dense_states="
            f"{cfg.max_dense_states}"
        )

    rng = np.random.default_rng(seed)
    u = rng.random(n_states)
    w = (1.0 - u) ** (1.0 / concentration)  # in (0, 1]

    bits = min(48, max(40, n_states.bit_length() + 14))
    target = 1 << bits
    scaled = w * (target / _fold_1d(w))
    floors = np.floor(scaled)
    quanta = np.maximum(floors, 1.0).astype(np.int64)
    frac = scaled - floors
    residual = target - int(quanta.sum())
    if residual > 0:
        order = np.argsort(-frac, kind="stable")
        whole, extra = divmod(residual, n_states)
        if whole:
            quanta += whole
        quanta[order[:extra]] += 1
    elif residual < 0:
        order = np.argsort(frac, kind="stable")
        deficit = -residual
        while deficit > 0:
            takeable = order[quanta[order] > 1][:deficit]
            # target >= n_states * 2**14, so an oversubscribed table always
            # has states above one quantum
            assert takeable.size > 0
            quanta[takeable] -= 1
            deficit -= takeable.size

    table = (quanta / float(target)).reshape(cards)
    return JointDistribution(cards, table=table, config=cfg)


def generate(
    spec: GeneratorSpec, config: EstimatorConfig | None = None
) -> JointDistribution:
    """Materialize a GeneratorSpec as a JointDistribution."""
    if spec.kind == "giant_bit":
        _require(spec.order is not None, "giant_bit requires 'order'")
        return giant_bit(spec.order, spec.alphabet, config)
    if spec.kind == "parity":
        _require(spec.order is not None, "parity requires 'order'")
        return parity(spec.order, spec.alphabet, config)
    if spec.kind == "point_mass":
        return point_mass(spec.n_vars if spec.n_vars else 1, spec.alphabet, config)
    if spec.kind == "random_dirichlet_like":
        _require(spec.n_vars is not None, "random_dirichlet_like requires 'n_vars'")
        _require(spec.seed is not None, "random_dirichlet_like requires 'seed'")
        return random_distribution(
            spec.n_vars, spec.alphabet, spec.seed, spec.concentration, config
        )
    # independent_product
    _require(bool(spec.components), "independent_product requires 'components'")
    return compose_independent(spec.components, config)


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise InvalidOrderError(message)


def compose_independent(
    specs: Iterable[GeneratorSpec], config: EstimatorConfig | None = None
) -> JointDistribution:
    """Independent join of generated subsystems, left to right."""
    specs = tuple(specs)
    if not specs:
        raise EmptyInputError("compose_independent needs at least one spec")
    dist = generate(specs[0], config)
    for spec in specs[1:]:
        dist = product(dist, generate(spec, config))
    return dist
