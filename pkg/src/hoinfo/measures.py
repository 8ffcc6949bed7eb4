"""Scalar information measures on discrete joint distributions.

Implements joint entropy H, mutual information I, total correlation T, dual
total correlation D, S-information S = T + D, O-information O = T - D, and
the two k-parameterized whole-minus-sum families built from them:

* ``delta_k``: S - k*T, equivalently (N-k)*T(X) - sum_i T(X without i).
  Special cases: k=0 gives S, k=1 gives D, k=2 gives -O.
* ``gamma_k``: S - k*D.
  Special cases: k=0 gives S, k=1 gives T, k=2 gives O.

Both families are affine in k, so each needs only one computation of S, T,
and D. The explicit summation forms over leave-one-out total correlations
(``delta_k_via_tc``, ``gamma_k_via_tc``, ``dual_total_correlation_via_tc``)
are retained as independent cross-validation paths; they recompute every
marginal total correlation from scratch.

All results are in units of ``dist.config.log_base`` (bits by default).
Sums over variable indices accumulate in ascending index order, so results
are deterministic and identical for dense and sparse representations.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Iterable

from .distribution import (
    JointDistribution,
    as_subset,
    entropy,
    leave_one_out,
    marginalize,
)
from .errors import (
    FunctionalNegativeError,
    FunctionalNonMonotoneError,
    OverlappingSubsetsError,
    SystemTooSmallError,
)


@dataclass(frozen=True, slots=True)
class MeasureReport:
    """The five scalar measures of one distribution, in bits by default.

    Invariants (up to the configured zero tolerance): total_correlation,
    dual_total_correlation, and s_information are non-negative;
    s_information = total_correlation + dual_total_correlation; and
    o_information = total_correlation - dual_total_correlation.
    """

    joint_entropy: float
    total_correlation: float
    dual_total_correlation: float
    s_information: float
    o_information: float


@dataclass(frozen=True, slots=True)
class MeasureFunctional:
    """A named set function over distributions for :func:`generic_delta_k`.

    ``evaluate`` must be non-negative and non-increasing under
    marginalization; both properties are checked at call time, not assumed.
    """

    name: str
    evaluate: Callable[[JointDistribution], float]


def _require_multivariate(dist: JointDistribution) -> None:
    if dist.n_vars < 2:
        raise SystemTooSmallError(
            "measure undefined for systems with fewer than 2 variables"
        )


def _entropy_profile(
    dist: JointDistribution,
) -> tuple[float, tuple[float, ...], tuple[float, ...]]:
    """Joint entropy, per-variable entropies, leave-one-out entropies."""
    _require_multivariate(dist)
    h_joint = entropy(dist)
    singles = tuple(
        entropy(marginalize(dist, (i,))) for i in range(dist.n_vars)
    )
    loo = tuple(entropy(leave_one_out(dist, i)) for i in range(dist.n_vars))
    return h_joint, singles, loo


def _tc_from(h_joint: float, singles: Iterable[float]) -> float:
    acc = 0.0
    for h in singles:
        acc += h
    return acc - h_joint


def _dtc_from(h_joint: float, loo: Iterable[float]) -> float:
    # H(X) - sum_i H(X_i | X^{-i}), with H(X_i | X^{-i}) = H(X) - H(X^{-i})
    acc = 0.0
    for h in loo:
        acc += h_joint - h
    return h_joint - acc


def _si_from(
    h_joint: float, singles: Iterable[float], loo: Iterable[float]
) -> float:
    # sum_i I(X_i ; X^{-i})
    acc = 0.0
    for h_single, h_rest in zip(singles, loo):
        acc += h_single + h_rest - h_joint
    return acc


def mutual_information(
    dist: JointDistribution,
    part_a: Iterable[int],
    part_b: Iterable[int],
) -> float:
    """Mutual information I(A;B) = H(A) + H(B) - H(A,B) between two
    disjoint, non-empty groups of variables."""
    a = as_subset(part_a, dist.n_vars)
    b = as_subset(part_b, dist.n_vars)
    overlap = set(a) & set(b)
    if overlap:
        raise OverlappingSubsetsError(
            f"variable groups must be disjoint, both contain {sorted(overlap)}"
        )
    h_a = entropy(marginalize(dist, a))
    h_b = entropy(marginalize(dist, b))
    h_ab = entropy(marginalize(dist, a + b))
    return h_a + h_b - h_ab


def total_correlation(dist: JointDistribution) -> float:
    """Total correlation T = sum_i H(X_i) - H(X).

    Zero exactly when all variables are independent; bounded above by
    (N-1) * max_i H(X_i). Defined for N >= 1 (trivially 0 for N = 1).
    """
    h_joint = entropy(dist)
    singles = (
        entropy(marginalize(dist, (i,))) for i in range(dist.n_vars)
    )
    return _tc_from(h_joint, singles)


def dual_total_correlation(dist: JointDistribution) -> float:
    """Dual total correlation D = H(X) - sum_i H(X_i | X^{-i}).

    The share of the joint entropy carried by two or more variables at
    once; zero under global independence, low under total synchrony.
    """
    h_joint, _, loo = _entropy_profile(dist)
    return _dtc_from(h_joint, loo)


def dual_total_correlation_via_tc(dist: JointDistribution) -> float:
    """D recomputed as (N-1)*T(X) - sum_i T(X^{-i}).

    Exists as a cross-validation oracle for :func:`dual_total_correlation`;
    the two must agree within tolerance on every valid input.
    """
    _require_multivariate(dist)
    n = dist.n_vars
    return float(n - 1) * total_correlation(dist) - _marginal_tc_sum(dist)


def s_information(dist: JointDistribution) -> float:
    """S-information S = sum_i I(X_i ; X^{-i}) = T + D.

    Non-negative; zero only when all variables are independent.
    """
    h_joint, singles, loo = _entropy_profile(dist)
    return _si_from(h_joint, singles, loo)


def o_information(dist: JointDistribution) -> float:
    """O-information O = T - D.

    Signed: negative means the dependency structure is dominated by
    synergistic interactions, positive means redundancy-dominated, and a
    system with only pairwise dependencies scores zero.
    """
    h_joint, singles, loo = _entropy_profile(dist)
    return _tc_from(h_joint, singles) - _dtc_from(h_joint, loo)


def delta_k(dist: JointDistribution, k: int) -> float:
    """Synergy-ordered family Delta^k = S - k*T = (N-k)*T - sum_i T(X^{-i}).

    k = 0 gives S, k = 1 gives D, k = 2 gives -O. For a system made
    entirely of order-k synergistic interactions the value is 0; positive
    values indicate interactions of order above k dominate, negative
    values that lower orders dominate. Any integer k is accepted.
    """
    h_joint, singles, loo = _entropy_profile(dist)
    s = _si_from(h_joint, singles, loo)
    t = _tc_from(h_joint, singles)
    return s - k * t


def gamma_k(dist: JointDistribution, k: int) -> float:
    """Redundancy-ordered family Gamma^k = S - k*D.

    k = 0 gives S, k = 1 gives T, k = 2 gives O. Zero for a system made
    entirely of order-k redundant interactions (k identical copies of one
    variable). Any integer k is accepted.
    """
    h_joint, singles, loo = _entropy_profile(dist)
    s = _si_from(h_joint, singles, loo)
    d = _dtc_from(h_joint, loo)
    return s - k * d


def _marginal_tc_sum(dist: JointDistribution) -> float:
    """sum_i T(X^{-i}), each marginal total correlation from scratch."""
    acc = 0.0
    for i in range(dist.n_vars):
        acc += total_correlation(leave_one_out(dist, i))
    return acc


def delta_k_via_tc(dist: JointDistribution, k: int) -> float:
    """Delta^k from its summation form (N-k)*T(X) - sum_i T(X^{-i}).

    Cross-validation path for :func:`delta_k`.
    """
    _require_multivariate(dist)
    n = dist.n_vars
    return float(n - k) * total_correlation(dist) - _marginal_tc_sum(dist)


def gamma_k_via_tc(dist: JointDistribution, k: int) -> float:
    """Gamma^k from its total-correlation-only form.

    Computes (1 - (N-1)*(k-1)) * T(X) + (k-1) * sum_i T(X^{-i}); the
    cross-validation path for :func:`gamma_k`.
    """
    _require_multivariate(dist)
    n = dist.n_vars
    coeff = 1 - (n - 1) * (k - 1)
    return float(coeff) * total_correlation(dist) + float(k - 1) * _marginal_tc_sum(dist)


_FRAGILITY_WARNED: set[str] = set()


def generic_delta_k(
    functional: MeasureFunctional, dist: JointDistribution, k: int
) -> float:
    """Order-k whole-minus-sum statistic for an arbitrary functional.

    Returns (N-k) * f(X) - sum_i f(X^{-i}). With f = total correlation
    this reproduces :func:`delta_k`. Two of the three requirements for an
    order interpretation are enforced per call: f must be non-negative on
    every evaluated distribution, and must not increase under
    marginalization. The third (pure order-k relationships must vanish
    under any single marginalization) quantifies over all pure systems and
    cannot be checked per input; a one-time warning per functional records
    that it is assumed, not verified.
    """
    _require_multivariate(dist)
    tol = dist.config.zero_tolerance
    if functional.name not in _FRAGILITY_WARNED:
        _FRAGILITY_WARNED.add(functional.name)
        warnings.warn(
            f"functional {functional.name!r}: fragility of pure order-k "
            "relationships is assumed, not verified; order interpretations "
            "require it",
            UserWarning,
            stacklevel=2,
        )
    f_joint = _checked_value(functional, dist, tol)
    acc = 0.0
    for i in range(dist.n_vars):
        f_i = _checked_value(functional, leave_one_out(dist, i), tol)
        if f_joint < f_i - tol:
            raise FunctionalNonMonotoneError(
                f"functional {functional.name!r} increased under "
                f"marginalization of variable {i}: "
                f"f(X)={f_joint!r} < f(X^-i)={f_i!r}"
            )
        acc += f_i
    return (dist.n_vars - k) * f_joint - acc


def _checked_value(
    functional: MeasureFunctional, dist: JointDistribution, tol: float
) -> float:
    value = float(functional.evaluate(dist))
    if value < -tol:
        raise FunctionalNegativeError(
            f"functional {functional.name!r} returned {value!r} < 0"
        )
    return value


def measure_report(dist: JointDistribution) -> MeasureReport:
    """All five scalar measures from a single entropy pass."""
    h_joint, singles, loo = _entropy_profile(dist)
    t = _tc_from(h_joint, singles)
    d = _dtc_from(h_joint, loo)
    s = _si_from(h_joint, singles, loo)
    return MeasureReport(
        joint_entropy=h_joint,
        total_correlation=t,
        dual_total_correlation=d,
        s_information=s,
        o_information=t - d,
    )
