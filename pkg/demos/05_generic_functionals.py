"""Swapping the functional inside the whole-minus-sum construction.

delta_k's machinery is purely combinatorial: scale the whole-system value
by (N-k), subtract the leave-one-out values. Total correlation is one
choice of the underlying functional; generic_delta_k accepts any
non-negative functional that never increases under marginalization. How
much of the order interpretation survives depends on a third property
(pure order-k relationships must vanish when any variable is removed),
which generic functionals are not guaranteed to have.
"""

import warnings

from hoinfo import (
    MeasureFunctional,
    delta_k,
    entropy,
    generic_delta_k,
    giant_bit,
    parity,
    random_distribution,
    total_correlation,
)

tc = MeasureFunctional(name="total_correlation", evaluate=total_correlation)
h = MeasureFunctional(name="joint_entropy", evaluate=entropy)

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")

    print("With f = total correlation the construction reproduces delta_k:\n")
    for k in range(4):
        generic = generic_delta_k(tc, parity(3), k)
        direct = delta_k(parity(3), k)
        print(f"  k={k}: generic={generic:+.6f}  delta_k={direct:+.6f}")

    print("\nWith f = joint entropy the numbers change meaning entirely:\n")
    d = random_distribution(3, 2, seed=55, concentration=2.0)
    for k in range(4):
        print(f"  k={k}: H-based={generic_delta_k(h, d, k):+.4f}   "
              f"T-based={generic_delta_k(tc, d, k):+.4f}")

print("\nEach functional triggered a one-time caveat when first used:")
for w in caught:
    if "fragility" in str(w.message):
        print(" ", w.message)

print("""
Joint entropy is non-negative and monotone under marginalization, so the
construction runs, but H does not vanish on the leave-one-out marginals of
pure gadgets (a giant bit's marginals still carry a full bit). The H-based
numbers therefore carry no order-k reading. The runtime checks reject
functionals that break the two testable requirements outright:
""")

bad = MeasureFunctional(name="negated_entropy", evaluate=lambda d: -entropy(d))
try:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        generic_delta_k(bad, giant_bit(3), 2)
except Exception as exc:
    print(f"  {type(exc).__name__}: {exc}")
