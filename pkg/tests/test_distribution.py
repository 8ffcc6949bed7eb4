import math

import numpy as np
import pytest

import oracle
import support
from hoinfo import (
    EmptyInputError,
    EmptySubsetError,
    EstimatorConfig,
    IndexOutOfRangeError,
    NegativeMassError,
    NotNormalizedError,
    RaggedRowsError,
    StateOutOfRangeError,
    SystemTooSmallError,
    TableTooLargeError,
    build_distribution,
    dual_total_correlation,
    entropy,
    estimate_from_samples,
    giant_bit,
    infer_alphabets,
    leave_one_out,
    marginalize,
    o_information,
    point_mass,
    product,
    random_distribution,
    s_information,
    total_correlation,
)


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def test_build_uniform_bit():
    d = build_distribution([2], [((0,), 0.5), ((1,), 0.5)])
    assert d.n_vars == 1
    assert d.cardinalities == (2,)
    assert d.mass((0,)) == 0.5
    assert entropy(d) == 1.0


def test_build_accepts_bare_int_states_for_single_variable():
    d = build_distribution([2], [(0, 0.5), (1, 0.5)])
    assert d.mass((1,)) == 0.5


def test_build_two_copy_giant_bit():
    d = build_distribution([2, 2], [((0, 0), 0.5), ((1, 1), 0.5)])
    assert d.mass((0, 0)) == 0.5
    assert d.mass((0, 1)) == 0.0
    assert total_correlation(d) == 1.0


def test_build_rejects_unnormalized_masses():
    entries = [((0,), 0.5), ((1,), 0.499)]
    with pytest.raises(NotNormalizedError):
        build_distribution([2], entries)


def test_build_renormalize_flag():
    entries = [((0,), 1.0), ((1,), 3.0)]
    d = build_distribution([2], entries, renormalize=True)
    assert d.mass((0,)) == 0.25
    assert d.mass((1,)) == 0.75
    assert entropy(d) == pytest.approx(0.8112781244591328, abs=1e-15)


def test_build_rejects_negative_mass():
    with pytest.raises(NegativeMassError):
        build_distribution([2], [((0,), 1.5), ((1,), -0.5)])


def test_build_rejects_out_of_range_state():
    with pytest.raises(StateOutOfRangeError):
        build_distribution([2], [((2,), 1.0)])


def test_build_rejects_wrong_arity_state():
    with pytest.raises(StateOutOfRangeError):
        build_distribution([2, 2], [((0,), 1.0)])


def test_build_rejects_empty_cardinalities():
    with pytest.raises(EmptyInputError):
        build_distribution([], [])


def test_build_rejects_nonpositive_cardinality():
    with pytest.raises(StateOutOfRangeError):
        build_distribution([2, 0], [((0, 0), 1.0)])


def test_build_duplicate_states_accumulate():
    d = build_distribution([2], [((0,), 0.25), ((0,), 0.25), ((1,), 0.5)])
    assert d.mass((0,)) == 0.5


def test_forced_dense_over_cap_raises():
    cfg = EstimatorConfig(max_dense_states=4)
    entries = [((0, 0, 0), 0.5), ((1, 1, 1), 0.5)]
    with pytest.raises(TableTooLargeError):
        build_distribution([2, 2, 2], entries, cfg, representation="dense")


def test_auto_representation_switches_to_sparse_over_cap():
    cfg = EstimatorConfig(max_dense_states=4)
    entries = [((0, 0, 0), 0.5), ((1, 1, 1), 0.5)]
    d = build_distribution([2, 2, 2], entries, cfg)
    assert d.representation == "sparse"
    assert d.support_size == 2


def test_config_validation():
    with pytest.raises(ValueError):
        EstimatorConfig(log_base=1.0)
    with pytest.raises(ValueError):
        EstimatorConfig(zero_tolerance=-1e-9)


# ---------------------------------------------------------------------------
# marginalization
# ---------------------------------------------------------------------------

def test_marginalize_xor_triple_gives_independent_pair():
    d = support.xor_triple()
    pair = marginalize(d, (0, 1))
    # brute-force oracle over the 4-entry joint table
    expected = oracle.marginal(oracle.pmf_of(d), (0, 1))
    for state in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        assert pair.mass(state) == expected[state] == 0.25


def test_marginalize_giant_bit_keeps_copies():
    d = giant_bit(3)
    pair = marginalize(d, (0, 1))
    assert np.array_equal(pair.dense_table(), giant_bit(2).dense_table())


def test_marginalize_keep_all_is_identity():
    d = support.xor_triple()
    assert marginalize(d, (0, 1, 2)) is d


def test_marginalize_validates_subset():
    d = support.xor_triple()
    with pytest.raises(EmptySubsetError):
        marginalize(d, ())
    with pytest.raises(IndexOutOfRangeError):
        marginalize(d, (0, 3))


def test_marginalize_chain_matches_direct_exactly():
    # Dyadic masses make every mass sum exact, so two-stage and direct
    # marginalization must agree bit for bit.
    rng = np.random.default_rng(7)
    dists = [
        support.xor_triple(),
        giant_bit(4),
        support.dyadic_random_table(rng, (2, 3, 2, 3)),
        support.dyadic_random_table(rng, (3, 3, 2, 2)),
        random_distribution(4, (2, 3, 2, 2), seed=11),
    ]
    for d in dists:
        via_chain = marginalize(marginalize(d, (0, 1, 2)), (0, 2))
        direct = marginalize(d, (0, 2))
        assert np.array_equal(via_chain.dense_table(), direct.dense_table())


def test_marginal_entropy_never_exceeds_joint(suite50):
    for d in suite50:
        h = entropy(d)
        for keep in [(0,), (0, 1), tuple(range(d.n_vars - 1))]:
            assert entropy(marginalize(d, keep)) <= h + 1e-12


def test_leave_one_out_xor():
    d = support.xor_triple()
    pair = leave_one_out(d, 2)
    assert pair.n_vars == 2
    for state in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        assert pair.mass(state) == 0.25


def test_leave_one_out_giant_bit():
    assert np.array_equal(
        leave_one_out(giant_bit(3), 0).dense_table(),
        giant_bit(2).dense_table(),
    )


def test_leave_one_out_errors():
    single = build_distribution([2], [((0,), 0.5), ((1,), 0.5)])
    with pytest.raises(SystemTooSmallError):
        leave_one_out(single, 0)
    with pytest.raises(IndexOutOfRangeError):
        leave_one_out(support.xor_triple(), 3)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def test_product_of_uniform_bits_is_independent():
    bit = build_distribution([2], [((0,), 0.5), ((1,), 0.5)])
    pair = product(bit, bit)
    assert pair.cardinalities == (2, 2)
    assert total_correlation(pair) == 0.0


def test_product_xor_xor_total_correlation():
    d = product(support.xor_triple(), support.xor_triple())
    assert d.n_vars == 6
    # additivity of T over independent blocks, checked by brute force
    assert oracle.total_correlation(oracle.pmf_of(d), 6) == pytest.approx(
        2.0, abs=1e-12
    )
    assert total_correlation(d) == pytest.approx(2.0, abs=1e-9)


def test_product_with_point_mass_preserves_measures():
    base = giant_bit(3)
    extended = product(base, point_mass())
    assert extended.n_vars == 4
    assert total_correlation(extended) == pytest.approx(
        total_correlation(base), abs=1e-12
    )
    assert dual_total_correlation(extended) == pytest.approx(
        dual_total_correlation(base), abs=1e-12
    )
    assert s_information(extended) == pytest.approx(
        s_information(base), abs=1e-12
    )
    assert o_information(extended) == pytest.approx(
        o_information(base), abs=1e-12
    )


def test_product_entropy_additivity(suite50):
    for a, b in zip(suite50[:20:2], suite50[1:20:2]):
        assert entropy(product(a, b)) == pytest.approx(
            entropy(a) + entropy(b), abs=1e-9
        )


def test_product_over_cap_raises():
    cfg = EstimatorConfig(max_dense_states=8)
    a = random_distribution(2, 2, seed=1, config=cfg)
    b = random_distribution(2, 2, seed=2, config=cfg)
    with pytest.raises(TableTooLargeError):
        product(a, b)


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------

def test_entropy_reference_values():
    bit = build_distribution([2], [((0,), 0.5), ((1,), 0.5)])
    assert entropy(bit) == 1.0
    assert entropy(point_mass()) == 0.0
    skewed = build_distribution([2], [((0,), 0.25), ((1,), 0.75)])
    # direct evaluation of -sum p log2 p
    assert entropy(skewed) == pytest.approx(0.8112781244591328, abs=1e-15)


def test_entropy_bounds(suite50):
    for d in suite50:
        h = entropy(d)
        assert h >= 0.0
        assert h <= math.fsum(math.log2(c) for c in d.cardinalities) + 1e-12


def test_entropy_respects_log_base():
    cfg = EstimatorConfig(log_base=math.e)
    bit = build_distribution([2], [((0,), 0.5), ((1,), 0.5)], cfg)
    assert entropy(bit) == pytest.approx(math.log(2.0), abs=1e-15)


# ---------------------------------------------------------------------------
# dense/sparse agreement
# ---------------------------------------------------------------------------

def test_dense_sparse_measures_bit_identical(suite50):
    gadgets = [support.xor_triple(), giant_bit(3), giant_bit(3, 3)]
    for d in gadgets + suite50[:20]:
        sparse = d.to_sparse()
        assert sparse.representation == "sparse"
        assert entropy(sparse) == entropy(d)
        assert total_correlation(sparse) == total_correlation(d)
        assert dual_total_correlation(sparse) == dual_total_correlation(d)
        assert s_information(sparse) == s_information(d)
        assert o_information(sparse) == o_information(d)


def test_dense_sparse_marginals_bit_identical(suite50):
    for d in suite50[:20]:
        sparse = d.to_sparse()
        for i in range(d.n_vars):
            assert np.array_equal(
                leave_one_out(d, i).dense_table(),
                leave_one_out(sparse, i).dense_table(),
            )


def test_representation_round_trip():
    d = support.xor_triple()
    back = d.to_sparse().to_dense()
    assert np.array_equal(back.dense_table(), d.dense_table())


# ---------------------------------------------------------------------------
# sample ingestion
# ---------------------------------------------------------------------------

def test_estimate_giant_bit_from_samples():
    rows = [(0, 0)] * 500 + [(1, 1)] * 500
    d = estimate_from_samples(rows)
    assert d.cardinalities == (2, 2)
    assert d.mass((0, 0)) == 0.5
    assert total_correlation(d) == 1.0


def test_estimate_point_mass_from_samples():
    d = estimate_from_samples([(0,)] * 100)
    assert d.cardinalities == (1,)
    assert entropy(d) == 0.0


def test_estimate_exact_xor_from_enumerated_rows():
    rows = [s for s, _ in support.XOR_TRIPLE_ENTRIES for _ in range(2)]
    d = estimate_from_samples(rows)
    assert np.array_equal(d.dense_table(), support.xor_triple().dense_table())


def test_estimate_rejects_empty_and_ragged():
    with pytest.raises(EmptyInputError):
        estimate_from_samples([])
    with pytest.raises(RaggedRowsError):
        estimate_from_samples([(0, 1), (0,)])


def test_estimate_sorts_symbols_deterministically():
    rows = [("b", 1), ("a", 0), ("b", 1), ("a", 0)]
    assert infer_alphabets(rows) == [["a", "b"], [0, 1]]
    d = estimate_from_samples(rows)
    assert d.mass((0, 0)) == 0.5  # ("a", 0)
    assert d.mass((1, 1)) == 0.5  # ("b", 1)
    shuffled = estimate_from_samples(rows[::-1])
    assert np.array_equal(d.dense_table(), shuffled.dense_table())


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------

def test_same_seed_same_table():
    a = random_distribution(3, (2, 3, 2), seed=99, concentration=0.7)
    b = random_distribution(3, (2, 3, 2), seed=99, concentration=0.7)
    assert np.array_equal(a.dense_table(), b.dense_table())
    assert entropy(a) == entropy(b)


def test_repeated_measure_calls_are_identical(suite50):
    d = suite50[0]
    assert dual_total_correlation(d) == dual_total_correlation(d)
    assert s_information(d) == s_information(d)
