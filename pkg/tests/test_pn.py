import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemark.pn import CORR_BOUND, corr2, gen_pn_pair


def test_corr2_hand_oracles():
    assert abs(corr2([1, 0, -1], [-1, 0, 1]) + 1.0) < 1e-12
    assert abs(corr2([1, 2, 3], [1, 2, 3]) - 1.0) < 1e-12
    assert abs(corr2([1, 0, 1, 0], [1, 0, 0, 1])) < 1e-15


def test_corr2_errors():
    with pytest.raises(ValueError):
        corr2([1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        corr2([3, 3, 3], [1, 2, 3])


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_pair_contract(seed):
    pair = gen_pn_pair(seed, 66)
    again = gen_pn_pair(seed, 66)
    np.testing.assert_array_equal(pair.seq_one, again.seq_one)
    np.testing.assert_array_equal(pair.seq_zero, again.seq_zero)
    for seq in (pair.seq_one, pair.seq_zero):
        assert seq.shape == (66,)
        assert set(np.unique(seq)) <= {-1.0, 0.0, 1.0}
    assert abs(corr2(pair.seq_one, pair.seq_zero)) <= CORR_BOUND


def test_symbol_frequencies_quarter_half_quarter():
    pairs = [gen_pn_pair(seed, 66) for seed in range(300)]
    symbols = np.concatenate([np.concatenate([p.seq_one, p.seq_zero]) for p in pairs])
    freq = {v: np.mean(symbols == v) for v in (-1.0, 0.0, 1.0)}
    assert abs(freq[-1.0] - 0.25) < 0.02
    assert abs(freq[0.0] - 0.50) < 0.02
    assert abs(freq[1.0] - 0.25) < 0.02


def test_sequences_are_immutable():
    pair = gen_pn_pair(1, 66)
    with pytest.raises(ValueError):
        pair.seq_one[0] = 5


def test_length_validation():
    with pytest.raises(ValueError):
        gen_pn_pair(1, 4)
