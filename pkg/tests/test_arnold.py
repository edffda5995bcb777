import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemark.arnold import (
    ArnoldParams,
    _matrix_power_mod,
    arnold_map,
    arnold_period,
    arnold_step,
    arnold_unmap,
)


def test_period_hand_oracles():
    # [[1,1],[1,2]] mod 2: k=1 -> [[1,1],[1,0]], k=2 -> [[0,1],[1,1]], k=3 -> I
    assert arnold_period(2, 1, 1) == 3
    # classic value for the standard cat map on a 512 grid
    assert arnold_period(512, 1, 1) == 384


@given(n=st.integers(2, 64), a=st.integers(1, 5), b=st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_period_matches_matrix_power(n, a, b):
    p = arnold_period(n, a, b)
    assert _matrix_power_mod(a, b, p, n) == ((1 % n, 0), (0, 1 % n))
    # minimality: no earlier power is the identity
    for k in range(1, min(p, 12)):
        assert _matrix_power_mod(a, b, k, n) != ((1 % n, 0), (0, 1 % n))


def test_map_is_permutation(rng):
    img = rng.integers(0, 256, (64, 64))
    p = ArnoldParams(1, 1, 64, 7)
    out = arnold_map(img, p)
    assert not np.array_equal(out, img)
    np.testing.assert_array_equal(np.sort(out.ravel()), np.sort(img.ravel()))


def test_map_zero_iterations_is_identity(rng):
    img = rng.integers(0, 256, (32, 32))
    np.testing.assert_array_equal(arnold_map(img, ArnoldParams(2, 3, 32, 0)), img)


def test_map_matches_single_steps():
    p = ArnoldParams(2, 3, 16, 1)
    img = np.zeros((16, 16))
    img[5, 9] = 1.0
    out = arnold_map(img, p)
    x2, y2 = arnold_step(5, 9, p)
    assert out[x2, y2] == 1.0 and out.sum() == 1.0


@given(n=st.sampled_from([8, 16, 64]), a=st.integers(1, 3), b=st.integers(1, 3),
       seed=st.integers(0, 2**16))
@settings(max_examples=30, deadline=None)
def test_unmap_inverts_map_exactly(n, a, b, seed):
    rng = np.random.default_rng(seed)
    img = rng.integers(0, 256, (n, n))
    k = int(rng.integers(0, arnold_period(n, a, b)))
    p = ArnoldParams(a, b, n, k)
    np.testing.assert_array_equal(arnold_unmap(arnold_map(img, p), p), img)


def test_unmap_rejects_iterations_at_period():
    p = ArnoldParams(1, 1, 2, 3)   # period of n=2 is 3
    with pytest.raises(ValueError, match="period"):
        arnold_unmap(np.zeros((2, 2)), p)


def test_param_validation():
    with pytest.raises(ValueError):
        ArnoldParams(0, 1, 8, 1)
    with pytest.raises(ValueError):
        ArnoldParams(1, 1, 1, 1)
    with pytest.raises(ValueError):
        ArnoldParams(1, 1, 8, -1)
    with pytest.raises(ValueError):
        arnold_map(np.zeros((4, 4)), ArnoldParams(1, 1, 8, 1))
    with pytest.raises(ValueError):
        arnold_step(8, 0, ArnoldParams(1, 1, 8, 1))
