import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemark.image import accumulate_blocks, divide_blocks, load_image, quantize, save_image


def test_divide_blocks_row_major_order():
    img = np.arange(16.0).reshape(4, 4)
    blocks = divide_blocks(img, 2)
    assert blocks.shape == (4, 2, 2)
    np.testing.assert_array_equal(blocks[0], [[0, 1], [4, 5]])
    np.testing.assert_array_equal(blocks[1], [[2, 3], [6, 7]])
    np.testing.assert_array_equal(blocks[2], [[8, 9], [12, 13]])


@given(side=st.integers(1, 4), block=st.integers(1, 8), seed=st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_divide_accumulate_round_trip(side, block, seed):
    n = side * block
    img = np.random.default_rng(seed).random((n, n))
    np.testing.assert_array_equal(accumulate_blocks(divide_blocks(img, block)), img)


def test_divide_blocks_rejects_bad_shapes():
    with pytest.raises(ValueError):
        divide_blocks(np.zeros((4, 6)), 2)
    with pytest.raises(ValueError):
        divide_blocks(np.zeros((6, 6)), 4)
    with pytest.raises(ValueError):
        accumulate_blocks(np.zeros((3, 2, 2)))


def test_quantize_clamps_and_rounds():
    # np.rint uses banker's rounding: 0.5 -> 0.0
    x = np.array([-3.0, 0.4, 0.5, 254.6, 270.0])
    assert quantize(x).tolist() == [0.0, 0.0, 0.0, 255.0, 255.0]


def test_save_load_round_trip(tmp_path):
    img = np.random.default_rng(1).integers(0, 256, (64, 64)).astype(np.float64)
    path = tmp_path / "x.png"
    save_image(img, path)
    np.testing.assert_array_equal(load_image(path), img)


def test_load_rejects_non_square(tmp_path):
    from PIL import Image
    path = tmp_path / "rect.png"
    Image.new("L", (8, 4)).save(path)
    with pytest.raises(ValueError, match="square"):
        load_image(path)


def test_load_color_converts_to_luma(tmp_path):
    from PIL import Image
    path = tmp_path / "c.png"
    Image.new("RGB", (8, 8), (255, 0, 0)).save(path)
    with pytest.warns(UserWarning, match="luma"):
        img = load_image(path)
    assert img.shape == (8, 8)
    np.testing.assert_allclose(img, 0.299 * 255, rtol=1e-12)


def test_load_missing_file_raises_oserror():
    with pytest.raises(OSError):
        load_image("/nonexistent/image.png")
