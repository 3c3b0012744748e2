import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from texseg.raster import (
    PGMError,
    clamped_window,
    load_pgm,
    quantize,
    save_pgm,
    window_pixel,
)

from . import oracles


def test_load_ascii():
    img = load_pgm(b"P2\n2 2\n255\n0 255 128 64\n")
    assert img.dtype == np.uint8
    assert img.tolist() == [[0, 255], [128, 64]]


def test_load_binary_single_pixel():
    assert load_pgm(b"P5\n1 1\n255\n" + bytes([7])).tolist() == [[7]]


def test_comments_after_magic():
    data = b"P2\n# made by hand\n3 1 # width height\n# maxval next\n255\n1 2 3\n"
    assert load_pgm(data).tolist() == [[1, 2, 3]]


def test_truncated_ascii():
    with pytest.raises(PGMError, match="truncated"):
        load_pgm(b"P2\n2 2\n255\n0 255 128\n")


def test_truncated_binary_reports_offset():
    with pytest.raises(PGMError, match="truncated") as exc:
        load_pgm(b"P5\n2 2\n255\n" + bytes([1, 2, 3]))
    assert exc.value.offset == 14


@pytest.mark.parametrize(
    "data, fragment",
    [
        (b"P6\n1 1\n255\n\x00\x00\x00", "magic"),
        (b"P2\nx 1\n255\n0\n", "width"),
        (b"P2\n1 1\n65535\n0\n", "maxval"),
        (b"P2\n2 1\n15\n3 16\n", "exceeds maxval"),
        (b"P5\n1 1\n100\n\xff", "exceeds maxval"),
        (b"P2\n2 1\n255\n3 z\n", "malformed pixel"),
    ],
)
def test_malformed(data, fragment):
    with pytest.raises(PGMError, match=fragment):
        load_pgm(data)


def test_bad_value_offset_points_at_token():
    data = b"P2\n2 1\n15\n3 16\n"
    with pytest.raises(PGMError) as exc:
        load_pgm(data)
    assert data[exc.value.offset:].startswith(b"16")


def test_save_ascii():
    assert save_pgm(np.array([[7]], dtype=np.uint8), ascii=True) == b"P2\n1 1\n255\n7\n"


def test_save_binary():
    out = save_pgm(np.array([[0, 255]], dtype=np.uint8))
    assert out == b"P5\n2 1\n255\n" + bytes([0x00, 0xFF])


def test_ascii_and_binary_decode_identically(rng):
    img = rng.integers(0, 256, (5, 7), dtype=np.uint8)
    np.testing.assert_array_equal(load_pgm(save_pgm(img, True)), load_pgm(save_pgm(img)))


def test_round_trip_random_images(rng):
    for _ in range(1000):
        h, w = rng.integers(1, 65, 2)
        img = rng.integers(0, 256, (h, w), dtype=np.uint8)
        for ascii in (False, True):
            back = load_pgm(save_pgm(img, ascii=ascii))
            assert back.dtype == np.uint8 and back.shape == img.shape
            assert np.array_equal(back, img)


def test_binary_pixel_that_looks_like_whitespace():
    img = np.array([[10, 32, 35]], dtype=np.uint8)  # '\n', ' ', '#'
    np.testing.assert_array_equal(load_pgm(save_pgm(img)), img)


@pytest.mark.parametrize("g, levels, expected", [(255, 2, 1), (127, 2, 0), (128, 2, 1),
                                                 (255, 32, 31), (8, 32, 1), (7, 32, 0)])
def test_quantize_values(g, levels, expected):
    assert quantize(np.array([[g]]), levels)[0, 0] == expected


def test_quantize_identity(rng):
    img = rng.integers(0, 256, (9, 9), dtype=np.uint8)
    np.testing.assert_array_equal(quantize(img, 256), img)


@pytest.mark.parametrize("levels", [1, 257])
def test_quantize_rejects_levels(levels):
    with pytest.raises(ValueError):
        quantize(np.zeros((2, 2), np.uint8), levels)


@given(st.integers(2, 256))
def test_quantize_monotone(levels):
    ramp = np.arange(256, dtype=np.uint8)[None, :]
    q = quantize(ramp, levels)[0].astype(int)
    assert np.all(np.diff(q) >= 0)
    assert q.min() == 0 and q.max() == levels - 1


def test_window_pixel_clamps():
    img = np.arange(9, dtype=np.uint8).reshape(3, 3)
    assert window_pixel(img, 0, 0, -1, -1) == img[0, 0]
    assert window_pixel(img, 1, 1, 0, 0) == img[1, 1]
    assert window_pixel(img, 2, 2, 2, 0) == img[2, 2]
    assert window_pixel(img, 1, 0, 0, 5) == img[2, 1]


def test_window_pixel_center_outside():
    with pytest.raises(IndexError):
        window_pixel(np.zeros((3, 3), np.uint8), 3, 0, 0, 0)


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_window_pixel_zero_offset_identity(h, w, data):
    img = np.arange(h * w, dtype=np.uint8).reshape(h, w)
    cx = data.draw(st.integers(0, w - 1))
    cy = data.draw(st.integers(0, h - 1))
    assert window_pixel(img, cx, cy, 0, 0) == img[cy, cx]


def test_clamped_window_matches_oracle(rng):
    img = rng.integers(0, 256, (6, 4), dtype=np.uint8)
    for cy in range(6):
        for cx in range(4):
            assert clamped_window(img, cx, cy, 5).tolist() == oracles.window(img.tolist(), cx, cy, 5)
