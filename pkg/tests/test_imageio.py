import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sincresize.imageio import PnmFormatError, load_image, read_pnm, save_image, write_pnm
from sincresize.resample import Image


def test_read_gray():
    img = read_pnm(b"P5\n2 1\n255\n\x00\xff")
    assert img.channels == 1 and img.width == 2 and img.height == 1
    assert img.planes.tolist() == [[[0, 255]]]


def test_read_rgb_deinterleaves():
    img = read_pnm(b"P6\n2 1\n255\n" + bytes([10, 20, 30, 11, 21, 31]))
    assert img.planes.tolist() == [[[10, 11]], [[20, 21]], [[30, 31]]]


def test_write_canonical():
    assert write_pnm(Image(np.array([[[7]]], np.uint8))) == b"P5\n1 1\n255\n\x07"
    rgb = Image(np.array([[[1]], [[2]], [[3]]], np.uint8))
    assert write_pnm(rgb) == b"P6\n1 1\n255\n\x01\x02\x03"


def test_header_comments_and_whitespace():
    data = b"P5 # gray\n# made by hand\n3\t2\r\n 255\n" + bytes(range(6))
    img = read_pnm(data)
    assert img.planes.tolist() == [[[0, 1, 2], [3, 4, 5]]]
    assert write_pnm(img) == b"P5\n3 2\n255\n" + bytes(range(6))


def test_payload_byte_that_looks_like_whitespace():
    img = read_pnm(b"P5\n2 1\n255\n\n\x20")
    assert img.planes.tolist() == [[[10, 32]]]


@pytest.mark.parametrize(
    "data,field",
    [
        (b"P2\n1 1\n255\n0", "magic"),
        (b"P5\n0 1\n255\n", "width"),
        (b"P5\n1 0\n255\n", "height"),
        (b"P5\nx 1\n255\n\x00", "non-numeric"),
        (b"P5\n1 1\n65535\n\x00\x00", "maxval"),
        (b"P5\n2 2\n255\n\x00", "payload"),
        (b"P5\n2 2", "header"),
        (b"P5\n1 1\n255", "whitespace"),
    ],
)
def test_errors_name_the_field(data, field):
    with pytest.raises(PnmFormatError, match=field):
        read_pnm(data)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([1, 3]),
    st.integers(1, 9),
    st.integers(1, 9),
    st.integers(0, 2**32 - 1),
)
def test_roundtrip(channels, h, w, seed):
    planes = np.random.default_rng(seed).integers(0, 256, (channels, h, w), dtype=np.uint8)
    img = Image(planes)
    data = write_pnm(img)
    back = read_pnm(data)
    assert back == img
    assert write_pnm(back) == data


def test_file_roundtrip(tmp_path):
    img = Image(np.arange(24, dtype=np.uint8).reshape(3, 2, 4))
    path = tmp_path / "x.ppm"
    save_image(path, img)
    assert load_image(path) == img
