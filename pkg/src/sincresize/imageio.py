"""Binary PGM (P5) and PPM (P6) reading and writing, 8-bit only."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .resample import Image

__all__ = ["PnmFormatError", "PnmHeader", "read_pnm", "write_pnm", "load_image", "save_image"]


class PnmFormatError(ValueError):
    """Malformed or unsupported PNM data."""


@dataclass(frozen=True)
class PnmHeader:
    magic: str
    width: int
    height: int
    maxval: int = 255

    @property
    def channels(self) -> int:
        return 1 if self.magic == "P5" else 3


def _tokens(data: bytes, count: int, pos: int):
    """Read ``count`` whitespace-separated header tokens, skipping ``#`` comments."""
    out = []
    n = len(data)
    while len(out) < count:
        while pos < n and data[pos : pos + 1].isspace():
            pos += 1
        if pos < n and data[pos : pos + 1] == b"#":
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise PnmFormatError("truncated header")
        out.append(data[start:pos])
    return out, pos


def _parse_header(data: bytes):
    magic = data[:2]
    if magic not in (b"P5", b"P6"):
        raise PnmFormatError(f"bad magic {magic!r}: expected b'P5' or b'P6'")
    (w, h, maxval), pos = _tokens(data, 3, 2)
    try:
        width, height, maxv = int(w), int(h), int(maxval)
    except ValueError:
        raise PnmFormatError(f"non-numeric header field in {w!r} {h!r} {maxval!r}") from None
    if width < 1:
        raise PnmFormatError(f"width must be >= 1, got {width}")
    if height < 1:
        raise PnmFormatError(f"height must be >= 1, got {height}")
    if maxv != 255:
        raise PnmFormatError(f"maxval must be 255, got {maxv}")
    # exactly one whitespace byte separates the header from the raster
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise PnmFormatError("missing whitespace after maxval")
    return PnmHeader(magic.decode(), width, height, maxv), pos + 1


def read_pnm(data: bytes) -> Image:
    header, offset = _parse_header(bytes(data))
    need = header.width * header.height * header.channels
    payload = data[offset : offset + need]
    if len(payload) < need:
        raise PnmFormatError(f"truncated payload: expected {need} bytes, got {len(payload)}")
    raw = np.frombuffer(payload, dtype=np.uint8)
    planes = raw.reshape(header.height, header.width, header.channels).transpose(2, 0, 1)
    return Image(planes.copy())


def write_pnm(img: Image) -> bytes:
    magic = b"P5" if img.channels == 1 else b"P6"
    head = magic + f"\n{img.width} {img.height}\n255\n".encode("ascii")
    return head + img.planes.transpose(1, 2, 0).tobytes()


def load_image(path: str | os.PathLike) -> Image:
    with open(path, "rb") as fh:
        return read_pnm(fh.read())


def save_image(path: str | os.PathLike, img: Image) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pnm(img))
