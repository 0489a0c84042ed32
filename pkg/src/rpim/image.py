"""BMP decoding/encoding and pixel-stream linearization.

Only the plain 24-bit uncompressed flavour (BITMAPINFOHEADER, BI_RGB) is
supported; everything else is rejected loudly rather than half-decoded.
Linearization turns a pixel buffer into the one-dimensional byte sequence
the compressor consumes, in one of four invertible orders.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import (
    CorruptBmpError,
    InvalidDimensionsError,
    InvalidGeometryError,
    NotABmpError,
    UnsupportedBmpError,
)

_HEADER_SIZE = 54
_PPM_72DPI = 2835


class LinearizationMode(IntEnum):
    """Traversal order used to flatten pixels; the value is the wire byte."""

    ROW_MAJOR = 0
    ZIGZAG = 1
    CHANNEL_SPLIT_ROW_MAJOR = 2
    CHANNEL_SPLIT_ZIGZAG = 3

    @property
    def label(self) -> str:
        return _MODE_LABELS[self]


_MODE_LABELS = {
    LinearizationMode.ROW_MAJOR: "row",
    LinearizationMode.ZIGZAG: "zigzag",
    LinearizationMode.CHANNEL_SPLIT_ROW_MAJOR: "split-row",
    LinearizationMode.CHANNEL_SPLIT_ZIGZAG: "split-zigzag",
}

MODE_BY_LABEL = {mode.label: mode for mode in LinearizationMode}


@dataclass(frozen=True)
class PixelBuffer:
    """Decoded image: top-down rows, channel-interleaved samples."""

    width: int
    height: int
    channels: int
    samples: bytes

    def validate(self) -> None:
        if self.width < 1 or self.height < 1:
            raise InvalidDimensionsError(
                f"image extent {self.width}x{self.height} is empty"
            )
        if self.channels not in (1, 3):
            raise InvalidDimensionsError(f"unsupported channel count {self.channels}")
        expected = self.width * self.height * self.channels
        if len(self.samples) != expected:
            raise InvalidDimensionsError(
                f"expected {expected} samples, have {len(self.samples)}"
            )

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self.samples, np.uint8).reshape(
            self.height, self.width, self.channels
        )


def _row_size(width: int) -> int:
    # rows are padded to a 4-byte boundary
    return (3 * width + 3) & ~3


def decode_bmp(data: bytes) -> PixelBuffer:
    if len(data) < 2 or data[:2] != b"BM":
        raise NotABmpError("missing BM signature")
    if len(data) < _HEADER_SIZE:
        raise CorruptBmpError("file ends inside the header")

    pixel_offset = struct.unpack_from("<I", data, 10)[0]
    info_size = struct.unpack_from("<I", data, 14)[0]
    if info_size != 40:
        raise UnsupportedBmpError(f"info header size {info_size}, need BITMAPINFOHEADER")
    width, height = struct.unpack_from("<ii", data, 18)
    bpp = struct.unpack_from("<H", data, 28)[0]
    compression = struct.unpack_from("<I", data, 30)[0]
    if bpp != 24:
        raise UnsupportedBmpError(f"{bpp} bits per pixel, only 24 supported")
    if compression != 0:
        raise UnsupportedBmpError(f"compression type {compression}, only BI_RGB supported")
    if width <= 0 or height == 0:
        raise CorruptBmpError(f"bad image extent {width}x{height}")

    top_down = height < 0
    height = abs(height)
    row = _row_size(width)
    if pixel_offset < _HEADER_SIZE or pixel_offset > len(data):
        raise CorruptBmpError(f"pixel data offset {pixel_offset} out of range")
    if pixel_offset + row * height > len(data):
        raise CorruptBmpError("truncated pixel data")

    raster = np.frombuffer(data, np.uint8, count=row * height, offset=pixel_offset)
    bgr = raster.reshape(height, row)[:, : 3 * width].reshape(height, width, 3)
    if not top_down:
        bgr = bgr[::-1]
    rgb = bgr[:, :, ::-1]
    return PixelBuffer(width, height, 3, rgb.tobytes())


def encode_bmp(buf: PixelBuffer) -> bytes:
    buf.validate()
    arr = buf.as_array()
    if buf.channels == 1:
        arr = np.repeat(arr, 3, axis=2)
    row = _row_size(buf.width)
    image_size = row * buf.height
    header = struct.pack(
        "<2sIHHIIiiHHIIiiII",
        b"BM",
        _HEADER_SIZE + image_size,
        0,
        0,
        _HEADER_SIZE,
        40,
        buf.width,
        buf.height,
        1,
        24,
        0,
        image_size,
        _PPM_72DPI,
        _PPM_72DPI,
        0,
        0,
    )
    raster = np.zeros((buf.height, row), np.uint8)
    raster[:, : 3 * buf.width] = arr[::-1, :, ::-1].reshape(buf.height, 3 * buf.width)
    return header + raster.tobytes()


def linearize(buf: PixelBuffer, mode: LinearizationMode) -> bytes:
    """Flatten a pixel buffer into the byte sequence fed to the compressor."""
    buf.validate()
    if mode == LinearizationMode.ROW_MAJOR:
        return buf.samples
    arr = buf.as_array()
    if mode in (LinearizationMode.ZIGZAG, LinearizationMode.CHANNEL_SPLIT_ZIGZAG):
        arr = arr.copy()
        arr[1::2] = arr[1::2, ::-1]  # odd rows run right-to-left, pixels stay interleaved
    if mode in (
        LinearizationMode.CHANNEL_SPLIT_ROW_MAJOR,
        LinearizationMode.CHANNEL_SPLIT_ZIGZAG,
    ):
        arr = arr.transpose(2, 0, 1)
    return arr.tobytes()


def delinearize(
    seq: bytes, mode: LinearizationMode, width: int, height: int, channels: int
) -> PixelBuffer:
    """Exact inverse of linearize for the given geometry."""
    data = bytes(seq)
    expected = width * height * channels
    if len(data) != expected:
        raise InvalidGeometryError(
            f"sequence length {len(data)} does not fill {width}x{height}x{channels}"
        )
    if mode == LinearizationMode.ROW_MAJOR:
        return PixelBuffer(width, height, channels, data)
    arr = np.frombuffer(data, np.uint8)
    if mode in (
        LinearizationMode.CHANNEL_SPLIT_ROW_MAJOR,
        LinearizationMode.CHANNEL_SPLIT_ZIGZAG,
    ):
        arr = arr.reshape(channels, height, width).transpose(1, 2, 0)
    else:
        arr = arr.reshape(height, width, channels)
    if mode in (LinearizationMode.ZIGZAG, LinearizationMode.CHANNEL_SPLIT_ZIGZAG):
        arr = arr.copy()
        arr[1::2] = arr[1::2, ::-1]
    buf = PixelBuffer(width, height, channels, arr.tobytes())
    buf.validate()
    return buf
