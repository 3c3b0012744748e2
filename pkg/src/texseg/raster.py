"""Gray image helpers: PGM codec, quantization and border-clamped windows.

A gray image is a 2-D ``uint8`` numpy array indexed ``[row, column]``.
Every neighborhood operator in the package replicates edge pixels for
out-of-image neighbors, so output maps keep the source dimensions.
"""

import re

import numpy as np

__all__ = [
    "PGMError",
    "as_gray_image",
    "load_pgm",
    "save_pgm",
    "read_pgm",
    "write_pgm",
    "quantize",
    "window_pixel",
    "pad_clamped",
    "clamped_window",
]


class PGMError(ValueError):
    """Malformed PGM data; ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def as_gray_image(image):
    """Validate ``image`` and return it as a 2-D uint8 array."""
    arr = np.asarray(image)
    if arr.ndim != 2:
        raise ValueError(f"gray image must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("gray image must have at least one pixel")
    if arr.dtype == np.uint8:
        return arr
    if arr.dtype.kind not in "iu":
        if not np.all(np.isfinite(arr)) or np.any(arr != np.floor(arr)):
            raise ValueError("gray levels must be integers")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("gray levels must lie in [0, 255]")
    return arr.astype(np.uint8)


_WS = tuple(bytes([c]) for c in b" \t\n\r\v\f")


def _skip_space(data, pos):
    # whitespace and '#' comments may separate header fields
    while pos < len(data):
        ch = data[pos : pos + 1]
        if ch in _WS:
            pos += 1
        elif ch == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    return pos


def _header_int(data, pos, what):
    pos = _skip_space(data, pos)
    m = re.compile(rb"\d+").match(data, pos)
    if m is None:
        raise PGMError(f"malformed header: expected {what}", pos)
    return int(m.group()), m.end()


def load_pgm(data):
    """Decode a P2 (ASCII) or P5 (binary) PGM byte string.

    >>> load_pgm(b"P2\\n2 2\\n255\\n0 255 128 64\\n").tolist()
    [[0, 255], [128, 64]]
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PGMError(f"malformed header: bad magic {magic!r}", 0)
    width, pos = _header_int(data, 2, "width")
    height, pos = _header_int(data, pos, "height")
    maxval_pos = _skip_space(data, pos)
    maxval, pos = _header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PGMError("malformed header: empty image", maxval_pos)
    if maxval < 1 or maxval > 255:
        raise PGMError(f"maxval {maxval} outside [1, 255]", maxval_pos)
    n = width * height

    if magic == b"P5":
        if pos >= len(data) or data[pos : pos + 1] not in _WS:
            raise PGMError("malformed header: no whitespace after maxval", pos)
        pos += 1
        if len(data) - pos < n:
            raise PGMError(
                f"truncated pixel data: {len(data) - pos} of {n} bytes", len(data)
            )
        pixels = np.frombuffer(data, dtype=np.uint8, count=n, offset=pos)
        over = np.flatnonzero(pixels > maxval)
        if over.size:
            raise PGMError(
                f"pixel value {pixels[over[0]]} exceeds maxval {maxval}",
                pos + int(over[0]),
            )
        return pixels.reshape(height, width).copy()

    values = []
    for m in re.finditer(rb"\S+", data[pos:]):
        if len(values) == n:
            break
        tok = m.group()
        offset = pos + m.start()
        if not tok.isdigit():
            raise PGMError(f"malformed pixel value {tok!r}", offset)
        v = int(tok)
        if v > maxval:
            raise PGMError(f"pixel value {v} exceeds maxval {maxval}", offset)
        values.append(v)
    if len(values) < n:
        raise PGMError(f"truncated pixel data: {len(values)} of {n} values", len(data))
    return np.array(values, dtype=np.uint8).reshape(height, width)


def save_pgm(image, ascii=False):
    """Encode ``image`` as PGM bytes with maxval 255.

    ASCII output puts each row on its own line; binary output has exactly
    one newline between maxval and the raster.
    """
    img = as_gray_image(image)
    h, w = img.shape
    if not ascii:
        return b"P5\n%d %d\n255\n" % (w, h) + np.ascontiguousarray(img).tobytes()
    rows = "\n".join(" ".join(str(v) for v in row) for row in img.tolist())
    return f"P2\n{w} {h}\n255\n{rows}\n".encode("ascii")


def read_pgm(path):
    with open(path, "rb") as fh:
        return load_pgm(fh.read())


def write_pgm(path, image, ascii=False):
    with open(path, "wb") as fh:
        fh.write(save_pgm(image, ascii=ascii))


def quantize(image, levels):
    """Map 8-bit gray levels onto ``levels`` bins: ``floor(g * levels / 256)``."""
    if not 2 <= levels <= 256:
        raise ValueError(f"levels must be in [2, 256], got {levels}")
    img = as_gray_image(image)
    return ((img.astype(np.uint32) * levels) >> 8).astype(np.uint8)


def window_pixel(image, cx, cy, dx, dy):
    """Gray level at ``(cx + dx, cy + dy)`` with coordinates clamped to the image.

    ``cx`` is a column and ``cy`` a row; the center itself must be inside.
    """
    img = np.asarray(image)
    h, w = img.shape
    if not (0 <= cx < w and 0 <= cy < h):
        raise IndexError(f"center ({cx}, {cy}) outside {w}x{h} image")
    x = min(max(cx + dx, 0), w - 1)
    y = min(max(cy + dy, 0), h - 1)
    return int(img[y, x])


def pad_clamped(image, radius):
    """Pad by ``radius`` pixels on every side, replicating the edges."""
    return np.pad(np.asarray(image), radius, mode="edge")


def clamped_window(image, cx, cy, side):
    """The ``side x side`` window centered on column ``cx``, row ``cy``."""
    if side < 1 or side % 2 == 0:
        raise ValueError(f"window side must be odd, got {side}")
    img = np.asarray(image)
    h, w = img.shape
    if not (0 <= cx < w and 0 <= cy < h):
        raise IndexError(f"center ({cx}, {cy}) outside {w}x{h} image")
    r = side // 2
    rows = np.clip(np.arange(cy - r, cy + r + 1), 0, h - 1)
    cols = np.clip(np.arange(cx - r, cx + r + 1), 0, w - 1)
    return img[np.ix_(rows, cols)]
