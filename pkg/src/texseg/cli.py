"""Command-line front end: ``texseg <command> ...``.

Commands
--------
glcm          per-pixel co-occurrence feature map
glcm-select   choose the displacement with the largest chi-square statistic
fractal       per-pixel fractal dimension map (box, hurst or range)
histogram     histogram of an FMAP file as CSV
segment       threshold an FMAP file into a black/white PGM

Maps are stored losslessly in FMAP files: the 4-byte magic ``FMAP``, a
version byte (1), width and height as little-endian uint32, then
width*height little-endian float64 values in row-major order.
"""

import argparse
import struct
import sys

import numpy as np

from . import fractal, glcm, raster, segmentation
from ._bands import resolve_workers

FMAP_MAGIC = b"FMAP"
FMAP_VERSION = 1
_FMAP_HEADER = struct.Struct("<4sBII")


class FMAPError(ValueError):
    pass


def encode_fmap(values):
    m = np.asarray(values, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"map must be 2-D, got shape {m.shape}")
    h, w = m.shape
    return _FMAP_HEADER.pack(FMAP_MAGIC, FMAP_VERSION, w, h) + m.astype("<f8").tobytes()


def decode_fmap(data):
    if len(data) < _FMAP_HEADER.size:
        raise FMAPError(f"FMAP too short: {len(data)} bytes, header needs {_FMAP_HEADER.size}")
    magic, version, w, h = _FMAP_HEADER.unpack_from(data)
    if magic != FMAP_MAGIC:
        raise FMAPError(f"bad FMAP magic {magic!r}")
    if version != FMAP_VERSION:
        raise FMAPError(f"unsupported FMAP version {version}")
    expected = _FMAP_HEADER.size + 8 * w * h
    if len(data) != expected:
        raise FMAPError(f"FMAP byte length {len(data)} does not match {expected} "
                        f"expected for a {w}x{h} map")
    values = np.frombuffer(data, dtype="<f8", offset=_FMAP_HEADER.size)
    return values.astype(np.float64).reshape(h, w)


def write_fmap(path, values):
    with open(path, "wb") as fh:
        fh.write(encode_fmap(values))


def read_fmap(path):
    with open(path, "rb") as fh:
        return decode_fmap(fh.read())


def _odd_window(text):
    v = int(text)
    if v < 3 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"window must be an odd integer >= 3, got {text}")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _levels(text):
    v = int(text)
    if not 2 <= v <= 256:
        raise argparse.ArgumentTypeError(f"levels must be in [2, 256], got {text}")
    return v


def parse_candidates(text):
    """``"dx,dy;dx,dy"`` -> list of displacements."""
    out = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        parts = item.split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed candidate {item!r}, expected 'dx,dy'")
        try:
            out.append(glcm.Displacement(int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"malformed candidate {item!r}, expected integers") from None
    if not out:
        raise ValueError("empty candidate list")
    return out


def _emit_map(values, args):
    if args.out_map:
        write_fmap(args.out_map, values)
    if args.out_view:
        raster.write_pgm(args.out_view, segmentation.rescale_for_display(values))


def cmd_glcm(args):
    print(f"# texseg glcm feature={args.feature} tau={args.dx},{args.dy} "
          f"window={args.window} levels={args.levels} threads={args.threads}")
    image = raster.quantize(raster.read_pgm(args.input), args.levels)
    values = glcm.feature_map(image, args.feature, (args.dx, args.dy),
                              window=args.window, levels=args.levels,
                              workers=args.threads)
    _emit_map(values, args)
    print(f"feature={args.feature} min={values.min():.17g} max={values.max():.17g}")
    return 0


def cmd_glcm_select(args):
    print(f"# texseg glcm-select candidates={args.candidates} levels={args.levels}")
    candidates = parse_candidates(args.candidates)
    image = raster.quantize(raster.read_pgm(args.input), args.levels)
    tau, chi = glcm.select_displacement(image, candidates, args.levels)
    print(f"{tau.dx},{tau.dy} chi2={chi:.17g}")
    return 0


_METHODS = {
    "box": fractal.box_dimension_map,
    "hurst": fractal.hurst_dimension_map,
    "range": fractal.range_dimension_map,
}


def cmd_fractal(args):
    print(f"# texseg fractal method={args.method} threads={args.threads}")
    image = raster.read_pgm(args.input)
    values = _METHODS[args.method](image, workers=args.threads)
    _emit_map(values, args)
    print(f"method={args.method} min={values.min():.17g} max={values.max():.17g}")
    return 0


def cmd_histogram(args):
    print(f"# texseg histogram bins={args.bins}")
    hist = segmentation.histogram(read_fmap(args.input), args.bins)
    text = hist.to_csv()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_segment(args):
    values = read_fmap(args.input)
    if args.percentile is not None:
        h = segmentation.percentile_threshold(values, args.percentile)
    else:
        h = args.threshold
    print(f"# texseg segment threshold={h:.17g}")
    binary = segmentation.threshold_segment(values, h)
    raster.write_pgm(args.out, binary)
    black = int(np.count_nonzero(binary == segmentation.BLACK))
    print(f"threshold={h:.17g} black={black} white={binary.size - black}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="texseg",
        description="Texture segmentation with co-occurrence features "
                    "and local fractal dimension.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def threads(p):
        p.add_argument("--threads", type=_positive, default=None,
                       help="worker threads (default: machine parallelism)")

    p = sub.add_parser("glcm", help="co-occurrence feature map")
    p.add_argument("input", help="input PGM")
    p.add_argument("--feature", required=True, choices=sorted(glcm.FEATURES))
    p.add_argument("--dx", type=int, default=0,
                   help="row offset of the pixel pair (default: %(default)s)")
    p.add_argument("--dy", type=int, default=1,
                   help="column offset of the pixel pair (default: %(default)s)")
    p.add_argument("--window", type=_odd_window, default=17,
                   help="odd window side (default: %(default)s)")
    p.add_argument("--levels", type=_levels, default=32,
                   help="gray levels after quantization (default: %(default)s)")
    p.add_argument("--out-map", help="FMAP output")
    p.add_argument("--out-view", help="display-rescaled PGM output")
    threads(p)
    p.set_defaults(func=cmd_glcm)

    p = sub.add_parser("glcm-select", help="pick the displacement maximizing chi-square")
    p.add_argument("input", help="input PGM")
    p.add_argument("--candidates", required=True, help='displacements, e.g. "0,1;1,0;1,1"')
    p.add_argument("--levels", type=_levels, default=32,
                   help="gray levels after quantization (default: %(default)s)")
    p.set_defaults(func=cmd_glcm_select)

    p = sub.add_parser("fractal", help="local fractal dimension map")
    p.add_argument("input", help="input PGM")
    p.add_argument("--method", required=True, choices=sorted(_METHODS))
    p.add_argument("--out-map", help="FMAP output")
    p.add_argument("--out-view", help="display-rescaled PGM output")
    threads(p)
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("histogram", help="histogram of an FMAP as CSV")
    p.add_argument("input", help="input FMAP")
    p.add_argument("--bins", type=_positive, default=64,
                   help="number of bins (default: %(default)s)")
    p.add_argument("--out", help="CSV output (default: stdout)")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("segment", help="threshold an FMAP into a binary PGM")
    p.add_argument("input", help="input FMAP")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--threshold", type=float, help="absolute threshold h")
    group.add_argument("--percentile", type=float, help="nearest-rank percentile of the map")
    p.add_argument("--out", required=True, help="PGM output")
    p.set_defaults(func=cmd_segment)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 0) is None:
        args.threads = resolve_workers(None)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"texseg {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
