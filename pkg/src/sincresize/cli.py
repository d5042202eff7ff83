"""Command-line entry point.

Subcommands::

    resize   --in PATH --out PATH (--width N --height N | --scale F) [--kernel SPEC] ...
    analyze  --kernel SPEC --mode impulse|frequency --fmax F --points N --out PATH
    dc-error --kernel SPEC --beta B --points N --out PATH
    fit      --target SPEC [--fmax F] [--coarse N] [--refine N]
    compare  --a PATH --b PATH

Exit status: 0 on success, 2 on usage errors, 1 on I/O or format errors.
"""

from __future__ import annotations

import argparse
import math
import sys

from .analysis import dc_response, fit_parameters, psnr
from .filterbank import DEFAULT_EPSILON
from .imageio import load_image, save_image
from .kernels import ParameterError, parse_kernel
from .resample import ResizeOptions, resize_image
from .spectral import response_grid

DEFAULT_KERNEL = "said:chi=0.31,eta=0"


class UsageError(Exception):
    pass


def _kernel(text):
    try:
        return parse_kernel(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sincresize", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("resize", help="resize a PGM/PPM image")
    p.add_argument("--in", dest="src", required=True)
    p.add_argument("--out", dest="dst", required=True)
    p.add_argument("--width", type=_positive_int)
    p.add_argument("--height", type=_positive_int)
    p.add_argument("--scale", type=_positive_float)
    p.add_argument("--kernel", type=_kernel, default=parse_kernel(DEFAULT_KERNEL))
    p.add_argument("--edge", choices=("clamp", "reflect"), default="clamp")
    p.add_argument("--no-normalize", dest="normalize", action="store_false")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--align", choices=("origin", "center"), default="origin")
    p.add_argument("--linearize", action="store_true")

    p = sub.add_parser("analyze", help="write an impulse or frequency response as CSV")
    p.add_argument("--kernel", type=_kernel, required=True)
    p.add_argument("--mode", choices=("impulse", "frequency"), required=True)
    p.add_argument("--fmax", type=_positive_float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("dc-error", help="write the DC-response error curve as CSV")
    p.add_argument("--kernel", type=_kernel, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("fit", help="fit chi, eta to a target kernel's frequency response")
    p.add_argument("--target", type=_kernel, required=True)
    p.add_argument("--fmax", type=_positive_float, default=1.5)
    p.add_argument("--coarse", type=_positive_int)
    p.add_argument("--refine", type=int, default=400)

    p = sub.add_parser("compare", help="print the PSNR between two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    return parser


def _target_size(args, img):
    if args.scale is not None:
        if args.width is not None or args.height is not None:
            raise UsageError("give either --scale or --width/--height, not both")
        # nearest integer, ties up
        w = max(1, math.floor(args.scale * img.width + 0.5))
        h = max(1, math.floor(args.scale * img.height + 0.5))
        return w, h
    if args.width is None or args.height is None:
        raise UsageError("resize needs --width and --height, or --scale")
    return args.width, args.height


def _write_text(path, text):
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def _run(args, out):
    if args.command == "resize":
        if not (0.0 < args.epsilon < 1.0):
            raise UsageError(f"--epsilon must lie in (0, 1), got {args.epsilon}")
        img = load_image(args.src)
        w, h = _target_size(args, img)
        opts = ResizeOptions(
            edge=args.edge,
            normalize=args.normalize,
            epsilon=args.epsilon,
            alignment=args.align,
            linearize=args.linearize,
        )
        save_image(args.dst, resize_image(img, w, h, args.kernel, opts))
    elif args.command == "analyze":
        if args.points < 2:
            raise UsageError(f"--points must be >= 2, got {args.points}")
        grid = response_grid(args.kernel, args.mode, args.fmax, args.points)
        _write_text(args.out, grid.to_csv())
    elif args.command == "dc-error":
        if not (0.0 < args.beta <= 1.0):
            raise UsageError(f"--beta must lie in (0, 1], got {args.beta}")
        if args.points < 2:
            raise UsageError(f"--points must be >= 2, got {args.points}")
        _write_text(args.out, dc_response(args.kernel, args.beta, args.points).to_csv())
    elif args.command == "fit":
        if args.refine < 0:
            raise UsageError(f"--refine must be >= 0, got {args.refine}")
        kwargs = {"f_max": args.fmax, "refine_iters": args.refine}
        if args.coarse is not None:
            if args.coarse < 2:
                raise UsageError("--coarse must be >= 2")
            kwargs["coarse_steps"] = args.coarse
        print(fit_parameters(args.target, **kwargs).report(), file=out)
    elif args.command == "compare":
        print(f"{psnr(load_image(args.a), load_image(args.b)):.1f}", file=out)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _run(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (OSError, ValueError) as exc:
        print(f"sincresize: {exc}", file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
