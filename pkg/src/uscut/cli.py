"""Command-line surface: segment, phantom, eval, table1, serve."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import evaluation
from .errors import UscutError
from .image import GrayImage, load_image, save_pgm
from .phantom import ECHO_CLASSES, class_defaults, save_phantom
from .session import segment_at
from .contour import write_contour
from .template import DEFAULT_CONFIG, TemplateConfig


def _parse_seed(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("seed must be X,Y")
    return float(parts[0]), float(parts[1])


def _parse_size(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("size must be WxH")
    return int(parts[0]), int(parts[1])


def _add_cfg_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rays", type=int, default=DEFAULT_CONFIG.num_rays)
    p.add_argument("--nodes", type=int, default=DEFAULT_CONFIG.nodes_per_ray)
    p.add_argument("--radius", type=float, default=DEFAULT_CONFIG.radius_px)
    p.add_argument("--delta", type=int, default=DEFAULT_CONFIG.delta)


def _cfg_from(args) -> TemplateConfig:
    return TemplateConfig(
        num_rays=args.rays,
        nodes_per_ray=args.nodes,
        radius_px=args.radius,
        delta=args.delta,
    )


def _paint_overlay(img: GrayImage, result, path: str) -> None:
    """Input image with contour points and a 3x3 seed block at max intensity."""
    canvas = np.array(img.intensities)
    for x, y in result.contour.points:
        px, py = int(round(x)), int(round(y))
        if 0 <= px < img.width and 0 <= py < img.height:
            canvas[py, px] = 1.0
    sx, sy = int(round(result.seed[0])), int(round(result.seed[1]))
    y0, y1 = max(0, sy - 1), min(img.height, sy + 2)
    x0, x1 = max(0, sx - 1), min(img.width, sx + 2)
    canvas[y0:y1, x0:x1] = 1.0
    save_pgm(
        GrayImage(width=img.width, height=img.height, intensities=canvas, spacing=img.spacing),
        path,
    )


def cmd_segment(args) -> int:
    cfg = _cfg_from(args)
    img = load_image(args.image, spacing=args.spacing)
    result = segment_at(img, args.seed, cfg)
    header = {
        "seed": f"{result.seed[0]!r} {result.seed[1]!r}",
        "rays": cfg.num_rays,
        "nodes": cfg.nodes_per_ray,
        "radius_px": repr(cfg.radius_px),
        "delta": cfg.delta,
        "spacing_mm": repr(img.spacing),
        "diameter_mm": repr(result.diameter_mm),
        "area_mm2": repr(result.area_mm2),
    }
    with open(args.out, "w", encoding="ascii") as fh:
        write_contour(result.contour, fh, header=header)
    if args.overlay:
        _paint_overlay(img, result, args.overlay)
    print(
        f"segmented at ({result.seed[0]}, {result.seed[1]}): "
        f"diameter {result.diameter_mm:.2f} mm, area {result.area_mm2:.2f} mm^2, "
        f"{result.elapsed_ms:.1f} ms"
    )
    return 0


def cmd_phantom(args) -> int:
    spec = class_defaults(
        args.echo_class,
        lesion_radius=args.lesion_radius,
        width=args.size[0],
        height=args.size[1],
        speckle_sigma=args.speckle,
        rng_seed=args.rng_seed,
    )
    record = args.record or (args.out + ".spec.txt")
    save_phantom(spec, args.out, args.mask, record_path=record)
    print(f"wrote {args.out}, {args.mask}, {record}")
    return 0


def cmd_eval(args) -> int:
    if args.suite == "default":
        cases = evaluation.default_suite()
    else:
        cases = evaluation.load_suite(args.suite)
    lines = evaluation.run_eval(cases, args.out, timing=args.timing)
    failed = sum(1 for line in lines if ",error: " in line)
    print(f"evaluated {len(cases)} cases -> {args.out} ({failed} failed)")
    return 0 if failed == 0 else 1


def cmd_table1(args) -> int:
    report = evaluation.regression_check()
    for line in report.lines:
        print(line)
    return 0 if report.ok else 1


def cmd_serve(args) -> int:
    from .service import run_server

    cfg = _cfg_from(args)
    img = load_image(args.image, spacing=args.spacing)
    run_server(img, port=args.port, cfg=cfg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uscut",
        description="Interactive graph-cut segmentation for grayscale (PGM) images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segment", help="segment one seed position in an image")
    p.add_argument("--image", required=True)
    p.add_argument("--seed", type=_parse_seed, required=True, metavar="X,Y")
    p.add_argument("--spacing", type=float, default=1.0, metavar="MM")
    _add_cfg_flags(p)
    p.add_argument("--out", required=True, help="contour text file")
    p.add_argument("--overlay", help="optional overlay PGM")
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("phantom", help="generate a synthetic lesion image + mask")
    p.add_argument("--class", dest="echo_class", required=True, choices=ECHO_CLASSES)
    p.add_argument("--size", type=_parse_size, default=(512, 512), metavar="WxH")
    p.add_argument("--lesion-radius", type=float, required=True, metavar="PX")
    p.add_argument("--speckle", type=float, default=0.0, metavar="S")
    p.add_argument("--rng-seed", type=int, default=0, metavar="K")
    p.add_argument("--out", required=True, help="image PGM path")
    p.add_argument("--mask", required=True, help="ground-truth mask PGM path")
    p.add_argument("--record", help="spec record path (default: <out>.spec.txt)")
    p.set_defaults(func=cmd_phantom)

    p = sub.add_parser("eval", help="run a phantom suite and write a results CSV")
    p.add_argument("--suite", required=True, help="suite file, or 'default'")
    p.add_argument("--out", required=True, help="results CSV path")
    p.add_argument(
        "--timing",
        action="store_true",
        help="record wall times in the CSV (off by default: output stays byte-stable)",
    )
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table1", help="check the embedded diameter regression table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("serve", help="serve the segmentation HTTP API for the viewer")
    p.add_argument("--image", required=True)
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--spacing", type=float, default=1.0, metavar="MM")
    _add_cfg_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UscutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
