"""Command-line frontend: inpaint, mask-gen, bench and serve.

Values come from, in increasing precedence: built-in defaults, an optional
flat key=value config file (--config), then explicit flags. Range options
use inclusive A..B syntax.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, imagecore, maskgen, metrics
from .engine import InpaintConfig, inpaint_file
from .maskgen import LineMaskSpec

DEFAULTS = {
    "k_total": 4,
    "edge_threshold": 0.15,
    "max_passes": 8,
    "lines": maskgen.DEFAULT_LINE_COUNT,
    "thickness": (1, 3),
    "length": None,  # 20..min(w,h)//2
    "seed": 0,
    "jobs": 1,
    "port": 8000,
    "static": None,
    "seeds": None,
}


def parse_range(text: str):
    """Parse an inclusive A..B range; a bare integer means A..A."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range: {text}")
    return lo, hi


def parse_config_file(path, allowed_keys):
    """Read a flat `key = value` file; '#' starts a comment; unknown keys fail."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in allowed_keys:
                raise ValueError(f"{path}:{lineno}: unknown key '{key}'")
            values[key] = value.strip()
    return values


_CONVERTERS = {
    "k_total": int,
    "edge_threshold": float,
    "max_passes": int,
    "lines": int,
    "thickness": parse_range,
    "length": parse_range,
    "seed": int,
    "jobs": int,
    "port": int,
    "static": str,
    "seeds": lambda s: [int(x) for x in s.split(",")],
}


def _resolve(args, keys):
    """Merge defaults, config file and flags for the listed option keys."""
    config = {}
    if getattr(args, "config", None):
        config = parse_config_file(args.config, set(keys))
    resolved = {}
    for key in keys:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            resolved[key] = flag_value
        elif key in config:
            resolved[key] = _CONVERTERS[key](config[key])
        else:
            resolved[key] = DEFAULTS[key]
    return resolved


def _engine_cfg(opts) -> InpaintConfig:
    return InpaintConfig(
        k_total=opts["k_total"],
        edge_threshold=opts["edge_threshold"],
        max_passes=opts["max_passes"],
    )


def _mask_spec(opts, seed) -> LineMaskSpec:
    thickness = opts["thickness"]
    length = opts["length"]
    return LineMaskSpec(
        line_count=opts["lines"],
        thickness_min=thickness[0],
        thickness_max=thickness[1],
        length_min=length[0] if length else maskgen.DEFAULT_MIN_LENGTH,
        length_max=length[1] if length else None,
        seed=seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splinefill",
        description="Edge-aware scratch inpainting via directional spline interpolation.",
    )
    parser.add_argument("--version", action="version", version=f"splinefill {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_engine_flags(p):
        p.add_argument("--k-total", dest="k_total", type=int,
                       help="total neighbor samples per direction (even, default 4)")
        p.add_argument("--edge-threshold", dest="edge_threshold", type=float,
                       help="edge score threshold in (0,1), default 0.15")
        p.add_argument("--max-passes", dest="max_passes", type=int,
                       help="fill passes before the fallback, default 8")

    def add_mask_flags(p):
        p.add_argument("--lines", type=int, help="number of scratch lines, default 10")
        p.add_argument("--thickness", type=parse_range, metavar="A..B",
                       help="line thickness range, default 1..3")
        p.add_argument("--length", type=parse_range, metavar="A..B",
                       help="line length range, default 20..min(w,h)/2")

    p = sub.add_parser("inpaint", help="restore one damaged image")
    p.add_argument("--image", required=True)
    p.add_argument("--mask", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--config", help="flat key=value config file")
    add_engine_flags(p)

    p = sub.add_parser("mask-gen", help="synthesize a random scratch mask")
    p.add_argument("--width", required=True, type=int)
    p.add_argument("--height", required=True, type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--config", help="flat key=value config file")
    add_mask_flags(p)

    p = sub.add_parser("bench", help="benchmark over a directory of PNGs")
    p.add_argument("--dataset", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--out-json", help="also write a JSON summary")
    p.add_argument("--seed", type=int, help="base mask seed, default 0")
    p.add_argument("--seeds", type=_CONVERTERS["seeds"],
                   help="comma-separated list of mask seeds (overrides --seed)")
    p.add_argument("--jobs", type=int, help="worker processes, default 1")
    p.add_argument("--config", help="flat key=value config file")
    add_mask_flags(p)
    add_engine_flags(p)

    p = sub.add_parser("serve", help="run the HTTP inpainting service")
    p.add_argument("--port", type=int, help="listen port, default 8000")
    p.add_argument("--static", help="directory with the built UI bundle")
    p.add_argument("--config", help="flat key=value config file")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "inpaint":
            opts = _resolve(args, ["k_total", "edge_threshold", "max_passes"])
            elapsed = inpaint_file(args.image, args.mask, args.out, _engine_cfg(opts))
            print(f"inpainted {args.image} -> {args.out} in {elapsed:.3f}s")
        elif args.command == "mask-gen":
            opts = _resolve(args, ["lines", "thickness", "length", "seed"])
            spec = _mask_spec(opts, opts["seed"])
            mask = maskgen.generate_mask(args.width, args.height, spec)
            imagecore.save_mask(mask, args.out)
            print(f"wrote {args.out} ({int(mask.missing.sum())} masked pixels)")
        elif args.command == "bench":
            keys = ["lines", "thickness", "length", "seed", "seeds", "jobs",
                    "k_total", "edge_threshold", "max_passes"]
            opts = _resolve(args, keys)
            spec = _mask_spec(opts, opts["seed"])
            seeds = opts["seeds"] if opts["seeds"] else [opts["seed"]]
            rows, summary = metrics.bench(
                args.dataset, spec, _engine_cfg(opts), seeds=seeds, jobs=opts["jobs"]
            )
            metrics.write_csv(rows, args.out_csv)
            if args.out_json:
                metrics.write_summary_json(summary, args.out_json)
            for method, stats in summary.items():
                print(
                    f"{method}: psnr={stats['psnr_db']:.2f}dB "
                    f"ssim={stats['ssim']:.4f} time={stats['elapsed_seconds']:.3f}s"
                )
        elif args.command == "serve":
            opts = _resolve(args, ["port", "static"])
            import uvicorn

            from .service import create_app

            app = create_app(static_dir=opts["static"])
            uvicorn.run(app, host="127.0.0.1", port=opts["port"])
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown command {args.command}")
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
