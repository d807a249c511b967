#!/usr/bin/env python3
"""Regenerate every supported benchmark figure as CSV + SVG and print an
error summary table."""

import argparse
import sys

from runge_lab import bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--grid-size", type=int, default=1001)
    args = parser.parse_args()
    out = args.out or bench.default_output_dir()

    print(f"{'figure':>6}  {'method':<28} {'max_abs':>12} {'rms':>12} {'endpoint':>12}")
    for fid in bench.SUPPORTED_FIGURES:
        bundle = bench.run_figure(fid, grid_size=args.grid_size, output_dir=out, emit_svg_file=True)
        for r in bundle.reports:
            print(f"{fid:>6}  {r.method:<28} {r.max_abs:>12.5g} {r.rms:>12.5g} {r.endpoint_max_abs:>12.5g}")
    print(f"\nwrote CSV/SVG files to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
