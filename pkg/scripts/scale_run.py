"""Oracle agreement and timing for large vertex counts.

    python scripts/scale_run.py --vertex-counts 40 50 100 --seeds 100
"""
import argparse
import time

from cyclicarea.area import cyclic_area
from cyclicarea.construction import random_cyclic_polygon
from cyclicarea.fan import fan_decompose
from cyclicarea.geometry import shoelace_area, vertices


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--vertex-counts", type=int, nargs="+", default=[40, 50, 100, 200])
    ap.add_argument("--seeds", type=int, default=100)
    args = ap.parse_args()
    for m in args.vertex_counts:
        t0 = time.perf_counter()
        worst = 0.0
        for seed in range(args.seeds):
            poly = random_cyclic_polygon(seed, m)
            area, _ = cyclic_area(fan_decompose(poly))
            oracle = shoelace_area(vertices(poly))
            worst = max(worst, abs(area - oracle) / oracle)
        dt = time.perf_counter() - t0
        print(f"m={m:4d}  max rel err vs shoelace {worst:.2e}  ({dt / args.seeds * 1e3:.2f} ms/polygon)")


if __name__ == "__main__":
    main()
