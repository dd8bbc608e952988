"""Record how identity errors grow as one central angle is pinched toward the floor.

    python scripts/conditioning_sweep.py --vertex-count 5 --seeds 200

Prints one row per pinch value; nothing is asserted.
"""
import argparse

from cyclicarea.verify import FuzzConfig, fuzz


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--vertex-count", type=int, default=5)
    ap.add_argument("--seeds", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    pinches = [10.0 ** -k for k in range(1, 10)]
    shown = ["oracle_equivalence", "additivity", "pair_product_form1",
             "inradius_chain", "heron_tangent_vs_sides", "reconstruction"]
    print("pinch    " + " ".join(f"{n[:18]:>18}" for n in shown))
    for pinch in pinches:
        cfg = FuzzConfig(seed_count=args.seeds, vertex_counts=(args.vertex_count,),
                         near_degenerate=True, pinch=pinch, workers=args.workers)
        rep = fuzz(cfg)
        row = " ".join(f"{rep.records[n].max_rel_err:18.2e}" for n in shown)
        flag = "" if rep.passed else "  (outside default tolerances)"
        print(f"{pinch:7.0e}  {row}{flag}")


if __name__ == "__main__":
    main()
