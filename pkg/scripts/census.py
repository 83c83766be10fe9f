"""Print sphere/plane class counts and face-orbit histograms for both modes.

    python scripts/census.py --max-edges 5 --jobs 4
"""

import argparse
import time

from planemaps import Mode, decomposition_table, enumerate_plane, enumerate_spherical


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-edges", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()

    print(f"{'e':>2} {'mode':<9} {'sphere':>6} {'plane':>6} {'labeled':>9} {'secs':>7}  orbits")
    for e in range(1, args.max_edges + 1):
        for mode in (Mode.FULL, Mode.ORIENTED):
            t = time.perf_counter()
            sphere = enumerate_spherical(e, mode, args.jobs)
            plane = enumerate_plane(e, mode, sphere=sphere)
            dt = time.perf_counter() - t
            hist = decomposition_table(e, mode, sphere=sphere)
            print(f"{e:>2} {mode.value:<9} {len(sphere):>6} {len(plane):>6} "
                  f"{sphere.stats['spherical']:>9} {dt:>7.2f}  {hist}")


if __name__ == "__main__":
    main()
