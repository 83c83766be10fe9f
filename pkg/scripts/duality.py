"""Count spherical classes up to map duality (vertices <-> faces).

Reversing a gradient flow on the sphere swaps sources and sinks, which
replaces the distinguished graph by its dual.  This prints how many classes
survive if a map and its dual are identified.
"""

import argparse

from planemaps import CombinatorialMap, Mode, canonical_code_sphere, enumerate_spherical


def dual(m: CombinatorialMap) -> CombinatorialMap:
    return CombinatorialMap(m.phi)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-edges", type=int, default=4)
    args = p.parse_args()
    for e in range(1, args.max_edges + 1):
        for mode in (Mode.FULL, Mode.ORIENTED):
            cat = enumerate_spherical(e, mode)
            pairs = set()
            self_dual = 0
            for x in cat.entries:
                d = canonical_code_sphere(dual(x.representative), mode)
                self_dual += d == x.code
                pairs.add(frozenset((x.code, d)))
            print(f"e={e} {mode.value:<9} classes {len(cat):>4}  self-dual {self_dual:>3}  "
                  f"up to duality {len(pairs):>4}")


if __name__ == "__main__":
    main()
