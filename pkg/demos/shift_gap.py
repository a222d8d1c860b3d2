"""Recoloring along chains can be far costlier than recoloring freely.

On the path-plus-matching instance the general optimum swaps two edges of
the matching, while the best chain-based extension grows with the path.
"""

from __future__ import annotations

import argparse

from shiftcolor.adversary import gen_separation_instance, matching_completion
from shiftcolor.oracle import min_recourse, min_shift_recourse


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=102)
    args = ap.parse_args()
    print("    k  general  chain-only")
    for k in range(6, args.max_k + 1, 12):
        inst = gen_separation_instance(2 * k, 3, 0, 1)
        _, cost = matching_completion(inst)
        print(f"{k:5d}  {str(min_recourse(inst.graph)):>7s}  {str(min_shift_recourse(inst.graph)):>10s}  (swap cost {cost})")


if __name__ == "__main__":
    main()
