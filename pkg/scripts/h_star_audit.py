"""How often the closed-form h* labeling of Θ unions needs repair.

Samples random all-Θ specs and distance sets containing 0, applies h*
directly, and reports the failures split by whether 1 is in D.
"""

from __future__ import annotations

import argparse
import random
from collections import Counter

from dantimagic.constructions import h_star_labels, tworeg_theta
from dantimagic.graph import Kind, TwoRegularSpec, build_union
from dantimagic.labeling import DistanceSet, Labeling, weigh


def random_spec(rng: random.Random, max_order: int) -> TwoRegularSpec:
    while True:
        fams = sorted((rng.randint(3, 15), rng.randint(1, 3), Kind.THETA) for _ in range(rng.randint(1, 3)))
        spec = TwoRegularSpec.of(*fams)
        if spec.copies >= 2 and spec.order <= max_order:
            return spec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=3000)
    ap.add_argument("--max-order", type=int, default=60)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally: Counter = Counter()
    example = None
    for _ in range(args.samples):
        spec = random_spec(rng, args.max_order)
        top = spec.components[-1].n - 2
        d = DistanceSet.of([0] + rng.sample(range(1, top + 1), rng.randint(0, min(4, top))))
        g = build_union(spec)
        ok = weigh(g, None, Labeling(tuple(h_star_labels(g))), d).antimagic
        tally[(1 in d, ok)] += 1
        if not ok:
            assert tworeg_theta(spec, d).ok
            if example is None or spec.order < example[0].order:
                example = (spec, d)
    for (has_one, ok), count in sorted(tally.items()):
        print(f"1 in D: {has_one!s:5}  h* antimagic: {ok!s:5}  {count}")
    if example:
        spec, d = example
        print("smallest failure:", [(f.n, f.m) for f in spec.components], d)


if __name__ == "__main__":
    main()
