"""Survey of one-point retractions on small 8-connected planar shapes.

    python3 scripts/retraction_survey.py [--shapes 30] [--seed 0] [--rmax 2]

For every point p whose removal leaves X connected, the cp retraction
X -> X \\ {p} always exists. The table compares the simple-point verdict
with the outcome of the bounded search for a continuous map inducing that
particular retraction. Since p goes to all of X \\ {p}, the search can only
succeed once r^2 >= |X| - 1, so "possible" rows with no witness are expected.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from digimv.corpus import random_connected_image
from digimv.fileio import ascii_dump
from digimv.lattice import Adjacency, DigitalImage
from digimv.retraction import RetractKind, continuous_retract_verdict
from digimv.subdivision import decide_continuity

A8 = Adjacency(2, 2)


@dataclass
class Config:
    shapes: int = 30
    seed: int = 0
    rmax: int = 2


def shapes(cfg: Config) -> list[DigitalImage]:
    rng = random.Random(cfg.seed)
    fixed = [DigitalImage.box((-1, -1), (1, 1), A8), DigitalImage.box((0, 0), (1, 1), A8),
             DigitalImage([(0, 0), (1, 0), (2, 0), (2, 1)], A8)]
    return fixed + [random_connected_image(rng, A8, rng.randint(3, 9)) for _ in range(cfg.shapes)]


def main(cfg: Config) -> None:
    tally: Counter = Counter()
    start = time.perf_counter()
    for X in shapes(cfg):
        for p in X:
            if len(X) < 2 or not X.with_points(X.point_set - {p}).is_connected():
                continue
            v = continuous_retract_verdict(X, p)
            search = decide_continuity(v.witness, r_max=cfg.rmax)
            tally[(v.kind.value, search.kind.value)] += 1
    print(ascii_dump(DigitalImage.box((-1, -1), (1, 1), A8)), end="")
    print("3x3 square, centre removed:",
          continuous_retract_verdict(DigitalImage.box((-1, -1), (1, 1), A8), (0, 0)).kind.value)
    print(f"\n{'simple-point verdict':<32} {'search up to r=' + str(cfg.rmax):<28} count")
    for (kind, found), n in sorted(tally.items()):
        print(f"{kind:<32} {found:<28} {n}")
    impossible_found = tally[(RetractKind.CONTINUOUS_IMPOSSIBLE.value, "continuous_at")]
    print(f"\nimpossible verdicts contradicted by a witness: {impossible_found}")
    print(f"elapsed: {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shapes", type=int, default=Config.shapes)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--rmax", type=int, default=Config.rmax)
    main(Config(**vars(ap.parse_args())))
