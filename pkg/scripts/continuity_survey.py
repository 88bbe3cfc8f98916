"""How small a subdivision suffices for random connectivity preserving maps.

    python3 scripts/continuity_survey.py [--maps 200] [--seed 0] [--rmax 3]

Draws cp maps between small images and records the smallest r at which an
inducing continuous map on S(X, r) was found, or that none exists up to
--rmax. Weak and strong continuity are tallied alongside.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from digimv.corpus import random_adjacency, random_connected_image, random_cp_multifn
from digimv.functions import has_strong_continuity
from digimv.subdivision import ContinuityKind, decide_continuity


@dataclass
class Config:
    maps: int = 200
    seed: int = 0
    rmax: int = 3
    max_points: int = 4


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    by_r: Counter = Counter()
    strong_by_r: Counter = Counter()
    start = time.perf_counter()
    for _ in range(cfg.maps):
        dims = (1, 2)
        X = random_connected_image(rng, random_adjacency(rng, dims), rng.randint(1, cfg.max_points))
        Y = random_connected_image(rng, random_adjacency(rng, dims), rng.randint(1, cfg.max_points))
        F = random_cp_multifn(rng, X, Y)
        v = decide_continuity(F, cfg.rmax)
        key = v.r if v.kind is ContinuityKind.CONTINUOUS_AT else f"> {cfg.rmax}"
        by_r[key] += 1
        strong_by_r[key] += bool(has_strong_continuity(F))
    print(f"{'smallest r':<12}{'maps':>6}{'strong':>8}")
    for key in sorted(by_r, key=str):
        print(f"{str(key):<12}{by_r[key]:>6}{strong_by_r[key]:>8}")
    print(f"elapsed: {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--maps", type=int, default=Config.maps)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--rmax", type=int, default=Config.rmax)
    ap.add_argument("--max-points", dest="max_points", type=int, default=Config.max_points)
    main(Config(**vars(ap.parse_args())))
