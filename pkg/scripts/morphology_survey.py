"""Connectivity preservation of the morphological maps across adjacencies.

    python3 scripts/morphology_survey.py [--images 100] [--seed 0]

For each c_u adjacency in Z^1..Z^3, draws random images and counts how often
each operator map passes the local cp test. Dilation by a disconnected
structuring element is included as the expected failure row. The default
run takes about a minute, mostly the complement maps in Z^3.
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from digimv.corpus import random_connected_selem, random_disconnected_selem, random_image
from digimv.functions import is_connectivity_preserving
from digimv.lattice import Adjacency
from digimv.morphology import (
    closure_multifn,
    default_window,
    dilate_by_multifn,
    dilate_multifn,
    erosion_complement_multifn,
    opening_complement_multifn,
)

OPERATORS = {
    "dilate": lambda rng, X: dilate_multifn(X),
    "dilate_by(connected B)": lambda rng, X: dilate_by_multifn(
        X, random_connected_selem(rng, X.adjacency, rng.randint(1, 4))),
    "erosion complement": lambda rng, X: erosion_complement_multifn(X, default_window(X)),
    "closure": lambda rng, X: closure_multifn(X),
    "opening complement": lambda rng, X: opening_complement_multifn(X, default_window(X)),
    "dilate_by(disconnected B)": lambda rng, X: dilate_by_multifn(
        X, random_disconnected_selem(rng, X.adjacency)),
}


@dataclass
class Config:
    images: int = 100
    seed: int = 0
    max_points: int = 7


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    adjs = [Adjacency(n, u) for n in (1, 2, 3) for u in range(1, n + 1)]
    header = f"{'operator':<28}" + "".join(f"{str(a.count) + '-adj':>9}" for a in adjs)
    print(header)
    for name, build in OPERATORS.items():
        row = f"{name:<28}"
        for adj in adjs:
            passed = 0
            for _ in range(cfg.images):
                X = random_image(rng, adj, max_points=cfg.max_points, span=4, min_points=1)
                passed += bool(is_connectivity_preserving(build(rng, X)))
            row += f"{passed:>5}/{cfg.images:<3}"
        print(row)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--images", type=int, default=Config.images)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-points", dest="max_points", type=int, default=Config.max_points)
    main(Config(**vars(ap.parse_args())))
