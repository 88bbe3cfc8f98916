"""Two 8-isomorphic two-point images whose 2-subdivisions are not isomorphic.

    python3 scripts/subdivision_demo.py [--r 2]

Prints both images and their subdivisions, the isomorphism verdicts, and
the cut points of each subdivision.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from digimv.fileio import ascii_dump
from digimv.lattice import Adjacency, DigitalImage, cut_points, fmt
from digimv.subdivision import images_isomorphic, subdivide


@dataclass
class Config:
    r: int = 2


def main(cfg: Config) -> None:
    adj = Adjacency(2, 2)
    X = DigitalImage([(1, 0), (0, 1)], adj)  # diagonal pair
    Y = DigitalImage([(0, 0), (0, 1)], adj)  # vertical pair
    print(f"X ~ Y: {images_isomorphic(X, Y)}")
    for name, img in (("X", X), ("Y", Y)):
        S = subdivide(img, cfg.r).image
        cps = sorted(cut_points(S))
        print(f"\n{name}:\n{ascii_dump(img)}S({name}, {cfg.r}), {len(S)} points:\n{ascii_dump(S)}", end="")
        print("cut points:", ", ".join(map(fmt, cps)) or "none")
    SX, SY = subdivide(X, cfg.r).image, subdivide(Y, cfg.r).image
    print(f"\nS(X, {cfg.r}) ~ S(Y, {cfg.r}): {images_isomorphic(SX, SY, limit=max(12, len(SX)))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=Config.r)
    main(Config(**vars(ap.parse_args())))
