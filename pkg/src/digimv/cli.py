"""Command-line front end.

Exit codes: 0 the property holds / the operation succeeded, 1 the property
fails, 2 usage or parse error, 3 inconclusive (continuity not found up to
``--rmax``).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

from . import morphology as morph
from .fileio import ParseError, parse_image, parse_map, parse_single_map, write_image, write_map
from .functions import (
    compose,
    has_strong_continuity,
    has_weak_continuity,
    is_connectivity_preserving,
    is_continuous_single,
)
from .lattice import DigitalImage, connected_components, cut_points, fmt
from .retraction import (
    NotContinuous,
    NotSurjective,
    RetractKind,
    continuous_retract_verdict,
    cp_retract_verdict,
    is_k_boundary_point,
    is_shy,
    is_simple_point,
)
from .subdivision import DEFAULT_R_MAX, ContinuityKind, decide_continuity, images_isomorphic, subdivide

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
RMAX_ENV = "DIGIMV_RMAX"


class UsageError(Exception):
    pass


def _read_image(path: str) -> DigitalImage:
    return parse_image(Path(path).read_text())


def _points(S) -> list[list[int]]:
    return [list(p) for p in sorted(S)]


def _emit(args, payload: dict[str, Any], text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text)


def _window(args, X: DigitalImage):
    if args.window is None:
        return morph.default_window(X)
    n = X.dimension
    if len(args.window) != 2 * n:
        raise UsageError(f"--window needs {2 * n} integers for an image in Z^{n}")
    return morph.Window(tuple(args.window[:n]), tuple(args.window[n:]))


def cmd_check(args) -> int:
    dom, cod = _read_image(args.dom), _read_image(args.cod)
    text = Path(args.map).read_text()
    if args.property in ("cont-single", "shy"):
        f = parse_single_map(text, dom, cod)
        if args.property == "cont-single":
            v = is_continuous_single(f)
            holds, reason = v.holds, v.reason
        else:
            try:
                holds, reason = is_shy(f), ""
            except (NotContinuous, NotSurjective) as e:
                raise UsageError(f"shy needs a continuous surjection: {e}") from None
    else:
        F = parse_map(text, dom, cod)
        pred = {"cp": is_connectivity_preserving, "weak": has_weak_continuity,
                "strong": has_strong_continuity}[args.property]
        v = pred(F)
        holds, reason = v.holds, v.reason
    payload = {"command": "check", "property": args.property, "holds": holds, "reason": reason}
    _emit(args, payload, f"{args.property}: {'true' if holds else 'false'}\n" + (f"reason: {reason}\n" if reason else ""))
    return EXIT_HOLDS if holds else EXIT_FAILS


def _default_rmax() -> int:
    raw = os.environ.get(RMAX_ENV)
    if raw is None:
        return DEFAULT_R_MAX
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{RMAX_ENV} must be an integer, got {raw!r}") from None


def cmd_continuity(args) -> int:
    dom, cod = _read_image(args.dom), _read_image(args.cod)
    F = parse_map(Path(args.map).read_text(), dom, cod)
    rmax = args.rmax if args.rmax is not None else _default_rmax()
    if rmax < 1:
        raise UsageError("--rmax must be >= 1")
    v = decide_continuity(F, rmax)
    witness = None
    if v.witness is not None:
        witness = [[list(z), list(y)] for z, y in sorted(v.witness.f.table.items())]
    payload = {"command": "continuity", "verdict": v.kind.value, "r": v.r, "reason": v.reason,
               "witness": witness}
    if v.kind is ContinuityKind.CONTINUOUS_AT:
        text = f"continuous_at: {v.r}\n"
        code = EXIT_HOLDS
    elif v.kind is ContinuityKind.DEFINITELY_NOT:
        text = f"definitely_not_continuous: {v.reason}\n"
        code = EXIT_FAILS
    else:
        text = f"not_induced_up_to: {v.r}\n"
        code = EXIT_INCONCLUSIVE
    _emit(args, payload, text)
    return code


def cmd_morph(args) -> int:
    X = _read_image(args.image)
    op = args.operator
    if op == "dilate":
        out = morph.dilate(X)
    elif op == "erode":
        out = morph.erode(X)
    elif op == "close":
        out = morph.close(X)
    elif op == "open":
        try:
            out = morph.open_image(X, _window(args, X))
        except morph.WindowTooSmall as e:
            raise UsageError(str(e)) from None
    else:
        if args.selem is None:
            raise UsageError("dilate-by needs --selem")
        B = morph.StructuringElement(_read_image(args.selem).point_set)
        out = morph.dilate_by(X, B)
    payload = {"command": "morph", "operator": op, "dim": out.dimension, "adj": out.adjacency.u,
               "points": _points(out)}
    _emit(args, payload, write_image(out))
    return EXIT_HOLDS


def cmd_subdivide(args) -> int:
    X = _read_image(args.image)
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    S = subdivide(X, args.r)
    payload = {"command": "subdivide", "r": args.r, "size": len(S), "points": _points(S.points)}
    _emit(args, payload, write_image(S.image))
    return EXIT_HOLDS


def cmd_simple_point(args) -> int:
    X = _read_image(args.image)
    p = tuple(args.p)
    if X.dimension != 2:
        raise UsageError("simple-point needs an image in Z^2")
    if p not in X:
        raise UsageError(f"{fmt(p)} is not a point of the image")
    b = is_k_boundary_point(p, X, args.k)
    s = is_simple_point(p, X, args.k)
    payload = {"command": "simple-point", "k": args.k, "point": list(p), "boundary": b, "simple": s}
    _emit(args, payload, f"boundary: {str(b).lower()}\nsimple: {str(s).lower()}\n")
    return EXIT_HOLDS if s else EXIT_FAILS


def cmd_retract(args) -> int:
    X = _read_image(args.image)
    A = _read_image(args.target)
    if A.dimension != X.dimension:
        raise UsageError("target and image differ in dimension")
    if not A.points or not A.point_set <= X.point_set:
        raise UsageError("target must be a nonempty subset of the image")
    if not X.is_connected():
        raise UsageError("image must be connected")
    v = cp_retract_verdict(X, A.point_set)
    continuous = None
    missing = X.point_set - A.point_set
    if X.adjacency.dimension == 2 and X.adjacency.u == 2 and len(missing) == 1:
        cv = continuous_retract_verdict(X, next(iter(missing)))
        continuous = cv.kind.value
    ok = v.kind is RetractKind.CP_RETRACT
    mapping = write_map(v.witness) if ok else None
    payload = {"command": "retract", "verdict": v.kind.value, "reason": v.reason,
               "continuous": continuous, "map": mapping}
    text = f"verdict: {v.kind.value}\n"
    if continuous is not None:
        text += f"continuous: {continuous}\n"
    if ok:
        text += mapping
    else:
        text += f"reason: {v.reason}\n"
    _emit(args, payload, text)
    return EXIT_HOLDS if ok else EXIT_FAILS


def cmd_compose(args) -> int:
    X, Y, Z = _read_image(args.dom), _read_image(args.mid), _read_image(args.cod)
    f = parse_map(Path(args.f).read_text(), X, Y)
    g = parse_map(Path(args.g).read_text(), Y, Z)
    try:
        h = compose(g, f)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out = write_map(h)
    payload = {"command": "compose", "cp": is_connectivity_preserving(h).holds, "map": out}
    _emit(args, payload, out)
    return EXIT_HOLDS


def cmd_components(args) -> int:
    X = _read_image(args.image)
    comps = connected_components(X.point_set, X.adjacency)
    payload = {"command": "components", "count": len(comps), "components": [_points(c) for c in comps]}
    text = f"count: {len(comps)}\n" + "".join(
        "component: " + " ; ".join(" ".join(map(str, p)) for p in sorted(c)) + "\n" for c in comps)
    _emit(args, payload, text)
    return EXIT_HOLDS


def cmd_cut_points(args) -> int:
    X = _read_image(args.image)
    try:
        cps = cut_points(X)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = {"command": "cut-points", "count": len(cps), "points": _points(cps)}
    text = f"count: {len(cps)}\n" + "".join("point " + " ".join(map(str, p)) + "\n" for p in sorted(cps))
    _emit(args, payload, text)
    return EXIT_HOLDS


def cmd_isomorphic(args) -> int:
    X, Y = _read_image(args.image), _read_image(args.other)
    try:
        iso = images_isomorphic(X, Y)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = {"command": "isomorphic", "isomorphic": iso}
    _emit(args, payload, f"isomorphic: {str(iso).lower()}\n")
    return EXIT_HOLDS if iso else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="digimv", description="Connectivity preserving multivalued maps on digital images.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable verdict object")
    sub = parser.add_subparsers(dest="command", required=True)

    def map_args(p):
        p.add_argument("--dom", required=True, help="domain image (.dimg)")
        p.add_argument("--cod", required=True, help="codomain image (.dimg)")
        p.add_argument("--map", required=True, help="map file (.dmap)")

    p = sub.add_parser("check", parents=[common], help="test a predicate on a map")
    p.add_argument("property", choices=["cp", "weak", "strong", "cont-single", "shy"])
    map_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("continuity", parents=[common], help="search for an inducing continuous map")
    map_args(p)
    p.add_argument("--rmax", type=int, default=None, help=f"largest subdivision to try (default {DEFAULT_R_MAX}, or ${RMAX_ENV})")
    p.set_defaults(func=cmd_continuity)

    p = sub.add_parser("morph", parents=[common], help="apply a morphological operator")
    p.add_argument("operator", choices=["dilate", "erode", "close", "open", "dilate-by"])
    p.add_argument("--image", required=True)
    p.add_argument("--selem", help="structuring element image for dilate-by")
    p.add_argument("--window", nargs="+", type=int, metavar="C",
                   help="window corners: n ints for lo then n for hi, e.g. --window -2 -2 5 5")
    p.set_defaults(func=cmd_morph)

    p = sub.add_parser("subdivide", parents=[common], help="r-th subdivision (numerator coordinates)")
    p.add_argument("--image", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("simple-point", parents=[common], help="simple point test in Z^2")
    p.add_argument("--image", required=True)
    p.add_argument("--k", type=int, choices=[4, 8], required=True)
    p.add_argument("--p", type=int, nargs=2, required=True, metavar=("X", "Y"))
    p.set_defaults(func=cmd_simple_point)

    p = sub.add_parser("retract", parents=[common], help="connectivity preserving retraction onto a target")
    p.add_argument("--image", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("compose", parents=[common], help="compose two multivalued maps (g o f)")
    p.add_argument("--dom", required=True)
    p.add_argument("--mid", required=True)
    p.add_argument("--cod", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_compose)

    for name, func, helptext in (("components", cmd_components, "connected components"),
                                 ("cut-points", cmd_cut_points, "points whose removal disconnects")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--image", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("isomorphic", parents=[common], help="adjacency isomorphism of two images")
    p.add_argument("--image", required=True)
    p.add_argument("--other", required=True)
    p.set_defaults(func=cmd_isomorphic)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # argparse reports usage errors with code 2
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError, ValueError) as e:
        print(f"digimv: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
