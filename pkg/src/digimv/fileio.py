"""Line-oriented text formats for images (``.dimg``) and maps (``.dmap``).

Image::

    dimg 1
    dim 2
    adj 2
    point 1 0
    point 0 1

Map (one line per domain point, values separated by ``;``)::

    dmap 1
    map 0 -> 0 ; 2
    map 1 -> 1

Writers emit points in lexicographic order, so ``write(parse(t)) == t``
for canonically ordered input. Blank lines and ``#`` comments are skipped
on input.
"""
from __future__ import annotations

from typing import Iterable

from .functions import MultiFn, SingleFn
from .lattice import Adjacency, DigitalImage, Point, fmt


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _ints(fields: list[str], no: int) -> Point:
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", no) from None


def _header(lines, key: str, what: str) -> int:
    try:
        no, fields = next(lines)
    except StopIteration:
        raise ParseError(f"missing {what} line") from None
    if len(fields) != 2 or fields[0] != key:
        raise ParseError(f"expected '{key} <int>'", no)
    return _ints(fields[1:], no)[0]


def parse_image(text: str) -> DigitalImage:
    lines = _lines(text)
    try:
        no, fields = next(lines)
    except StopIteration:
        raise ParseError("empty document") from None
    if fields != ["dimg", "1"]:
        raise ParseError("bad magic, expected 'dimg 1'", no)
    n = _header(lines, "dim", "dim")
    u = _header(lines, "adj", "adj")
    try:
        adj = Adjacency(n, u)
    except ValueError as e:
        raise ParseError(str(e)) from None
    pts: list[Point] = []
    seen: set[Point] = set()
    for no, fields in lines:
        if fields[0] != "point":
            raise ParseError(f"unexpected record {fields[0]!r}", no)
        if len(fields) - 1 != n:
            raise ParseError(f"point has {len(fields) - 1} coordinates, expected {n}", no)
        p = _ints(fields[1:], no)
        if p in seen:
            raise ParseError(f"duplicate point {fmt(p)}", no)
        seen.add(p)
        pts.append(p)
    return DigitalImage(pts, adj)


def write_image(X: DigitalImage) -> str:
    out = ["dimg 1", f"dim {X.dimension}", f"adj {X.adjacency.u}"]
    out += ["point " + " ".join(map(str, p)) for p in X]
    return "\n".join(out) + "\n"


def _split_values(rhs: list[str], n: int, no: int) -> list[Point]:
    groups: list[list[str]] = [[]]
    for tok in rhs:
        if tok == ";":
            groups.append([])
        else:
            groups[-1].append(tok)
    values = []
    for g in groups:
        if not g:
            raise ParseError("empty value in list", no)
        if len(g) != n:
            raise ParseError(f"value has {len(g)} coordinates, expected {n}", no)
        values.append(_ints(g, no))
    return values


def parse_map_table(text: str, dom: DigitalImage, cod: DigitalImage) -> dict[Point, list[Point]]:
    lines = _lines(text)
    try:
        no, fields = next(lines)
    except StopIteration:
        raise ParseError("empty document") from None
    if fields != ["dmap", "1"]:
        raise ParseError("bad magic, expected 'dmap 1'", no)
    table: dict[Point, list[Point]] = {}
    for no, fields in lines:
        if fields[0] != "map":
            raise ParseError(f"unexpected record {fields[0]!r}", no)
        try:
            arrow = fields.index("->")
        except ValueError:
            raise ParseError("missing '->'", no) from None
        lhs = fields[1:arrow]
        if len(lhs) != dom.dimension:
            raise ParseError(f"domain point has {len(lhs)} coordinates, expected {dom.dimension}", no)
        x = _ints(lhs, no)
        if x not in dom:
            raise ParseError(f"{fmt(x)} is not a point of the domain", no)
        if x in table:
            raise ParseError(f"{fmt(x)} is mapped twice", no)
        rhs = fields[arrow + 1:]
        if not rhs:
            raise ParseError(f"empty value list for {fmt(x)}", no)
        values = _split_values(rhs, cod.dimension, no)
        for y in values:
            if y not in cod:
                raise ParseError(f"value {fmt(y)} is not a point of the codomain", no)
        table[x] = values
    missing = [x for x in dom if x not in table]
    if missing:
        raise ParseError(f"map is not total: no line for {fmt(missing[0])}")
    return table


def parse_map(text: str, dom: DigitalImage, cod: DigitalImage) -> MultiFn:
    return MultiFn(dom, cod, parse_map_table(text, dom, cod))


def parse_single_map(text: str, dom: DigitalImage, cod: DigitalImage) -> SingleFn:
    """A map file in which every line carries exactly one value."""
    table = parse_map_table(text, dom, cod)
    multi = [x for x, ys in table.items() if len(set(ys)) != 1]
    if multi:
        raise ParseError(f"{fmt(multi[0])} has more than one value; a single-valued map was expected")
    return SingleFn(dom, cod, {x: ys[0] for x, ys in table.items()})


def _fmt(p: Iterable[int]) -> str:
    return " ".join(map(str, p))


def write_map(F: MultiFn | SingleFn) -> str:
    if isinstance(F, SingleFn):
        F = F.as_multifn()
    out = ["dmap 1"]
    for x, ys in F.items():
        out.append(f"map {_fmt(x)} -> " + " ; ".join(_fmt(y) for y in sorted(ys)))
    return "\n".join(out) + "\n"


def ascii_dump(X: DigitalImage, on: str = "#", off: str = ".") -> str:
    """Rows of a 2D image's bounding box, first coordinate across, second
    coordinate increasing upward."""
    if X.dimension != 2:
        raise ValueError("ascii_dump draws images in Z^2 only")
    if not X.points:
        return ""
    xs = [p[0] for p in X]
    ys = [p[1] for p in X]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        rows.append("".join(on if (x, y) in X else off for x in range(min(xs), max(xs) + 1)))
    return "\n".join(rows) + "\n"
