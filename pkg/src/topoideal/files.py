"""Line-based text files for spaces and maps.

Space file ('#' starts a comment, blank lines ignored):

    points: a b c d
    open: {}; {a,c}; {d}; {a,c,d}; {a,b,c,d}
    ideal: {c,d}

`open:` may repeat; sets accumulate.  The ideal is given either as a single
generator set (`ideal:`, the ideal is its power set) or as an explicit
family (`ideal-family: {}; {c}; {d}; {c,d}`) validated against both ideal
axioms.  Point names are symbolic; indices are assigned by lexicographic
order, so the canonical serialization (sorted points, opens ascending by
mask, generator-form ideal) round-trips bit-exactly.

Map file, read against an already-parsed domain space:

    to-points: a b c
    to-open: {}; {c}; {a,b,c}
    to-ideal: {c}            # optional; enables image-side classes
    map: a->a; b->b; c->c
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .core import (
    FiniteTopology,
    Ideal,
    IdealSpace,
    MAX_POINTS,
    NotAnIdeal,
    NotATopology,
    TopoidealError,
    bits,
    make_ideal,
    make_topology,
    principal_ideal,
)
from .maps import SpaceMap


class SpaceFileError(TopoidealError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class UnknownPoint(SpaceFileError):
    pass


class TooManyPoints(SpaceFileError):
    pass


def _positioned(exc_type, message: str, line: int, col: int):
    if issubclass(exc_type, SpaceFileError):
        return exc_type(message, line, col)
    err = exc_type(f"line {line}, column {col}: {message}")
    err.line = line
    err.col = col
    return err


@dataclass(frozen=True)
class NamedSpace:
    space: IdealSpace
    names: tuple[str, ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def parse_set(self, text: str) -> int:
        return _parse_set_token(text.strip(), self.index, line=1, offset=0)

    def format_set(self, mask: int) -> str:
        return format_set(mask, self.names)


@dataclass(frozen=True)
class NamedMap:
    map: SpaceMap
    dom_names: tuple[str, ...]
    cod_names: tuple[str, ...]


def default_names(n: int) -> tuple[str, ...]:
    return tuple(chr(ord("a") + i) for i in range(n))


def format_set(mask: int, names) -> str:
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _strip_comment(raw: str) -> str:
    cut = raw.find("#")
    return raw if cut < 0 else raw[:cut]


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if ":" not in line:
            raise SpaceFileError("expected 'key: value'", lineno, 1)
        key, value = line.split(":", 1)
        yield lineno, key.strip(), value, len(key) + 2


def _parse_set_token(token: str, index: dict[str, int], line: int, offset: int) -> int:
    body = token.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise SpaceFileError(f"expected a set like {{a,c}}, got {body!r}", line,
                             offset + 1)
    mask = 0
    inner = body[1:-1]
    inner_offset = offset + token.index("{") + 1
    pos = 0
    for part in inner.split(",") if inner.strip() else []:
        name = part.strip()
        col = inner_offset + pos + (part.index(name) if name else 0)
        if not name:
            raise SpaceFileError("empty name in set", line, col)
        if name not in index:
            raise _positioned(UnknownPoint, f"unknown point {name!r}", line, col)
        mask |= 1 << index[name]
        pos += len(part) + 1
    return mask


def _parse_set_list(value: str, index: dict[str, int], line: int, key_offset: int) -> list[int]:
    out = []
    pos = 0
    for token in value.split(";"):
        if token.strip():
            out.append(_parse_set_token(token, index, line, key_offset + pos))
        pos += len(token) + 1
    return out


def _parse_points(value: str, line: int, key_offset: int) -> tuple[str, ...]:
    names = []
    for m in _NAME.finditer(value):
        names.append((m.group(), key_offset + m.start()))
    leftovers = _NAME.sub(" ", value).strip()
    if leftovers:
        raise SpaceFileError(f"bad point name near {leftovers.split()[0]!r}", line, key_offset + 1)
    seen = set()
    for name, col in names:
        if name in seen:
            raise SpaceFileError(f"duplicate point {name!r}", line, col)
        seen.add(name)
    if len(names) > MAX_POINTS:
        raise _positioned(TooManyPoints,
                          f"{len(names)} points exceed the limit of {MAX_POINTS}",
                          line, names[MAX_POINTS][1])
    if not names:
        raise SpaceFileError("no points given", line, key_offset + 1)
    return tuple(sorted(name for name, _ in names))


def _build_topology(n: int, opens: list[int], line: int) -> FiniteTopology:
    try:
        return make_topology(n, opens)
    except NotATopology as err:
        raise _positioned(NotATopology, str(err), line, 1) from None


def _build_ideal(n: int, kind: str, sets: list[int], line: int) -> Ideal:
    if kind == "generator":
        if len(sets) != 1:
            raise SpaceFileError("'ideal:' takes exactly one generator set", line, 1)
        return principal_ideal(n, sets[0])
    try:
        return make_ideal(n, sets)
    except NotAnIdeal as err:
        raise _positioned(NotAnIdeal, str(err), line, 1) from None


def parse_space_file(text: str) -> NamedSpace:
    names = None
    opens: list[int] = []
    ideal_spec = None
    first_open_line = points_line = None
    index: dict[str, int] = {}
    for lineno, key, value, key_offset in _directives(text):
        if key == "points":
            if names is not None:
                raise SpaceFileError("duplicate 'points:' line", lineno, 1)
            names = _parse_points(value, lineno, key_offset)
            points_line = lineno
            index = {name: i for i, name in enumerate(names)}
        elif key == "open":
            if names is None:
                raise SpaceFileError("'open:' before 'points:'", lineno, 1)
            if first_open_line is None:
                first_open_line = lineno
            opens.extend(_parse_set_list(value, index, lineno, key_offset))
        elif key in ("ideal", "ideal-family"):
            if names is None:
                raise SpaceFileError(f"'{key}:' before 'points:'", lineno, 1)
            if ideal_spec is not None:
                raise SpaceFileError("ideal given twice", lineno, 1)
            kind = "generator" if key == "ideal" else "family"
            ideal_spec = (kind, _parse_set_list(value, index, lineno, key_offset), lineno)
        else:
            raise SpaceFileError(f"unknown directive {key!r}", lineno, 1)
    if names is None:
        raise SpaceFileError("missing 'points:' line")
    if first_open_line is None:
        raise SpaceFileError("missing 'open:' line", points_line)
    if ideal_spec is None:
        raise SpaceFileError("missing 'ideal:' or 'ideal-family:' line", first_open_line)
    n = len(names)
    topo = _build_topology(n, opens, first_open_line)
    ideal = _build_ideal(n, ideal_spec[0], ideal_spec[1], ideal_spec[2])
    return NamedSpace(IdealSpace(topo, ideal), names)


def serialize_space(named: NamedSpace) -> str:
    names = named.names
    opens = "; ".join(format_set(u, names) for u in named.space.topo.opens)
    return (
        f"points: {' '.join(names)}\n"
        f"open: {opens}\n"
        f"ideal: {format_set(named.space.ideal.gen, names)}\n"
    )


_ARROW = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_]*)\s*->\s*([A-Za-z][A-Za-z0-9_]*)\s*$")


def parse_map_file(text: str, dom: NamedSpace) -> NamedMap:
    cod_names = None
    cod_opens: list[int] = []
    cod_ideal_spec = None
    first_open_line = None
    entries: dict[str, tuple[str, int, int]] = {}
    cod_index: dict[str, int] = {}
    for lineno, key, value, key_offset in _directives(text):
        if key == "to-points":
            if cod_names is not None:
                raise SpaceFileError("duplicate 'to-points:' line", lineno, 1)
            cod_names = _parse_points(value, lineno, key_offset)
            cod_index = {name: i for i, name in enumerate(cod_names)}
        elif key == "to-open":
            if cod_names is None:
                raise SpaceFileError("'to-open:' before 'to-points:'", lineno, 1)
            if first_open_line is None:
                first_open_line = lineno
            cod_opens.extend(_parse_set_list(value, cod_index, lineno, key_offset))
        elif key in ("to-ideal", "to-ideal-family"):
            if cod_names is None:
                raise SpaceFileError(f"'{key}:' before 'to-points:'", lineno, 1)
            kind = "generator" if key == "to-ideal" else "family"
            cod_ideal_spec = (kind, _parse_set_list(value, cod_index, lineno, key_offset), lineno)
        elif key == "map":
            pos = 0
            for token in value.split(";"):
                if token.strip():
                    m = _ARROW.match(token)
                    if m is None:
                        raise SpaceFileError(f"expected 'src->dst', got {token.strip()!r}",
                                             lineno, key_offset + pos + 1)
                    src, dst = m.group(1), m.group(2)
                    if src in entries:
                        raise SpaceFileError(f"point {src!r} mapped twice", lineno,
                                             key_offset + pos + 1)
                    entries[src] = (dst, lineno, key_offset + pos + 1)
                pos += len(token) + 1
        else:
            raise SpaceFileError(f"unknown directive {key!r}", lineno, 1)
    if cod_names is None:
        raise SpaceFileError("missing 'to-points:' line")
    if first_open_line is None:
        raise SpaceFileError("missing 'to-open:' line")
    if not entries:
        raise SpaceFileError("missing 'map:' line")
    cod = _build_topology(len(cod_names), cod_opens, first_open_line)
    cod_ideal = None
    if cod_ideal_spec is not None:
        cod_ideal = _build_ideal(len(cod_names), cod_ideal_spec[0],
                                 cod_ideal_spec[1], cod_ideal_spec[2])
    table = []
    for name in dom.names:
        if name not in entries:
            raise SpaceFileError(f"domain point {name!r} has no map entry")
        dst, lineno, col = entries[name]
        if dst not in cod_index:
            raise _positioned(UnknownPoint, f"unknown codomain point {dst!r}", lineno, col)
        table.append(cod_index[dst])
    for src, (_, lineno, col) in entries.items():
        if src not in dom.index:
            raise _positioned(UnknownPoint, f"unknown domain point {src!r}", lineno, col)
    return NamedMap(SpaceMap(dom.space, cod, tuple(table), cod_ideal),
                    dom.names, cod_names)


def serialize_map_file(named: NamedMap) -> str:
    cod = named.map.cod
    lines = [
        f"to-points: {' '.join(named.cod_names)}",
        "to-open: " + "; ".join(format_set(u, named.cod_names) for u in cod.opens),
    ]
    if named.map.cod_ideal is not None:
        lines.append(f"to-ideal: {format_set(named.map.cod_ideal.gen, named.cod_names)}")
    arrows = "; ".join(
        f"{src}->{named.cod_names[dst]}"
        for src, dst in zip(named.dom_names, named.map.table))
    lines.append(f"map: {arrows}")
    return "\n".join(lines) + "\n"
