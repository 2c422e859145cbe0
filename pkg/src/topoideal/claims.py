"""Boolean claim expressions over class-flag atoms.

Grammar (whitespace insensitive, '=>' right-associative, ! > & > | > =>):

    expr  := or ('=>' expr)?
    or    := and ('|' and)*
    and   := not ('&' not)*
    not   := '!' not | atom | '(' expr ')'
    atom  := flag name from the published vocabulary

Atoms are the set-class flags, the map-class flags, and the space
property flags; which of them a search scope can evaluate is decided by
the consumer via atoms_for_scope.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import TopoidealError
from .classes import CLASS_FLAGS
from .maps import MAP_FLAGS

SPACE_FLAGS = ("hayashi_samuels", "submaximal", "i_strongly_irresolvable")

ALL_ATOMS = frozenset(CLASS_FLAGS) | frozenset(MAP_FLAGS) | frozenset(SPACE_FLAGS)

# image-side map classes need a codomain ideal, which search scopes do not carry
SET_SCOPE_ATOMS = frozenset(CLASS_FLAGS) | frozenset(SPACE_FLAGS)
MAP_SCOPE_ATOMS = (frozenset(MAP_FLAGS) - {"i_open_map", "i_closed_map"}) | frozenset(SPACE_FLAGS)


class ClaimError(TopoidealError):
    pass


class ParseError(ClaimError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownAtom(ClaimError):
    def __init__(self, name: str, detail: str = ""):
        super().__init__(f"unknown atom {name!r}" + (f": {detail}" if detail else ""))
        self.name = name


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    operand: "Node"


@dataclass(frozen=True)
class And:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Or:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Implies:
    left: "Node"
    right: "Node"


Node = Atom | Not | And | Or | Implies

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>=>|[!&|()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Node:
        node = self.implies()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing {value!r}", pos)
        return node

    def implies(self) -> Node:
        left = self.disjunction()
        kind, value, _ = self.peek()
        if kind == "op" and value == "=>":
            self.take()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Node:
        node = self.conjunction()
        while self.peek()[:2] == ("op", "|"):
            self.take()
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Node:
        node = self.negation()
        while self.peek()[:2] == ("op", "&"):
            self.take()
            node = And(node, self.negation())
        return node

    def negation(self) -> Node:
        kind, value, pos = self.peek()
        if (kind, value) == ("op", "!"):
            self.take()
            return Not(self.negation())
        return self.primary()

    def primary(self) -> Node:
        kind, value, pos = self.take()
        if kind == "name":
            if value not in ALL_ATOMS:
                raise UnknownAtom(value)
            return Atom(value)
        if (kind, value) == ("op", "("):
            node = self.implies()
            self.expect_op(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse_claim(text: str) -> Node:
    return _Parser(text).parse()


_PRECEDENCE = {Implies: 0, Or: 1, And: 2, Not: 3, Atom: 4}


def _render(node: Node, context: int) -> str:
    level = _PRECEDENCE[type(node)]
    if isinstance(node, Atom):
        out = node.name
    elif isinstance(node, Not):
        out = "!" + _render(node.operand, 3)
    elif isinstance(node, And):
        out = f"{_render(node.left, 2)} & {_render(node.right, 3)}"
    elif isinstance(node, Or):
        out = f"{_render(node.left, 1)} | {_render(node.right, 2)}"
    else:
        out = f"{_render(node.left, 1)} => {_render(node.right, 0)}"
    if level < context:
        return f"({out})"
    return out


def print_claim(node: Node) -> str:
    """Render with minimal parentheses; parse_claim(print_claim(t)) == t."""
    return _render(node, 0)


def atoms_of(node: Node) -> frozenset[str]:
    if isinstance(node, Atom):
        return frozenset((node.name,))
    if isinstance(node, Not):
        return atoms_of(node.operand)
    return atoms_of(node.left) | atoms_of(node.right)


def evaluate(node: Node, values) -> bool:
    if isinstance(node, Atom):
        return bool(values[node.name])
    if isinstance(node, Not):
        return not evaluate(node.operand, values)
    if isinstance(node, And):
        return evaluate(node.left, values) and evaluate(node.right, values)
    if isinstance(node, Or):
        return evaluate(node.left, values) or evaluate(node.right, values)
    return (not evaluate(node.left, values)) or evaluate(node.right, values)


def atoms_for_scope(scope: str) -> frozenset[str]:
    if scope == "sets":
        return SET_SCOPE_ATOMS
    if scope == "maps":
        return MAP_SCOPE_ATOMS
    raise TopoidealError(f"unknown scope {scope!r}")
