"""A tiny expression language for naming posets on the command line.

Grammar (whitespace allowed between tokens):

    expr := term (('x' | '+') term)*     left associative; 'x' binds tighter
    term := [int '*'] atom | '(' expr ')'
    atom := 'C' int | 'A' int | 'B' int

C<n> is the chain of rank n, A<j> the width-j antichain with bounds added,
B<n> the rank-n boolean lattice; 'x' is the Cartesian product, '+' the
bounded disjoint union (operands must have equal rank), and j*T repeats T
j times under '+'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PosetError, QuiltsError
from .poset import RankedPoset, disjoint_union, make_antichain, make_boolean, make_chain, product


class ExprError(QuiltsError, ValueError):
    """Syntax or evaluation error, with the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    kind: str  # 'C', 'A' or 'B'
    param: int

    def render(self) -> str:
        return f"{self.kind}{self.param}"


@dataclass(frozen=True)
class Repeat:
    count: int
    term: "PosetExpr"

    def render(self) -> str:
        return f"{self.count}*{_wrap(self.term, allow=(Atom,))}"


@dataclass(frozen=True)
class Product:
    left: "PosetExpr"
    right: "PosetExpr"

    def render(self) -> str:
        lhs = _wrap(self.left, allow=(Product, Atom, Repeat))
        rhs = _wrap(self.right, allow=(Atom, Repeat))
        return f"{lhs}x{rhs}"


@dataclass(frozen=True)
class Sum:
    left: "PosetExpr"
    right: "PosetExpr"

    def render(self) -> str:
        rhs = _wrap(self.right, allow=(Atom, Repeat, Product))
        return f"{self.left.render()}+{rhs}"


PosetExpr = Atom | Repeat | Product | Sum


def _wrap(e: PosetExpr, allow=(Atom, Repeat)) -> str:
    text = e.render()
    return text if isinstance(e, allow) else f"({text})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ExprError:
        return ExprError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def parse_atom_or_group(self) -> PosetExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return inner
        if ch and ch in "CAB":
            self.pos += 1
            return Atom(ch, self.take_int())
        raise self.error("expected 'C', 'A', 'B' or '('")

    def parse_term(self) -> PosetExpr:
        ch = self.peek()
        if ch.isdigit():
            count = self.take_int()
            if self.peek() != "*":
                raise self.error("expected '*' after a repetition count")
            self.pos += 1
            return Repeat(count, self.parse_atom_or_group())
        return self.parse_atom_or_group()

    def parse_product(self) -> PosetExpr:
        node = self.parse_term()
        while self.peek() == "x":
            self.pos += 1
            node = Product(node, self.parse_term())
        return node

    def parse_expr(self) -> PosetExpr:
        node = self.parse_product()
        while self.peek() == "+":
            self.pos += 1
            node = Sum(node, self.parse_product())
        return node

    def parse(self) -> PosetExpr:
        node = self.parse_expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return node


def parse_poset_expr(text: str) -> PosetExpr:
    return _Parser(text).parse()


def render_expr(e: PosetExpr) -> str:
    return e.render()


def eval_expr(e: PosetExpr) -> RankedPoset:
    if isinstance(e, Atom):
        if e.kind == "C":
            return make_chain(e.param)
        if e.kind == "A":
            return make_antichain(e.param)
        return make_boolean(e.param)
    if isinstance(e, Repeat):
        if e.count < 1:
            raise PosetError("repetition count must be >= 1")
        base = eval_expr(e.term)
        out = base
        for _ in range(e.count - 1):
            out = disjoint_union(out, base)
        return out
    if isinstance(e, Product):
        return product(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Sum):
        return disjoint_union(eval_expr(e.left), eval_expr(e.right))
    raise TypeError(f"not an expression node: {e!r}")


def chain_rank(e: PosetExpr) -> int | None:
    """n when the expression is literally the atom C<n>, else None."""
    return e.param if isinstance(e, Atom) and e.kind == "C" else None


def antichain_width(e: PosetExpr) -> int | None:
    """j when the expression is literally the atom A<j>, else None."""
    return e.param if isinstance(e, Atom) and e.kind == "A" else None


def boolean_rank(e: PosetExpr) -> int | None:
    """n when the expression is literally the atom B<n>, else None."""
    return e.param if isinstance(e, Atom) and e.kind == "B" else None
