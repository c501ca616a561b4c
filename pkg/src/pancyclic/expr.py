"""A small grammar for graph-building expressions.

    expr    := union ('v' union)*          join, left associative
    union   := term ('+' term)*            disjoint union, binds tighter than 'v'
    term    := INT '*' term | atom | '(' expr ')'
    atom    := 'K' INT | 'K{' INT ',' INT '}' | 'E' INT | 'C' INT | 'P' INT

``K3 v (K2 + 3*K1)`` is K3 joined with the disjoint union of K2 and three
isolated vertices. Whitespace is ignored. ``E<n>`` is the edgeless graph on
n vertices, so ``E4`` and ``4*K1`` build the same graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph as gr
from .graph import Graph


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class EmptyGraph:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Join:
    left: object
    right: object


@dataclass(frozen=True)
class DisjointUnion:
    left: object
    right: object


@dataclass(frozen=True)
class Replicate:
    k: int
    expr: object


_ATOMS = {"K": Complete, "E": EmptyGraph, "C": Cycle, "P": Path}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < len(self.text) else "end of input"
            raise ExprSyntaxError(f"expected an integer, found {found}", start)
        return int(self.text[start:self.pos]), start

    def parse(self):
        node = self.expr()
        if self.peek():
            raise ExprSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def expr(self):
        node = self.union()
        while self.peek() == "v":
            self.pos += 1
            node = Join(node, self.union())
        return node

    def union(self):
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = DisjointUnion(node, self.term())
        return node

    def term(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch.isdigit():
            k, at = self.integer()
            if k < 1:
                raise ExprSyntaxError("replication count must be at least 1", at)
            self.expect("*")
            return Replicate(k, self.term())
        if ch in _ATOMS:
            start = self.pos
            self.pos += 1
            if ch == "K" and self.peek() == "{":
                self.pos += 1
                a, at_a = self.integer()
                self.expect(",")
                b, at_b = self.integer()
                self.expect("}")
                if a < 1 or b < 1:
                    raise ExprSyntaxError("order-0 atom", at_a if a < 1 else at_b)
                return CompleteBipartite(a, b)
            n, at = self.integer()
            if n < 1:
                raise ExprSyntaxError("order-0 atom", at)
            if ch == "C" and n < 3:
                raise ExprSyntaxError("a cycle needs at least 3 vertices", start)
            return _ATOMS[ch](n)
        found = repr(ch) if ch else "end of input"
        raise ExprSyntaxError(f"expected a graph term, found {found}", self.pos)


def parse_expr(text: str):
    return _Parser(text).parse()


def _prec(node) -> int:
    if isinstance(node, Join):
        return 0
    if isinstance(node, DisjointUnion):
        return 1
    return 2


def to_text(node) -> str:
    """Print an expression; ``parse_expr(to_text(e)) == e``."""
    if isinstance(node, Complete):
        return f"K{node.n}"
    if isinstance(node, CompleteBipartite):
        return f"K{{{node.a},{node.b}}}"
    if isinstance(node, EmptyGraph):
        return f"E{node.n}"
    if isinstance(node, Cycle):
        return f"C{node.n}"
    if isinstance(node, Path):
        return f"P{node.n}"
    if isinstance(node, Replicate):
        inner = to_text(node.expr)
        if _prec(node.expr) < 2:
            inner = f"({inner})"
        return f"{node.k}*{inner}"
    if isinstance(node, (Join, DisjointUnion)):
        op, level = (" v ", 0) if isinstance(node, Join) else (" + ", 1)
        left, right = to_text(node.left), to_text(node.right)
        if _prec(node.left) < level:
            left = f"({left})"
        # left associative: an equal-precedence right child needs parentheses
        if _prec(node.right) <= level:
            right = f"({right})"
        return left + op + right
    raise TypeError(f"not an expression node: {node!r}")


def order(node) -> int:
    if isinstance(node, (Complete, EmptyGraph, Cycle, Path)):
        return node.n
    if isinstance(node, CompleteBipartite):
        return node.a + node.b
    if isinstance(node, Replicate):
        return node.k * order(node.expr)
    return order(node.left) + order(node.right)


def eval_expr(node) -> Graph:
    total = order(node)
    if total > gr.MAX_ORDER:
        raise gr.GraphError(f"expression has order {total}, capacity is {gr.MAX_ORDER}")
    if isinstance(node, Complete):
        return gr.complete(node.n)
    if isinstance(node, CompleteBipartite):
        return gr.complete_bipartite(node.a, node.b)
    if isinstance(node, EmptyGraph):
        return gr.empty(node.n)
    if isinstance(node, Cycle):
        return gr.cycle(node.n)
    if isinstance(node, Path):
        return gr.path(node.n)
    if isinstance(node, Replicate):
        return gr.replicate(node.k, eval_expr(node.expr))
    if isinstance(node, Join):
        return gr.join(eval_expr(node.left), eval_expr(node.right))
    if isinstance(node, DisjointUnion):
        return gr.disjoint_union(eval_expr(node.left), eval_expr(node.right))
    raise TypeError(f"not an expression node: {node!r}")


def graph_from_expr(text: str) -> Graph:
    return eval_expr(parse_expr(text))
