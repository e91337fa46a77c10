"""A small language for loop identities and an exhaustive checker.

Grammar::

    identity := term '=' term
    term     := factor (('*' | '\\' | '/') factor)*      # left-assoc, one precedence
    factor   := atom ('^l' | '^r')*
    atom     := var | 'e' | '(' term ')'

Variables are single letters a-z other than ``e``. ``x^l`` is ``e/x`` and
``x^r`` is ``x\\e``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import IdentitySyntaxError
from .loop import Loop


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Inv:
    kind: str  # 'l' or 'r'
    operand: "Term"


Term = Union[Var, Const, BinOp, Inv]


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]
    text: str = ""

    def __str__(self):
        return f"{render_term(self.lhs)} = {render_term(self.rhs)}"


def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return "e"
    if isinstance(t, Inv):
        return f"({render_term(t.operand)})^{t.kind}"
    return f"({render_term(t.left)}{t.op}{render_term(t.right)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.vars: list[str] = []

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def error(self, msg):
        raise IdentitySyntaxError(msg, self.pos)

    def term(self) -> Term:
        left = self.factor()
        while self.peek() in ("*", "\\", "/"):
            op = self.text[self.pos]
            self.pos += 1
            left = BinOp(op, left, self.factor())
        return left

    def factor(self) -> Term:
        t = self.atom()
        while self.peek() == "^":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] in "lr":
                t = Inv(self.text[self.pos], t)
                self.pos += 1
            else:
                self.error("expected 'l' or 'r' after '^'")
        return t

    def atom(self) -> Term:
        c = self.peek()
        if c is None:
            self.error("unexpected end of input")
        if c == "(":
            self.pos += 1
            t = self.term()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return t
        if c == "e":
            self.pos += 1
            return Const()
        if c.isalpha() and c.islower() and c.isascii():
            self.pos += 1
            if c not in self.vars:
                self.vars.append(c)
            return Var(c)
        self.error(f"unexpected {c!r}")


def parse_identity(text: str) -> Identity:
    p = _Parser(text)
    lhs = p.term()
    if p.peek() != "=":
        p.error("expected '='")
    p.pos += 1
    rhs = p.term()
    if p.peek() is not None:
        p.error(f"unexpected {p.peek()!r}")
    return Identity(lhs, rhs, tuple(p.vars), text)


def evaluate(loop: Loop, term: Term, variables: tuple[str, ...]):
    """Evaluate ``term`` at every assignment at once; axis i is ``variables[i]``."""
    k = len(variables)

    def ev(t):
        if isinstance(t, Var):
            shape = [1] * k
            shape[variables.index(t.name)] = loop.n
            return np.arange(loop.n).reshape(shape)
        if isinstance(t, Const):
            return np.asarray(loop.e)
        if isinstance(t, Inv):
            x = ev(t.operand)
            return loop.rdiv_table[loop.e, x] if t.kind == "l" else loop.ldiv_table[x, loop.e]
        a, b = ev(t.left), ev(t.right)
        if t.op == "*":
            return loop.table[a, b]
        if t.op == "\\":
            return loop.ldiv_table[a, b]
        return loop.rdiv_table[a, b]

    return np.broadcast_to(ev(term), (loop.n,) * k)


@dataclass(frozen=True)
class Counterexample:
    assignment: dict[str, int]
    lhs: int
    rhs: int

    def values(self) -> tuple[int, ...]:
        return tuple(self.assignment.values())


def check_identity(loop: Loop, ident: Identity | str) -> Counterexample | None:
    """None when the identity holds; else the lexicographically first failure."""
    if isinstance(ident, str):
        ident = parse_identity(ident)
    v = ident.variables
    lhs = evaluate(loop, ident.lhs, v)
    rhs = evaluate(loop, ident.rhs, v)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    idx = tuple(int(i) for i in bad[0])
    return Counterexample(dict(zip(v, idx)), int(lhs[idx]), int(rhs[idx]))


CATALOG = {
    "OS3": "(x*(y*z))*x = (x*y)*(((x^l)*(x*z))*x)",
    "OS5": "(x*(y*z))*x = (x*y)*((x*((x^r)*z))*x)",
    "associative": "(x*y)*z = x*(y*z)",
    "commutative": "x*y = y*x",
    "moufang": "x*(y*(x*z)) = ((x*y)*x)*z",
    "extra": "x*(y*(z*x)) = ((x*y)*z)*x",
    "left_bol": "x*(y*(x*z)) = (x*(y*x))*z",
    "exponent2": "x*x = e",
}

_PARSED: dict[str, Identity] = {}


def builtin_identity(name: str) -> Identity:
    if name not in _PARSED:
        _PARSED[name] = parse_identity(CATALOG[name])
    return _PARSED[name]


def holds(loop: Loop, name: str) -> bool:
    return check_identity(loop, builtin_identity(name)) is None


def _translations_closed_under_conjugation(loop: Loop) -> bool:
    t, ld, rd = loop.table, loop.ldiv_table, loop.rdiv_table
    n, e = loop.n, loop.e
    idx = np.arange(n)
    for x in range(n):
        # L_x^-1 L_y L_x : z -> x(y(x\z)), rows indexed by y
        conj_l = t[x, t[idx[:, None], ld[x, idx][None, :]]]
        if not np.array_equal(conj_l, t[conj_l[:, e]]):
            return False
        # R_x^-1 R_y R_x : z -> ((z/x)y)x, rows indexed by y
        conj_r = t[t[rd[idx, x][None, :], idx[:, None]], x]
        if not np.array_equal(conj_r, t[:, conj_r[:, e]].T):
            return False
    return True


FLAGS = ("group", "abelian", "boolean_group", "moufang", "extra", "left_bol", "cc", "osborn")


def classify(loop: Loop) -> frozenset[str]:
    flags = set()
    group = loop.is_associative
    if group:
        flags.add("group")
        if loop.is_commutative:
            flags.add("abelian")
        if holds(loop, "exponent2"):
            flags.add("boolean_group")
    for name in ("moufang", "extra", "left_bol"):
        if holds(loop, name):
            flags.add(name)
    if _translations_closed_under_conjugation(loop):
        flags.add("cc")
    if holds(loop, "OS3") and holds(loop, "OS5"):
        flags.add("osborn")
    return frozenset(flags)
