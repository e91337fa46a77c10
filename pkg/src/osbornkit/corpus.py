"""Test corpus: reduced Latin-square enumeration, the Chein double, built-in loops."""
from __future__ import annotations

import itertools
import re
from typing import Callable, Iterator

import numpy as np

from .errors import BadFilter, BoundExceeded, NotAGroup
from .loop import Loop

ENUM_BOUND = 7

N5_ROWS = ["01234", "10342", "23401", "34120", "42013"]


def enumerate_loops(n: int, visitor: Callable[[Loop], object] | None = None,
                    bound: int = ENUM_BOUND) -> int:
    """Visit every loop on ``0..n-1`` with identity 0 whose first row and column
    are in natural order, in lexicographic cell order. Returns the count."""
    count = 0
    for table in iter_reduced_tables(n, bound=bound):
        count += 1
        if visitor is not None:
            visitor(Loop(table, name=f"o{n}_{count - 1}"))
    return count


def iter_reduced_tables(n: int, bound: int = ENUM_BOUND) -> Iterator[list[list[int]]]:
    if n > bound:
        raise BoundExceeded("enumerate_loops", n, bound)
    if n < 1:
        raise ValueError("order must be positive")
    full = (1 << n) - 1
    table = [[0] * n for _ in range(n)]
    row_used = [0] * n
    col_used = [0] * n
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
        row_used[i] |= 1 << i
        col_used[i] |= 1 << i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(k):
        if k == len(cells):
            yield [row[:] for row in table]
            return
        i, j = cells[k]
        free = full & ~(row_used[i] | col_used[j])
        while free:
            low = free & -free
            v = low.bit_length() - 1
            free ^= low
            table[i][j] = v
            row_used[i] |= low
            col_used[j] |= low
            yield from fill(k + 1)
            row_used[i] ^= low
            col_used[j] ^= low

    yield from fill(0)


def cyclic(n: int) -> Loop:
    idx = np.arange(n)
    return Loop((idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def direct_product(a: Loop, b: Loop, name: str | None = None) -> Loop:
    # (x1, x2) -> x1 * b.n + x2
    n = a.n * b.n
    x1, x2 = np.divmod(np.arange(n), b.n)
    table = a.table[x1[:, None], x1[None, :]] * b.n + b.table[x2[:, None], x2[None, :]]
    return Loop(table, name=name)


def symmetric_group(k: int = 3) -> Loop:
    elems = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(elems)}
    # postfix composition: x(pq) = (xp)q
    table = [[index[tuple(q[p[x]] for x in range(k))] for q in elems] for p in elems]
    return Loop(table, name=f"S{k}")


def n5() -> Loop:
    return Loop([[int(c) for c in row] for row in N5_ROWS], name="N5")


def chein_double(g: Loop, name: str | None = None) -> Loop:
    """The Chein loop M(G, 2) on ``G x {0,1}``; element ``(x, s)`` is ``x + s*n``."""
    if not g.is_associative:
        raise NotAGroup(f"{g.name or 'input'} is not associative")
    n = g.n
    t = g.table
    inv = [g.rho(x) for x in range(n)]
    out = np.empty((2 * n, 2 * n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            out[x, y] = t[x, y]                          # (g,0)(h,0) = (gh, 0)
            out[x, n + y] = n + t[y, x]                  # (g,0)(h,1) = (hg, 1)
            out[n + x, y] = n + t[x, inv[y]]             # (g,1)(h,0) = (gh^-1, 1)
            out[n + x, n + y] = t[inv[y], x]             # (g,1)(h,1) = (h^-1 g, 0)
    loop = Loop(out, name=name or f"M({g.name or 'G'},2)")
    from .identity import classify  # local import: identity imports corpus-free modules only

    flags = classify(loop)
    assert "moufang" in flags
    assert ("group" in flags) == g.is_commutative
    return loop


def builtins() -> list[Loop]:
    z2 = cyclic(2)
    z22 = direct_product(z2, z2, name="Z2xZ2")
    return [
        *(cyclic(k) for k in range(1, 7)),
        z22,
        direct_product(z22, z2, name="Z2^3"),
        symmetric_group(3),
        n5(),
        chein_double(symmetric_group(3), name="M(S3,2)"),
    ]


def builtin(name: str) -> Loop:
    for loop in builtins():
        if loop.name.lower() == name.lower():
            return loop
    raise KeyError(name)


_FLAG_TOKEN = re.compile(r"\s*(\(|\)|!|¬|~|&|∧|\||∨|\band\b|\bor\b|\bnot\b|[A-Za-z_][A-Za-z0-9_]*)")


def compile_filter(expr: str | None) -> Callable[[set[str]], bool]:
    """Boolean expression over flag names, e.g. ``"osborn & !group"``."""
    if expr is None or not expr.strip():
        return lambda flags: True
    tokens = []
    pos = 0
    while pos < len(expr):
        m = _FLAG_TOKEN.match(expr, pos)
        if not m:
            if expr[pos:].strip() == "":
                break
            raise BadFilter(f"unexpected character {expr[pos]!r} at {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    known = FILTER_FLAGS
    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else None

    def take():
        nonlocal k
        k += 1
        return tokens[k - 1]

    def parse_or():
        left = parse_and()
        while peek() in ("|", "∨", "or"):
            take()
            right = parse_and()
            left = (lambda a, b: lambda f: a(f) or b(f))(left, right)
        return left

    def parse_and():
        left = parse_not()
        while peek() in ("&", "∧", "and"):
            take()
            right = parse_not()
            left = (lambda a, b: lambda f: a(f) and b(f))(left, right)
        return left

    def parse_not():
        if peek() in ("!", "¬", "~", "not"):
            take()
            inner = parse_not()
            return lambda f: not inner(f)
        if peek() == "(":
            take()
            inner = parse_or()
            if peek() != ")":
                raise BadFilter("missing ')'")
            take()
            return inner
        tok = peek()
        if tok is None or tok not in known:
            raise BadFilter(f"unknown flag {tok!r}; expected one of {sorted(known)}")
        take()
        return lambda f: tok in f

    pred = parse_or()
    if k != len(tokens):
        raise BadFilter(f"trailing tokens: {tokens[k:]}")
    return pred


FILTER_FLAGS = {"group", "abelian", "boolean_group", "moufang", "extra", "left_bol",
                "cc", "osborn", "universal_osborn"}


def loop_flags(loop: Loop, need_universal: bool = False) -> set[str]:
    from .identity import classify

    flags = set(classify(loop))
    if need_universal:
        from .osborn import is_universal_osborn

        if is_universal_osborn(loop, bound=max(loop.n, 12))[0]:
            flags.add("universal_osborn")
    return flags


def corpus(filter: str | None = None, max_order: int = 6, enumerate_orders=None,
           include_builtins: bool = True) -> Iterator[Loop]:
    """Built-in loops followed by enumerated reduced loops passing ``filter``."""
    pred = compile_filter(filter)
    need_u = filter is not None and "universal_osborn" in filter
    if include_builtins:
        for loop in builtins():
            if loop.n <= max_order and pred(loop_flags(loop, need_u)):
                yield loop
    orders = enumerate_orders if enumerate_orders is not None else range(1, max_order + 1)
    for n in orders:
        for idx, table in enumerate(iter_reduced_tables(n)):
            loop = Loop(table, name=f"o{n}_{idx}")
            if pred(loop_flags(loop, need_u)):
                yield loop
