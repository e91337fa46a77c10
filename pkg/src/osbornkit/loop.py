"""Finite loops given by Cayley tables.

Elements are ``0..n-1``. The identity is detected from the table and is not
renormalized to 0.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import Malformed, NoIdentity, NotLatin
from .perm import Perm


class Loop:
    """An immutable loop. ``table[x, y]`` is ``x*y``."""

    def __init__(self, table, name: str | None = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise Malformed(f"table must be a non-empty square, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise Malformed(f"entry out of range at cell ({bad[0]}, {bad[1]})")
        _check_latin(arr)
        e = _find_identity(arr)
        arr.flags.writeable = False
        self.table = arr
        self.n = n
        self.e = e
        self.name = name

        idx = np.arange(n)
        ldiv = np.empty_like(arr)
        rdiv = np.empty_like(arr)
        # a*z = b  ->  ldiv[a, b] = z ;  z*b = a  ->  rdiv[a, b] = z
        ldiv[idx[:, None], arr] = idx[None, :]
        rdiv[arr, idx[None, :]] = idx[:, None]
        ldiv.flags.writeable = False
        rdiv.flags.writeable = False
        self.ldiv_table = ldiv
        self.rdiv_table = rdiv

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def ldiv(self, a: int, b: int) -> int:
        """``a\\b``: the z with ``a*z = b``."""
        return int(self.ldiv_table[a, b])

    def rdiv(self, a: int, b: int) -> int:
        """``a/b``: the z with ``z*b = a``."""
        return int(self.rdiv_table[a, b])

    def R(self, a: int) -> Perm:
        return Perm._trusted(self.table[:, a])

    def L(self, a: int) -> Perm:
        return Perm._trusted(self.table[a, :])

    def R_inv(self, a: int) -> Perm:
        return Perm._trusted(self.rdiv_table[:, a])

    def L_inv(self, a: int) -> Perm:
        return Perm._trusted(self.ldiv_table[a, :])

    def lam(self, x: int) -> int:
        """Left inverse ``e/x``."""
        return self.rdiv(self.e, x)

    def rho(self, x: int) -> int:
        """Right inverse ``x\\e``."""
        return self.ldiv(x, self.e)

    @cached_property
    def is_associative(self) -> bool:
        t = self.table
        return bool(np.array_equal(t[t, :], t[:, t]))  # (xy)z vs x(yz) over all triples

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __eq__(self, other) -> bool:
        return isinstance(other, Loop) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Loop({label}n={self.n}, e={self.e})"


def _check_latin(arr: np.ndarray) -> None:
    n = arr.shape[0]
    for i in range(n):
        row = arr[i]
        if len(set(row.tolist())) != n:
            j = _first_repeat(row)
            raise NotLatin(f"row {i} repeats value {row[j]} at cell ({i}, {j})", (i, j), "row")
    for j in range(n):
        col = arr[:, j]
        if len(set(col.tolist())) != n:
            i = _first_repeat(col)
            raise NotLatin(f"column {j} repeats value {col[i]} at cell ({i}, {j})", (i, j), "column")


def _first_repeat(line) -> int:
    seen = set()
    for k, v in enumerate(line.tolist()):
        if v in seen:
            return k
        seen.add(v)
    raise AssertionError("no repeat")


def _find_identity(arr: np.ndarray) -> int:
    idx = np.arange(arr.shape[0])
    for e in range(arr.shape[0]):
        if np.array_equal(arr[e], idx) and np.array_equal(arr[:, e], idx):
            return e
    raise NoIdentity("table has no two-sided identity element")


def parse_loop(text: str, name: str | None = None) -> Loop:
    """Parse the ``.loop`` format: ``#`` comments, the order, then n rows."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise Malformed("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise Malformed(f"bad order line {lines[0]!r}") from None
    if n < 1:
        raise Malformed(f"order must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise Malformed(f"expected {n} rows, got {len(rows)}")
    table = []
    for i, ln in enumerate(rows):
        toks = ln.split()
        if len(toks) != n:
            raise Malformed(f"row {i} has {len(toks)} entries, expected {n}")
        try:
            table.append([int(t) for t in toks])
        except ValueError:
            raise Malformed(f"non-integer token in row {i}") from None
    return Loop(table, name=name)


def render_loop(loop: Loop) -> str:
    rows = "".join(" ".join(str(v) for v in row) + "\n" for row in loop.table.tolist())
    return f"{loop.n}\n{rows}"


def divide(loop: Loop, side: str, a: int, b: int) -> int:
    """``side='left'`` gives ``a\\b``; ``side='right'`` gives ``a/b``."""
    if side == "left":
        return loop.ldiv(a, b)
    if side == "right":
        return loop.rdiv(a, b)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def translation(loop: Loop, side: str, a: int) -> Perm:
    if side == "R":
        return loop.R(a)
    if side == "L":
        return loop.L(a)
    raise ValueError(f"side must be 'L' or 'R', not {side!r}")


def inverse_element(loop: Loop, kind: str, x: int) -> int:
    if kind in ("lambda", "l", "λ"):
        return loop.lam(x)
    if kind in ("rho", "r", "ρ"):
        return loop.rho(x)
    raise ValueError(f"kind must be lambda or rho, not {kind!r}")


def nucleus(loop: Loop, which: str = "middle") -> frozenset[int]:
    t = loop.table
    n = loop.n
    out = []
    for a in range(n):
        if which == "left":
            # (a x) y = a (x y)
            ok = np.array_equal(t[t[a, :], :], t[a, t])
        elif which == "middle":
            # (x a) y = x (a y)
            ok = np.array_equal(t[t[:, a], :], t[:, t[a, :]])
        elif which == "right":
            # (x y) a = x (y a)
            ok = np.array_equal(t[t, a], t[:, t[:, a]])
        else:
            raise ValueError(f"unknown nucleus {which!r}")
        if ok:
            out.append(a)
    return frozenset(out)
