"""Principal isotopes, isotopisms, autotopisms and isomorphism search.

An isotopism ``(a, b, c)`` from G to H satisfies ``xa * yb = (x.y)c``.
Principal isotope ``Q_{f,g}`` has ``x o y = (x/g)(f\\y)`` with identity ``fg``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import BoundExceeded, OrderMismatch
from .loop import Loop, nucleus
from .perm import Perm

AUT_BOUND = 8
BS2_BOUND = 6


@dataclass(frozen=True)
class IsoTriple:
    a: Perm
    b: Perm
    c: Perm

    @classmethod
    def identity(cls, n: int) -> "IsoTriple":
        i = Perm.identity(n)
        return cls(i, i, i)

    @classmethod
    def diagonal(cls, theta: Perm) -> "IsoTriple":
        return cls(theta, theta, theta)

    def __mul__(self, other: "IsoTriple") -> "IsoTriple":
        return IsoTriple(self.a * other.a, self.b * other.b, self.c * other.c)

    def inverse(self) -> "IsoTriple":
        return IsoTriple(self.a.inverse(), self.b.inverse(), self.c.inverse())

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def is_identity(self) -> bool:
        return self.a.is_identity() and self.b.is_identity() and self.c.is_identity()


class PrincipalPair(NamedTuple):
    f: int
    g: int


def principal_isotope(loop: Loop, pair) -> Loop:
    f, g = pair
    t = loop.table
    table = t[np.ix_(loop.rdiv_table[:, g], loop.ldiv_table[f, :])]
    iso = Loop(table, name=f"{loop.name or 'Q'}_{{{f},{g}}}")
    assert iso.e == loop.mul(f, g)
    return iso


def _same_order(G: Loop, H: Loop) -> None:
    if G.n != H.n:
        raise OrderMismatch(f"orders differ: {G.n} vs {H.n}")


def isotopism_witness(t: IsoTriple, G: Loop, H: Loop) -> tuple[int, int] | None:
    """First ``(x, y)`` violating ``xa * yb = (xy)c``, or None."""
    _same_order(G, H)
    lhs = H.table[t.a.array[:, None], t.b.array[None, :]]
    rhs = t.c.array[G.table]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return int(bad[0, 0]), int(bad[0, 1])
    return None


def is_isotopism(t: IsoTriple, G: Loop, H: Loop) -> bool:
    return isotopism_witness(t, G, H) is None


def is_isomorphism(theta: Perm, G: Loop, H: Loop) -> bool:
    return isotopism_witness(IsoTriple.diagonal(theta), G, H) is None


def is_autotopism(t: IsoTriple, loop: Loop) -> bool:
    return isotopism_witness(t, loop, loop) is None


def iter_isomorphisms(src, dst, start: int, image: int) -> Iterator[Perm]:
    """All bijections ``th`` with ``(x.y)th = (xth)*(yth)`` and ``start th = image``.

    ``src``/``dst`` are square int tables (``dst`` only needs to be a quasigroup
    table). Branches in element order; each new assignment is closed under
    products with every assigned element before the next branch.
    """
    s = src.tolist() if isinstance(src, np.ndarray) else src
    d = dst.tolist() if isinstance(dst, np.ndarray) else dst
    n = len(s)
    fwd = [-1] * n
    back = [-1] * n

    def assign(x, y, trail):
        # returns False on conflict; every write goes to trail for undo
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if fwd[x] != -1:
                if fwd[x] != y:
                    return False
                continue
            if back[y] != -1:
                return False
            fwd[x] = y
            back[y] = x
            trail.append(x)
            for z in trail:
                # trail holds every element assigned so far, including x
                fz = fwd[z]
                stack.append((s[x][z], d[y][fz]))
                stack.append((s[z][x], d[fz][y]))
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            x = trail.pop()
            back[fwd[x]] = -1
            fwd[x] = -1

    trail: list[int] = []
    if not assign(start, image, trail):
        return

    def search():
        try:
            x = fwd.index(-1)
        except ValueError:
            yield Perm._trusted(np.asarray(fwd))
            return
        for y in range(n):
            if back[y] != -1:
                continue
            mark = len(trail)
            if assign(x, y, trail):
                yield from search()
            undo(trail, mark)

    yield from search()


def find_isomorphism(G: Loop, H: Loop) -> Perm | None:
    """First isomorphism G -> H in branch order (identity maps to identity)."""
    _same_order(G, H)
    return next(iter_isomorphisms(G.table, H.table, G.e, H.e), None)


def all_isomorphisms(G: Loop, H: Loop) -> list[Perm]:
    _same_order(G, H)
    return list(iter_isomorphisms(G.table, H.table, G.e, H.e))


def _check_bound(what: str, loop: Loop, bound: int | None, default: int) -> None:
    bound = default if bound is None else bound
    if loop.n > bound:
        raise BoundExceeded(what, loop.n, bound)


def iter_autotopisms(loop: Loop, a0: int | None = None, b0: int | None = None,
                     first: Perm | None = None, second: Perm | None = None) -> Iterator[IsoTriple]:
    """Autotopisms ``(al, be, ga)``, optionally restricted by shape.

    For fixed ``a0 = e al`` and ``b0 = e be``, putting y=e and x=e gives
    ``ga = al R_b0`` and ``be = ga L_a0^-1``; ``al`` is then an isomorphism from
    the loop onto ``x # y = (x . a0\\(y b0)) / b0``, which has identity a0.
    Fixing ``first`` or ``second`` collapses the search to a scan over the
    other component's value at e.
    """
    n, e = loop.n, loop.e
    t, ld, rd = loop.table, loop.ldiv_table, loop.rdiv_table
    if first is not None and second is not None:
        c = first * loop.R(second(e))
        tri = IsoTriple(first, second, c)
        if is_autotopism(tri, loop):
            yield tri
        return
    if first is not None:
        a0s = [first(e)]
    else:
        a0s = range(n) if a0 is None else [a0]
    for a in a0s:
        if second is not None:
            b0s = [second(e)]
        else:
            b0s = range(n) if b0 is None else [b0]
        for b in b0s:
            if first is not None:
                alphas = [first]
            elif second is not None:
                # x=e: a0 * y be = y ga  ->  ga = be L_a0 ; y=e: al = ga R_b0^-1
                g = second * loop.L(a)
                alphas = [g * loop.R_inv(b)]
            else:
                # x # y = (x . a\(y b)) / b
                target = rd[t[:, ld[a, t[:, b]]], b]
                alphas = iter_isomorphisms(t, target, e, a)
            for al in alphas:
                ga = al * loop.R(b)
                be = ga * loop.L_inv(a)
                tri = IsoTriple(al, be, ga)
                if first is not None or second is not None:
                    if not is_autotopism(tri, loop):
                        continue
                yield tri


def autotopisms(loop: Loop, bound: int | None = None) -> list[IsoTriple]:
    _check_bound("autotopisms", loop, bound, AUT_BOUND)
    return list(iter_autotopisms(loop))


def autotopisms_bruteforce(loop: Loop) -> list[IsoTriple]:
    """Unpruned scan over all ``n!^3`` triples; a test oracle for tiny loops."""
    n = loop.n
    perms = [Perm(p) for p in itertools.permutations(range(n))]
    return [IsoTriple(a, b, c) for a in perms for b in perms for c in perms
            if is_autotopism(IsoTriple(a, b, c), loop)]


def regularity(loop: Loop, U: Perm, bound: int | None = None) -> dict[str, bool]:
    n = loop.n
    I = Perm.identity(n)
    lam = is_autotopism(IsoTriple(U, I, U), loop)
    rho = is_autotopism(IsoTriple(I, U, U), loop)
    autotopic = lam or next(iter_autotopisms(loop, first=U), None) is not None
    return {"autotopic": autotopic, "lambda_regular": lam, "rho_regular": rho}


def eq10m_triple(loop: Loop, fg, cd, theta: Perm) -> IsoTriple:
    """``(R_g th R_d^-1, L_f th L_c^-1, th)`` built from an isomorphism Q_fg -> Q_cd."""
    f, g = fg
    c, d = cd
    return IsoTriple(loop.R(g) * theta * loop.R_inv(d),
                     loop.L(f) * theta * loop.L_inv(c),
                     theta)


def drisko(loop: Loop, fg, cd, bound: int | None = None, all: bool = False):
    """Autotopism taking ``(f, g, fg)`` to ``(c, d, cd)``; None if there is none.

    With ``all=True`` returns the full list of witnesses.
    """
    _check_bound("drisko", loop, bound, AUT_BOUND)
    f, g = fg
    c, d = cd
    fg_, cd_ = loop.mul(f, g), loop.mul(c, d)
    found = []
    # (f, g, fg) -> (c, d, cd) pins al(f) and be(g); scan a0 = e al, b0 = e be
    for tri in iter_autotopisms(loop):
        if tri.a(f) == c and tri.b(g) == d and tri.c(fg_) == cd_:
            if not all:
                return tri
            found.append(tri)
    return found if all else None


def bryant_schneider_identity_test(loop: Loop, a: int, b: int, c: int, d: int) -> bool:
    """Identity map is an isomorphism ``Q_{a,b} -> Q_{c,d}``, decided via the nucleus."""
    Qab = principal_isotope(loop, (a, b))
    nuc = nucleus(Qab, "middle")
    return (loop.mul(c, b) in nuc and loop.mul(a, d) in nuc
            and loop.mul(a, b) == loop.mul(c, d))


def identity_map_isotopic(loop: Loop, a: int, b: int, c: int, d: int) -> bool:
    return principal_isotope(loop, (a, b)) == principal_isotope(loop, (c, d))


class IsotopeCache:
    """All n^2 principal isotope tables of one loop, built lazily."""

    def __init__(self, loop: Loop):
        self.loop = loop
        self._cache: dict[tuple[int, int], Loop] = {}

    def __getitem__(self, pair) -> Loop:
        key = (int(pair[0]), int(pair[1]))
        iso = self._cache.get(key)
        if iso is None:
            iso = self._cache[key] = principal_isotope(self.loop, key)
        return iso


def is_g_loop(loop: Loop, bound: int | None = None) -> tuple[bool, tuple[int, int] | None]:
    """True iff the loop is isomorphic to every principal isotope; else a witness pair."""
    _check_bound("is_g_loop", loop, bound, AUT_BOUND)
    for a in range(loop.n):
        for b in range(loop.n):
            if find_isomorphism(loop, principal_isotope(loop, (a, b))) is None:
                return False, (a, b)
    return True, None


def bs2_contains(loop: Loop, theta: Perm, bound: int | None = None,
                 cache: IsotopeCache | None = None) -> tuple[int, int, int, int] | None:
    """A witness ``(a, b, c, d)`` with theta an isomorphism ``Q_ab -> Q_cd``."""
    _check_bound("bs2", loop, bound, BS2_BOUND)
    cache = cache or IsotopeCache(loop)
    n = loop.n
    tri = IsoTriple.diagonal(theta)
    for a in range(n):
        for b in range(n):
            # theta sends the identity ab of Q_ab to the identity cd of Q_cd
            target = theta(loop.mul(a, b))
            for c in range(n):
                d = loop.ldiv(c, target)
                if isotopism_witness(tri, cache[a, b], cache[c, d]) is None:
                    return a, b, c, d
    return None
