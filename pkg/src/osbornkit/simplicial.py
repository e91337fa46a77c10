"""Simplicial complexes of isotopes and topologies of isotopes.

Vertices are isotope labels (``dot``, ``o0`` .. ``s3``) interpreted at one
parameter triple of one base loop. Two labels are different vertices even
when their tables coincide.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .certificate import Certificate
from .errors import BoundExceeded, UnknownVertex
from .isotopy import IsotopeCache, find_isomorphism, is_g_loop
from .loop import Loop
from .osborn import (DEFAULT, LABELS, UO_BOUND, Conventions, Derived, TheoremContext, all_params,
                     parse_label)

Simplex = frozenset


@dataclass
class SimplicialComplex:
    vertices: tuple[str, ...]
    simplexes: frozenset[frozenset[str]]
    loop: Loop | None = None
    p: tuple[int, int, int] | None = None
    conv: Conventions = field(default=DEFAULT)
    name: str = ""

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplexes), default=0) - 1

    def sorted_simplexes(self) -> list[list[str]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        rows = [sorted(s, key=lambda v: order.get(v, len(order))) for s in self.simplexes]
        return sorted(rows, key=lambda r: (len(r), [order.get(v, len(order)) for v in r]))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "simplexes": self.sorted_simplexes(),
                "dimension": self.dimension}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: Mapping, loop: Loop | None = None, p=None) -> "SimplicialComplex":
        return cls(tuple(d["vertices"]), frozenset(frozenset(s) for s in d["simplexes"]),
                   loop=loop, p=None if p is None else tuple(p))


def _from_sets(vertices, sets, loop, p, conv, name) -> SimplicialComplex:
    return SimplicialComplex(tuple(vertices), frozenset(frozenset(s) for s in sets),
                             loop, None if p is None else tuple(p), conv, name)


def build_K(loop: Loop, i: int, p, conv: Conventions = DEFAULT) -> SimplicialComplex:
    """``V_i = {dot, o_i, s_i}`` with the three singletons and ``{o_i, s_i}``."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"index must be 0..3, not {i}")
    o, s = f"o{i}", f"s{i}"
    return _from_sets(("dot", o, s), [{"dot"}, {o}, {s}, {o, s}], loop, p, conv, f"K{i}")


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    first = complexes[0]
    verts: list[str] = []
    sets: set[frozenset[str]] = set()
    for K in complexes:
        if K.loop is not first.loop or K.p != first.p:
            raise ValueError("complexes must share base loop and parameters")
        verts.extend(v for v in K.vertices if v not in verts)
        sets |= K.simplexes
    name = "K" + "".join(K.name[1:] for K in complexes)
    return _from_sets(verts, sets, first.loop, first.p, first.conv, name)


def build_K10(loop: Loop, p, conv: Conventions = DEFAULT) -> SimplicialComplex:
    """Five vertices; all non-empty subsets of ``{o0, o1, s0, s1}`` plus ``{dot}``."""
    four = ("o0", "s0", "o1", "s1")
    sets = [{"dot"}]
    for k in range(1, 5):
        sets.extend(set(c) for c in itertools.combinations(four, k))
    return _from_sets(("dot",) + four, sets, loop, p, conv, "K10")


def build_named(loop: Loop, which: str, p, conv: Conventions = DEFAULT) -> SimplicialComplex:
    which = which.upper()
    if which == "K10":
        return build_K10(loop, p, conv)
    digits = which[1:]
    if not which.startswith("K") or not digits or any(c not in "0123" for c in digits):
        raise ValueError(f"unknown complex {which!r}")
    return union(*(build_K(loop, int(c), p, conv) for c in digits))


class _IsoOracle:
    """Memoized isomorphism existence between principal isotopes."""

    def __init__(self, loop: Loop):
        self.cache = IsotopeCache(loop)
        self._known: dict = {}

    def __call__(self, pa, pb) -> bool:
        if pa == pb:
            return True
        key = (pa, pb) if pa <= pb else (pb, pa)
        if key not in self._known:
            self._known[key] = find_isomorphism(self.cache[key[0]], self.cache[key[1]]) is not None
        return self._known[key]


def validate_complex(K: SimplicialComplex, mode: str = "abstract",
                     oracle: _IsoOracle | None = None) -> Certificate:
    if mode not in ("abstract", "isotopes"):
        raise ValueError("mode must be 'abstract' or 'isotopes'")
    cert = Certificate(f"complex {K.name or ''} ({mode})".replace("  ", " "),
                       (K.loop.name or "loop") if K.loop is not None else "-", K.p)
    verts = set(K.vertices)
    for s in K.simplexes:
        stray = s - verts
        if stray:
            raise UnknownVertex(f"simplex member {sorted(stray)[0]!r} is not a vertex")
    missing = [v for v in K.vertices if frozenset({v}) not in K.simplexes]
    cert.add("every vertex is a simplex", not missing, missing[:1] or None)
    empty = frozenset() in K.simplexes
    cert.add("no empty simplex", not empty)
    hole = None
    for s in sorted(K.simplexes, key=len):
        for k in range(1, len(s)):
            for sub in itertools.combinations(sorted(s), k):
                if frozenset(sub) not in K.simplexes:
                    hole = {"simplex": sorted(s), "missing": list(sub)}
                    break
            if hole:
                break
        if hole:
            break
    cert.add("closed under non-empty subsets", hole is None, hole)
    if mode == "isotopes":
        if K.loop is None or K.p is None:
            raise ValueError("isotopes mode needs a base loop and parameters")
        d = Derived(K.loop, K.p, K.conv)
        pair = {}
        for v in K.vertices:
            try:
                lab = parse_label(v)
            except ValueError:
                raise UnknownVertex(f"vertex {v!r} is not an isotope label") from None
            pr = d.pair(lab)
            pair[v] = (K.loop.e, K.loop.e) if pr is None else pr
        oracle = oracle or _IsoOracle(K.loop)
        bad = None
        for s in sorted(K.simplexes, key=lambda s: (len(s), sorted(s))):
            for a, b in itertools.combinations(sorted(s), 2):
                if not oracle(pair[a], pair[b]):
                    bad = {"simplex": sorted(s), "pair": [a, b]}
                    break
            if bad:
                break
        cert.add("members of each simplex pairwise isomorphic", bad is None, bad)
    cert.data["dimension"] = K.dimension
    cert.data["vertices"] = len(K.vertices)
    cert.data["simplexes"] = len(K.simplexes)
    return cert


K_THEOREMS = ("K0", "K1", "K2", "K3", "K01", "K23", "K0123", "K10")
_IFF = {"K0", "K1", "K01", "K10"}


def theorem_K(loop: Loop, which: str, bound: int | None = None,
              conv: Conventions = DEFAULT) -> Certificate:
    """Validate the named complex at every p and compare with the theorem's condition.

    Equivalences compare all-p validity with universal Osborn (plus Eq. 12
    and Eq. 12b for all p in the K10 case). Implications check only the
    forward direction and record the converse as data.
    """
    which = which.upper()
    if which not in K_THEOREMS:
        raise ValueError(f"unknown complex theorem {which!r}; expected one of {K_THEOREMS}")
    bound = UO_BOUND if bound is None else bound
    if loop.n > bound:
        raise BoundExceeded(f"theorem {which}", loop.n, bound)
    ctx = TheoremContext(loop, conv)
    oracle = _IsoOracle(loop)
    oracle.cache = ctx.cache
    first_bad = None
    for p in all_params(loop.n):
        cert_p = validate_complex(build_named(loop, which, p, conv), "isotopes", oracle)
        if not cert_p.passed:
            first_bad = {"p": list(p), "failure": cert_p.failures()[0].witness}
            break
    valid = first_bad is None
    uo, uo_wit = ctx.universal_osborn()
    condition = uo
    cert = Certificate(f"theorem {which}", loop.name or "loop", params="all")
    cert.note("complex of isotopes for all p", valid, first_bad)
    cert.note("universal Osborn", uo, uo_wit and {"f,g,x,y,z": list(uo_wit)})
    if which == "K10":
        eq12 = eq12b = True
        if uo:
            for p in all_params(loop.n):
                d = ctx.derived(p)
                eq12 = eq12 and ctx.eq12(d)[0]
                eq12b = eq12b and ctx.eq12b(d)[0]
                if not (eq12 or eq12b):
                    break
        else:
            eq12 = eq12b = False
        cert.note("Eq. 12 for all p", eq12)
        cert.note("Eq. 12b for all p", eq12b)
        condition = uo and eq12 and eq12b
    if which in _IFF:
        cert.add("condition  <=>  complex of isotopes", condition == valid,
                 {"condition": condition, "complex": valid})
    else:
        cert.add("universal Osborn  =>  complex of isotopes", (not uo) or valid,
                 {"complex": valid})
        cert.data["converse_holds"] = (not valid) or uo
    cert.data["direction_values"] = [condition, valid]
    return cert


def f_ij(i: int, j: int) -> dict[str, str]:
    return {"dot": "dot", f"o{i}": f"o{j}", f"s{i}": f"s{j}"}


def simplicial_map_check(f: Mapping[str, str], K: SimplicialComplex,
                         K2: SimplicialComplex) -> tuple[bool, list[str] | None]:
    """True iff ``f`` sends every simplex of K onto a simplex of K2; else the first bad simplex."""
    for v in K.vertices:
        if v not in f:
            raise UnknownVertex(f"map is undefined on vertex {v!r}")
        if f[v] not in K2.vertices:
            raise UnknownVertex(f"image {f[v]!r} of {v!r} is not a vertex of the target")
    for s in sorted(K.simplexes, key=lambda s: (len(s), sorted(s))):
        if frozenset(f[v] for v in s) not in K2.simplexes:
            return False, sorted(s)
    return True, None


def check_f_ij(loop: Loop, i: int, j: int, p, conv: Conventions = DEFAULT,
               oracle: _IsoOracle | None = None) -> Certificate:
    """f_ij as a simplicial map between complexes of isotopes at one p."""
    Ki, Kj = build_K(loop, i, p, conv), build_K(loop, j, p, conv)
    cert = Certificate(f"map f_{i}{j}", loop.name or "loop", list(p))
    ok, wit = simplicial_map_check(f_ij(i, j), Ki, Kj)
    cert.add("images of simplexes are simplexes", ok, wit)
    oracle = oracle or _IsoOracle(loop)
    for K in (Ki, Kj):
        sub = validate_complex(K, "isotopes", oracle)
        cert.add(f"{K.name} is a complex of isotopes", sub.passed,
                 sub.failures()[0].witness if not sub.passed else None)
    return cert


# ---------------------------------------------------------------- topology

def is_topology(V: Iterable, S: Iterable[Iterable]) -> bool:
    V = frozenset(V)
    fam = {frozenset(s) for s in S}
    if frozenset() not in fam or V not in fam:
        return False
    if any(not s <= V for s in fam):
        return False
    items = list(fam)
    for a, b in itertools.combinations(items, 2):
        if a | b not in fam or a & b not in fam:
            return False
    return True


def power_set(V: Iterable) -> list[frozenset]:
    V = list(V)
    return [frozenset(c) for k in range(len(V) + 1) for c in itertools.combinations(V, k)]


def isomorphism_family(loop: Loop, p, labels: Iterable[str] = LABELS,
                       conv: Conventions = DEFAULT) -> list[frozenset]:
    """Every subset of ``labels`` whose isotopes are pairwise isomorphic, with the empty set."""
    d = Derived(loop, p, conv)
    labels = [parse_label(x) for x in labels]
    pair = {lab: d.pair(lab) or (loop.e, loop.e) for lab in labels}
    oracle = _IsoOracle(loop)
    return [s for s in power_set(labels)
            if all(oracle(pair[a], pair[b]) for a, b in itertools.combinations(sorted(s), 2))]


def topology_lemmas(loop: Loop, p, labels: Iterable[str] = LABELS, bound: int | None = None,
                    conv: Conventions = DEFAULT) -> Certificate:
    labels = [parse_label(x) for x in labels]
    cert = Certificate("topology of isotopes", loop.name or "loop", list(p))
    cert.add("power set is a topology", is_topology(labels, power_set(labels)))
    g_loop, wit = is_g_loop(loop, bound=bound)
    fam = isomorphism_family(loop, p, labels, conv)
    top = is_topology(labels, fam)
    cert.note("G-loop", g_loop, wit and {"a,b": list(wit)})
    cert.note("isomorphism-respecting family is a topology", top)
    cert.add("G-loop  =>  isomorphism-respecting family is a topology", (not g_loop) or top)
    cert.data["family_size"] = len(fam)
    return cert
