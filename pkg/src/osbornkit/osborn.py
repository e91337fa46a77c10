"""Osborn identities, the parameterized principal isotopes and the maps between them.

For a parameter triple ``p = (x, u, v)`` write ``w = u\\(xv)``. The isotope
labels resolve to principal pairs::

    s0 = (x, v)      o0 = (u, phi0)   o1 = (u, w)     s1 = (phi1, v)
    o2 = (x, phi2)   o3 = (c3, w)     s2 = (u, e)     s3 = (e, v)

with ``phi0 = u\\([(uv)/w] v)``, ``phi2 = u\\[(u/v) w]`` and
``c3 = [x (u\\v)]/v``. ``phi1`` defaults to ``(uv)/w``; the alternative
``Conventions(phi1="printed")`` reuses the phi0 formula.

Blackboard translations are inverse translations: ``RR_a = R_a^-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .certificate import Certificate, merge
from .errors import BoundExceeded, Gamma23Mismatch, HypothesisFailed
from .identity import builtin_identity, check_identity
from .isotopy import (IsoTriple, IsotopeCache, bs2_contains, eq10m_triple, find_isomorphism,
                      is_autotopism, isotopism_witness, iter_autotopisms)
from .loop import Loop
from .perm import Perm, commutator
from .words import IDENTITY_WORD, L, Linv, R, Rinv, TranslationWord, WordTriple

UO_BOUND = 12


class ParamTriple(NamedTuple):
    x: int
    u: int
    v: int


@dataclass(frozen=True)
class Conventions:
    gamma1: str = "swapped"     # or "printed" (same word as gamma0)
    phi1: str = "corrected"     # or "printed" (same formula as phi0)

    def __post_init__(self):
        if self.gamma1 not in ("swapped", "printed"):
            raise ValueError(f"gamma1 must be 'swapped' or 'printed', not {self.gamma1!r}")
        if self.phi1 not in ("corrected", "printed"):
            raise ValueError(f"phi1 must be 'corrected' or 'printed', not {self.phi1!r}")


DEFAULT = Conventions()

LABELS = ("dot", "o0", "o1", "o2", "o3", "s0", "s1", "s2", "s3")
DISPLAY = {"dot": "·", "o0": "∘_0", "o1": "∘_1", "o2": "∘_2", "o3": "∘_3",
           "s0": "∗_0", "s1": "∗_1", "s2": "∗_2", "s3": "∗_3"}
_ALIASES = {v: k for k, v in DISPLAY.items()}
_ALIASES.update({"·": "dot", ".": "dot", "∘0": "o0", "∘1": "o1", "∘2": "o2", "∘3": "o3",
                 "∗0": "s0", "∗1": "s1", "∗2": "s2", "∗3": "s3",
                 "*0": "s0", "*1": "s1", "*2": "s2", "*3": "s3",
                 "*_0": "s0", "*_1": "s1", "*_2": "s2", "*_3": "s3"})


def parse_label(text: str) -> str:
    t = text.strip()
    if t in LABELS:
        return t
    if t in _ALIASES:
        return _ALIASES[t]
    raise ValueError(f"unknown isotope label {text!r}; expected one of {LABELS}")


def all_params(n: int) -> Iterator[ParamTriple]:
    for x, u, v in itertools.product(range(n), repeat=3):
        yield ParamTriple(x, u, v)


class Derived:
    """Elements derived from one parameter triple."""

    def __init__(self, loop: Loop, p, conv: Conventions = DEFAULT):
        x, u, v = p
        m, ld, rd = loop.mul, loop.ldiv, loop.rdiv
        self.loop = loop
        self.p = ParamTriple(x, u, v)
        self.conv = conv
        self.x, self.u, self.v = x, u, v
        self.e = loop.e
        self.xv = m(x, v)
        self.uv = m(u, v)
        self.w = ld(u, self.xv)
        self.udv = ld(u, v)
        self.phi0 = ld(u, m(rd(self.uv, self.w), v))
        self.phi1 = self.phi0 if conv.phi1 == "printed" else rd(self.uv, self.w)
        self.phi2 = ld(u, m(rd(u, v), self.w))
        self.c3 = rd(m(x, self.udv), v)

    def pair(self, label: str) -> tuple[int, int] | None:
        return {
            "dot": None,
            "s0": (self.x, self.v), "o0": (self.u, self.phi0),
            "o1": (self.u, self.w), "s1": (self.phi1, self.v),
            "o2": (self.x, self.phi2), "o3": (self.c3, self.w),
            "s2": (self.u, self.e), "s3": (self.e, self.v),
        }[label]

    def apex_word(self, label: str) -> WordTriple:
        """The principal isotopism from the base loop onto ``label``, as printed."""
        x, u, v, w = self.x, self.u, self.v, self.w
        words = {
            "s0": (R("v", v), L("x", x)),
            "o0": (R("phi0", self.phi0), L("u", u)),
            "o1": (R("u\\(xv)", w), L("u", u)),
            "s1": (R("v", v), L("phi1", self.phi1)),
            "o2": (R("phi2", self.phi2), L("x", x)),
            "o3": (R("u\\(xv)", w), L("[x(u\\v)]/v", self.c3)),
            "s2": (IDENTITY_WORD, L("u", u)),
            "s3": (R("v", v), IDENTITY_WORD),
        }
        a, b = words[label]
        return WordTriple(a, b, IDENTITY_WORD, name=f"dot->{label}")

    def word(self, which: str) -> TranslationWord:
        x, u, v, w = self.x, self.u, self.v, self.w
        A = Rinv("v", v) + R("u\\(xv)", w)
        B = Linv("u", u) + L("x", x)
        if which == "gamma0":
            return _named(A + B, "gamma0")
        if which == "gamma1":
            return _named(B + A if self.conv.gamma1 == "swapped" else A + B, "gamma1")
        if which in ("gamma01o", "psi0"):
            return _named(Rinv("phi0", self.phi0) + R("u\\(xv)", w), which)
        if which in ("gamma01s", "psi1"):
            return _named(Linv("x", x) + L("phi1", self.phi1), which)
        if which == "gamma23o":
            return _named(Rinv("phi2", self.phi2) + R("u\\v", self.udv) + Rinv("v", v)
                          + R("u\\(xv)", w), "gamma23o")
        if which == "gamma23o_left":
            return _named(Linv("x", x) + L("u", u) + Linv("u\\v", self.udv)
                          + L("[x(u\\v)]/v", self.c3), "gamma23o_left")
        if which == "lambda13":
            return _named(R("u\\v", self.udv) + Rinv("v", v), "lambda13")
        if which == "mu13":
            return _named(L("u", u) + Linv("u\\v", self.udv), "mu13")
        if which == "commutator_B":
            return _named(B, "LL_u L_x")
        if which == "commutator_A":
            return _named(A, "RR_v R_w")
        raise ValueError(f"unknown map {which!r}")

    def perm(self, which: str) -> Perm:
        return self.word(which).evaluate(self.loop)


def _named(word: TranslationWord, name: str) -> TranslationWord:
    return TranslationWord(word.letters, name)


GAMMAS = ("gamma0", "gamma1", "gamma01o", "gamma01s", "gamma23o", "psi0", "psi1",
          "lambda13", "mu13")
_GAMMA_ALIASES = {"γ0": "gamma0", "γ1": "gamma1", "γ01∘": "gamma01o", "γ01∗": "gamma01s",
                  "γ23∘": "gamma23o", "ψ0": "psi0", "ψ1": "psi1", "λ13": "lambda13",
                  "μ13": "mu13"}


def phi(loop: Loop, i: int, p, conv: Conventions = DEFAULT) -> int:
    d = Derived(loop, p, conv)
    return {0: d.phi0, 1: d.phi1, 2: d.phi2}[i]


def build_isotope(loop: Loop, label: str, p, conv: Conventions = DEFAULT,
                  cache: IsotopeCache | None = None) -> Loop:
    pair = Derived(loop, p, conv).pair(parse_label(label))
    if pair is None:
        return loop
    return (cache or IsotopeCache(loop))[pair]


def gamma_word(loop: Loop, which: str, p, conv: Conventions = DEFAULT) -> TranslationWord:
    return Derived(loop, p, conv).word(_GAMMA_ALIASES.get(which, which))


def gamma(loop: Loop, which: str, p, conv: Conventions = DEFAULT) -> Perm:
    """Evaluate one of the named translation words at ``p``.

    ``gamma23o`` also evaluates its left-translation form and raises
    :class:`Gamma23Mismatch` when the two permutations differ.
    """
    which = _GAMMA_ALIASES.get(which, which)
    if which not in GAMMAS:
        raise ValueError(f"unknown map {which!r}; expected one of {GAMMAS}")
    d = Derived(loop, p, conv)
    out = d.perm(which)
    if which == "gamma23o":
        bad = out.first_difference(d.perm("gamma23o_left"))
        if bad is not None:
            raise Gamma23Mismatch(tuple(d.p), bad)
    return out


# ---------------------------------------------------------------- diagrams

DIAGRAMS = ("7", "8", "7m", "8m", "9", "17")


def _iso_witness(theta: Perm, G: Loop, H: Loop):
    return isotopism_witness(IsoTriple.diagonal(theta), G, H)


def verify_diagram(loop: Loop, which: str, p, conv: Conventions = DEFAULT,
                   cache: IsotopeCache | None = None) -> Certificate:
    """Check every labeled arrow of one diagram at one parameter triple.

    Isotopism arrows are checked as triples, isomorphism arrows as
    ``(g, g, g)``. In the combined diagrams the base-to-base arrows are the
    isotopisms that make the triangles commute; whether the printed gamma
    maps are isomorphisms there is recorded as non-gating clauses.
    """
    which = str(which)
    if which not in DIAGRAMS:
        raise ValueError(f"unknown diagram {which!r}; expected one of {DIAGRAMS}")
    cache = cache or IsotopeCache(loop)
    d = Derived(loop, p, conv)
    cert = Certificate(f"diagram {which}", loop.name or "loop", list(d.p))

    def Q(label):
        return loop if label == "dot" else cache[d.pair(label)]

    def apex(label):
        tri = d.apex_word(label).evaluate(loop)
        cert.add(f"{d.apex_word(label)} : dot->{label}", *_ok(isotopism_witness(tri, loop, Q(label))))

    def iso(name, src, dst, gating=True):
        wit = _iso_witness(d.perm(name), Q(src), Q(dst))
        cert.add(f"({name},{name},{name}) iso : {src}->{dst}", wit is None, wit, gating)
        return wit is None

    def isotopism(name, tri, src, dst):
        wit = isotopism_witness(tri, Q(src), Q(dst))
        cert.add(f"{name} : {src}->{dst}", wit is None, wit)

    I = Perm.identity(loop.n)
    if which == "7":
        apex("o0"), apex("s0")
        iso("gamma0", "o0", "s0")
    elif which == "8":
        apex("s1"), apex("o1")
        iso("gamma1", "s1", "o1")
    elif which == "7m":
        apex("s2"), apex("o2")
        iso("gamma0", "s2", "o2")
    elif which == "8m":
        apex("s3"), apex("o3")
        iso("gamma1", "s3", "o3")
    elif which == "9":
        for lab in ("o1", "o0", "s0", "s1"):
            apex(lab)
        iso("gamma0", "o0", "s0")
        iso("gamma1", "s1", "o1")
        g01o, g01s = d.perm("gamma01o"), d.perm("gamma01s")
        isotopism("(gamma01o,I,I)", IsoTriple(g01o, I, I), "o0", "o1")
        isotopism("(I,gamma01s,I)", IsoTriple(I, g01s, I), "s0", "s1")
        closed = d.perm("gamma0") * g01s * d.perm("gamma1")
        cert.add("gamma0.gamma01s.gamma1 = gamma01o", closed == g01o, closed.first_difference(g01o))
        iso("gamma01o", "o0", "o1", gating=False)
        iso("gamma01s", "s0", "s1", gating=False)
    elif which == "17":
        for lab in ("o3", "o2", "s2", "s3"):
            apex(lab)
        iso("gamma0", "s2", "o2")
        iso("gamma1", "s3", "o3")
        # commuting isotopisms between the base isotopes
        t_o = IsoTriple(loop.R_inv(d.phi2) * loop.R(d.w), loop.L_inv(d.x) * loop.L(d.c3), I)
        t_s = IsoTriple(loop.R(d.v), loop.L_inv(d.u), I)
        isotopism("(RR_phi2 R_w, LL_x L_c3, I)", t_o, "o2", "o3")
        isotopism("(R_v, LL_u, I)", t_s, "s2", "s3")
        g23 = d.perm("gamma23o")
        iso("gamma23o", "o2", "o3", gating=False)
        bad = g23.first_difference(d.perm("gamma23o_left"))
        cert.note("gamma23o right form = left form", bad is None, bad)
        g23s = d.perm("gamma0") * g23 * d.perm("gamma1").inverse()
        wit = _iso_witness(g23s, Q("s2"), Q("s3"))
        cert.note("gamma23s := gamma0.gamma23o.gamma1^-1 iso : s2->s3", wit is None, wit)
    return cert


def _ok(witness):
    return witness is None, witness


def verify_diagram_all(loop: Loop, which: str, conv: Conventions = DEFAULT,
                       cache: IsotopeCache | None = None) -> Certificate:
    cache = cache or IsotopeCache(loop)
    per_p = [(p, verify_diagram(loop, which, p, conv, cache)) for p in all_params(loop.n)]
    return merge(f"diagram {which}", loop.name or "loop", per_p)


# ---------------------------------------------------------------- Osborn

def is_osborn(loop: Loop) -> tuple[bool, dict | None]:
    """Both OS3 and OS5. The witness names the first failing identity."""
    os3 = check_identity(loop, builtin_identity("OS3"))
    os5 = check_identity(loop, builtin_identity("OS5"))
    if os3 is None and os5 is None:
        return True, None
    name, ce = ("OS3", os3) if os3 is not None else ("OS5", os5)
    return False, {"identity": name, "assignment": ce.values(), "lhs": ce.lhs, "rhs": ce.rhs,
                   "os3": os3 is None, "os5": os5 is None}


def osborn_certificate(loop: Loop) -> Certificate:
    cert = Certificate("osborn", loop.name or "loop")
    os3 = check_identity(loop, builtin_identity("OS3"))
    os5 = check_identity(loop, builtin_identity("OS5"))
    cert.add("OS3", os3 is None, os3 and {"xyz": os3.values(), "lhs": os3.lhs, "rhs": os3.rhs})
    cert.add("OS5", os5 is None, os5 and {"xyz": os5.values(), "lhs": os5.lhs, "rhs": os5.rhs})
    cert.note("OS3 and OS5 agree", (os3 is None) == (os5 is None))
    return cert


def _check_bound(what, loop, bound, default):
    bound = default if bound is None else bound
    if loop.n > bound:
        raise BoundExceeded(what, loop.n, bound)


def is_universal_osborn(loop: Loop, bound: int | None = None,
                        cache: IsotopeCache | None = None) -> tuple[bool, tuple | None]:
    """OS3 on every principal isotope; witness ``(f, g, x, y, z)``."""
    _check_bound("is_universal_osborn", loop, bound, UO_BOUND)
    cache = cache or IsotopeCache(loop)
    os3 = builtin_identity("OS3")
    for f in range(loop.n):
        for g in range(loop.n):
            ce = check_identity(cache[f, g], os3)
            if ce is not None:
                return False, (f, g, *ce.values())
    return True, None


# ---------------------------------------------------------------- theorems

THEOREMS = ("2post1.10", "2post1.11", "2post1.11b", "2post1.12", "2post1.13", "2post1.14",
            "2post1.15", "2post1.16", "2post1.17", "2post1.17b", "2post1.17c", "2post1.18",
            "2post1.19", "2post1.20", "2post1.21", "remark.commutator")

_NO_HYPOTHESIS = {"2post1.17c", "2post1.21"}


class TheoremContext:
    """Shared state for theorem checks on one loop: isotope tables, shaped
    autotopism lists, isomorphism-existence and BS2 caches."""

    def __init__(self, loop: Loop, conv: Conventions = DEFAULT, bs2_bound: int | None = None):
        self.loop = loop
        self.conv = conv
        self.cache = IsotopeCache(loop)
        # the hinted BS2 lookups keep theorem checks cheap, so no order cap by default
        self.bs2_bound = loop.n if bs2_bound is None else bs2_bound
        self._iso: dict = {}
        self._bs2: dict = {}
        self._uo = None

    @property
    def n(self):
        return self.loop.n

    def params(self):
        return all_params(self.n)

    def derived(self, p) -> Derived:
        return Derived(self.loop, p, self.conv)

    def universal_osborn(self):
        if self._uo is None:
            self._uo = is_universal_osborn(self.loop, bound=max(UO_BOUND, self.n), cache=self.cache)
        return self._uo

    @cached_property
    def aut_I_beta_gamma(self) -> list[IsoTriple]:
        return list(iter_autotopisms(self.loop, first=Perm.identity(self.n)))

    @cached_property
    def aut_delta_I_pi(self) -> list[IsoTriple]:
        return list(iter_autotopisms(self.loop, second=Perm.identity(self.n)))

    def isomorphism(self, pair1, pair2) -> Perm | None:
        key = (tuple(pair1), tuple(pair2))
        if key not in self._iso:
            self._iso[key] = find_isomorphism(self.cache[pair1], self.cache[pair2])
        return self._iso[key]

    def is_iso_map(self, theta: Perm, pair1, pair2) -> bool:
        return _iso_witness(theta, self.cache[pair1], self.cache[pair2]) is None

    def in_bs2(self, theta: Perm, hints=()) -> tuple | None:
        if theta not in self._bs2:
            found = None
            for a, b, c, d in hints:
                if self.is_iso_map(theta, (a, b), (c, d)):
                    found = (a, b, c, d)
                    break
            if found is None:
                found = bs2_contains(self.loop, theta, bound=self.bs2_bound, cache=self.cache)
            self._bs2[theta] = found
        return self._bs2[theta]

    # Eq. (11): (I, be, ga) against p
    def eq11(self, d: Derived, tri: IsoTriple) -> bool:
        t, ld, rd = self.loop.table, self.loop.ldiv_table, self.loop.rdiv_table
        binv, ginv = tri.b.inverse(), tri.c.inverse()
        t1 = rd[t[d.u, binv(d.w)], d.v]
        t2 = rd[ginv(d.xv), d.v]
        return t[t1, d.w] == d.uv and t[t2, d.w] == d.uv

    def eq11b(self, d: Derived, tri: IsoTriple) -> bool:
        t, ld = self.loop.table, self.loop.ldiv_table
        a = t[d.x, ld[d.u, t[tri.a(d.x), d.v]]]
        b = t[d.x, ld[d.u, tri.c(d.xv)]]
        return a == d.uv and b == d.uv

    def eq12(self, d: Derived) -> tuple[bool, object]:
        t, ld, rd = self.loop.table, self.loop.ldiv_table, self.loop.rdiv_table
        psi = d.perm("psi0").array
        inv = d.perm("psi0").inverse()
        lhs = t[np.arange(self.n)[:, None], ld[d.u, psi[t[d.u, :]]][None, :]]
        rhs = psi[t]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return False, {"y,z": bad[0].tolist()}
        if t[rd[inv(d.xv), d.v], d.w] != d.uv:
            return False, {"uv": d.uv}
        return True, None

    def eq12b(self, d: Derived) -> tuple[bool, object]:
        t, ld, rd = self.loop.table, self.loop.ldiv_table, self.loop.rdiv_table
        psi = d.perm("psi1").array
        lhs = t[rd[psi[t[:, d.v]], d.v][:, None], np.arange(self.n)[None, :]]
        rhs = psi[t]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return False, {"y,z": bad[0].tolist()}
        if t[d.x, ld[d.u, psi[d.xv]]] != d.uv:
            return False, {"uv": d.uv}
        return True, None

    def eq13(self, d: Derived, lam: Perm, mu: Perm, nu: Perm) -> bool:
        t = self.loop.table
        return nu(t[d.x, mu.inverse()(d.w)]) == t[lam(d.x), d.w]

    def rhs19(self, d: Derived) -> tuple[bool, object]:
        loop = self.loop
        g23 = d.perm("gamma23o")
        lam = loop.R(d.phi2) * g23 * loop.R_inv(d.w)
        mu = loop.L(d.x) * g23 * loop.L_inv(d.c3)
        if not is_autotopism(IsoTriple(lam, mu, g23), loop):
            return False, "(lambda, mu, gamma23o) not an autotopism"
        bad = g23.first_difference(d.perm("gamma23o_left"))
        if bad is not None:
            return False, {"gamma23 forms differ at": bad}
        if not self.eq13(d, lam, mu, g23):
            return False, "Eq. 13 relation fails"
        return True, None

    def hints(self, d: Derived):
        P = d.pair
        return [(*P("o0"), *P("s0")), (*P("o0"), *P("o1")), (*P("s1"), *P("o1")),
                (*P("s0"), *P("s1")), (*P("o2"), *P("o3")), (*P("s2"), *P("o2")),
                (*P("s3"), *P("o3"))]


def check_theorem(loop: Loop, name: str, conv: Conventions = DEFAULT,
                  ctx: TheoremContext | None = None, bs2_bound: int | None = None) -> Certificate:
    """Evaluate one theorem over all parameter triples and certify the outcome.

    A gating clause fails exactly when the theorem's stated equivalence or
    implication is violated somewhere; the truth values of the individual
    statements are recorded as non-gating clauses.
    """
    if name not in THEOREMS:
        raise ValueError(f"unknown theorem {name!r}; expected one of {THEOREMS}")
    ctx = ctx or TheoremContext(loop, conv, bs2_bound)
    if name not in _NO_HYPOTHESIS:
        uo, wit = ctx.universal_osborn()
        if not uo:
            raise HypothesisFailed(f"{loop.name or 'loop'} is not universal Osborn", wit)
    cert = Certificate(f"theorem {name}", loop.name or "loop", params="all")
    _THEOREM_IMPL[name](ctx, cert)
    return cert


def _equivalence_over_p(cert, label, rows):
    """rows: iterable of (p, lhs, rhs); gating clause that lhs == rhs at every p."""
    first = None
    counts = {"lhs_true": 0, "rhs_true": 0, "p": 0}
    for p, lhs, rhs in rows:
        counts["p"] += 1
        counts["lhs_true"] += bool(lhs)
        counts["rhs_true"] += bool(rhs)
        if bool(lhs) != bool(rhs) and first is None:
            first = {"p": list(p), "lhs": bool(lhs), "rhs": bool(rhs)}
    cert.add(label, first is None, first)
    cert.data.update(counts)


def _implication_over_p(cert, label, rows):
    first = None
    n_hyp = 0
    for p, hyp, concl in rows:
        if hyp:
            n_hyp += 1
            if not concl and first is None:
                first = {"p": list(p)}
    cert.add(label, first is None, first)
    cert.data["hypothesis_true"] = n_hyp


def _t_10(ctx: TheoremContext, cert: Certificate):
    loop = ctx.loop
    c1 = c2 = None
    for p in ctx.params():
        d = ctx.derived(p)
        if c1 is None and ctx.cache[d.pair("o0")] != ctx.cache[d.pair("o1")]:
            c1 = list(p)
        if c2 is None and ctx.cache[d.pair("s0")] != ctx.cache[d.pair("s1")]:
            c2 = list(p)
        if c1 is not None and c2 is not None:
            break
    from .identity import classify

    boolean = "boolean_group" in classify(loop)
    s1, s2 = c1 is None, c2 is None
    cert.note("o0 =I= o1 for all p", s1, c1 and {"p": c1})
    cert.note("s0 =I= s1 for all p", s2, c2 and {"p": c2})
    cert.note("boolean group", boolean)
    cert.add("clauses agree", s1 == s2 == boolean, {"values": [s1, s2, boolean]})


def _rows_11(ctx):
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.isomorphism(d.pair("o0"), d.pair("o1")) is not None
        rhs = any(ctx.eq11(d, t) for t in ctx.aut_I_beta_gamma)
        yield p, lhs, rhs


def _rows_11b(ctx):
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.isomorphism(d.pair("s0"), d.pair("s1")) is not None
        rhs = any(ctx.eq11b(d, t) for t in ctx.aut_delta_I_pi)
        yield p, lhs, rhs


def _t_11(ctx, cert):
    _equivalence_over_p(cert, "o0 ~ o1  <=>  exists (I,beta,gamma) in AUT with Eq. 11", _rows_11(ctx))
    # Eq. 10.m bridge on every found isomorphism
    loop = ctx.loop
    bad = None
    first_is_I_mismatch = None
    for p in ctx.params():
        d = ctx.derived(p)
        theta = ctx.isomorphism(d.pair("o0"), d.pair("o1"))
        if theta is None:
            continue
        tri = eq10m_triple(loop, d.pair("o0"), d.pair("o1"), theta)
        if bad is None and not is_autotopism(tri, loop):
            bad = {"p": list(p), "theta": theta}
        if first_is_I_mismatch is None and tri.a.is_identity() != (theta == d.perm("gamma01o")):
            first_is_I_mismatch = {"p": list(p)}
    cert.add("Eq. 10.m triple of each found isomorphism is an autotopism", bad is None, bad)
    cert.add("Eq. 10.m first component is I iff theta = gamma01o", first_is_I_mismatch is None,
             first_is_I_mismatch)


def _t_11b(ctx, cert):
    _equivalence_over_p(cert, "s0 ~ s1  <=>  exists (delta,I,pi) in AUT with Eq. 11b", _rows_11b(ctx))


def _abelian_group(loop):
    return loop.is_associative and loop.is_commutative


def _t_12(ctx, cert):
    _corollary_items(ctx, cert, "o0", "o1", ctx.aut_I_beta_gamma, ctx.eq11,
                     side=lambda d: ctx.loop.L(d.u), moving=lambda t: t.b, image=lambda t: t.c,
                     names=("beta", "gamma", "L_u", "LL_u beta L_u"), element=lambda d: d.u,
                     shape="(I,beta,gamma)", regular=lambda b, n: IsoTriple(Perm.identity(n), b, b),
                     regular_name="rho-regular")


def _t_13(ctx, cert):
    _corollary_items(ctx, cert, "s0", "s1", ctx.aut_delta_I_pi, ctx.eq11b,
                     side=lambda d: ctx.loop.R(d.v), moving=lambda t: t.a, image=lambda t: t.c,
                     names=("delta", "pi", "R_v", "RR_v delta R_v"), element=lambda d: d.v,
                     shape="(delta,I,pi)", regular=lambda b, n: IsoTriple(b, Perm.identity(n), b),
                     regular_name="lambda-regular")


def _corollary_items(ctx, cert, src, dst, shaped, relation, side, moving, image, names, element,
                     shape, regular, regular_name):
    """Shared checker for the two corollaries on shaped autotopisms.

    For every p with ``src ~ dst``: some Eq.-satisfying shaped autotopism has
    ``image = T^-1 moving T`` (T the translation named in ``names[2]``); on those
    triples ``image = moving`` iff the commutator vanishes, and
    ``image = T`` iff ``moving = T``. ``moving = T`` with a non-identity T is
    claimed to force an abelian group.
    """
    loop, n = ctx.loop, ctx.n
    mv, im, tname, rel = names
    rows = []
    item1 = item2 = trans_hit = None
    movers = set()
    for p in ctx.params():
        d = ctx.derived(p)
        if ctx.isomorphism(d.pair(src), d.pair(dst)) is None:
            continue
        T = side(d)
        good = [t for t in shaped if relation(d, t) and image(t) == T.inverse() * moving(t) * T]
        rows.append((p, True, bool(good)))
        for t in good:
            movers.add(moving(t))
            comm = commutator(moving(t), T).is_identity()
            if item1 is None and (image(t) == moving(t)) != comm:
                item1 = {"p": list(p), mv: moving(t)}
            if item2 is None and (image(t) == T) != (moving(t) == T):
                item2 = {"p": list(p), mv: moving(t)}
            if trans_hit is None and moving(t) == T and element(d) != loop.e:
                trans_hit = list(p)
    _implication_over_p(cert, f"{src} ~ {dst}  =>  exists {shape} with Eq. and {im} = {rel}", rows)
    cert.add(f"item 1: {im} = {mv}  <=>  [{mv}, {tname}] = I", item1 is None, item1)
    bad = None
    for b in sorted(movers, key=lambda q: q.image):
        if all(commutator(b, T).is_identity() for T in _translations(loop, tname)):
            if not is_autotopism(regular(b, n), loop):
                bad = {mv: b}
                break
    cert.add(f"[{mv}, {tname}] = I for all  =>  {mv} {regular_name}", bad is None, bad)
    cert.add(f"item 2: {im} = {tname}  <=>  {mv} = {tname}", item2 is None, item2)
    if trans_hit is not None:
        cert.add(f"{mv} = {tname} (non-identity)  =>  abelian group", _abelian_group(loop),
                 {"p": trans_hit})
    else:
        cert.note(f"{mv} = {tname} with a non-identity translation never occurs", True)


def _translations(loop, tname):
    side = loop.L if tname.startswith("L") else loop.R
    return [side(a) for a in range(loop.n)]


def _t_14(ctx, cert):
    rows = []
    for (p, l1, r1), (_, l2, r2) in zip(_rows_11(ctx), _rows_11b(ctx)):
        rows.append((p, l1 and l2, r1 and r2))
    _equivalence_over_p(cert, "o0 ~ o1 and s0 ~ s1  <=>  Eq. 10", rows)


def _t_15(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        g01o, g01s = d.perm("gamma01o"), d.perm("gamma01s")
        hyp = ctx.is_iso_map(g01o, d.pair("o0"), d.pair("o1")) and \
            ctx.is_iso_map(g01s, d.pair("s0"), d.pair("s1"))
        concl = d.perm("gamma0") * g01s * d.perm("gamma1") == g01o
        rows.append((p, hyp, concl))
    _implication_over_p(cert, "gamma01 arrows are isomorphisms  =>  gamma0.gamma01s.gamma1 = gamma01o",
                        rows)
    # the permutation identity itself, independent of the hypothesis
    first = next((list(p) for p, _, c in rows if not c), None)
    cert.note("gamma0.gamma01s.gamma1 = gamma01o at every p", first is None, first and {"p": first})


def _t_16(ctx, cert):
    loop = ctx.loop
    items = {k: True for k in ("beta = I", "gamma = I", "delta = I", "pi = I",
                               "o0 =I= o1", "s0 =I= s1")}
    domain = 0
    for p in ctx.params():
        d = ctx.derived(p)
        if ctx.isomorphism(d.pair("o0"), d.pair("o1")) is None or \
                ctx.isomorphism(d.pair("s0"), d.pair("s1")) is None:
            continue
        domain += 1
        psi0, psi1 = d.perm("psi0"), d.perm("psi1")
        beta = loop.L(d.u) * psi0 * loop.L_inv(d.u)
        delta = loop.R(d.v) * psi1 * loop.R_inv(d.v)
        items["beta = I"] &= beta.is_identity()
        items["gamma = I"] &= psi0.is_identity()
        items["delta = I"] &= delta.is_identity()
        items["pi = I"] &= psi1.is_identity()
        items["o0 =I= o1"] &= ctx.cache[d.pair("o0")] == ctx.cache[d.pair("o1")]
        items["s0 =I= s1"] &= ctx.cache[d.pair("s0")] == ctx.cache[d.pair("s1")]
    from .identity import classify

    items["boolean group"] = "boolean_group" in classify(loop)
    for k, val in items.items():
        cert.note(k, val)
    vals = list(items.values())
    cert.add("all seven statements agree", all(vals) or not any(vals), {"values": vals})
    cert.data["domain"] = domain


def _t_17(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.is_iso_map(d.perm("gamma01o"), d.pair("o0"), d.pair("o1"))
        rows.append((p, lhs, ctx.eq12(d)[0]))
    _equivalence_over_p(cert, "o0 ~(gamma01o) o1  <=>  Eq. 12", rows)


def _t_17b(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.is_iso_map(d.perm("gamma01s"), d.pair("s0"), d.pair("s1"))
        rows.append((p, lhs, ctx.eq12b(d)[0]))
    _equivalence_over_p(cert, "s0 ~(gamma01s) s1  <=>  Eq. 12b", rows)


def _t_17c(ctx, cert):
    uo = ctx.universal_osborn()[0]
    eq12 = eq12b = True
    bs_a = bs_b = True
    for p in ctx.params():
        d = ctx.derived(p)
        h = ctx.hints(d)
        eq12 = eq12 and ctx.eq12(d)[0]
        eq12b = eq12b and ctx.eq12b(d)[0]
        if bs_a:
            bs_a = ctx.in_bs2(d.perm("gamma0"), h) is not None and \
                ctx.in_bs2(d.perm("gamma01o"), h) is not None
        if bs_b:
            bs_b = ctx.in_bs2(d.perm("gamma1"), h) is not None and \
                ctx.in_bs2(d.perm("gamma01s"), h) is not None
    cert.note("universal Osborn", uo)
    cert.note("Eq. 12 for all p", eq12)
    cert.note("Eq. 12b for all p", eq12b)
    cert.note("gamma0, gamma01o in BS2 for all p", bs_a)
    cert.note("gamma1, gamma01s in BS2 for all p", bs_b)
    cert.add("item 1: UO and Eq. 12  <=>  gamma0, gamma01o in BS2", (uo and eq12) == bs_a)
    cert.add("item 2: UO and Eq. 12b  <=>  gamma1, gamma01s in BS2", (uo and eq12b) == bs_b)


def _t_18(ctx, cert):
    loop = ctx.loop
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.isomorphism(d.pair("o2"), d.pair("o3")) is not None
        lam, mu = d.perm("lambda13"), d.perm("mu13")
        tri = next(iter_autotopisms(loop, first=lam, second=mu), None)
        rhs = tri is not None and ctx.eq13(d, lam, mu, tri.c)
        rows.append((p, lhs, rhs))
    _equivalence_over_p(cert, "o2 ~ o3  <=>  exists (lambda,mu,nu) in AUT with Eq. 13", rows)


def _t_19(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.is_iso_map(d.perm("gamma23o"), d.pair("o2"), d.pair("o3"))
        rows.append((p, lhs, ctx.rhs19(d)[0]))
    _equivalence_over_p(cert, "o2 ~(gamma23o) o3  <=>  Eq. 14", rows)
    mism = next((list(p) for p in ctx.params()
                 if ctx.derived(p).perm("gamma23o") != ctx.derived(p).perm("gamma23o_left")), None)
    cert.note("Eq. 14 right and left forms agree at every p", mism is None, mism and {"p": mism})


def _t_20(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = ctx.in_bs2(d.perm("gamma23o"), ctx.hints(d)) is not None
        rows.append((p, lhs, ctx.rhs19(d)[0]))
    _equivalence_over_p(cert, "gamma23o in BS2  <=>  Eq. 15", rows)


def _t_21(ctx, cert):
    uo = ctx.universal_osborn()[0]
    cert.note("universal Osborn", uo)
    rows = []
    if uo:
        for p in ctx.params():
            d = ctx.derived(p)
            h = ctx.hints(d)
            hyp = ctx.in_bs2(d.perm("gamma23o"), h) is not None
            concl = hyp and ctx.in_bs2(d.perm("gamma0"), h) is not None and ctx.rhs19(d)[0]
            rows.append((p, hyp, concl))
    _implication_over_p(cert, "UO and gamma23o in BS2  =>  gamma0 in BS2 and Eq. 16", rows)


def _t_commutator(ctx, cert):
    rows = []
    for p in ctx.params():
        d = ctx.derived(p)
        lhs = d.perm("gamma0") == d.perm("gamma1")
        rhs = commutator(d.perm("commutator_B"), d.perm("commutator_A")).is_identity()
        rows.append((p, lhs, rhs))
    _equivalence_over_p(cert, "gamma0 = gamma1  <=>  [LL_u L_x, RR_v R_w] = I", rows)


_THEOREM_IMPL = {
    "2post1.10": _t_10, "2post1.11": _t_11, "2post1.11b": _t_11b, "2post1.12": _t_12,
    "2post1.13": _t_13, "2post1.14": _t_14, "2post1.15": _t_15, "2post1.16": _t_16,
    "2post1.17": _t_17, "2post1.17b": _t_17b, "2post1.17c": _t_17c, "2post1.18": _t_18,
    "2post1.19": _t_19, "2post1.20": _t_20, "2post1.21": _t_21,
    "remark.commutator": _t_commutator,
}
