"""Word lengths and the pyramid graph on a loop and four of its isotopes.

Apex edges run from the loop to ``o0, o1, s0, s1``; base edges join those
four by isomorphism triples. Lengths count letters of the printed words, so
they do not depend on the loop or on ``p``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .certificate import Certificate
from .errors import HypothesisFailed
from .isotopy import IsoTriple, IsotopeCache, isotopism_witness
from .loop import Loop
from .osborn import DEFAULT, Conventions, Derived, is_universal_osborn
from .words import (IDENTITY_WORD, L, Letter, Linv, R, Rinv, TranslationWord, WordTriple,  # noqa: F401
                    word_length)

PYRAMID_VERTICES = ("dot", "o0", "o1", "s1", "s0")
APEX_LENGTHS = (2, 2, 2, 2)
BASE_LENGTHS = (6, 12, 6, 12)

# base rectangle 6 x 12 in the z=0 plane, apex over its centre; not a metric embedding
_COORDS = {"o0": (0.0, 0.0, 0.0), "o1": (6.0, 0.0, 0.0), "s1": (6.0, 12.0, 0.0),
           "s0": (0.0, 12.0, 0.0), "dot": (3.0, 6.0, 2.0)}


@dataclass
class Edge:
    name: str
    source: str
    target: str
    kind: str                       # "isotopism" or "isomorphism"
    word: tuple[str, str, str]
    length: int
    verified: bool | None = None
    witness: object = None
    triple: WordTriple | None = field(default=None, compare=False, repr=False)


@dataclass
class PyramidGraph:
    vertices: tuple[str, ...]
    edges: list[Edge]
    loop: str = ""
    p: tuple[int, int, int] | None = None

    def edge(self, name: str) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def apex_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.source == "dot"]

    @property
    def base_cycle(self) -> list[Edge]:
        # o0-o1, o1-s1, s1-s0, s0-o0 going round the rectangle
        return [self.edge(n) for n in ("gamma01o", "gamma1", "gamma01s", "gamma0")]

    def lengths(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(e.length for e in self.apex_edges), tuple(e.length for e in self.base_cycle)


def _edge(name, src, dst, kind, triple: WordTriple, verified=None, witness=None) -> Edge:
    if witness is not None:
        witness = tuple(int(v) for v in witness)
    return Edge(name, src, dst, kind, tuple(str(w) for w in triple), word_length(triple),
                verified, witness, triple)


def build_pyramid(loop: Loop, p, conv: Conventions = DEFAULT, check_hypothesis: bool = True,
                  cache: IsotopeCache | None = None) -> PyramidGraph:
    """Build the eight edges and verify each against the actual isotope tables."""
    if check_hypothesis:
        uo, wit = is_universal_osborn(loop, bound=max(loop.n, 12))
        if not uo:
            raise HypothesisFailed(f"{loop.name or 'loop'} is not universal Osborn", wit)
    cache = cache or IsotopeCache(loop)
    d = Derived(loop, p, conv)

    def Q(label):
        return loop if label == "dot" else cache[d.pair(label)]

    edges = []
    for lab in ("o1", "o0", "s1", "s0"):
        wt = d.apex_word(lab)
        wit = isotopism_witness(wt.evaluate(loop), loop, Q(lab))
        edges.append(_edge(f"apex_{lab}", "dot", lab, "isotopism", wt, wit is None, wit))
    for name, src, dst in (("gamma01o", "o0", "o1"), ("gamma1", "s1", "o1"),
                           ("gamma01s", "s0", "s1"), ("gamma0", "o0", "s0")):
        w = d.word(name)
        wt = WordTriple(w, w, w, name)
        theta = w.evaluate(loop)
        wit = isotopism_witness(IsoTriple.diagonal(theta), Q(src), Q(dst))
        edges.append(_edge(name, src, dst, "isomorphism", wt, wit is None, wit))
    return PyramidGraph(PYRAMID_VERTICES, edges, loop.name or "loop", tuple(int(c) for c in p))


def verify_rectangle(g: PyramidGraph) -> Certificate:
    cert = Certificate("rectangle", g.loop, list(g.p) if g.p else None)
    sides = [e.length for e in g.base_cycle]
    cert.add("opposite sides gamma01o, gamma01s equal", sides[0] == sides[2],
             {"lengths": [sides[0], sides[2]]})
    cert.add("opposite sides gamma1, gamma0 equal", sides[1] == sides[3],
             {"lengths": [sides[1], sides[3]]})
    cert.data["side_lengths"] = sides
    cert.data["figure"] = "rectangular pyramid"
    cert.data["caveat"] = ("equal opposite sides establish a parallelogram; "
                           "right angles are not determined by lengths")
    return cert


def pyramid_certificate(g: PyramidGraph) -> Certificate:
    """Every edge verified, plus the expected length profile."""
    cert = Certificate("pyramid", g.loop, list(g.p) if g.p else None)
    for e in g.edges:
        cert.add(f"{e.name} {e.kind} {e.source}->{e.target}", bool(e.verified),
                 None if e.verified else {"witness": e.witness})
    apex, base = g.lengths()
    cert.add("apex lengths (2,2,2,2)", apex == APEX_LENGTHS, {"lengths": list(apex)})
    cert.add("base cycle (6,12,6,12)", base == BASE_LENGTHS, {"lengths": list(base)})
    cert.data["apex_lengths"] = list(apex)
    cert.data["base_lengths"] = list(base)
    return cert


def export_graph(g: PyramidGraph, format: str = "json") -> str:
    if format == "json":
        doc = {
            "loop": g.loop,
            "p": list(g.p) if g.p else None,
            "coordinates": "schematic, non-metric",
            "nodes": [{"id": v, "coords": list(_COORDS[v])} for v in g.vertices],
            "edges": [{"name": e.name, "source": e.source, "target": e.target, "kind": e.kind,
                       "word": list(e.word), "length": e.length, "verified": e.verified,
                       "witness": None if e.witness is None else list(e.witness)}
                      for e in g.edges],
        }
        return json.dumps(doc, indent=2)
    if format == "dot":
        lines = ["digraph pyramid {"]
        lines += [f'  "{v}";' for v in g.vertices]
        lines += [f'  "{e.source}" -> "{e.target}" [label="{e.name}:{e.length}"];' for e in g.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; expected json or dot")


def parse_graph(text: str) -> PyramidGraph:
    doc = json.loads(text)
    edges = [Edge(e["name"], e["source"], e["target"], e["kind"], tuple(e["word"]), e["length"],
                  e["verified"], None if e["witness"] is None else tuple(e["witness"]))
             for e in doc["edges"]]
    return PyramidGraph(tuple(n["id"] for n in doc["nodes"]), edges, doc["loop"],
                        None if doc["p"] is None else tuple(doc["p"]))
