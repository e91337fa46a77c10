"""Symbolic words in left/right translations and their inverses."""
from __future__ import annotations

from dataclasses import dataclass, field

from .loop import Loop
from .perm import Perm


@dataclass(frozen=True)
class Letter:
    side: str        # 'L' or 'R'
    symbol: str      # how the subscript is written, e.g. "u\\(xv)"
    exponent: int = 1
    element: int | None = None

    def evaluate(self, loop: Loop) -> Perm:
        if self.element is None:
            raise ValueError(f"letter {self} has no concrete element")
        if self.side == "R":
            return loop.R(self.element) if self.exponent == 1 else loop.R_inv(self.element)
        return loop.L(self.element) if self.exponent == 1 else loop.L_inv(self.element)

    def __str__(self):
        inv = "^-1" if self.exponent == -1 else ""
        return f"{self.side}_{{{self.symbol}}}{inv}"


@dataclass(frozen=True)
class TranslationWord:
    """A product of translation letters, applied left to right."""

    letters: tuple[Letter, ...] = ()
    name: str = ""

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "TranslationWord") -> "TranslationWord":
        return TranslationWord(self.letters + other.letters)

    def evaluate(self, loop: Loop) -> Perm:
        out = Perm.identity(loop.n)
        for letter in self.letters:
            out = out * letter.evaluate(loop)
        return out

    def __str__(self):
        return "".join(map(str, self.letters)) or "I"


IDENTITY_WORD = TranslationWord((), "I")


@dataclass(frozen=True)
class WordTriple:
    a: TranslationWord
    b: TranslationWord
    c: TranslationWord
    name: str = field(default="")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def evaluate(self, loop: Loop):
        from .isotopy import IsoTriple

        return IsoTriple(self.a.evaluate(loop), self.b.evaluate(loop), self.c.evaluate(loop))

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


def word_length(w: TranslationWord | WordTriple) -> int:
    """Letter count; a triple's length is the sum over its components."""
    if isinstance(w, WordTriple):
        return sum(len(part) for part in w)
    return len(w)


def R(symbol: str, element: int | None = None) -> TranslationWord:
    return TranslationWord((Letter("R", symbol, 1, element),))


def L(symbol: str, element: int | None = None) -> TranslationWord:
    return TranslationWord((Letter("L", symbol, 1, element),))


def Rinv(symbol: str, element: int | None = None) -> TranslationWord:
    return TranslationWord((Letter("R", symbol, -1, element),))


def Linv(symbol: str, element: int | None = None) -> TranslationWord:
    return TranslationWord((Letter("L", symbol, -1, element),))
