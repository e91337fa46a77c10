"""Permutations of ``{0..n-1}`` with postfix composition.

``(p * q)`` applies ``p`` first, then ``q``: ``x(pq) = (xp)q``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class Perm:
    __slots__ = ("image", "_arr")

    def __init__(self, image: Iterable[int]):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        self.image = image
        arr = np.asarray(image, dtype=np.int64)
        arr.flags.writeable = False
        self._arr = arr

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Perm":
        p = cls.__new__(cls)
        arr = np.array(arr, dtype=np.int64)
        arr.flags.writeable = False
        p._arr = arr
        p.image = tuple(arr.tolist())
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._trusted(np.arange(n))

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Parse comma-separated images, e.g. ``"2,0,1"``."""
        try:
            return cls(int(t) for t in text.replace(" ", "").split(",") if t != "")
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm._trusted(other._arr[self._arr])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self._arr)
        inv[self._arr] = np.arange(self.n)
        return Perm._trusted(inv)

    def is_identity(self) -> bool:
        return self.image == tuple(range(self.n))

    def first_difference(self, other: "Perm") -> int | None:
        """Smallest x with ``x self != x other``, or None when equal."""
        diff = np.nonzero(self._arr != other._arr)[0]
        return int(diff[0]) if diff.size else None

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Perm({list(self.image)})"

    def __str__(self) -> str:
        return ",".join(map(str, self.image))


def commutator(a: Perm, b: Perm) -> Perm:
    """``[a, b] = a^-1 b^-1 a b``."""
    return a.inverse() * b.inverse() * a * b


def compose(perms: Sequence[Perm], n: int) -> Perm:
    out = Perm.identity(n)
    for p in perms:
        out = out * p
    return out
