"""Geometric flower form of a GF(p) word: constellation, petals, thorns.

Symbol k of a length-N word is placed at z_k = x_k * exp(j*2*pi*k/N), so each
position owns a radial axis and the symbol value is the radius.  Two cyclically
consecutive nonzero symbols span a petal (the triangle origin, z_k, z_{k+1});
a nonzero symbol with zero on both sides is a thorn (a bare radial segment).
This module is the only place besides render where floating point appears;
everything upstream stays in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gfield import Word


@dataclass(frozen=True)
class ConstellationPoint:
    """One plotted symbol: polar (radius, angle) plus its cartesian image."""

    index: int
    radius: int
    angle: float
    x: float
    y: float


@dataclass(frozen=True)
class FlowerShape:
    """A word together with its derived geometry.

    petals are (k, (k+1) mod N) pairs in ascending k order; thorns are bare
    indices in ascending order; outline is the cyclic polyline through all
    points in index order, the closing segment back to z_0 implied.
    """

    word: Word
    points: tuple[ConstellationPoint, ...]
    petals: tuple[tuple[int, int], ...]
    thorns: tuple[int, ...]
    outline: tuple[ConstellationPoint, ...]


def constellation(word: Word) -> tuple[ConstellationPoint, ...]:
    """Map a word to its constellation points.

    Index 0 sits on the positive real axis and angles increase
    counterclockwise.  Zero symbols land on the origin.
    """
    n = len(word)
    points = []
    for k, v in enumerate(word):
        angle = math.tau * k / n
        points.append(ConstellationPoint(
            index=k,
            radius=v,
            angle=angle,
            x=v * math.cos(angle),
            y=v * math.sin(angle),
        ))
    return tuple(points)


def features(word: Word) -> FlowerShape:
    """Derive petals, thorns, and the outline for a word."""
    n = len(word)
    x = word.symbols
    points = constellation(word)
    petals = tuple(
        (k, (k + 1) % n)
        for k in range(n)
        if x[k] != 0 and x[(k + 1) % n] != 0
    )
    thorns = tuple(
        k for k in range(n)
        if x[k] != 0 and x[(k - 1) % n] == 0 and x[(k + 1) % n] == 0
    )
    return FlowerShape(word=word, points=points, petals=petals,
                       thorns=thorns, outline=points)


def petal_shades(shape: FlowerShape) -> list[str]:
    """Alternating 'light'/'dark' assignment, aligned with shape.petals.

    Petals whose start indices are cyclically consecutive form a run; within
    each run shades alternate and the petal at the run's numerically lowest
    start index is light.  When every position starts a petal the run is the
    whole cycle, and an odd petal count then forces one same-shade pair at
    the wrap seam; the anchor rule above still fixes the assignment.
    """
    if not shape.petals:
        return []
    n = len(shape.word)
    starts = {k for k, _ in shape.petals}
    shade_of = {}
    if len(starts) == n:
        for k in starts:
            shade_of[k] = "light" if k % 2 == 0 else "dark"
    else:
        heads = [s for s in starts if (s - 1) % n not in starts]
        for head in heads:
            chain = [head]
            while (chain[-1] + 1) % n in starts:
                chain.append((chain[-1] + 1) % n)
            anchor = chain.index(min(chain))
            for i, s in enumerate(chain):
                shade_of[s] = "light" if (i - anchor) % 2 == 0 else "dark"
    return [shade_of[k] for k, _ in shape.petals]
