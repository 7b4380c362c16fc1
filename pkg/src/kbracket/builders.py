"""Factories producing PD codes: braid closures and pretzel diagrams.

These are conveniences for building fixture and test diagrams; the PD
text format stays the single external input language.  Sign convention:
a positive braid generator crosses the left strand over the right one,
which makes positive words give positive writhe.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .diagram import PDCode, canonicalize_orientations


class _Arcs:
    """Arc-label allocator with merging, for wiring diagram templates."""

    def __init__(self):
        self.parent: list[int] = []

    def fresh(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def renumber(self, crossings: Sequence[tuple[int, int, int, int]]
                 ) -> list[tuple[int, int, int, int]]:
        naming: dict[int, int] = {}
        out = []
        for t in crossings:
            resolved = []
            for x in t:
                root = self.find(x)
                if root not in naming:
                    naming[root] = len(naming) + 1
                resolved.append(naming[root])
            out.append(tuple(resolved))
        return out


def _emit_crossing(a: int, b: int, c: int, d: int, positive: bool
                   ) -> tuple[int, int, int, int]:
    # Two upward strands, a/b in from below left/right, c/d out above.
    # Left over (positive): the under-strand is b -> c.
    if positive:
        return (b, d, c, a)
    return (a, b, d, c)


def braid_closure(word: Sequence[int], strands: Optional[int] = None,
                  name: Optional[str] = None) -> PDCode:
    """PD code of the closure of a braid word.

    ``word`` lists generators as nonzero integers: k for sigma_k, -k for
    its inverse.  Every strand position must be involved in at least one
    crossing, since a crossingless closed component has no PD encoding.
    """
    if not word:
        raise ValueError("empty braid word")
    if any(g == 0 for g in word):
        raise ValueError("braid generators are nonzero integers")
    n = (max(abs(g) for g in word) + 1) if strands is None else strands
    touched = set()
    for g in word:
        if abs(g) >= n:
            raise ValueError(f"generator {g} needs more than {n} strands")
        touched.update((abs(g) - 1, abs(g)))
    if len(touched) != n:
        missing = sorted(set(range(n)) - touched)
        raise ValueError(f"strand positions {missing} have no crossings")

    arcs = _Arcs()
    current = [arcs.fresh() for _ in range(n)]
    first = list(current)
    crossings = []
    for g in word:
        i = abs(g) - 1
        a, b = current[i], current[i + 1]
        c, d = arcs.fresh(), arcs.fresh()
        crossings.append(_emit_crossing(a, b, c, d, g > 0))
        current[i], current[i + 1] = c, d
    for i in range(n):
        arcs.union(current[i], first[i])

    pd = PDCode(tuple(arcs.renumber(crossings)), name=name)
    return canonicalize_orientations(pd)


def torus_pd(p: int, q: int, name: Optional[str] = None) -> PDCode:
    """Standard diagram of the (p, q) torus link as a p-strand braid closure."""
    if p < 2 or q == 0:
        raise ValueError("need p >= 2 and q != 0")
    run = list(range(1, p))
    word = []
    for _ in range(abs(q)):
        word.extend(run if q > 0 else [-g for g in run])
    return braid_closure(word, strands=p, name=name)


def pretzel_pd(*twists: int, name: Optional[str] = None) -> PDCode:
    """Pretzel diagram with the given signed twist counts, left to right.

    Each region is a vertical two-strand twist; regions are joined
    cyclically along the top and along the bottom.  Zero twists are not
    supported (they merge regions and are never needed here).
    """
    k = len(twists)
    if k < 2:
        raise ValueError("need at least two twist regions")
    if any(t == 0 for t in twists):
        raise ValueError("zero twist regions are not supported")

    arcs = _Arcs()
    top = [arcs.fresh() for _ in range(k)]
    bottom = [arcs.fresh() for _ in range(k)]
    crossings = []
    for i, p in enumerate(twists):
        left, right = top[(i - 1) % k], top[i]
        for _ in range(abs(p)):
            c, d = arcs.fresh(), arcs.fresh()
            crossings.append(_emit_crossing(left, right, c, d, p > 0))
            left, right = c, d
        arcs.union(left, bottom[(i - 1) % k])
        arcs.union(right, bottom[i])

    pd = PDCode(tuple(arcs.renumber(crossings)), name=name)
    return canonicalize_orientations(pd)
