"""Constructing link diagrams that realize prescribed extreme coefficients.

Start from a circle with chords drawn inside (family E) and outside
(family F), each family non-interleaving so the picture is planar.
Replacing every chord by one crossing produces a diagram whose all-A state
is the original circle with E and F as its same-circle chords; the top
bracket coefficient is then f of the chord interlacement graph, up to
sign.  The crossing pattern: with slots i < j and arcs numbered along the
circle, an inside chord becomes X(arc[i-1], arc[i], arc[j-1], arc[j]) and
an outside chord the same tuple with each pair swapped.  The bracket
oracle confirms the convention in the tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence

from .circlegraph import IntersectionGraph, f_bruteforce
from .diagram import PDCode, canonicalize_orientations
from .errors import PreconditionFailed

ChordId = Hashable


@dataclass(frozen=True)
class ChordFamilyPair:
    """A circle word plus the inside/outside assignment of its chords.

    ``word`` lists chord ids around the circle, each id exactly twice;
    ``inside`` names the chords drawn inside the circle, the rest lie
    outside.  Chords on one side must be pairwise non-interleaving.
    """

    word: tuple[ChordId, ...]
    inside: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "inside", frozenset(self.inside))
        counts: dict[ChordId, int] = {}
        for x in self.word:
            counts[x] = counts.get(x, 0) + 1
        bad = [x for x, n in counts.items() if n != 2]
        if bad:
            raise PreconditionFailed(f"chord ids must appear exactly twice: {bad}")
        unknown = self.inside - set(counts)
        if unknown:
            raise PreconditionFailed(f"inside ids not in the word: {sorted(map(str, unknown))}")
        for side in (self.chords() & self.inside, self.chords() - self.inside):
            side_list = sorted(side, key=str)
            for a_i, a in enumerate(side_list):
                for b in side_list[a_i + 1:]:
                    if self.interleave(a, b):
                        raise PreconditionFailed(
                            f"chords {a!r} and {b!r} interleave on the same side"
                        )

    def chords(self) -> set:
        return set(self.word)

    @property
    def outside(self) -> frozenset:
        return frozenset(self.chords() - self.inside)

    def positions(self, x: ChordId) -> tuple[int, int]:
        hits = tuple(i for i, y in enumerate(self.word) if y == x)
        return hits

    def interleave(self, a: ChordId, b: ChordId) -> bool:
        p1, p2 = self.positions(a)
        q1, q2 = self.positions(b)
        return (p1 < q1 < p2) != (p1 < q2 < p2)


def interlacement_graph(pair: ChordFamilyPair) -> IntersectionGraph:
    """Interlacement graph of the family, independent of the diagram path."""
    ids = sorted(pair.chords(), key=str)
    index = {x: i for i, x in enumerate(ids)}
    edges = [
        (index[a], index[b])
        for i, a in enumerate(ids) for b in ids[i + 1:]
        if pair.interleave(a, b)
    ]
    return IntersectionGraph.from_edges(len(ids), edges)


def chords_to_link(pair: ChordFamilyPair, name: Optional[str] = None) -> PDCode:
    """Replace every chord by one crossing; see the module docstring.

    The resulting diagram has a single all-A state circle carrying the
    whole family as same-circle chords, so its top coefficient equals
    f of the interlacement graph up to the (-1)^(|s_A|-1) sign.
    """
    two_m = len(pair.word)
    crossings = []
    for x in sorted(pair.chords(), key=str):
        i, j = pair.positions(x)
        arc_in_i, arc_out_i = (i - 1) % two_m + 1, i + 1
        arc_in_j, arc_out_j = (j - 1) % two_m + 1, j + 1
        if x in pair.inside:
            crossings.append((arc_in_i, arc_out_i, arc_in_j, arc_out_j))
        else:
            crossings.append((arc_out_i, arc_in_i, arc_out_j, arc_in_j))
    pd = PDCode(tuple(crossings), name=name)
    return canonicalize_orientations(pd)


def double_chords(pair: ChordFamilyPair, ids: Iterable[ChordId]) -> ChordFamilyPair:
    """Replace each selected chord by two nested parallel copies.

    Duplication leaves f unchanged, and doubling every chord makes the
    crossings come in clasps; the effect on B-side adequacy is checked by
    the oracle in tests rather than assumed.
    """
    targets = set(ids)
    missing = targets - pair.chords()
    if missing:
        raise PreconditionFailed(f"cannot double unknown chords {sorted(map(str, missing))}")
    word: list[ChordId] = []
    firsts: set[ChordId] = set()
    for x in pair.word:
        if x not in targets:
            word.append(x)
            continue
        copy = (x, "dbl")
        if x not in firsts:
            firsts.add(x)
            word.extend((x, copy))
        else:
            word.extend((copy, x))
    inside = set(pair.inside) | {(x, "dbl") for x in targets & pair.inside}
    return ChordFamilyPair(tuple(word), frozenset(inside))


# -- graph generators ---------------------------------------------------------

def complete_graph(n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def complete_bipartite_graph(m: int, n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(
        m + n, [(i, m + j) for i in range(m) for j in range(n)]
    )


def path_graph(n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, p: float, seed: int) -> IntersectionGraph:
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return IntersectionGraph.from_edges(n, edges)


# -- search -------------------------------------------------------------------

def random_family(rng: random.Random, m: int) -> ChordFamilyPair:
    """A uniform-ish random planar family with m chords.

    Chords open and close in stack order per side, which is exactly the
    non-interleaving condition.
    """
    word: list[int] = []
    stacks: dict[bool, list[int]] = {True: [], False: []}
    inside: set[int] = set()
    next_id = 0
    remaining = m
    while remaining or stacks[True] or stacks[False]:
        can_close = [s for s in (True, False) if stacks[s]]
        if remaining and (not can_close or rng.random() < 0.55):
            side = rng.choice((True, False))
            word.append(next_id)
            stacks[side].append(next_id)
            if side:
                inside.add(next_id)
            next_id += 1
            remaining -= 1
        else:
            side = rng.choice(can_close)
            word.append(stacks[side].pop())
    return ChordFamilyPair(tuple(word), frozenset(inside))


def search_chord_family(target_f: int, max_chords: int = 12,
                        budget: int = 60000, seed: int = 1,
                        ) -> Optional[ChordFamilyPair]:
    """Random search for a planar chord family whose interlacement f hits
    the target, verified by direct enumeration.  Deterministic per seed;
    returns None when the budget runs out.
    """
    if max_chords > 12:
        raise PreconditionFailed("max_chords is capped at 12")
    rng = random.Random(seed)
    for _ in range(budget):
        m = rng.randint(1, max_chords)
        pair = random_family(rng, m)
        if f_bruteforce(interlacement_graph(pair)) == target_f:
            return pair
    return None
