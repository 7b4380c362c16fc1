"""Chord interlacement graphs and the alternating independence sum f.

f(K) is the sum of (-1)^|C| over all independent vertex subsets C of K,
the empty set included; equivalently the independence polynomial of K
evaluated at -1.  Two routes are provided: a direct enumeration over all
vertex subsets (the oracle) and a memoized deletion recursion
f(K) = f(K - v) - f(K - N[v]) with component factorization.

Applied to the same-circle chords of an extreme state, f gives the
coefficient of the extreme bracket term up to the sign (-1)^(|s|-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .diagram import PlanarDiagram
from .errors import CapExceeded, InternalInconsistency, PreconditionFailed
from .states import Chord, ExtremeStateData, Which, extreme_bounds, extreme_state

F_RECURSIVE_CAP = 64
F_BRUTEFORCE_CAP = 25


@dataclass(frozen=True)
class IntersectionGraph:
    """A simple graph with bitmask adjacency rows.

    ``labels`` names the vertices (chord crossing numbers when the graph
    comes from a diagram); ``adj[i]`` has bit j set when i and j are
    adjacent.
    """

    labels: tuple[int, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[int]] = None) -> "IntersectionGraph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return IntersectionGraph(tuple(labels) if labels else tuple(range(n)),
                                 tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1) << (i + 1)
            while row:
                low = row & -row
                out.append((i, low.bit_length() - 1))
                row ^= low
        return out

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def subgraph(self, keep_mask: int) -> "IntersectionGraph":
        idx = [i for i in range(self.n) if keep_mask >> i & 1]
        remap = {old: new for new, old in enumerate(idx)}
        edges = [
            (remap[i], remap[j]) for i, j in self.edges()
            if i in remap and j in remap
        ]
        return IntersectionGraph.from_edges(
            len(idx), edges, [self.labels[i] for i in idx]
        )

    def without_vertex(self, i: int) -> "IntersectionGraph":
        return self.subgraph(((1 << self.n) - 1) & ~(1 << i))

    def without_closed_neighborhood(self, i: int) -> "IntersectionGraph":
        return self.subgraph(((1 << self.n) - 1) & ~(self.adj[i] | (1 << i)))

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                i = stack.pop()
                row = self.adj[i]
                while row:
                    low = row & -row
                    j = low.bit_length() - 1
                    row ^= low
                    if color[j] < 0:
                        color[j] = 1 - color[i]
                        stack.append(j)
                    elif color[j] == color[i]:
                        return False
        return True


def disjoint_union(g1: IntersectionGraph, g2: IntersectionGraph) -> IntersectionGraph:
    n1 = g1.n
    edges = g1.edges() + [(i + n1, j + n1) for i, j in g2.edges()]
    return IntersectionGraph.from_edges(
        n1 + g2.n, edges, list(g1.labels) + [lab + 10_000 for lab in g2.labels]
    )


@dataclass(frozen=True)
class ChordDiagramOnCircle:
    """The same-circle chords of one state circle, as a cyclic word.

    Every chord id occurs exactly twice; slot order is the circle's
    traversal order.
    """

    circle_id: int
    word: tuple[int, ...]

    def positions(self, chord_id: int) -> tuple[int, int]:
        hits = tuple(i for i, x in enumerate(self.word) if x == chord_id)
        if len(hits) != 2:
            raise PreconditionFailed(
                f"chord {chord_id} has {len(hits)} ends on circle {self.circle_id}"
            )
        return hits


def interleaves(c1: int, c2: int, circle: ChordDiagramOnCircle) -> bool:
    """True when the four ends alternate c1, c2, c1, c2 around the circle."""
    p1, p2 = circle.positions(c1)
    q1, q2 = circle.positions(c2)
    return (p1 < q1 < p2) != (p1 < q2 < p2)


def circle_chord_diagrams(data: ExtremeStateData) -> list[ChordDiagramOnCircle]:
    """One cyclic word per circle that carries at least one same-circle chord."""
    same = {ch.crossing for ch in data.same_circle_chords}
    out = []
    for circ in data.resolution.circles:
        word = [v for (v, _arc) in circ.slots if v in same
                and _chord_on_circle(data, v) == circ.id]
        if word:
            out.append(ChordDiagramOnCircle(circ.id, tuple(word)))
    return out


def _chord_on_circle(data: ExtremeStateData, crossing: int) -> int:
    ch = data.resolution.chords[crossing]
    return ch.ends[0].circle


def intersection_graph(data: ExtremeStateData) -> IntersectionGraph:
    """Interlacement graph of the same-circle chords of an extreme state.

    Chords whose ends lie on two different circles never contribute to the
    extreme coefficient and are excluded up front.
    """
    chords = sorted(ch.crossing for ch in data.same_circle_chords)
    index = {v: i for i, v in enumerate(chords)}
    edges = []
    for cd in circle_chord_diagrams(data):
        ids = sorted(set(cd.word))
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                if interleaves(ids[a], ids[b], cd):
                    edges.append((index[ids[a]], index[ids[b]]))
    return IntersectionGraph.from_edges(len(chords), edges, chords)


# -- the function f ---------------------------------------------------------

def f_bruteforce(g: IntersectionGraph, cap: int = F_BRUTEFORCE_CAP) -> int:
    """Direct enumeration of all vertex subsets, testing independence."""
    n = g.n
    if n > cap:
        raise CapExceeded(
            f"{n} vertices exceed the brute-force cap {cap}", required=n
        )
    adj = g.adj
    independent = bytearray(1 << n)
    independent[0] = 1
    total = 1  # the empty set
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        if independent[rest] and adj[low.bit_length() - 1] & rest == 0:
            independent[m] = 1
            total += -1 if m.bit_count() & 1 else 1
    return total


def f_recursive(g: IntersectionGraph, cap: int = F_RECURSIVE_CAP) -> int:
    """f by component factorization and memoized deletion recursion.

    Within a component the pivot is a maximum-degree vertex; an edgeless
    remainder short-circuits to 0 (a lone vertex contributes 1 - 1).
    """
    if g.n > cap:
        raise CapExceeded(
            f"{g.n} vertices exceed the recursion cap {cap}", required=g.n
        )
    result = 1
    for comp_mask in _components(g):
        result *= _f_masked(g.adj, comp_mask)
        if result == 0:
            return 0
    return result


def _components(g: IntersectionGraph) -> list[int]:
    seen = 0
    comps = []
    for start in range(g.n):
        bit = 1 << start
        if seen & bit:
            continue
        frontier = bit
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def _f_masked(adj: tuple[int, ...], mask: int) -> int:
    memo: dict[int, int] = {}

    def rec(m: int) -> int:
        if m == 0:
            return 1
        cached = memo.get(m)
        if cached is not None:
            return cached
        best, best_deg = -1, -1
        mm = m
        while mm:
            low = mm & -mm
            i = low.bit_length() - 1
            mm ^= low
            deg = (adj[i] & m).bit_count()
            if deg > best_deg:
                best_deg, best = deg, i
        if best_deg == 0:
            memo[m] = 0
            return 0
        val = rec(m & ~(1 << best)) - rec(m & ~(adj[best] | (1 << best)))
        memo[m] = val
        return val

    return rec(mask)


# -- extreme coefficients ----------------------------------------------------

@dataclass(frozen=True)
class ExtremeCoefficientReport:
    which: Which
    f_value: int
    signed_coefficient: int
    circle_factors: tuple[tuple[int, int], ...]
    adequate: bool

    def to_json_dict(self) -> dict:
        return {
            "which": self.which,
            "f_value": self.f_value,
            "signed_coefficient": self.signed_coefficient,
            "circle_factors": [list(p) for p in self.circle_factors],
            "adequate": self.adequate,
        }


def extreme_coefficient(d: PlanarDiagram, which: Which) -> ExtremeCoefficientReport:
    """Combinatorial value of the extreme bracket coefficient.

    f is evaluated circle by circle and multiplied; the overall sign is
    (-1)^(|s|-1).  The adequate flag records the absence of same-circle
    chords, in which case the coefficient is forced to +-1.
    """
    data = extreme_state(d, which)
    factors = []
    f_value = 1
    for cd in circle_chord_diagrams(data):
        ids = sorted(set(cd.word))
        index = {v: i for i, v in enumerate(ids)}
        edges = [
            (index[a], index[b])
            for ai, a in enumerate(ids) for b in ids[ai + 1:]
            if interleaves(a, b, cd)
        ]
        sub = IntersectionGraph.from_edges(len(ids), edges, ids)
        fc = f_recursive(sub)
        factors.append((cd.circle_id, fc))
        f_value *= fc
    sign = -1 if (data.resolution.circle_count - 1) % 2 else 1
    return ExtremeCoefficientReport(
        which=which,
        f_value=f_value,
        signed_coefficient=sign * f_value,
        circle_factors=tuple(factors),
        adequate=not data.same_circle_chords,
    )


@dataclass(frozen=True)
class RefinedSpread:
    bracket_spread_bound: int
    jones_spread_bound: int
    exact: bool


def refined_spread(d: PlanarDiagram) -> RefinedSpread:
    """Spread bound sharpened by the extreme coefficients.

    Both coefficients nonzero pins the spread exactly; each vanishing side
    lowers the corresponding bracket extreme by one 4-step (bracket
    exponents are congruent mod 4).
    """
    bound = extreme_bounds(d).spread_bound
    rep_a = extreme_coefficient(d, "A")
    rep_b = extreme_coefficient(d, "B")
    exact = rep_a.signed_coefficient != 0 and rep_b.signed_coefficient != 0
    if rep_a.signed_coefficient == 0:
        bound -= 4
    if rep_b.signed_coefficient == 0:
        bound -= 4
    if bound % 4:
        raise InternalInconsistency(f"spread bound {bound} not divisible by 4")
    return RefinedSpread(bound, bound // 4, exact)
