"""States of a diagram, state circles, and the brute-force bracket.

A state assigns every crossing an A or B smoothing.  In tuple-position
terms the A smoothing joins positions (0,1) and (2,3), the B smoothing
joins (1,2) and (3,0); this is the one concrete realization of the
quadrant rule, pinned by the trefoil oracle test.  The full state sum
over all 2^c states is the oracle every other module is checked against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Literal, Optional

from .diagram import PlanarDiagram
from .errors import CapExceeded, InternalInconsistency, PreconditionFailed
from .laurent import IntLaurent, delta_power

Which = Literal["A", "B"]

DEFAULT_STATE_CAP = 24


def state_cap_default() -> int:
    env = os.environ.get("KBRACKET_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_STATE_CAP


@dataclass(frozen=True)
class State:
    """One marker per crossing; bit i of the packing is set for a B marker."""

    markers: tuple[str, ...]

    def __post_init__(self):
        if any(m not in ("A", "B") for m in self.markers):
            raise ValueError("markers must be 'A' or 'B'")

    @staticmethod
    def from_bits(bits: int, c: int) -> "State":
        return State(tuple("B" if bits >> i & 1 else "A" for i in range(c)))

    @staticmethod
    def all_A(c: int) -> "State":
        return State(("A",) * c)

    @staticmethod
    def all_B(c: int) -> "State":
        return State(("B",) * c)

    @property
    def a(self) -> int:
        return self.markers.count("A")

    @property
    def b(self) -> int:
        return self.markers.count("B")


@dataclass(frozen=True)
class ChordEnd:
    circle: int  # id of the circle carrying this end
    slot: int    # index into that circle's slot word


@dataclass(frozen=True)
class Chord:
    """The retained trace of a smoothed crossing."""

    crossing: int
    marker: str
    ends: tuple[ChordEnd, ChordEnd]

    @property
    def same_circle(self) -> bool:
        return self.ends[0].circle == self.ends[1].circle


@dataclass(frozen=True)
class Circle:
    """A state circle: a closed curve of diagram edges and smoothing arcs.

    ``slots`` lists the chord endpoints met along the traversal, as
    (crossing, arc) pairs; arc 0/1 numbers the two smoothing arcs of the
    crossing.  The id is the smallest edge label traversed.
    """

    id: int
    edges: tuple[int, ...]
    slots: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class StateResolution:
    circles: tuple[Circle, ...]
    chords: tuple[Chord, ...]

    @property
    def circle_count(self) -> int:
        return len(self.circles)


def _join_pairs(v: int, marker: str) -> tuple[tuple[int, int], tuple[int, int]]:
    b = 4 * v
    if marker == "A":
        return (b, b + 1), (b + 2, b + 3)
    return (b + 1, b + 2), (b + 3, b)


def resolve(d: PlanarDiagram, s: State) -> StateResolution:
    """Split every crossing per its marker and stitch the circles."""
    if len(s.markers) != d.c:
        raise PreconditionFailed(
            f"state has {len(s.markers)} markers for {d.c} crossings"
        )
    n_he = 4 * d.c
    partner = [0] * n_he
    arc_of = [0] * n_he  # which smoothing arc (0 or 1) a half-edge lies on
    for v in range(d.c):
        (p, q), (r, t) = _join_pairs(v, s.markers[v])
        partner[p], partner[q] = q, p
        partner[r], partner[t] = t, r
        arc_of[r] = arc_of[t] = 1

    # Group half-edges into circles (twin gluings plus smoothing arcs).
    comp = list(range(n_he))

    def find(x: int) -> int:
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for h in range(n_he):
        for other in (d.twin[h], partner[h]):
            a, b2 = find(h), find(other)
            if a != b2:
                comp[a] = b2

    min_label: dict[int, int] = {}
    start_he: dict[int, int] = {}
    for lab in d.edge_labels:
        h1, h2 = d.edge_ends[lab]
        root = find(h1)
        if root not in min_label or lab < min_label[root]:
            min_label[root] = lab
            start_he[root] = min(h1, h2)

    circles = []
    end_location: dict[tuple[int, int], ChordEnd] = {}
    for root in sorted(min_label, key=lambda r: min_label[r]):
        cid = min_label[root]
        edges = []
        slots = []
        h = start_he[root]
        while True:
            edges.append(d.label_of[h])
            arrive = d.twin[h]
            v, arc = arrive // 4, arc_of[arrive]
            end_location[(v, arc)] = ChordEnd(cid, len(slots))
            slots.append((v, arc))
            h = partner[arrive]
            if h == start_he[root]:
                break
        circles.append(Circle(cid, tuple(edges), tuple(slots)))

    chords = tuple(
        Chord(v, s.markers[v], (end_location[(v, 0)], end_location[(v, 1)]))
        for v in range(d.c)
    )
    return StateResolution(tuple(circles), chords)


def phi(s: State, res: StateResolution) -> IntLaurent:
    """Contribution A^(a-b) * (-A^2-A^-2)^(|s|-1) of one state."""
    return delta_power(res.circle_count - 1).shifted(s.a - s.b)


def max_of_state(s: State, res: StateResolution) -> int:
    return s.a - s.b + 2 * res.circle_count - 2


def min_of_state(s: State, res: StateResolution) -> int:
    return s.a - s.b - 2 * res.circle_count + 2


def bracket_bruteforce(d: PlanarDiagram, cap: Optional[int] = None) -> IntLaurent:
    """Exact sum of phi over all 2^c states.

    Runs a depth-first scan over crossings with a rollback union-find, so
    each state costs two unions rather than a full restitch.  Refuses
    diagrams above the cap (default 24 crossings, env KBRACKET_CAP).
    """
    cap = state_cap_default() if cap is None else cap
    c = d.c
    if c > cap:
        raise CapExceeded(
            f"{c} crossings exceed the brute-force cap {cap}; "
            f"rerun with a cap of at least {c}",
            required=c,
        )

    n_he = 4 * c
    parent = list(range(n_he))
    size = [1] * n_he

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    trail: list[int] = []

    def union(x: int, y: int) -> int:
        rx, ry = find(x), find(y)
        if rx == ry:
            trail.append(-1)
            return 0
        if size[rx] > size[ry]:
            rx, ry = ry, rx
        parent[rx] = ry
        size[ry] += size[rx]
        trail.append(rx)
        return 1

    def undo() -> None:
        rx = trail.pop()
        if rx >= 0:
            ry = parent[rx]
            parent[rx] = rx
            size[ry] -= size[rx]

    count = n_he
    for h in range(n_he):
        t = d.twin[h]
        if h < t:
            count -= union(h, t)
    # No rollback below this baseline.
    trail.clear()

    joins = [( _join_pairs(v, "A"), _join_pairs(v, "B")) for v in range(c)]
    tally: dict[tuple[int, int], int] = {}

    def scan(v: int, circles: int, b_count: int) -> None:
        if v == c:
            key = (b_count, circles)
            tally[key] = tally.get(key, 0) + 1
            return
        for m in (0, 1):
            (p, q), (r, t) = joins[v][m]
            merged = union(p, q) + union(r, t)
            scan(v + 1, circles - merged, b_count + m)
            undo()
            undo()

    scan(0, count, 0)

    total = IntLaurent.zero()
    for (b_count, circles), n in sorted(tally.items()):
        term = delta_power(circles - 1).shifted(c - 2 * b_count) * n
        total = total + term
    return total


@dataclass(frozen=True)
class ExtremeStateData:
    which: Which
    resolution: StateResolution
    same_circle_chords: tuple[Chord, ...]
    max_or_min: int

    def to_json_dict(self) -> dict:
        return {
            "which": self.which,
            "circle_count": self.resolution.circle_count,
            "circles": [
                {"id": c.id, "edges": list(c.edges),
                 "slots": [list(s) for s in c.slots]}
                for c in self.resolution.circles
            ],
            "chords": [
                {"crossing": ch.crossing, "marker": ch.marker,
                 "ends": [[e.circle, e.slot] for e in ch.ends],
                 "same_circle": ch.same_circle}
                for ch in self.resolution.chords
            ],
            "same_circle_chords": [ch.crossing for ch in self.same_circle_chords],
            "max_or_min": self.max_or_min,
        }


def extreme_state(d: PlanarDiagram, which: Which) -> ExtremeStateData:
    """Resolve the all-A or all-B state and collect its same-circle chords."""
    s = State.all_A(d.c) if which == "A" else State.all_B(d.c)
    res = resolve(d, s)
    same = tuple(ch for ch in res.chords if ch.same_circle)
    if which == "A":
        extreme = d.c + 2 * res.circle_count - 2
    else:
        extreme = -(d.c + 2 * res.circle_count - 2)
    return ExtremeStateData(which, res, same, extreme)


@dataclass(frozen=True)
class ExtremeBounds:
    max_bound: int
    min_bound: int
    spread_bound: int


def extreme_bounds(d: PlanarDiagram) -> ExtremeBounds:
    """Degree bounds from the extreme states alone (no state sum)."""
    sa = resolve(d, State.all_A(d.c)).circle_count
    sb = resolve(d, State.all_B(d.c)).circle_count
    return ExtremeBounds(
        max_bound=d.c + 2 * sa - 2,
        min_bound=-(d.c + 2 * sb - 2),
        spread_bound=2 * d.c + 2 * (sa + sb - 2),
    )


@dataclass(frozen=True)
class SurfaceData:
    chi: int
    genus: int


def surface_characteristics(d: PlanarDiagram) -> SurfaceData:
    """Euler characteristic and genus of the extreme states surface."""
    sa = resolve(d, State.all_A(d.c)).circle_count
    sb = resolve(d, State.all_B(d.c)).circle_count
    chi = sa + sb - d.c
    if chi % 2:
        raise InternalInconsistency(f"odd states-surface characteristic {chi}")
    genus = (2 - chi) // 2
    if 4 * d.c - 4 * genus != 2 * d.c + 2 * (sa + sb) - 4:
        raise InternalInconsistency("surface identity 4c - 4g failed")
    return SurfaceData(chi, genus)


@dataclass(frozen=True)
class JonesData:
    normalized: IntLaurent
    jones_spread: int


def jones_data(d: PlanarDiagram, cap: Optional[int] = None) -> JonesData:
    """Writhe-normalized bracket and the Jones-scale spread.

    The conversion to the Jones variable divides exponents by -4; only the
    integer spread is exposed, never fractional exponents.
    """
    br = bracket_bruteforce(d, cap)
    if not br:
        raise InternalInconsistency("zero bracket polynomial")
    w = d.writhe()
    normalized = br.shifted(-3 * w) * (1 if w % 2 == 0 else -1)
    spread = normalized.spread()
    if spread % 4:
        raise InternalInconsistency(f"bracket spread {spread} not divisible by 4")
    return JonesData(normalized, spread // 4)
