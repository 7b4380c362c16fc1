"""PD codes and the planar combinatorial map of a link diagram.

A PD code lists one 4-tuple of edge labels per crossing, read
counterclockwise starting at the incoming under-strand.  With the tuple
written ``(a, b, c, d)`` the under-strand runs a -> c and the over-strand
occupies b and d.  Half-edges are numbered ``4*v + p`` for crossing ``v``
and tuple position ``p``; the rotation system is position order, and faces
are traced as orbits of ``h -> sigma(twin(h))``.

Split and non-reduced diagrams are accepted here and by the state-sum
machinery; the skeleton module re-checks the stricter hypotheses it needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalInconsistency, NotPlanarError, ParseError, PreconditionFailed

_TERM_RE = re.compile(r"X\(\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*\)([+-]?)")


@dataclass(frozen=True)
class PDCode:
    """A syntactically validated PD code.

    ``signs`` carries the optional explicit crossing-sign annotations
    (+1, -1 or None) in crossing order; most inputs leave them all None.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[Optional[int], ...] = ()
    name: Optional[str] = None

    def __post_init__(self):
        if not self.signs:
            object.__setattr__(self, "signs", (None,) * len(self.crossings))

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        seen = set()
        for t in self.crossings:
            seen.update(t)
        return sorted(seen)


def _validate_label_multiset(crossings: Sequence[tuple[int, int, int, int]]) -> None:
    if not crossings:
        raise ParseError("empty PD code: at least one crossing is required")
    counts: dict[int, int] = {}
    for t in crossings:
        for lab in t:
            counts[lab] = counts.get(lab, 0) + 1
    bad = {lab: n for lab, n in counts.items() if n != 2}
    if bad:
        detail = ", ".join(f"{lab} appears {n} times" for lab, n in sorted(bad.items()))
        raise ParseError(f"each edge label must appear exactly twice: {detail}")
    if len(counts) != 2 * len(crossings):
        raise ParseError(
            f"expected {2 * len(crossings)} distinct labels, found {len(counts)}"
        )


def parse_pd(text: str) -> PDCode:
    """Parse PD text: whitespace-separated ``X(a,b,c,d)`` terms.

    Lines starting with ``#`` are comments; an optional ``name <string>``
    header names the diagram; a ``+`` or ``-`` directly after a term pins
    that crossing's sign explicitly.
    """
    name: Optional[str] = None
    body_parts: list[str] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("name ") and name is None and not body_parts:
            name = stripped[5:].strip()
            continue
        body_parts.append(stripped)
    body = " ".join(body_parts)
    if not body.strip():
        raise ParseError("empty input: no X(a,b,c,d) terms found")

    crossings: list[tuple[int, int, int, int]] = []
    signs: list[Optional[int]] = []
    pos = 0
    for m in _TERM_RE.finditer(body):
        between = body[pos:m.start()].strip()
        if between:
            raise ParseError(f"unexpected text in PD input: {between!r}")
        t = tuple(int(g) for g in m.groups()[:4])
        if min(t) < 1:
            raise ParseError(f"edge labels must be positive integers, got {t}")
        crossings.append(t)  # type: ignore[arg-type]
        suffix = m.group(5)
        signs.append(1 if suffix == "+" else -1 if suffix == "-" else None)
        pos = m.end()
    trailing = body[pos:].strip()
    if trailing:
        raise ParseError(f"unparsable PD text: {trailing!r}")

    _validate_label_multiset(crossings)
    return PDCode(tuple(crossings), tuple(signs), name)


def serialize_pd(pd: PDCode) -> str:
    """Canonical one-record text form; parse_pd round-trips it."""
    parts = []
    for t, s in zip(pd.crossings, pd.signs):
        suffix = "" if s is None else ("+" if s > 0 else "-")
        parts.append(f"X({t[0]},{t[1]},{t[2]},{t[3]}){suffix}")
    body = " ".join(parts)
    if pd.name is not None:
        return f"name {pd.name}\n{body}\n"
    return body + "\n"


def parse_corpus(text: str) -> list[PDCode]:
    """Parse a corpus of named PD records.

    Each nonempty non-comment line is one record: a bare name token
    followed by the X(...) terms of that diagram.  Records without a
    leading name get a positional one.
    """
    out: list[PDCode] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("X("):
            name = None
            body = stripped
        else:
            first, _, rest = stripped.partition(" ")
            name, body = first, rest
        if not body.strip():
            raise ParseError(f"corpus line {lineno}: record {name!r} has no crossings")
        try:
            pd = parse_pd(body)
        except ParseError as exc:
            raise ParseError(f"corpus line {lineno}: {exc}") from exc
        out.append(PDCode(pd.crossings, pd.signs, name if name else f"line{lineno}"))
    if not out:
        raise ParseError("empty corpus")
    return out


@dataclass(frozen=True)
class DiagramReport:
    connected: bool
    reduced: bool
    nugatory_crossings: tuple[int, ...]
    component_count: int


class PlanarDiagram:
    """A validated combinatorial map built from a PD code.

    Half-edge ``h = 4*v + p``; ``twin[h]`` is the other half of the same
    edge; faces are the orbits of ``h -> rot(twin[h])`` where ``rot``
    advances the tuple position counterclockwise.  Construction fails if
    the face count violates the sphere Euler formula on any connected
    piece of the projection graph.
    """

    def __init__(self, pd: PDCode):
        self.pd = pd
        self.c = len(pd.crossings)
        n_he = 4 * self.c

        occ: dict[int, list[int]] = {}
        for v, t in enumerate(pd.crossings):
            for p, lab in enumerate(t):
                occ.setdefault(lab, []).append(4 * v + p)
        for lab, hs in occ.items():
            if len(hs) != 2:
                raise ParseError(f"label {lab} appears {len(hs)} times")
        self.edge_ends: dict[int, tuple[int, int]] = {
            lab: (hs[0], hs[1]) for lab, hs in occ.items()
        }
        self.edge_labels: list[int] = sorted(occ)

        twin = [0] * n_he
        for h1, h2 in self.edge_ends.values():
            twin[h1], twin[h2] = h2, h1
        self.twin = twin

        self.label_of = [0] * n_he
        for lab, (h1, h2) in self.edge_ends.items():
            self.label_of[h1] = self.label_of[h2] = lab

        # Projection-graph components, via shared edges.
        comp = list(range(self.c))

        def find(x: int) -> int:
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for h1, h2 in self.edge_ends.values():
            a, b = find(h1 // 4), find(h2 // 4)
            if a != b:
                comp[a] = b
        self.projection_component_of = [find(v) for v in range(self.c)]
        self.projection_components = len(set(self.projection_component_of))

        # Face tracing: orbits of h -> rot(twin[h]).
        face_of = [-1] * n_he
        faces: list[tuple[int, ...]] = []
        for start in range(n_he):
            if face_of[start] >= 0:
                continue
            walk = []
            h = start
            while face_of[h] < 0:
                face_of[h] = len(faces)
                walk.append(h)
                t = twin[h]
                h = (t & ~3) | ((t + 1) & 3)
            if h != start:
                raise InternalInconsistency("face walk closed at a foreign half-edge")
            faces.append(tuple(walk))
        self.faces = tuple(faces)
        self.face_of = face_of

        expected = self.c + 2 * self.projection_components
        if len(faces) != expected:
            raise NotPlanarError(
                f"face count {len(faces)} != crossings + 2*components = {expected}; "
                "the PD code is not realizable as a map on the sphere"
            )

        self._trace_strands()
        self._orient()

    # -- strand structure ---------------------------------------------------

    def _trace_strands(self) -> None:
        """Partition edges into link components and walk each one."""
        n_he = 4 * self.c
        seen = [False] * n_he
        components: list[list[int]] = []  # directed half-edge walks
        comp_of_label: dict[int, int] = {}
        for lab in self.edge_labels:
            h0 = self.edge_ends[lab][0]
            if seen[h0]:
                continue
            walk = []
            h = h0
            while not seen[h]:
                seen[h] = True
                seen[self.twin[h]] = True
                walk.append(h)
                h = self.twin[h] ^ 2  # cross the vertex along the strand
            for h in walk:
                comp_of_label[self.label_of[h]] = len(components)
            components.append(walk)
        self._strand_walks = components
        self.component_of_label = comp_of_label
        self.link_components = len(components)

    def _orient(self) -> None:
        """Choose a direction per link component.

        A walk step at half-edge h traverses edge(h) from the h end to the
        twin end.  Preference order: the direction honoring the
        incoming-under convention at the most crossings, then the one with
        more cyclic label ascents.
        """
        head_of: dict[int, int] = {}
        consistent: list[bool] = []
        for walk in self._strand_walks:
            fwd = walk
            rev = [self.twin[h] for h in reversed(walk)]

            def under_score(w: list[int]) -> int:
                # arriving half-edge is twin[h]; position 0 is the convention
                return sum(1 for h in w if self.twin[h] & 3 == 0)

            def under_passages(w: list[int]) -> int:
                return sum(1 for h in w if self.twin[h] & 3 in (0, 2))

            def ascents(w: list[int]) -> int:
                labs = [self.label_of[h] for h in w]
                return sum(
                    1 for i in range(len(labs)) if labs[(i + 1) % len(labs)] > labs[i]
                )

            sf, sr = under_score(fwd), under_score(rev)
            if sf != sr:
                chosen = fwd if sf > sr else rev
            elif ascents(fwd) != ascents(rev):
                chosen = fwd if ascents(fwd) > ascents(rev) else rev
            else:
                chosen = fwd
            total_under = under_passages(chosen)
            consistent.append(under_score(chosen) == total_under)
            for h in chosen:
                head_of[self.label_of[h]] = self.twin[h]
        self.head_of = head_of
        self.component_consistent = consistent

    # -- public queries ------------------------------------------------------

    def is_over_position(self, p: int) -> bool:
        return p & 1 == 1

    def passes_over(self, h: int) -> bool:
        """True when half-edge h belongs to the over-strand at its crossing."""
        return h & 1 == 1

    def crossing_sign(self, v: int) -> int:
        """Right-hand-rule sign of crossing v under the chosen orientations."""
        if self.pd.signs[v] is not None:
            return self.pd.signs[v]
        under0, over1 = self.pd.crossings[v][0], self.pd.crossings[v][1]
        comp_u = self.component_of_label[under0]
        comp_o = self.component_of_label[over1]
        if not (self.component_consistent[comp_u] and self.component_consistent[comp_o]):
            raise PreconditionFailed(
                f"crossing {v}: orientation could not be assigned consistently; "
                "annotate the crossing sign explicitly (X(...)+ / X(...)-)"
            )
        u_in = 0 if self.head_of[self.label_of[4 * v + 0]] == 4 * v + 0 else 2
        o_in = 1 if self.head_of[self.label_of[4 * v + 1]] == 4 * v + 1 else 3
        return 1 if (o_in - u_in) % 4 == 3 else -1

    def writhe(self) -> int:
        return sum(self.crossing_sign(v) for v in range(self.c))

    def is_connected(self) -> bool:
        return self.projection_components == 1

    def nugatory_crossings(self) -> tuple[int, ...]:
        """Crossings that are cut vertices of the projection graph.

        Crossing v is nugatory when the four edge-ends at v do not all
        reach each other through the rest of the graph; loops at v count
        as their own pocket.
        """
        out = []
        for v in range(self.c):
            if self._is_cut_vertex(v):
                out.append(v)
        return tuple(out)

    def _is_cut_vertex(self, v: int) -> bool:
        parent = list(range(self.c))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for lab, (h1, h2) in self.edge_ends.items():
            a, b = h1 // 4, h2 // 4
            if a != v and b != v:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb

        # Group the four positions at v: same loop, or endpoints joined in G - v.
        groups: dict[object, list[int]] = {}
        for p in range(4):
            h = 4 * v + p
            other = self.twin[h] // 4
            lab = self.label_of[h]
            key: object
            if other == v:
                key = ("loop", lab)
            else:
                key = ("comp", find(other))
            groups.setdefault(key, []).append(p)
        return len(groups) > 1

    def validate(self) -> DiagramReport:
        nug = self.nugatory_crossings()
        return DiagramReport(
            connected=self.is_connected(),
            reduced=not nug,
            nugatory_crossings=nug,
            component_count=self.link_components,
        )


def build_diagram(pd: PDCode) -> PlanarDiagram:
    """Assemble and Euler-check the combinatorial map for a PD code."""
    return PlanarDiagram(pd)


def mirror_pd(pd: PDCode) -> PDCode:
    """Reflect the diagram in the plane: reverse every rotation.

    The bracket of the result is the input's under A -> A^-1, and the
    writhe negates.
    """
    crossings = tuple((a, d, c, b) for (a, b, c, d) in pd.crossings)
    signs = tuple(None if s is None else -s for s in pd.signs)
    return PDCode(crossings, signs, pd.name)


def flip_crossings_pd(pd: PDCode) -> PDCode:
    """Swap over and under strands at every crossing (the other mirror).

    Tuples rotate by one position so the old over-strand becomes the
    incoming under; the result is then re-rotated for orientation
    consistency.
    """
    crossings = tuple((b, c, d, a) for (a, b, c, d) in pd.crossings)
    signs = tuple(None if s is None else -s for s in pd.signs)
    return canonicalize_orientations(PDCode(crossings, signs, pd.name))


def canonicalize_orientations(pd: PDCode) -> PDCode:
    """Rotate tuples by two positions where needed so that every
    under-passage enters at tuple position 0 for some choice of component
    directions.  Leaves already-consistent codes unchanged.
    """
    d = PlanarDiagram(pd)
    new_crossings = list(pd.crossings)
    changed = False
    for v, t in enumerate(pd.crossings):
        lab0 = t[0]
        # If the chosen orientation has the edge at position 0 flowing out,
        # the under-strand enters at position 2: rotate the tuple.
        if d.head_of[lab0] != 4 * v + 0:
            new_crossings[v] = (t[2], t[3], t[0], t[1])
            changed = True
    if not changed:
        return pd
    return PDCode(tuple(new_crossings), pd.signs, pd.name)
