"""Dev search: 9-crossing braid-closure diagrams for the nine-crossing rows."""
import itertools
import sys

from kbracket.builders import braid_closure
from kbracket.diagram import build_diagram
from kbracket.states import extreme_bounds, jones_data
from kbracket.circlegraph import extreme_coefficient
from kbracket.skeleton import build_skeleton


def knot_closure_perm(word, n):
    perm = list(range(n))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = {0}
    x = perm[0]
    while x not in seen:
        seen.add(x)
        x = perm[x]
    return len(seen) == n


def canon(word):
    best = None
    lw = list(word)
    for i in range(len(lw)):
        rot = tuple(lw[i:] + lw[:i])
        if best is None or rot < best:
            best = rot
    return best


def survey(length, strands, want_bh):
    gens = [g for k in range(1, strands) for g in (k, -k)]
    seen = set()
    rows = {}
    for word in itertools.product(gens, repeat=length):
        if not knot_closure_perm(word, strands):
            continue
        if any(word[i] == -word[(i + 1) % length] for i in range(length)):
            continue
        cw = canon(word)
        if cw in seen:
            continue
        seen.add(cw)
        try:
            d = build_diagram(braid_closure(list(word), strands=strands))
        except Exception:
            continue
        if not d.validate().reduced:
            continue
        bh = extreme_bounds(d).spread_bound // 4
        if bh not in want_bh:
            continue
        ra = extreme_coefficient(d, "A")
        rb = extreme_coefficient(d, "B")
        jd = jones_data(d)
        det = abs(sum(c * (-1) ** (e // 4) for e, c in jd.normalized.terms()))
        key = (bh, rb.f_value, ra.f_value, jd.jones_spread, det, str(jd.normalized))
        if key not in rows:
            try:
                g = build_skeleton(d)
                skel = (g.v, g.e, g.r)
            except Exception:
                skel = None
            rows[key] = (word, skel, [])
        rows[key][2].append(word)
    return rows


if __name__ == "__main__":
    rows = survey(9, 3, want_bh={7, 8})
    rows4 = survey(9, 4, want_bh={7, 8})
    print("=== 3-braid classes:", len(rows))
    for key in sorted(rows, key=lambda k: (k[0], k[1], k[2], k[3], k[5])):
        bh, ab, aa, beta, det, jones = key
        word, skel, words = rows[key]
        print(f"bh={bh} aB={ab} aA={aa} beta={beta} det={det} skel={skel} n={len(words)}")
        print(f"   jones={jones}")
        print(f"   word={word}")
    print("=== 4-braid classes:", len(rows4))
    for key in sorted(rows4, key=lambda k: (k[0], k[1], k[2], k[3], k[5])):
        bh, ab, aa, beta, det, jones = key
        word, skel, words = rows4[key]
        print(f"bh={bh} aB={ab} aA={aa} beta={beta} det={det} skel={skel} n={len(words)}")
        print(f"   jones={jones}")
        print(f"   word={word}")
