"""Dev search: 8-crossing braid-closure diagrams matching Table-row targets."""
import itertools
import sys

sys.setrecursionlimit(10000)

from kbracket.builders import braid_closure
from kbracket.diagram import build_diagram
from kbracket.states import bracket_bruteforce, extreme_bounds, jones_data
from kbracket.circlegraph import extreme_coefficient
from kbracket.skeleton import build_skeleton


def knot_closure_perm(word, n):
    perm = list(range(n))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # single cycle?
    seen = {0}
    x = perm[0]
    while x not in seen:
        seen.add(x)
        x = perm[x]
    return len(seen) == n


def canon(word):
    """Cyclic-rotation canonical form to dedupe."""
    best = None
    lw = list(word)
    for i in range(len(lw)):
        rot = tuple(lw[i:] + lw[:i])
        if best is None or rot < best:
            best = rot
    return best


def survey(length, strands, jones_ref=None):
    gens = [g for k in range(1, strands) for g in (k, -k)]
    seen = set()
    rows = {}
    for word in itertools.product(gens, repeat=length):
        if not knot_closure_perm(word, strands):
            continue
        # skip words with free cancellation (adjacent inverse pair, cyclically)
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
        rep = d.validate()
        if not rep.reduced:
            continue
        eb = extreme_bounds(d)
        if eb.spread_bound % 4:
            continue
        bh = eb.spread_bound // 4
        if bh > 8:
            continue
        ra = extreme_coefficient(d, "A")
        rb = extreme_coefficient(d, "B")
        jd = jones_data(d)
        key = (bh, rb.f_value, ra.f_value, jd.jones_spread, str(jd.normalized))
        rows.setdefault(key, []).append(word)
    return rows


if __name__ == "__main__":
    rows = survey(8, 3)
    print("distinct (bh, aB, aA, beta, jones) classes:", len(rows))
    for key in sorted(rows, key=lambda k: (k[0], k[3], k[4])):
        bh, ab, aa, beta, jones = key
        words = rows[key]
        print(f"bh={bh} aB={ab} aA={aa} beta={beta} n={len(words)} jones={jones}")
        print("   example:", words[0])
