"""Independent oracles and hypothesis strategies shared by the tests.

Nothing here reuses the package's a2 code: the Alexander-polynomial route
works from (p, q) alone, the Gauss-diagram route from the traced crossing
sequence alone, and the determinant from the crossing incidence alone.
"""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from twobridge.conway import ConwayWord, evaluate_fraction
from twobridge.diagram import Diagram, gauss_sequence


def a2_alexander(p: int, q: int) -> int:
    """a2 from the two-bridge Alexander polynomial
    ``sum_k (-1)**k t**(e_1 + ... + e_k)`` with ``e_i = (-1)**floor(i q / p)``, q odd."""
    if p == 1:
        return 0
    if q % 2 == 0:
        q -= p
    coeffs: dict[int, int] = {}
    e = 0
    for k in range(p):
        if k:
            e += 1 if ((k * q) // p) % 2 == 0 else -1
        coeffs[e] = coeffs.get(e, 0) + (1 if k % 2 == 0 else -1)
    total = sum(coeffs.values())
    assert abs(total) == 1
    # Delta(t) = 1 + a2 (t - 2 + 1/t) + ..., so a2 is half the variance about the centre
    centre = Fraction(sum(c * k for k, c in coeffs.items()), total)
    value = Fraction(sum(c * (k - centre) ** 2 for k, c in coeffs.items()), 2 * total)
    assert value.denominator == 1
    return int(value)


def v2_gauss(d: Diagram) -> int:
    """Polyak-Viro count: pairs met as (a over, b under, a under, b over) from the base point."""
    seq = gauss_sequence(d)
    visits: dict[int, list[tuple[int, bool, int]]] = {}
    for i, (c, over, sign) in enumerate(seq):
        visits.setdefault(c, []).append((i, over, sign))
    total = 0
    for a, ((a1, a_over, sa), (a2, _, _)) in visits.items():
        if not a_over:
            continue
        for b, ((b1, b_over, sb), (b2, _, _)) in visits.items():
            if b != a and not b_over and a1 < b1 < a2 < b2:
                total += sa * sb
    return total


def coloring_determinant(d: Diagram) -> int:
    """|det| of the Fox coloring matrix with one row and column removed."""
    if not d.crossings:
        return 1 if d.free_loops == 1 else 0
    if d.free_loops:
        return 0  # a split-off circle
    arcs = _arcs(d)
    n = len(set(arcs.values()))
    if n != len(d.crossings):
        return 0  # some component never passes under, so it lifts off as a split circle
    index = {a: i for i, a in enumerate(sorted(set(arcs.values())))}
    rows = []
    for c in d.crossings:
        row = [0] * n
        row[index[arcs[c.slots[1]]]] += 2
        row[index[arcs[c.slots[0]]]] -= 1
        row[index[arcs[c.slots[2]]]] -= 1
        rows.append(row)
    minor = [r[1:] for r in rows[1:]]
    return abs(_bareiss(minor))


def _arcs(d: Diagram) -> dict[int, int]:
    # an arc runs between under-crossings; edges joined through over-crossings share an arc
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        for e in c.slots:
            find(e)
        a, b = find(c.slots[1]), find(c.slots[3])
        parent[max(a, b)] = min(a, b)
    return {e: find(e) for e in parent}


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def random_words(count: int, seed: int, lo: int = -6, hi: int = 6, max_len: int = 8,
                 knots_only: bool = False) -> list[ConwayWord]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        w = ConwayWord(rng.randint(lo, hi) for _ in range(rng.randint(1, max_len)))
        if knots_only and not evaluate_fraction(w).is_knot:
            continue
        out.append(w)
    return out


entries = st.integers(min_value=-6, max_value=6)
words = st.lists(entries, min_size=0, max_size=8).map(ConwayWord)
knot_words = words.filter(lambda w: evaluate_fraction(w).is_knot)
even_entries = st.integers(min_value=1, max_value=4).map(lambda k: 2 * k)


@st.composite
def all_even_words(draw, max_pairs: int = 2):
    n = 2 * draw(st.integers(min_value=1, max_value=max_pairs))
    return ConwayWord(draw(st.lists(even_entries, min_size=n, max_size=n)))
