"""Explicit 4-plat diagrams of Conway words and strand tracing on them.

The diagram of ``C(a1, ..., an)`` is the numerator closure of the rational
tangle obtained from the 0 tangle (n odd) or the infinity tangle (n even) by
adding ``an`` twists, then ``a(n-1)`` twists of the other kind, and so on
out to ``a1``.  Odd-indexed bands are horizontal twists, even-indexed bands
vertical ones, and a positive entry always puts the negative-slope strand on
top; this alternates the handedness between neighbouring bands.  The global
mirror is fixed so that the crossings of a positive even band in an all-even
word are positive crossings.

Each crossing keeps its four incident edges in counter-clockwise order with
the under strand on slots 0-2 and the over strand on slots 1-3.  After
orienting, slots are rotated so slot 0 is where the under strand enters; the
crossing is then positive exactly when the over strand enters at slot 3.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .conway import ConwayWord, as_word


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]
    band: int
    position: int
    sign: int = 0


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    word: ConwayWord | None = None

    @property
    def oriented(self) -> bool:
        return all(c.sign != 0 for c in self.crossings)

    def band_crossings(self, band: int) -> list[int]:
        return [i for i, c in enumerate(self.crossings) if c.band == band]


@dataclass(frozen=True)
class LinkDiagram:
    """Two-component diagram from smoothing one crossing of a knot diagram.

    Orientations (crossing signs) are inherited from the knot.
    """

    diagram: Diagram
    smoothed_band: int
    smoothed_position: int

    def components(self) -> list[frozenset[int]]:
        """Edge labels of each component; a split-off free loop has none."""
        d = self.diagram
        out = [frozenset(d.crossings[ci].slots[s] for ci, s in comp) for comp in trace_components(d)]
        return out + [frozenset()] * d.free_loops


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _twist_slots(sign: int, west_top: int, west_bottom: int,
                 east_top: int, east_bottom: int) -> tuple[int, int, int, int]:
    # corners of the crossing; positive sign: NW-SE strand on top
    nw, sw, se, ne = west_top, west_bottom, east_bottom, east_top
    if sign > 0:
        return (sw, se, ne, nw)
    return (nw, sw, se, ne)


def build_diagram(w) -> Diagram:
    """Unoriented 4-plat diagram of a word (closed by the numerator closure)."""
    w = as_word(w)
    n = len(w)
    counter = iter(range(2, 10**9))
    if n % 2 == 1:
        nw = ne = 0
        sw = se = 1
    else:
        nw = sw = 0
        ne = se = 1
    raw: list[tuple[tuple[int, int, int, int], int, int]] = []
    for band in range(n, 0, -1):
        a = w[band - 1]
        sign = 1 if a > 0 else -1
        for position in range(abs(a)):
            new_a, new_b = next(counter), next(counter)
            if band % 2 == 1:
                # horizontal twist of the two east ends
                slots = _twist_slots(sign, ne, se, new_a, new_b)
                ne, se = new_a, new_b
            else:
                # vertical twist of the two south ends, drawn below the tangle
                slots = _twist_slots(sign, sw, new_a, se, new_b)
                sw, se = new_a, new_b
            raw.append((slots, band, position))
    uf = _UnionFind()
    uf.union(nw, ne)
    uf.union(sw, se)
    crossings = tuple(
        Crossing(tuple(uf.find(e) for e in slots), band, position)
        for slots, band, position in raw
    )
    used = {e for c in crossings for e in c.slots}
    loops = {uf.find(e) for e in (nw, ne, sw, se)} - used
    return Diagram(crossings, len(loops), w)


def _incidence(d: Diagram) -> dict[int, list[tuple[int, int]]]:
    inc: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        for s, e in enumerate(c.slots):
            inc.setdefault(e, []).append((ci, s))
    for e, ends in inc.items():
        if len(ends) != 2:
            raise ValueError(f"edge {e} has {len(ends)} ends")
    return inc


def _other_end(inc, edge: int, here: tuple[int, int]) -> tuple[int, int]:
    a, b = inc[edge]
    return b if a == here else a


def trace_components(d: Diagram) -> list[list[tuple[int, int]]]:
    """Traverse every component; each is a list of (crossing, entry slot)."""
    inc = _incidence(d)
    seen: set[tuple[int, int]] = set()
    comps = []
    for ci in range(len(d.crossings)):
        for s0 in (0, 1):
            if (ci, s0) in seen:
                continue
            comp = []
            ci_, s = ci, s0
            while (ci_, s) not in seen:
                seen.add((ci_, s))
                comp.append((ci_, s))
                out = (s + 2) % 4
                seen.add((ci_, out))
                ci_, s = _other_end(inc, d.crossings[ci_].slots[out], (ci_, out))
            comps.append(comp)
    return comps


def component_count(d: Diagram) -> int:
    return len(trace_components(d)) + d.free_loops


def orient(d: Diagram) -> Diagram:
    """Orient a diagram by tracing each component from its first crossing.

    Slots are rotated so that the under strand enters at slot 0 and the sign
    of every crossing is recorded.
    """
    enter_under: dict[int, int] = {}
    enter_over: dict[int, int] = {}
    for comp in trace_components(d):
        for ci, s in comp:
            (enter_under if s % 2 == 0 else enter_over)[ci] = s
    crossings = []
    for ci, c in enumerate(d.crossings):
        rot = enter_under[ci]
        slots = c.slots[rot:] + c.slots[:rot]
        over_in = (enter_over[ci] - rot) % 4
        crossings.append(replace(c, slots=slots, sign=1 if over_in == 3 else -1))
    return replace(d, crossings=tuple(crossings))


def knot_diagram(w) -> Diagram:
    """Oriented diagram of a word that closes to a knot."""
    d = build_diagram(w)
    if component_count(d) != 1:
        raise ValueError(f"{as_word(w)} closes to a link, not a knot")
    return orient(d)


def gauss_sequence(d: Diagram) -> list[tuple[int, bool, int]]:
    """Crossing visits along a knot: (crossing index, is_over, sign)."""
    if not d.crossings and d.free_loops == 1:
        return []
    comps = trace_components(d)
    if len(comps) != 1 or d.free_loops:
        raise ValueError("Gauss sequence needs a single-component diagram")
    return [(ci, s % 2 == 1, d.crossings[ci].sign) for ci, s in comps[0]]


def smooth(d: Diagram, index: int) -> LinkDiagram:
    """Oriented smoothing of crossing ``index`` of an oriented knot diagram."""
    if not d.oriented:
        raise ValueError("smoothing needs an oriented diagram")
    c = d.crossings[index]
    e0, e1, e2, e3 = c.slots
    uf = _UnionFind()
    # under enters at 0, leaves at 2; over enters at 3 (+) or 1 (-)
    if c.sign > 0:
        uf.union(e0, e1)
        uf.union(e3, e2)
    else:
        uf.union(e0, e3)
        uf.union(e1, e2)
    rest = tuple(
        replace(x, slots=tuple(uf.find(e) for e in x.slots))
        for i, x in enumerate(d.crossings) if i != index
    )
    used = {e for x in rest for e in x.slots}
    loops = len({uf.find(e) for e in c.slots} - used)
    smoothed = Diagram(rest, d.free_loops + loops, d.word)
    return LinkDiagram(smoothed, c.band, c.position)


def linking_number(link: LinkDiagram | Diagram) -> int:
    """Half the signed count of crossings between the two components."""
    d = link.diagram if isinstance(link, LinkDiagram) else link
    comps = trace_components(d)
    if len(comps) + d.free_loops != 2:
        raise ValueError(
            f"linking number needs exactly 2 components, got {len(comps) + d.free_loops}")
    label = {}
    for k, comp in enumerate(comps):
        for ci, s in comp:
            label[(ci, s % 2)] = k
    total = sum(
        c.sign for ci, c in enumerate(d.crossings)
        if label[(ci, 0)] != label[(ci, 1)]
    )
    if total % 2:
        raise ValueError("odd inter-component crossing sum")
    return total // 2
