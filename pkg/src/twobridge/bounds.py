"""Bounds on the Delta-unknotting number and the Delta-Gordian distance.

Lower bounds come from a2: ``u(K) - |a2(K)|`` and
``d(K, K') - |a2(K) - a2(K')|`` are non-negative even integers.  Upper bounds
come from closed forms on special word shapes, from explicit band-exchange
certificates found by :mod:`twobridge.search`, and (tagged separately) from
values stated in the literature.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .catalog import AssertedValue, asserted_hubs, asserted_u_delta
from .conway import (
    ConwayWord,
    Verdict,
    as_word,
    equivalent,
    evaluate_fraction,
    mirror,
    normalize,
    reverse,
)
from .invariants import NotAKnotError, a2, a2_closed, closed_shape
from .search import MoveSequence, SearchConfig, search

# provenance tags
CLOSED = "closed-form"
SEARCH = "search"
ASSERTED = "asserted"
PARITY = "a2-parity"
TRIANGLE = "triangle"

DEFAULT_BUDGET = 8
# reports cap the search so that a query stays interactive
REPORT_CONFIG = SearchConfig(max_expansions=20_000)


@dataclass
class DeltaBoundReport:
    """Lower and upper bound with the source of each.

    ``provenance`` maps ``"lower"`` and ``"upper"`` to the tags of every
    source that attains the bound.
    """

    lower: int
    upper: int | None = None
    certificate: MoveSequence | None = None
    provenance: dict[str, list[str]] = field(default_factory=dict)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def candidates(self) -> tuple[int, ...] | None:
        """Every value the bounds still allow (parity is shared), or None if unbounded."""
        if self.upper is None:
            return None
        return tuple(range(self.lower, self.upper + 1, 2))

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "certificate": None if self.certificate is None else self.certificate.as_list(),
            "provenance": {k: list(v) for k, v in sorted(self.provenance.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> DeltaBoundReport:
        cert = d.get("certificate")
        certificate = None if cert is None else MoveSequence.from_list(cert)
        report = cls(d["lower"], d["upper"], certificate,
                     {k: list(v) for k, v in d.get("provenance", {}).items()})
        if report.exact != d.get("exact", report.exact):
            raise ValueError("inconsistent exact flag")
        return report

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=False)

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        if self.upper is None:
            return f">= {self.lower}"
        return " or ".join(map(str, self.candidates))


def _require_knot(w: ConwayWord) -> None:
    if not evaluate_fraction(w).is_knot:
        raise NotAKnotError(f"{w} closes to a 2-component link")


# -- closed forms -------------------------------------------------------------

def torus_u_delta(p: int, q: int) -> int:
    """u^Delta of the torus knot T(p, q): ``(p**2 - 1)(q**2 - 1)/24``."""
    if p < 1 or q < 1:
        raise ValueError("torus parameters must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is not a knot: gcd = {gcd(p, q)}")
    return (p * p - 1) * (q * q - 1) // 24


def _shape_tag(e: tuple[int, ...]) -> str | None:
    if len(e) == 1 and e[0] > 0 and e[0] % 2:
        return "torus"
    shape = closed_shape(e)
    if shape is None or shape == "even-odd-odd":
        return None
    if len(e) == 2:
        return "two-bands"
    return shape


def u_delta_closed(w) -> tuple[int, str] | None:
    """Exact u^Delta when the word, up to mirror image and reading direction,
    is a torus knot ``C(m)`` or has only positive even entries with at most
    a positive odd last entry.  Returns ``(value, shape tag)`` or None."""
    w = normalize(as_word(w))
    _require_knot(w)
    if len(w) == 0:
        return 0, "trivial"
    for cand in (w, mirror(w), reverse(w), mirror(reverse(w))):
        tag = _shape_tag(cand.entries)
        if tag == "torus":
            return torus_u_delta(2, cand[0]), tag
        if tag is not None:
            return abs(a2_closed(cand)), tag
    return None


def v_delta_upper(w) -> int:
    """Upper bound for ``C(even, odd, odd)`` with positive entries:
    ``a1(a2 + a3)/4 + (a3**2 - 8 a3 + 7)/8``."""
    e = as_word(w).entries
    if closed_shape(e) != "even-odd-odd":
        raise ValueError(f"{as_word(w)} is not C(even, odd, odd) with positive entries")
    a1, a2_, a3 = e
    total = 2 * a1 * (a2_ + a3) + a3 * a3 - 8 * a3 + 7
    return total // 8


def _v_delta_any(w: ConwayWord) -> int | None:
    for cand in (w, mirror(w), reverse(w), mirror(reverse(w))):
        if closed_shape(cand) == "even-odd-odd":
            return v_delta_upper(cand)
    return None


def _parity_round(value: int, parity: int) -> int:
    return value if (value - parity) % 2 == 0 else value + 1


def lower_bound(w) -> int:
    """``|a2|`` for nontrivial knots with a2 != 0, 2 when a2 = 0, 0 for the unknot."""
    w = as_word(w)
    _require_knot(w)
    if evaluate_fraction(w).is_trivial:
        return 0
    return _parity_round(max(abs(a2(w)), 1), a2(w))


def search_upper_bound(w, budget: int = DEFAULT_BUDGET,
                       config: SearchConfig = SearchConfig()) -> tuple[int, MoveSequence] | None:
    """Cheapest band-exchange certificate to the unknot within ``budget``."""
    result = search(w, None, budget, config)
    if result is None:
        return None
    return result.cost, result.certificate


def _upper_candidates(w: ConwayWord) -> list[tuple[int, str]]:
    """Non-search upper bounds on u^Delta, as (value, tag)."""
    out = []
    closed = u_delta_closed(w)
    if closed is not None:
        out.append((closed[0], f"{CLOSED}:{closed[1]}"))
    v = _v_delta_any(normalize(w))
    if v is not None:
        out.append((v, f"{CLOSED}:even-odd-odd"))
    stated = asserted_u_delta(w)
    if stated is not None and stated.upper is not None:
        out.append((stated.upper, ASSERTED))
    return out


def _best(cands: list[tuple[int, str]]) -> tuple[int | None, list[str]]:
    if not cands:
        return None, []
    best = min(v for v, _ in cands)
    return best, sorted({t for v, t in cands if v == best})


def bound_report(w, budget: int = DEFAULT_BUDGET,
                 config: SearchConfig = REPORT_CONFIG) -> DeltaBoundReport:
    """Combine every available bound on u^Delta of one knot."""
    w = as_word(w)
    _require_knot(w)
    lower = lower_bound(w)
    lower_tags = [PARITY]
    stated = asserted_u_delta(w)
    if stated is not None and stated.lower is not None and stated.lower > lower:
        lower, lower_tags = stated.lower, [ASSERTED]
    elif stated is not None and stated.lower == lower:
        lower_tags.append(ASSERTED)

    upper, upper_tags = _best(_upper_candidates(w))
    certificate = None
    limit = budget if upper is None else min(budget, upper)
    if limit >= lower:
        found = search_upper_bound(w, limit, config)
        if found is not None:
            cost, certificate = found
            if upper is None or cost < upper:
                upper, upper_tags = cost, [SEARCH]
            else:
                upper_tags = sorted(set(upper_tags) | {SEARCH})
    if upper is not None and upper < lower:
        raise ValueError(f"{w}: computed upper bound {upper} is below the stated value {lower}")
    return DeltaBoundReport(lower, upper, certificate, {"lower": lower_tags, "upper": upper_tags})


# -- distances ------------------------------------------------------------------

def _two_even_bands(w: ConwayWord) -> tuple[int, int] | None:
    """``(a, b)`` if the class has a word C(a, b) with positive even entries."""
    e = normalize(w).entries
    if len(e) != 2:
        return None
    # C(a, b) and C(-b, -a) are the same knot; C(b, a) is its mirror image
    for cand in (e, (-e[1], -e[0])):
        if all(a > 0 and a % 2 == 0 for a in cand):
            return cand
    return None


def dg_closed_c2(w1, w2) -> int:
    """``|a1 b1 - a2 b2| / 4`` for C(a1, b1), C(a2, b2) with positive even,
    componentwise comparable entries."""
    e1, e2 = as_word(w1).entries, as_word(w2).entries
    if len(e1) != 2 or len(e2) != 2 or any(a <= 0 or a % 2 for a in e1 + e2):
        raise ValueError("both words must be C(a, b) with positive even entries")
    le = e1[0] <= e2[0] and e1[1] <= e2[1]
    ge = e1[0] >= e2[0] and e1[1] >= e2[1]
    if not (le or ge):
        raise ValueError(f"{as_word(w1)} and {as_word(w2)} are not comparable; use dg_bounds")
    return abs(e1[0] * e1[1] - e2[0] * e2[1]) // 4


def _two_band_upper(w1: ConwayWord, w2: ConwayWord) -> tuple[int, str] | None:
    x, y = _two_even_bands(w1), _two_even_bands(w2)
    if x is None or y is None:
        return None
    try:
        return dg_closed_c2(x, y), f"{CLOSED}:two-bands"
    except ValueError:
        pass
    # incomparable: go round one of the two corners of the lattice
    corners = [(x[0], y[1]), (y[0], x[1])]
    best = min(dg_closed_c2(x, c) + dg_closed_c2(c, y) for c in corners)
    return best, f"{CLOSED}:two-bands-corner"


def _second_band_upper(w1: ConwayWord, w2: ConwayWord) -> tuple[int, str] | None:
    """Words differing only in the second entry, with an even first entry:
    each change of the second entry by 2 costs |first|/2."""
    for x in (w1, reverse(w1)):
        for y in (w2, reverse(w2)):
            ex, ey = x.entries, y.entries
            if len(ex) != len(ey) or len(ex) < 2 or ex[0] % 2:
                continue
            if ex[0] != ey[0] or ex[2:] != ey[2:] or (ex[1] - ey[1]) % 2:
                continue
            return abs(ex[0]) * abs(ex[1] - ey[1]) // 4, f"{CLOSED}:second-band"
    return None


def _u_upper(w: ConwayWord) -> tuple[int | None, list[str]]:
    if evaluate_fraction(w).is_trivial:
        return 0, [CLOSED]
    return _best(_upper_candidates(w))


def dg_bounds(w1, w2, budget: int = 0, config: SearchConfig = REPORT_CONFIG) -> DeltaBoundReport:
    """Bounds on the Delta-Gordian distance between two knots.

    The result does not depend on argument order, except that a search
    certificate always starts from the first word.
    """
    w1, w2 = as_word(w1), as_word(w2)
    _require_knot(w1)
    _require_knot(w2)
    if equivalent(w1, w2) is Verdict.SAME:
        return DeltaBoundReport(0, 0, None, {"lower": [CLOSED], "upper": [CLOSED]})
    diff = abs(a2(w1) - a2(w2))
    lower = _parity_round(max(diff, 1), diff)

    cands: list[tuple[int, str]] = []
    for rule in (_two_band_upper, _second_band_upper):
        hit = rule(w1, w2)
        if hit is None:
            hit = rule(w2, w1)
        if hit is not None:
            cands.append(hit)
    u1, t1 = _u_upper(w1)
    u2, t2 = _u_upper(w2)
    if u1 is not None and u2 is not None:
        tag = ASSERTED if ASSERTED in t1 + t2 else TRIANGLE
        cands.append((u1 + u2, f"{tag}:via-unknot"))
    hubs1 = asserted_hubs(w1)
    hubs2 = asserted_hubs(w2)
    for h1, d1, _ in hubs1:
        for h2, d2, _ in hubs2:
            if equivalent(h1, h2) is Verdict.SAME:
                cands.append((d1 + d2, f"{ASSERTED}:via-{h1}"))
    upper, upper_tags = _best(cands)

    certificate = None
    if budget > 0 and (upper is None or lower < upper):
        limit = budget if upper is None else min(budget, upper - 1)
        if limit >= lower:
            found = search(w1, w2, limit, config)
            if found is not None:
                upper, upper_tags = found.cost, [SEARCH]
                certificate = found.certificate
    return DeltaBoundReport(lower, upper, certificate, {"lower": [PARITY], "upper": upper_tags})
