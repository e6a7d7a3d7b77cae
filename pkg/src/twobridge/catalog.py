"""Named two-bridge knots and the Delta-unknotting values stated for them.

Names follow the Rolfsen table.  Asserted values are a separate tier from
anything computed in this package: they record what is claimed in the
source literature, with a short description of where the claim comes from,
and reports keep the ``asserted`` tag whenever one of them is used.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .conway import (
    ConwayWord,
    SchubertPair,
    Verdict,
    as_word,
    equivalent_pairs,
    evaluate_fraction,
    parse_word,
)
from .family import match_family


@dataclass(frozen=True)
class KnotIdentity:
    name: str
    word: ConwayWord | None

    @property
    def pair(self) -> SchubertPair | None:
        return None if self.word is None else evaluate_fraction(self.word)


@dataclass(frozen=True)
class AssertedValue:
    """A stated value of u^Delta.

    ``kind`` is ``exact`` (one value), ``interval`` (the listed values, all
    of one parity) or ``unknown`` (no values).
    """

    name: str
    kind: str
    values: tuple[int, ...]
    citation: str

    def __post_init__(self):
        if self.kind == "exact" and len(self.values) != 1:
            raise ValueError("an exact value needs exactly one entry")
        if self.kind == "interval" and len({v % 2 for v in self.values}) != 1:
            raise ValueError(f"interval {self.values} mixes parities")
        if self.kind == "unknown" and self.values:
            raise ValueError("unknown values carry no entries")

    @property
    def lower(self) -> int | None:
        return min(self.values) if self.values else None

    @property
    def upper(self) -> int | None:
        return max(self.values) if self.values else None

    def as_dict(self) -> dict:
        return {"kind": self.kind, "values": list(self.values), "citation": self.citation}


_FAMILY_CITE = "family C(beta, bn..b1, 1,1,1,1,1, 1-b1, -b2..-bn): one Delta-move unknots it"
_OPEN_CITE = "open cases among knots with ten crossings"

_KNOTS = [
    ("3_1", "C(3)"), ("4_1", "C(2,2)"), ("5_1", "C(5)"),
    ("6_1", "C(4,2)"), ("6_2", "C(3,1,2)"), ("6_3", "C(2,1,1,2)"),
    ("7_1", "C(7)"), ("7_6", "C(2,2,1,2)"), ("7_7", "C(2,1,1,1,2)"),
    ("8_1", "C(6,2)"), ("8_2", "C(5,1,2)"), ("8_3", "C(4,4)"),
    ("8_11", "C(3,2,1,2)"), ("8_13", "C(3,1,1,1,2)"),
    ("9_1", "C(9)"), ("9_12", "C(4,2,1,2)"), ("9_14", "C(4,1,1,1,2)"),
    ("10_1", "C(8,2)"), ("10_2", "C(7,1,2)"), ("10_3", "C(6,4)"),
    ("10_6", "C(5,3,2)"), ("10_7", "C(5,2,1,2)"), ("10_10", "C(5,1,1,1,2)"),
    ("10_19", "C(4,1,1,1,3)"), ("10_25", "C(3,2,2,1,2)"),
    ("10_32", "C(3,1,1,1,2,2)"),
    # named in the open-case list without a printed Conway word
    ("10_14", None), ("10_30", None), ("10_36", None), ("10_38", None),
    ("9_29", None),
]

CATALOG: dict[str, KnotIdentity] = {
    name: KnotIdentity(name, None if w is None else parse_word(w)) for name, w in _KNOTS
}

TABLE1_NAMES = ("3_1", "4_1", "6_2", "6_3", "7_6", "7_7", "8_11", "8_13",
                "9_12", "9_14", "10_7", "10_10", "10_19", "10_32")
TABLE2_NAMES = ("4_1", "6_1", "8_1", "8_3", "10_1", "10_3")
EXCLUDED_FROM_FAMILY = ("10_30", "10_36", "10_38")


def _asserted() -> dict[str, AssertedValue]:
    out = {
        "8_2": AssertedValue("8_2", "exact", (2,), "C(2,1,5): u^Delta = |a2| + 2"),
        "10_2": AssertedValue("10_2", "exact", (4,), "C(2,1,7): u^Delta = |a2| + 2"),
        "10_6": AssertedValue("10_6", "exact", (3,), "C(2,3,5): u^Delta = |a2| + 2"),
        "10_25": AssertedValue("10_25", "exact", (2,),
                               "C(3,m,2,1,2), m even: one Delta-move to 3_1 and a2 = 0"),
        "10_14": AssertedValue("10_14", "interval", (2, 4), _OPEN_CITE),
        "10_30": AssertedValue("10_30", "interval", (1, 3), _OPEN_CITE),
        "10_36": AssertedValue("10_36", "interval", (1, 3), _OPEN_CITE),
        "10_38": AssertedValue("10_38", "interval", (1, 3), _OPEN_CITE),
        "9_29": AssertedValue("9_29", "unknown", (),
                              "earlier value withdrawn after an error in the unknotting diagram"),
    }
    for name in TABLE1_NAMES:
        out.setdefault(name, AssertedValue(name, "exact", (1,), "family examples table: " + _FAMILY_CITE))
    return out


ASSERTED: dict[str, AssertedValue] = _asserted()


@dataclass(frozen=True)
class CatalogMatch:
    """Result of a lookup.  ``mirror`` is True when the input is the mirror
    image of the catalogued knot (and the knot is chiral)."""

    identity: KnotIdentity | None
    verdict: Verdict | None
    is_knot: bool = True

    @property
    def name(self) -> str | None:
        if self.identity is None:
            return None
        return self.identity.name + ("*" if self.mirror else "")

    @property
    def mirror(self) -> bool:
        return self.verdict is Verdict.MIRROR


def catalog_lookup(value) -> CatalogMatch:
    """Identify a word or SchubertPair against the catalog.

    A link gives ``is_knot=False``; an unknown knot gives ``identity=None``.
    The unknot is reported as ``0_1``.
    """
    pair = value if isinstance(value, SchubertPair) else evaluate_fraction(as_word(value))
    if not pair.is_knot:
        return CatalogMatch(None, None, is_knot=False)
    if pair.is_trivial:
        return CatalogMatch(KnotIdentity("0_1", ConwayWord()), Verdict.SAME)
    for ident in CATALOG.values():
        if ident.word is None:
            continue
        verdict = equivalent_pairs(ident.pair, pair)
        if verdict is not Verdict.DISTINCT:
            return CatalogMatch(ident, verdict)
    return CatalogMatch(None, None)


def is_c3m212(w) -> bool:
    """``C(3, m, 2, 1, 2)`` with m positive even, or its reversal."""
    e = as_word(w).entries
    if len(e) != 5:
        return False
    if e[2:] != (2, 1, 2):
        e = e[::-1]
    return e[0] == 3 and e[2:] == (2, 1, 2) and e[1] > 0 and e[1] % 2 == 0


def asserted_u_delta(w) -> AssertedValue | None:
    """Stated u^Delta for a word: by catalog name, or by a word shape with a
    stated value (the one-move family and ``C(3, m, 2, 1, 2)``)."""
    w = as_word(w)
    pair = evaluate_fraction(w)
    if not pair.is_knot or pair.is_trivial:
        return None
    match = catalog_lookup(pair)
    if match.identity is not None and match.identity.name in ASSERTED:
        return ASSERTED[match.identity.name]
    label = str(w)
    if match_family(w) is not None:
        return AssertedValue(label, "exact", (1,), _FAMILY_CITE)
    if is_c3m212(w):
        return AssertedValue(label, "exact", (2,), ASSERTED["10_25"].citation)
    return None


def asserted_hubs(w) -> list[tuple[ConwayWord, int, str]]:
    """Knots stated to be a known Delta-distance from ``w``, as (word, distance, citation)."""
    w = as_word(w)
    if is_c3m212(w):
        return [(parse_word("C(3)"), 1, "C(3,m,2,1,2), m even: one Delta-move to 3_1")]
    return []


def catalog_records() -> list[dict]:
    """Catalog rows for export: name, word, p, q orbit and any asserted value."""
    rows = []
    for name, ident in CATALOG.items():
        pair = ident.pair
        asserted = ASSERTED.get(name)
        rows.append({
            "name": name,
            "word": None if ident.word is None else str(ident.word),
            "p": None if pair is None else pair.p,
            "q_orbit": None if pair is None else sorted(pair.orbit),
            "asserted_u_delta": None if asserted is None else asserted.as_dict(),
        })
    return rows


def catalog_json() -> str:
    return json.dumps(catalog_records(), indent=2)
