"""Table checks and bounded scans of the one-move family.

``verify_table1`` checks that each listed family word spells the named knot
(or its mirror image).  ``verify_table2`` recomputes the distance table of
the six knots ``C(2a, 2b)``.  ``enumerate_family`` walks the family in a
fixed order and checks that every nontrivial member has ``|a2| = 1``, which
must hold for any knot one Delta-move away from the unknot.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .bounds import DEFAULT_BUDGET, DeltaBoundReport, dg_bounds, lower_bound
from .catalog import CATALOG, TABLE2_NAMES, catalog_lookup
from .conway import ConwayWord, SchubertPair, Verdict, as_word, equivalent, evaluate_fraction, parse_word
from .family import FamilyParams, family_word
from .invariants import a2_of_pair

# name -> (normal form, listed family words)
TABLE1 = {
    "3_1": ("C(3)", ("C(-2,0,1,1,1,1,1,1)", "C(3,-1,1,1,1,1,1,2)")),
    "4_1": ("C(2,2)", ("C(-1,0,1,1,1,1,1,1)", "C(2,-1,1,1,1,1,1,2)")),
    "6_2": ("C(3,1,2)", ("C(-3,0,1,1,1,1,1,1)", "C(4,-1,1,1,1,1,1,2)")),
    "6_3": ("C(2,1,1,2)", ("C(0,0,1,1,1,1,1,1)", "C(1,-1,1,1,1,1,1,2)")),
    "7_6": ("C(2,2,1,2)", ("C(-4,0,1,1,1,1,1,1)", "C(5,-1,1,1,1,1,1,2)")),
    "7_7": ("C(2,1,1,1,2)", ("C(1,0,1,1,1,1,1,1)", "C(0,-1,1,1,1,1,1,2)")),
    "8_11": ("C(3,2,1,2)", ("C(-5,0,1,1,1,1,1,1)", "C(6,-1,1,1,1,1,1,2)")),
    "8_13": ("C(3,1,1,1,2)", ("C(2,0,1,1,1,1,1,1)", "C(-1,-1,1,1,1,1,1,2)")),
    "9_12": ("C(4,2,1,2)", ("C(-6,0,1,1,1,1,1,1)", "C(7,-1,1,1,1,1,1,2)")),
    "9_14": ("C(4,1,1,1,2)", ("C(3,0,1,1,1,1,1,1)", "C(-2,-1,1,1,1,1,1,2)")),
    "10_7": ("C(5,2,1,2)", ("C(-7,0,1,1,1,1,1,1)", "C(8,-1,1,1,1,1,1,2)")),
    "10_10": ("C(5,1,1,1,2)", ("C(4,0,1,1,1,1,1,1)", "C(-3,-1,1,1,1,1,1,2)")),
    "10_19": ("C(4,1,1,1,3)", ("C(1,3,1,1,1,1,1,-2)", "C(2,-2,1,1,1,1,1,3)")),
    "10_32": ("C(3,1,1,1,2,2)", ("C(-2,3,1,1,1,1,1,-2)", "C(-1,-2,1,1,1,1,1,3)")),
}

# (row, column) -> printed value(s); two values mean "x or y"
TABLE2 = {
    ("4_1", "6_1"): (1,), ("4_1", "8_1"): (2,), ("4_1", "8_3"): (3,),
    ("4_1", "10_1"): (3,), ("4_1", "10_3"): (5,),
    ("6_1", "8_1"): (1,), ("6_1", "8_3"): (2,), ("6_1", "10_1"): (2,), ("6_1", "10_3"): (4,),
    ("8_1", "8_3"): (1, 3), ("8_1", "10_1"): (1,), ("8_1", "10_3"): (3,),
    ("8_3", "10_1"): (2, 4), ("8_3", "10_3"): (2,),
    ("10_1", "10_3"): (2, 4),
}


@dataclass(frozen=True)
class Table1Row:
    name: str
    normal_form: ConwayWord
    example: ConwayWord
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.DISTINCT

    def as_dict(self) -> dict:
        return {"name": self.name, "normal_form": str(self.normal_form),
                "example": str(self.example), "verdict": str(self.verdict), "ok": self.ok}


@dataclass(frozen=True)
class Table1Report:
    rows: tuple[Table1Row, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def knots(self) -> dict[str, bool]:
        """Per knot: True when every listed word resolves."""
        out: dict[str, bool] = {}
        for r in self.rows:
            out[r.name] = out.get(r.name, True) and r.ok
        return out

    def as_dict(self) -> dict:
        return {"ok": self.ok, "rows": [r.as_dict() for r in self.rows]}


def verify_table1() -> Table1Report:
    rows = []
    for name, (normal, examples) in TABLE1.items():
        nf = parse_word(normal)
        for ex in examples:
            ex_word = parse_word(ex)
            rows.append(Table1Row(name, nf, ex_word, equivalent(ex_word, nf)))
    return Table1Report(tuple(rows))


@dataclass(frozen=True)
class Table2Cell:
    row: str
    column: str
    expected: tuple[int, ...]
    report: DeltaBoundReport

    @property
    def computed(self) -> tuple[int, ...]:
        c = self.report.candidates
        return () if c is None else c

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def as_dict(self) -> dict:
        return {"row": self.row, "column": self.column, "expected": list(self.expected),
                "computed": list(self.computed), "ok": self.ok,
                "bounds": self.report.as_dict()}


@dataclass(frozen=True)
class Table2Report:
    names: tuple[str, ...]
    cells: tuple[Table2Cell, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def cell(self, row: str, column: str) -> Table2Cell:
        for c in self.cells:
            if {c.row, c.column} == {row, column}:
                return c
        raise KeyError((row, column))

    def as_dict(self) -> dict:
        return {"ok": self.ok, "names": list(self.names), "cells": [c.as_dict() for c in self.cells]}


def verify_table2(budget: int = DEFAULT_BUDGET) -> Table2Report:
    cells = []
    for (r, c), expected in TABLE2.items():
        report = dg_bounds(CATALOG[r].word, CATALOG[c].word, budget)
        cells.append(Table2Cell(r, c, expected, report))
    return Table2Report(TABLE2_NAMES, tuple(cells))


# -- family scans ---------------------------------------------------------------

class FamilyViolation(AssertionError):
    """A nontrivial family member with |a2| != 1."""


@dataclass(frozen=True)
class FamilyMember:
    params: FamilyParams
    word: ConwayWord
    pair: SchubertPair
    name: str | None
    a2: int | None

    @property
    def trivial(self) -> bool:
        return self.pair.is_trivial

    @property
    def chirality(self) -> str:
        if not self.pair.is_knot:
            return "link"
        return "amphichiral" if self.pair.amphichiral else "chiral"

    def as_dict(self) -> dict:
        return {"params": self.params.as_dict(), "word": str(self.word), "p": self.pair.p,
                "q": self.pair.q, "name": self.name, "a2": self.a2, "chirality": self.chirality}


@dataclass(frozen=True)
class Truncated:
    """Marker emitted in place of the members cut off by ``limit``."""

    emitted: int
    reason: str

    def as_dict(self) -> dict:
        return {"truncated": True, "emitted": self.emitted, "reason": self.reason}


@dataclass(frozen=True)
class FamilyBounds:
    n_max: int = 2
    beta_min: int = -8
    beta_max: int = 8
    limit: int | None = None
    include_degenerate: bool = True

    def __post_init__(self):
        if self.n_max < 0 or self.beta_min > self.beta_max:
            raise ValueError("empty family bounds")


def family_params(bounds: FamilyBounds) -> Iterator[FamilyParams]:
    """n ascending, then lexicographic over (beta, b1, ..., bn)."""
    values = range(bounds.beta_min, bounds.beta_max + 1)
    start = 0 if bounds.include_degenerate else 1
    for n in range(start, bounds.n_max + 1):
        for combo in itertools.product(values, repeat=n + 1):
            yield FamilyParams(combo[0], combo[1:])


def enumerate_family(bounds: FamilyBounds = FamilyBounds()) -> Iterator[FamilyMember | Truncated]:
    """Every family word within ``bounds``, with its class and a2.

    Links in the family (none occur for small parameters) are reported with
    ``a2 = None``.  Raises FamilyViolation if a nontrivial knot has |a2| != 1.
    """
    emitted = 0
    for params in family_params(bounds):
        if bounds.limit is not None and emitted >= bounds.limit:
            yield Truncated(emitted, f"limit of {bounds.limit} members reached")
            return
        w = family_word(params)
        pair = evaluate_fraction(w)
        value = a2_of_pair(pair) if pair.is_knot else None
        if pair.is_knot and not pair.is_trivial and abs(value) != 1:
            raise FamilyViolation(f"{params}: {w} is {pair} with a2 = {value}")
        match = catalog_lookup(pair)
        yield FamilyMember(params, w, pair, match.name if match.is_knot else None, value)
        emitted += 1


def express_in_family(w, bounds: FamilyBounds = FamilyBounds(include_degenerate=False)) -> FamilyParams | None:
    """Least family parameters (in enumeration order) whose word is the
    knot or its mirror image; None when there is no witness within bounds.

    The default skips the six-entry words ``C(beta,1,1,1,1,1)``: each is the
    same knot as ``C(beta-1, 0, 1,1,1,1,1, 1)`` with ``b1 = 0``.
    """
    w = as_word(w)
    pair = evaluate_fraction(w)
    if not pair.is_knot or pair.is_trivial or lower_bound(w) != 1:
        return None
    target = {pair.key, pair.mirror().key}
    for params in family_params(bounds):
        if evaluate_fraction(family_word(params)).key in target:
            return params
    return None


def convention_check() -> list[tuple[str, bool]]:
    """Calibration of the word convention: identities the reductions rely on,
    named knots, and the sign of the skein linking number."""
    from .diagram import knot_diagram, linking_number, smooth
    from .invariants import a2

    def same(a, b) -> bool:
        return equivalent(a, b) is Verdict.SAME

    checks = [
        ("C(3) is S(3,1)", evaluate_fraction("C(3)") == SchubertPair(3, 1)),
        ("C(x,0) is the unknot", all(evaluate_fraction([x, 0]).is_trivial for x in range(-5, 6))),
        ("C(4,0,3,2) = C(7,2)", same("C(4,0,3,2)", "C(7,2)")),
        ("C(x,1) = C(x+1)", all(same([x, 1], [x + 1]) for x in range(-5, 6))),
        ("C(4,-1,3) = C(3,-2)", same("C(4,-1,3)", "C(3,-2)")),
        ("C(2,2) is 4_1", catalog_lookup("C(2,2)").name == "4_1"),
        ("C(5,1,2) is 8_2", catalog_lookup("C(5,1,2)").name == "8_2"),
        ("C(2,1,5) is 8_2", catalog_lookup("C(2,1,5)").name == "8_2"),
        ("a2(C(3)) = 1", a2("C(3)") == 1),
        ("a2(C(2,2)) = -1", a2("C(2,2)") == -1),
    ]
    d = knot_diagram("C(6,2)")
    lk = linking_number(smooth(d, d.band_crossings(2)[0]))
    checks.append(("lk after smoothing band 2 of C(6,2) is -3", lk == -3))
    for name, (normal, _) in TABLE1.items():
        checks.append((f"{normal} is {name}", catalog_lookup(normal).name == name))
    for name in TABLE2_NAMES:
        checks.append((f"{CATALOG[name].word} is {name}", catalog_lookup(CATALOG[name].word).name == name))
    return checks
