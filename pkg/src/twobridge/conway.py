"""Conway words, their Schubert fractions, and equivalence of two-bridge classes.

A word ``C(a1, ..., an)`` is read as the regular continued fraction
``a1 + 1/(a2 + 1/(... + 1/an))``.  With odd-indexed twists right-handed
positive and even-indexed twists left-handed positive this is the fraction
whose numerator is the determinant of the closed 4-plat, so the classical
Schubert classification applies directly:

* ``S(p, q) == S(p, q')`` iff ``q' = q**(+-1) (mod p)``
* ``S(p, q)`` is the mirror of ``S(p, -q)``.

All arithmetic is on integers; the empty tail is the infinite fraction
``1/0``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator


class WordSyntaxError(ValueError):
    """Raised when a word string cannot be parsed.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        marker = " " * position + "^"
        super().__init__(f"{reason} at position {position}\n  {text}\n  {marker}")


@dataclass(frozen=True)
class ConwayWord:
    entries: tuple[int, ...] = ()

    def __init__(self, entries: Iterable[int] = ()):
        object.__setattr__(self, "entries", tuple(int(a) for a in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return "C(" + ",".join(str(a) for a in self.entries) + ")"

    def __repr__(self) -> str:
        return f"ConwayWord({list(self.entries)!r})"

    def replace(self, index: int, value: int) -> ConwayWord:
        entries = list(self.entries)
        entries[index] = value
        return ConwayWord(entries)


def word(*entries: int) -> ConwayWord:
    """Shorthand: ``word(2, 1, 5)`` is ``C(2,1,5)``."""
    return ConwayWord(entries)


_TOKEN = re.compile(r"\s*(-?\d+)\s*")


def parse_word(text: str) -> ConwayWord:
    """Parse ``C(a1,...,an)`` or a bare comma list ``a1,...,an``.

    Whitespace is ignored.  ``C()`` and the empty string give the empty word.
    """
    if not isinstance(text, str):
        raise TypeError("word text must be a string")
    body, offset = text, 0
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if stripped[:1] in ("C", "c"):
        rest = stripped[1:].lstrip()
        open_at = lead + 1 + (len(stripped) - 1 - len(rest))
        if not rest.startswith("("):
            raise WordSyntaxError(text, open_at, "expected '('")
        if not rest.rstrip().endswith(")"):
            raise WordSyntaxError(text, len(text.rstrip()), "expected ')'")
        close_at = len(text.rstrip()) - 1
        body, offset = text[open_at + 1:close_at], open_at + 1
    if not body.strip():
        return ConwayWord()
    entries = []
    pos = 0
    for piece in body.split(","):
        m = _TOKEN.fullmatch(piece)
        if m is None:
            bad = len(piece) - len(piece.lstrip())
            raise WordSyntaxError(text, offset + pos + bad, "expected an integer")
        entries.append(int(m.group(1)))
        pos += len(piece) + 1
    return ConwayWord(entries)


def as_word(value) -> ConwayWord:
    """Coerce a string, sequence of ints or ConwayWord to a ConwayWord."""
    if isinstance(value, ConwayWord):
        return value
    if isinstance(value, str):
        return parse_word(value)
    return ConwayWord(value)


# -- fractions ---------------------------------------------------------------

def continued_fraction(w) -> tuple[int, int]:
    """Return ``(num, den)`` of the continued fraction, den >= 0 up to sign.

    The empty word gives ``(1, 0)``.  The pair is always coprime.
    """
    num, den = 1, 0
    for a in reversed(as_word(w).entries):
        num, den = a * num + den, num
    if den < 0 or (den == 0 and num < 0):
        num, den = -num, -den
    return num, den


def cf_expansion(num: int, den: int) -> list[int]:
    """Regular (floor) continued fraction of num/den; ``[]`` for 1/0."""
    if den == 0:
        return []
    if den < 0:
        num, den = -num, -den
    out = []
    while den:
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return out


@dataclass(frozen=True, order=True)
class SchubertPair:
    """Normalized Schubert fraction ``S(p, q)``.

    ``(1, 0)`` is the unknot and ``(0, 1)`` the two-component unlink.
    """

    p: int
    q: int

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    @property
    def is_trivial(self) -> bool:
        return self.p == 1

    @property
    def orbit(self) -> frozenset[int]:
        if self.p < 2:
            return frozenset({self.q})
        return frozenset({self.q, pow(self.q, -1, self.p)})

    @property
    def mirror_orbit(self) -> frozenset[int]:
        if self.p < 2:
            return frozenset({self.q})
        return frozenset((-r) % self.p for r in self.orbit)

    @property
    def key(self) -> tuple[int, int]:
        """Canonical representative of the class up to orientation-free equivalence."""
        return (self.p, min(self.orbit))

    @property
    def amphichiral(self) -> bool:
        return self.orbit == self.mirror_orbit

    def mirror(self) -> SchubertPair:
        if self.p < 2:
            return self
        return SchubertPair(self.p, (-self.q) % self.p)

    def __str__(self) -> str:
        return f"S({self.p},{self.q})"


def pair_of_fraction(num: int, den: int) -> SchubertPair:
    p = abs(num)
    if p == 1:
        return SchubertPair(1, 0)
    if p == 0:
        return SchubertPair(0, 1)
    sign = 1 if num > 0 else -1
    return SchubertPair(p, (sign * den) % p)


def evaluate_fraction(w) -> SchubertPair:
    return pair_of_fraction(*continued_fraction(w))


def mirror(w) -> ConwayWord:
    return ConwayWord(-a for a in as_word(w))


def reverse(w) -> ConwayWord:
    """Read the 4-plat from the other end.

    For odd length this is the plain reversal.  For even length the last band
    becomes an odd-indexed band whose positive handedness is opposite, so the
    entries are negated as well; plain reversal of an even-length word is the
    mirror image.
    """
    w = as_word(w)
    entries = w.entries[::-1]
    if len(entries) % 2 == 0:
        entries = tuple(-a for a in entries)
    return ConwayWord(entries)


class Verdict(enum.Enum):
    SAME = "Same"
    MIRROR = "Mirror"
    DISTINCT = "Distinct"

    def __str__(self) -> str:
        return self.value


def equivalent_pairs(a: SchubertPair, b: SchubertPair) -> Verdict:
    if a.p != b.p:
        return Verdict.DISTINCT
    if b.q in a.orbit:
        return Verdict.SAME
    if b.q in a.mirror_orbit:
        return Verdict.MIRROR
    return Verdict.DISTINCT


def equivalent(w1, w2) -> Verdict:
    return equivalent_pairs(evaluate_fraction(w1), evaluate_fraction(w2))


# -- reduction identities ----------------------------------------------------
# Each returns a word of the same class (exactly the same fraction, except
# leading_zero which maps p/q to p/q' with q' = q mod p).

def merge_zero(w, i: int) -> ConwayWord:
    """``C(..., x, 0, y, ...) -> C(..., x+y, ...)`` for an interior zero at i."""
    e = as_word(w).entries
    if not (0 < i < len(e) - 1) or e[i] != 0:
        raise ValueError(f"no interior zero at index {i} of {as_word(w)}")
    return ConwayWord(e[:i - 1] + (e[i - 1] + e[i + 1],) + e[i + 2:])


def drop_trailing_zero(w) -> ConwayWord:
    """``C(..., y, x, 0) -> C(..., y)``; in particular ``C(x, 0)`` is the unknot."""
    e = as_word(w).entries
    if len(e) < 2 or e[-1] != 0:
        raise ValueError(f"{as_word(w)} does not end in (x, 0)")
    return ConwayWord(e[:-2])


def drop_leading_zero(w) -> ConwayWord:
    """``C(0, x, rest...) -> C(rest...)``."""
    e = as_word(w).entries
    if len(e) < 2 or e[0] != 0:
        raise ValueError(f"{as_word(w)} does not start with (0, x)")
    return ConwayWord(e[2:])


def absorb_trailing_unit(w) -> ConwayWord:
    """``C(..., x, +-1) -> C(..., x +- 1)``."""
    e = as_word(w).entries
    if len(e) < 2 or abs(e[-1]) != 1:
        raise ValueError(f"{as_word(w)} does not end in +-1")
    return ConwayWord(e[:-2] + (e[-2] + e[-1],))


def flip_minus_one(w, i: int) -> ConwayWord:
    """``C(..., x, -1, y, r...) -> C(..., x-1, 1-y, -r...)`` for e[i] == -1."""
    e = as_word(w).entries
    if not (0 < i < len(e) - 1) or e[i] != -1:
        raise ValueError(f"no interior -1 at index {i} of {as_word(w)}")
    tail = tuple(-a for a in e[i + 2:])
    return ConwayWord(e[:i - 1] + (e[i - 1] - 1, 1 - e[i + 1]) + tail)


def normalize(w) -> ConwayWord:
    """Apply zero removal and trailing-unit absorption until none applies.

    The result is equivalent (Same) to the input; every nontrivial result of
    length >= 2 ends in an entry of absolute value >= 2.
    """
    e = list(as_word(w).entries)
    while True:
        if len(e) >= 2 and e[0] == 0:
            e = e[2:]
            continue
        if len(e) >= 2 and e[-1] == 0:
            e = e[:-2]
            continue
        zero = next((i for i in range(1, len(e) - 1) if e[i] == 0), None)
        if zero is not None:
            e[zero - 1:zero + 2] = [e[zero - 1] + e[zero + 1]]
            continue
        if len(e) >= 2 and abs(e[-1]) == 1:
            e[-2:] = [e[-2] + e[-1]]
            continue
        if len(e) == 1 and abs(e[0]) == 1:
            e = []
            continue
        return ConwayWord(e)


def canonical_word(pair: SchubertPair) -> ConwayWord:
    """A short word for the class: the floor continued fraction of p/q."""
    if pair.p == 1:
        return ConwayWord()
    if pair.p == 0:
        return ConwayWord([0])
    return ConwayWord(cf_expansion(pair.p, pair.q))


def fraction_representatives(pair: SchubertPair, bound: int) -> list[tuple[int, int]]:
    """Fractions ``num/den`` in the class with ``|den| <= bound``, sorted.

    For the unknot this includes ``1/0``.  Mirror-class fractions are excluded.
    """
    p = pair.p
    if p == 1:
        reps = {(1, 0)} | {(1, d) for d in range(-bound, bound + 1) if d != 0}
        return sorted(reps, key=lambda f: (abs(f[1]), f))
    reps = set()
    for r in sorted(pair.orbit):
        k_lo = -((bound + r) // p)
        for k in range(k_lo, bound // p + 2):
            d = r + k * p
            if d != 0 and abs(d) <= bound and gcd(p, d) == 1:
                reps.add((p, d) if d > 0 else (-p, -d))
    return sorted(reps, key=lambda f: (abs(f[1]), f))
