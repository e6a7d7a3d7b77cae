"""The second Conway coefficient a2 of two-bridge knots.

Two independent routes:

* :func:`a2_skein` walks the skein recursion on an explicit 4-plat diagram,
  measuring every linking number by strand tracing;
* :func:`a2_closed` evaluates the closed formulas on the word shapes where
  they are known, and :func:`a2_of_pair` evaluates the even-band sum on the
  even continued fraction of any knot class.
"""
from __future__ import annotations

from dataclasses import dataclass

from .conway import (
    ConwayWord,
    SchubertPair,
    as_word,
    evaluate_fraction,
    normalize,
)
from .diagram import knot_diagram, linking_number, smooth


class NotAKnotError(ValueError):
    """The word closes to a two-component link."""


@dataclass(frozen=True)
class SkeinStep:
    """One crossing change ``before -> after`` in band ``band`` (1-based).

    ``sign`` is the sign of the changed crossing in ``before``; ``lk`` is the
    linking number of the oriented smoothing, and
    ``a2(before) - a2(after) == delta == sign * lk``.
    """

    before: ConwayWord
    after: ConwayWord
    band: int
    sign: int
    lk: int

    @property
    def delta(self) -> int:
        return self.sign * self.lk


@dataclass(frozen=True)
class SkeinTrace:
    value: int
    steps: tuple[SkeinStep, ...]
    base: ConwayWord
    base_value: int


def _require_knot(w: ConwayWord) -> SchubertPair:
    pair = evaluate_fraction(w)
    if not pair.is_knot:
        raise NotAKnotError(f"{w} closes to a 2-component link ({pair})")
    return pair


def a2_torus2(m: int) -> int:
    """a2 of the (2, m) torus knot ``C(m)``; mirror invariant."""
    if m % 2 == 0:
        raise ValueError(f"C({m}) is a link; m must be odd")
    return (m * m - 1) // 8


def _skein_band(w: ConwayWord) -> int:
    # proof order: second band first; otherwise the rightmost band that can shrink
    if len(w) >= 2 and abs(w[1]) >= 2:
        return 2
    for band in range(len(w), 0, -1):
        if abs(w[band - 1]) >= 2:
            return band
    raise AssertionError(f"normalized word {w} has no reducible band")


def _skein_step(current: ConwayWord) -> SkeinStep:
    band = _skein_band(current)
    d = knot_diagram(current)
    index = d.band_crossings(band)[0]
    lk = linking_number(smooth(d, index))
    a = current[band - 1]
    after = current.replace(band - 1, a - 2 if a > 0 else a + 2)
    return SkeinStep(current, after, band, d.crossings[index].sign, lk)


def skein_trace(w) -> SkeinTrace:
    """Run the skein recursion on ``w`` and return every step taken.

    The word is normalized before each step.  Reduction stops at the unknot
    or at a single band ``C(m)``, whose value is ``(m**2 - 1)/8``.
    """
    w = as_word(w)
    _require_knot(w)
    steps = []
    current = normalize(w)
    while len(current) > 1:
        step = _skein_step(current)
        steps.append(step)
        current = normalize(step.after)
    base_value = a2_torus2(current[0]) if len(current) == 1 else 0
    value = base_value + sum(s.delta for s in steps)
    return SkeinTrace(value, tuple(steps), current, base_value)


_SKEIN_CACHE: dict[tuple[int, ...], int] = {}


def a2_skein(w) -> int:
    """a2 by the skein recursion of ``skein_trace``, memoized on normalized
    words so that reduction chains shared between words are walked once."""
    w = as_word(w)
    _require_knot(w)
    chain: list[tuple[tuple[int, ...], int]] = []
    entries = normalize(w).entries
    while entries not in _SKEIN_CACHE and len(entries) > 1:
        step = _skein_step(ConwayWord(entries))
        chain.append((entries, step.delta))
        entries = normalize(step.after).entries
    value = _SKEIN_CACHE.get(entries)
    if value is None:
        value = a2_torus2(entries[0]) if entries else 0
    for key, delta in reversed(chain):
        value += delta
        if len(_SKEIN_CACHE) < 1 << 16:
            _SKEIN_CACHE[key] = value
    return value


def band_product_sum(entries) -> int:
    """``sum_j (a1 + a3 + ... + a(2j-1)) * a(2j)`` over an even-length word."""
    total, odd_sum = 0, 0
    for i in range(0, len(entries) - 1, 2):
        odd_sum += entries[i]
        total += odd_sum * entries[i + 1]
    return total


def even_band_sum(entries) -> int:
    """``-1/4 * band_product_sum``; exact for words with all entries even."""
    total = band_product_sum(entries)
    if total % 4:
        raise ValueError(f"band sum {total} is not divisible by 4")
    return -total // 4


def closed_shape(w) -> str | None:
    """Name of the closed-form shape that ``w`` matches literally, if any."""
    e = as_word(w).entries
    if not e or any(a <= 0 for a in e):
        return None
    if len(e) == 3 and e[0] % 2 == 0 and e[1] % 2 == 1 and e[2] % 2 == 1:
        return "even-odd-odd"
    if all(a % 2 == 0 for a in e):
        return "even-bands" if len(e) % 2 == 0 else None
    if all(a % 2 == 0 for a in e[:-1]) and e[-1] % 2 == 1:
        return "odd-tail"
    return None


def a2_closed(w) -> int | None:
    """Closed-form a2 for the known shapes; None when no shape matches.

    * all entries positive even, even length: ``-1/4 sum_j sum_{i<=j} a(2i-1) a(2j)``
    * positive even entries then one positive odd entry, even length:
      ``1/4 sum_j sum_{i<=j} a(2i-1) a(2j) + 1/8 (a1 + a3 + ... + a(n-1))**2``
    * the same with odd length:
      ``1/4 sum_{j<=(n-1)/2} ... + 1/8 ((a1 + a3 + ... + an)**2 - 1)``
    * ``C(even, odd, odd)``: ``-1/4 a1 (a2 + a3) + 1/8 (a3**2 - 1)``
    """
    e = as_word(w).entries
    shape = closed_shape(e)
    if shape is None:
        return None
    if shape == "even-bands":
        return even_band_sum(e)
    if shape == "even-odd-odd":
        a1, a2_, a3 = e
        total = -2 * a1 * (a2_ + a3) + a3 * a3 - 1
    elif len(e) % 2 == 0:
        total = 2 * band_product_sum(e) + sum(e[0::2]) ** 2
    else:
        total = 2 * band_product_sum(e[:-1]) + sum(e[0::2]) ** 2 - 1
    if total % 8:
        raise ValueError(f"non-integral closed form for {as_word(w)}")
    return total // 8


def even_continued_fraction(num: int, den: int) -> list[int]:
    """Expansion of num/den (num odd, den even) with only even entries."""
    if num % 2 == 0 or den % 2:
        raise ValueError("need an odd numerator and an even denominator")
    out = []
    while den:
        if den < 0:
            num, den = -num, -den
        # nearest even integer; |num/den - a| < 1 and the parities swap
        a = 2 * ((num + den) // (2 * den))
        out.append(a)
        num, den = den, num - a * den
    return out


def a2_of_pair(pair: SchubertPair) -> int:
    """a2 of a knot class from its even continued fraction."""
    if not pair.is_knot:
        raise NotAKnotError(f"{pair} is a link")
    if pair.p == 1:
        return 0
    q = pair.q if pair.q % 2 == 0 else pair.q - pair.p
    return even_band_sum(even_continued_fraction(pair.p, q))


def a2(w) -> int:
    """a2 of a word, via its class."""
    pair = _require_knot(as_word(w))
    return a2_of_pair(pair)
