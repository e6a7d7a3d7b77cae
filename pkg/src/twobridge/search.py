"""Least-cost search for Delta-move upper bounds between two-bridge knots.

The only move is the band-exchange technique: in a word ``C(e, b, rest...)``
whose first entry ``e`` is even, one crossing of the second band can be
exchanged with ``|e|/2`` Delta-moves, turning ``b`` into ``b +- 2``.  Words of
the same class are free rewrites, so the search runs over classes.

Working on fractions makes the move compact.  If ``x = e + 1/y`` then
``y = [b, rest...]`` and the move sends ``y`` to ``y +- 2`` regardless of how
``y`` is spelled.  A class is expanded through its fraction representatives
``p/d`` with ``|d|`` bounded, and every even ``e`` the remaining budget can
pay for.

Costs found here are upper bounds only.  The search is ordered by
``cost + |a2(state) - a2(target)|``; the second term never overestimates the
remaining distance (the a2 difference bounds the Delta-Gordian distance from
below), so the first time the target is popped its cost is least within the
explored move set.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd

from .conway import (
    ConwayWord,
    SchubertPair,
    Verdict,
    as_word,
    cf_expansion,
    equivalent,
    equivalent_pairs,
    evaluate_fraction,
    fraction_representatives,
    pair_of_fraction,
    parse_word,
)
from .invariants import a2_of_pair


@dataclass(frozen=True)
class SearchConfig:
    """Bounds on the explored move set.

    ``denominator_bound`` limits fraction representatives ``p/d`` to
    ``|d| <= bound``; None means ``2 * p`` for each class.
    """

    max_representatives: int = 64
    denominator_bound: int | None = None
    max_expansions: int = 200_000
    use_a2_guide: bool = True


@dataclass(frozen=True)
class MoveStep:
    """``word`` becomes ``result`` at ``cost`` Delta-moves.

    ``kind`` is ``"twist"`` (band exchange at ``index``, entry changed by
    ``delta``) or ``"rewrite"`` (same class, cost 0).
    """

    word: ConwayWord
    kind: str
    result: ConwayWord
    cost: int
    index: int | None = None
    delta: int = 0

    def as_dict(self) -> dict:
        move: dict = {"kind": self.kind}
        if self.kind == "twist":
            move.update(index=self.index, delta=self.delta)
        return {"word": str(self.word), "move": move, "cost": self.cost,
                "result": str(self.result)}

    @classmethod
    def from_dict(cls, d: dict) -> MoveStep:
        move = d["move"]
        return cls(parse_word(d["word"]), move["kind"], parse_word(d["result"]), d["cost"],
                   move.get("index"), move.get("delta", 0))


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSequence:
    start: ConwayWord
    target: SchubertPair
    steps: tuple[MoveStep, ...] = field(default=())

    @property
    def total_cost(self) -> int:
        return sum(s.cost for s in self.steps)

    def replay(self) -> int:
        """Re-apply every step from scratch; return the total cost.

        Raises CertificateError if any step does not do what it claims.
        """
        current = self.start
        total = 0
        for i, step in enumerate(self.steps):
            if step.word != current:
                raise CertificateError(f"step {i}: expected {current}, got {step.word}")
            if step.kind == "rewrite":
                if step.cost != 0 or equivalent(step.word, step.result) is not Verdict.SAME:
                    raise CertificateError(f"step {i}: {step.word} -> {step.result} is not a rewrite")
            elif step.kind == "twist":
                e = step.word.entries
                if step.index != 1 or len(e) < 2 or e[0] % 2 or abs(step.delta) != 2:
                    raise CertificateError(f"step {i}: illegal band exchange on {step.word}")
                if step.cost != abs(e[0]) // 2:
                    raise CertificateError(f"step {i}: cost {step.cost} != |{e[0]}|/2")
                if step.word.replace(1, e[1] + step.delta) != step.result:
                    raise CertificateError(f"step {i}: result does not match the move")
            else:
                raise CertificateError(f"step {i}: unknown move {step.kind!r}")
            total += step.cost
            current = step.result
        if equivalent_pairs(evaluate_fraction(current), self.target) is not Verdict.SAME:
            raise CertificateError(f"sequence ends at {evaluate_fraction(current)}, not {self.target}")
        return total

    def as_list(self) -> list[dict]:
        return [s.as_dict() for s in self.steps]

    @classmethod
    def from_list(cls, items: list[dict], start=None, target: SchubertPair | None = None) -> MoveSequence:
        """Rebuild from ``as_list`` output; start and target default to the ends of the steps."""
        steps = tuple(MoveStep.from_dict(d) for d in items)
        if start is None:
            start = steps[0].word if steps else ConwayWord()
        start = as_word(start)
        if target is None:
            target = evaluate_fraction(steps[-1].result if steps else start)
        return cls(start, target, steps)


def band_exchange(num: int, den: int, e: int, direction: int) -> tuple[int, int]:
    """Fraction after exchanging a crossing in band 2 of ``C(e, y)`` with ``num/den = e + 1/y``."""
    m = num - e * den
    q = den + 2 * direction * m
    n2 = e * q + m
    if q < 0 or (q == 0 and n2 < 0):
        n2, q = -n2, -q
    g = gcd(n2, q)
    return n2 // g, q // g


def _move_words(num: int, den: int, e: int, direction: int) -> tuple[ConwayWord, ConwayWord]:
    m = num - e * den
    tail = cf_expansion(den, m) or [0]
    before = ConwayWord([e] + tail)
    return before, before.replace(1, tail[0] + 2 * direction)


def neighbours(pair: SchubertPair, max_cost: int, config: SearchConfig = SearchConfig()):
    """Yield ``(next_pair, cost, num, den, e, direction)``, cheapest edge per class."""
    bound = config.denominator_bound or max(2 * pair.p, 2)
    reps = fraction_representatives(pair, bound)[: config.max_representatives]
    best: dict[tuple[int, int], tuple] = {}
    for cost in range(1, max_cost + 1):
        for e in (2 * cost, -2 * cost):
            for num, den in reps:
                for direction in (1, -1):
                    nxt = pair_of_fraction(*band_exchange(num, den, e, direction))
                    k = _full_key(nxt)
                    if k not in best:
                        best[k] = (nxt, cost, num, den, e, direction)
    return list(best.values())


def _full_key(pair: SchubertPair) -> tuple[int, int]:
    # classes up to orientation but not mirror
    return pair.key


@dataclass
class SearchResult:
    cost: int
    certificate: MoveSequence
    expansions: int


def search(start, target=None, budget: int = 10,
           config: SearchConfig = SearchConfig()) -> SearchResult | None:
    """Least-cost band-exchange path from ``start`` to ``target`` (default unknot).

    Returns None when no path of cost <= budget exists in the explored move
    set, or when the expansion limit is reached first.
    """
    start = as_word(start)
    source = evaluate_fraction(start)
    if not source.is_knot:
        raise ValueError(f"{start} is not a knot")
    if target is None:
        target_word = ConwayWord()
    else:
        target_word = as_word(target)
    goal = evaluate_fraction(target_word)
    if not goal.is_knot:
        raise ValueError(f"{target_word} is not a knot")
    goal_a2 = a2_of_pair(goal)

    def h(pair: SchubertPair) -> int:
        return abs(a2_of_pair(pair) - goal_a2) if config.use_a2_guide else 0

    start_key = _full_key(source)
    parents: dict[tuple[int, int], tuple] = {start_key: None}
    g_best = {start_key: 0}
    pairs = {start_key: source}
    # among equal f: smaller determinant first, then deeper states
    heap = [(h(source), source.p, 0, start_key)]
    closed: set[tuple[int, int]] = set()
    expansions = 0
    while heap:
        f, _, neg_g, k = heapq.heappop(heap)
        g = -neg_g
        if k in closed or g != g_best[k]:
            continue
        if f > budget:
            return None
        if k == _full_key(goal):
            cert = _certificate(start, target_word, goal, k, parents)
            return SearchResult(g, cert, expansions)
        closed.add(k)
        expansions += 1
        if expansions > config.max_expansions:
            return None
        for nxt, cost, num, den, e, direction in neighbours(pairs[k], budget - g, config):
            nk = _full_key(nxt)
            ng = g + cost
            if nk in closed or ng >= g_best.get(nk, budget + 1):
                continue
            nf = ng + h(nxt)
            if nf > budget:
                continue
            g_best[nk] = ng
            pairs[nk] = nxt
            parents[nk] = (k, num, den, e, direction, cost)
            heapq.heappush(heap, (nf, nxt.p, -ng, nk))
    return None


def _certificate(start: ConwayWord, target_word: ConwayWord, goal: SchubertPair,
                 end_key, parents) -> MoveSequence:
    edges = []
    k = end_key
    while parents[k] is not None:
        prev, num, den, e, direction, cost = parents[k]
        edges.append((num, den, e, direction, cost))
        k = prev
    edges.reverse()
    steps = []
    current = start
    for num, den, e, direction, cost in edges:
        before, after = _move_words(num, den, e, direction)
        if before != current:
            steps.append(MoveStep(current, "rewrite", before, 0))
        steps.append(MoveStep(before, "twist", after, cost, index=1, delta=2 * direction))
        current = after
    if current != target_word and equivalent(current, target_word) is Verdict.SAME:
        steps.append(MoveStep(current, "rewrite", target_word, 0))
    return MoveSequence(start, goal, tuple(steps))
