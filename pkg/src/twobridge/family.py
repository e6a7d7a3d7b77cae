"""The palindromic-looking family ``C(beta, bn..b1, 1,1,1,1,1, 1-b1, -b2..-bn)``.

Every nontrivial member unknots with a single Delta-move.  The words are
built literally; ``match_family`` recognises a word that is spelled in this
shape.
"""
from __future__ import annotations

from dataclasses import dataclass

from .conway import ConwayWord, as_word

ONES = (1, 1, 1, 1, 1)


@dataclass(frozen=True, order=True)
class FamilyParams:
    beta: int
    betas: tuple[int, ...] = ()

    def __init__(self, beta: int, betas=()):
        object.__setattr__(self, "beta", int(beta))
        object.__setattr__(self, "betas", tuple(int(b) for b in betas))

    @property
    def n(self) -> int:
        return len(self.betas)

    def as_dict(self) -> dict:
        return {"beta": self.beta, "betas": list(self.betas)}

    def __str__(self) -> str:
        return f"(beta={self.beta}, [{','.join(map(str, self.betas))}])"


def family_word(params: FamilyParams) -> ConwayWord:
    """The literal family word; ``C(beta,1,1,1,1,1)`` when there are no betas."""
    b = params.betas
    if not b:
        return ConwayWord((params.beta,) + ONES)
    head = (params.beta,) + tuple(reversed(b))
    tail = (1 - b[0],) + tuple(-x for x in b[1:])
    return ConwayWord(head + ONES + tail)


def match_family(w) -> FamilyParams | None:
    """Parameters if ``w`` is literally a family word, else None."""
    e = as_word(w).entries
    if len(e) == 6:
        return FamilyParams(e[0]) if e[1:] == ONES else None
    if len(e) < 8 or len(e) % 2:
        return None
    n = (len(e) - 6) // 2
    params = FamilyParams(e[0], reversed(e[1:n + 1]))
    return params if family_word(params).entries == e else None
