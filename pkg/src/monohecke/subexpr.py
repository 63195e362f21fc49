"""
Distinguished subexpressions of a reduced word and the closed formula

    R*_{y,w} = sum over x in fiber(y) of (a v^-1)^{n(x)}

where x = (x_0, ..., x_p) runs over tuples with x_0 = 1,
x_{j-1}^-1 x_j in {s_j} u X_{s_j}, and x_j <= x_{j-1} s_j, the fiber over y
collects those ending in x_p = y, and n(x) counts the steps that landed in
X_{s_j}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import (
    GroupElement, GroupParams, Perm, Reflection, inverse, multiply,
    perm_length, reduced_word, simple_perm, perm_mul, x_set,
)
from .rpoly import leq
from .scalars import GenericScalar

__all__ = [
    "Subexpression", "NotReduced", "enumerate_distinguished", "fibers",
    "lower_ideal", "r_star_closed", "r_star_closed_all", "word_product",
]

AVINV = GenericScalar.monomial(1, -1)


class NotReduced(ValueError):
    pass


@dataclass(frozen=True)
class Subexpression:
    word: tuple[int, ...]
    steps: tuple[GroupElement, ...]
    n_stat: int

    @property
    def end(self) -> GroupElement:
        return self.steps[-1]

    def to_json(self) -> dict:
        from .notation import format_element
        return {"word": list(self.word),
                "steps": [format_element(x) for x in self.steps],
                "n_stat": self.n_stat}


def word_product(word, n: int) -> Perm:
    w = tuple(range(n))
    for i in word:
        w = perm_mul(w, simple_perm(n, i))
    return w


def _check_reduced(word, params: GroupParams) -> tuple[int, ...]:
    word = tuple(word)
    if perm_length(word_product(word, params.n)) != len(word):
        raise NotReduced(f"word {list(word)} is not reduced")
    return word


def enumerate_distinguished(word, params: GroupParams) -> list[Subexpression]:
    """
    All distinguished subexpressions, depth first; at each position the
    s-step is tried before the X-steps, which go in exponent-lex order.

    >>> P = GroupParams(2, 3)
    >>> len(enumerate_distinguished([1], P))
    4
    """
    word = _check_reduced(word, params)
    xs = {i: sorted(x_set(Reflection(i, i + 1), params)) for i in set(word)}
    out: list[Subexpression] = []
    steps = [params.identity()]

    def extend(j: int, nstat: int):
        if j == len(word):
            out.append(Subexpression(word, tuple(steps), nstat))
            return
        i = word[j]
        prev = steps[-1]
        prev_s = multiply(prev, params.s(i))
        # the s-step always satisfies x_j <= x_{j-1} s_j
        steps.append(prev_s)
        extend(j + 1, nstat)
        steps.pop()
        for d in xs[i]:
            cand = multiply(prev, d)
            if leq(cand, prev_s, params):
                steps.append(cand)
                extend(j + 1, nstat + 1)
                steps.pop()

    extend(0, 0)
    return out


def fibers(word, params: GroupParams) -> dict[GroupElement, list[Subexpression]]:
    out: dict[GroupElement, list[Subexpression]] = {}
    for sx in enumerate_distinguished(word, params):
        out.setdefault(sx.end, []).append(sx)
    return out


def lower_ideal(word, params: GroupParams) -> set[GroupElement]:
    return {sx.end for sx in enumerate_distinguished(word, params)}


def _closed_sum(subs: list[Subexpression]) -> GenericScalar:
    coeffs: dict[int, int] = {}
    for sx in subs:
        coeffs[sx.n_stat] = coeffs.get(sx.n_stat, 0) + 1
    return GenericScalar({(k, -k): c for k, c in coeffs.items()})


def r_star_closed(y: GroupElement, word, params: GroupParams) -> GenericScalar:
    """R*_{y,w} for w the product of ``word``."""
    params.check(y)
    return _closed_sum(fibers(word, params).get(y, []))


def r_star_closed_all(y: GroupElement, params: GroupParams, word=None) -> dict[GroupElement, GenericScalar]:
    """Every nonzero R*_{x,y}; y may carry an H_b part (R*_{x,wd} = R*_{xd^-1,w})."""
    params.check(y)
    if word is None:
        word = reduced_word(y.perm)
    elif word_product(word, params.n) != y.perm:
        raise ValueError("word does not spell the permutation part of y")
    d = y.d_part()
    return {multiply(z, d): _closed_sum(subs) for z, subs in fibers(word, params).items()}
