"""
Arithmetic in the monomial group G(b,1,n) = W x| H_b.

An element is stored as a pair ``(perm, exps)`` meaning the product ``w*d``
of the permutation matrix ``w`` and the diagonal matrix ``d``. Permutations
are tuples in one-line notation on ``range(n)`` (``perm[j] == w(j)``), and the
diagonal part is a vector of exponents mod ``b``: position ``j`` holding ``m``
stands for the diagonal entry ``zeta**(a*m)``, where ``zeta**a`` generates the
cyclic group F_b.

With these conventions ``w*d`` is the monomial matrix whose column ``j`` has
its only nonzero entry (exponent ``exps[j]``) in row ``perm[j]``.

>>> P = GroupParams(2, 2)
>>> s1 = P.s(1)
>>> multiply(multiply(s1, P.diag((1, 0))), s1)
GroupElement(perm=(0, 1), exps=(0, 1), b=2)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

Perm = tuple[int, ...]

__all__ = [
    "GroupParams", "GroupElement", "Reflection", "ParameterMismatch",
    "perm_mul", "perm_inv", "perm_length", "simple_perm",
    "multiply", "inverse", "length", "conjugate_diag",
    "x_set", "x_zero", "h_prime", "product_set",
    "reduced_word", "bruhat_leq", "to_monomial_matrix", "monomial_matmul",
    "left_descents", "right_descents",
]


class ParameterMismatch(ValueError):
    """Two objects built for different (n, b) were combined."""


# ---------------------------------------------------------------------------
# permutations


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Composition ``p*q`` (apply ``q`` first)."""
    return tuple(p[j] for j in q)


def perm_inv(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, pj in enumerate(p):
        inv[pj] = j
    return tuple(inv)


def perm_length(p: Perm) -> int:
    """Number of inversions."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@lru_cache(maxsize=None)
def simple_perm(n: int, i: int) -> Perm:
    """The adjacent transposition s_i swapping ``i`` and ``i+1`` (1-based)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s{i} is not a generator of S_{n}")
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def right_descents(p: Perm) -> list[int]:
    """Generators ``s_i`` (1-based) with ``l(p s_i) < l(p)``."""
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


def left_descents(p: Perm) -> list[int]:
    """Generators ``s_i`` (1-based) with ``l(s_i p) < l(p)``."""
    return right_descents(perm_inv(p))


# ---------------------------------------------------------------------------
# group elements


class GroupElement(NamedTuple):
    perm: Perm
    exps: tuple[int, ...]
    b: int

    @property
    def n(self) -> int:
        return len(self.perm)

    def is_diagonal(self) -> bool:
        return all(j == pj for j, pj in enumerate(self.perm))

    def w_part(self) -> "GroupElement":
        return GroupElement(self.perm, (0,) * len(self.perm), self.b)

    def d_part(self) -> "GroupElement":
        return GroupElement(tuple(range(len(self.perm))), self.exps, self.b)

    def __mul__(self, other: "GroupElement") -> "GroupElement":  # type: ignore[override]
        return multiply(self, other)


@dataclass(frozen=True)
class Reflection:
    """The transposition (i j), 1-based, i < j."""
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"invalid reflection ({self.i} {self.j})")

    def perm(self, n: int) -> Perm:
        if self.j > n:
            raise ValueError(f"reflection ({self.i} {self.j}) outside S_{n}")
        p = list(range(n))
        p[self.i - 1], p[self.j - 1] = p[self.j - 1], p[self.i - 1]
        return tuple(p)

    @classmethod
    def from_perm(cls, p: Perm) -> "Reflection":
        moved = [j for j, pj in enumerate(p) if pj != j]
        if len(moved) != 2 or p[moved[0]] != moved[1]:
            raise ValueError(f"{p} is not a reflection")
        return cls(moved[0] + 1, moved[1] + 1)


@dataclass(frozen=True)
class GroupParams:
    """Rank ``n`` and cyclic order ``b`` of G(b,1,n)."""
    n: int
    b: int

    def __post_init__(self):
        if self.n < 1 or self.b < 1:
            raise ValueError(f"need n >= 1 and b >= 1, got n={self.n}, b={self.b}")

    @property
    def order(self) -> int:
        return self.b ** self.n * _factorial(self.n)

    def identity(self) -> GroupElement:
        return GroupElement(tuple(range(self.n)), (0,) * self.n, self.b)

    def diag(self, exps: Sequence[int]) -> GroupElement:
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        return GroupElement(tuple(range(self.n)), tuple(e % self.b for e in exps), self.b)

    def perm_element(self, p: Perm) -> GroupElement:
        return GroupElement(tuple(p), (0,) * self.n, self.b)

    def s(self, i: int) -> GroupElement:
        return self.perm_element(simple_perm(self.n, i))

    def element(self, perm: Perm, exps: Sequence[int]) -> GroupElement:
        """The element ``perm * diag(exps)``."""
        return GroupElement(tuple(perm), tuple(e % self.b for e in exps), self.b)

    def perms(self) -> list[Perm]:
        """All of W, sorted by length then lexicographically."""
        return _sorted_perms(self.n)

    def diagonals(self) -> list[GroupElement]:
        """All of H_b in exponent-lexicographic order."""
        return [self.diag(e) for e in itertools.product(range(self.b), repeat=self.n)]

    def elements(self) -> list[GroupElement]:
        """All of WH_b in canonical order (length, perm, exps)."""
        exps = list(itertools.product(range(self.b), repeat=self.n))
        return [GroupElement(p, e, self.b) for p in self.perms() for e in exps]

    def generators(self) -> list[int]:
        return list(range(1, self.n))

    def reflections(self) -> list[Reflection]:
        return [Reflection(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def check(self, *xs: GroupElement) -> None:
        for x in xs:
            if x.b != self.b or len(x.perm) != self.n:
                raise ParameterMismatch(f"element {x} does not belong to G({self.b},1,{self.n})")


def _factorial(n: int) -> int:
    r = 1
    for k in range(2, n + 1):
        r *= k
    return r


@lru_cache(maxsize=None)
def _sorted_perms(n: int) -> list[Perm]:
    return sorted(itertools.permutations(range(n)), key=lambda p: (perm_length(p), p))


def _same(x: GroupElement, y: GroupElement) -> None:
    if x.b != y.b or len(x.perm) != len(y.perm):
        raise ParameterMismatch(
            f"cannot combine elements of G({x.b},1,{len(x.perm)}) and G({y.b},1,{len(y.perm)})")


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Product in W x| H_b: (w1 d1)(w2 d2) = (w1 w2)(w2^-1 d1 w2 d2)."""
    _same(x, y)
    b = x.b
    p2 = y.perm
    e1 = x.exps
    return GroupElement(
        tuple(x.perm[j] for j in p2),
        tuple((e1[p2[j]] + y.exps[j]) % b for j in range(len(p2))),
        b,
    )


def inverse(x: GroupElement) -> GroupElement:
    # (w d)^-1 = d^-1 w^-1 = w^-1 (w d^-1 w^-1)
    pinv = perm_inv(x.perm)
    b = x.b
    return GroupElement(pinv, tuple((-x.exps[pinv[k]]) % b for k in range(len(pinv))), b)


def length(x: GroupElement) -> int:
    return perm_length(x.perm)


def conjugate_diag(p: Perm, d: GroupElement) -> GroupElement:
    """``p d p^-1`` for a diagonal ``d``: the exponent at ``j`` moves to ``p[j]``."""
    exps = [0] * len(p)
    for j, pj in enumerate(p):
        exps[pj] = d.exps[j]
    return GroupElement(d.perm, tuple(exps), d.b)


# ---------------------------------------------------------------------------
# the subsets X_t of H_b


def _sign_exponent(b: int) -> int:
    # (-1)**(b-1) as a power of zeta**a: trivial for odd b, zeta**(a*b/2) for even b
    return b // 2 if b % 2 == 0 else 0


def x_set(t: Reflection, params: GroupParams) -> frozenset[GroupElement]:
    """
    X_t = { h_{i,j}(alpha) : alpha in F_b } for t = (i j).

    >>> sorted(x.exps for x in x_set(Reflection(1, 2), GroupParams(2, 3)))
    [(0, 0), (1, 2), (2, 1)]
    """
    n, b = params.n, params.b
    if t.j > n:
        raise ValueError(f"reflection ({t.i} {t.j}) outside S_{n}")
    c = _sign_exponent(b)
    out = []
    for m in range(b):
        e = [0] * n
        e[t.i - 1] = m
        e[t.j - 1] = (c - m) % b
        out.append(params.diag(e))
    return frozenset(out)


def x_zero(params: GroupParams) -> frozenset[GroupElement]:
    return frozenset(params.diag((m,) + (0,) * (params.n - 1)) for m in range(params.b))


def product_set(*sets: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """Elementwise product A_1 A_2 ... A_r of subsets of H_b."""
    it = iter(sets)
    acc = frozenset(next(it))
    for s in it:
        s = tuple(s)
        acc = frozenset(multiply(x, y) for x in acc for y in s)
    return acc


def h_prime(params: GroupParams) -> frozenset[GroupElement]:
    """H' = X_{s_1} ... X_{s_{n-1}} (just {1} when n = 1)."""
    if params.n == 1:
        return frozenset([params.identity()])
    return product_set(*(x_set(Reflection(i, i + 1), params) for i in params.generators()))


# ---------------------------------------------------------------------------
# Coxeter combinatorics of W = S_n


@lru_cache(maxsize=None)
def reduced_word(p: Perm) -> tuple[int, ...]:
    """
    Lexicographically smallest reduced word (1-based generator indices).

    >>> reduced_word((2, 1, 0))
    (1, 2, 1)
    """
    desc = left_descents(p)
    if not desc:
        return ()
    i = desc[0]
    return (i,) + reduced_word(perm_mul(simple_perm(len(p), i), p))


def bruhat_leq(p: Perm, q: Perm) -> bool:
    """Bruhat order on S_n via the sorted-prefix (tableau) criterion."""
    if len(p) != len(q):
        raise ValueError("permutations of different degree")
    for k in range(1, len(p)):
        a = sorted(p[:k])
        c = sorted(q[:k])
        if any(x > y for x, y in zip(a, c)):
            return False
    return True


# ---------------------------------------------------------------------------
# monomial matrix model, used as a reference in tests


def to_monomial_matrix(x: GroupElement) -> tuple[tuple[int | None, ...], ...]:
    """n x n matrix of exponents; ``None`` marks a zero entry."""
    n = len(x.perm)
    rows: list[list[int | None]] = [[None] * n for _ in range(n)]
    for j, pj in enumerate(x.perm):
        rows[pj][j] = x.exps[j]
    return tuple(tuple(r) for r in rows)


def monomial_matmul(A, B, b: int):
    """Product of two exponent-marked monomial matrices (entries add mod b)."""
    n = len(A)
    out: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = None
            for k in range(n):
                if A[i][k] is not None and B[k][j] is not None:
                    if acc is not None:
                        raise ValueError("not a monomial matrix")
                    acc = (A[i][k] + B[k][j]) % b
            out[i][j] = acc
    return tuple(tuple(r) for r in out)


def iter_reduced_words(p: Perm) -> Iterator[tuple[int, ...]]:
    """All reduced words of ``p`` in lexicographic order."""
    desc = left_descents(p)
    if not desc:
        yield ()
        return
    n = len(p)
    for i in desc:
        for rest in iter_reduced_words(perm_mul(simple_perm(n, i), p)):
            yield (i,) + rest
