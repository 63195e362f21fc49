"""
R*-polynomials, the Omega-sets and the partial order they define on WH_b.

R*_{x,y} is the coefficient data of bar(T_y) = sum_x bar(R*_{x,y}) T_x. It is
computed here in two independent ways:

* ``r_star``: the recursion on l(y). The H_b part of y is stripped first
  (R*_{x,wd} = R*_{xd^-1,w}), then for a left descent s of w

      R*_{x,w} = R*_{sx,sw}                                   if l(sx) < l(x)
      R*_{x,w} = R*_{sx,sw} + a v^-1 sum_{d in X_s} R*_{dx,sw}  otherwise

* ``r_star_direct``: expand bar(T_y) in the Hecke algebra and read off
  coefficients.

The order x <= y (R*_{x,y} != 0) is decided quickly through Omega-sets:
w1 d1 <= w2 d2 iff d1 d2^-1 lies in Omega_{w1,w2}, a product of X_t along a
length-increasing reflection chain from w1 to w2.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .group import (
    GroupElement, GroupParams, Perm, Reflection, bruhat_leq, inverse, length,
    multiply, perm_length, perm_mul, product_set, simple_perm, x_set,
    left_descents, x_zero, h_prime,
)
from .hecke import HeckeAlgebra
from .notation import format_element
from .scalars import GenericScalar, GenericRing

__all__ = [
    "RStar", "r_star", "r_star_direct", "r_table",
    "omega", "reflection_chain", "reflection_chains", "leq",
    "OrderPoset", "hasse", "EnumerationBoundExceeded", "to_dot", "r_table_csv",
]

Pivot = Callable[[Perm], int]

ONE = GenericScalar.const(1)
ZERO = GenericScalar()
AVINV = GenericScalar.monomial(1, -1)


def smallest_descent(w: Perm) -> int:
    return left_descents(w)[0]


class RStar:
    """Memoized R*-recursion for one (n, b)."""

    def __init__(self, params: GroupParams, pivot: Pivot = smallest_descent):
        self.params = params
        self.pivot = pivot
        self._memo: dict[tuple[GroupElement, Perm], GenericScalar] = {}
        self._xs = {i: tuple(sorted(x_set(Reflection(i, i + 1), params)))
                    for i in params.generators()}
        self._identity_perm = tuple(range(params.n))

    def __call__(self, x: GroupElement, y: GroupElement) -> GenericScalar:
        self.params.check(x, y)
        # R*_{x, w d} = R*_{x d^-1, w}
        return self._r(multiply(x, inverse(y.d_part())), y.perm)

    def _r(self, x: GroupElement, w: Perm) -> GenericScalar:
        key = (x, w)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        lw = perm_length(w)
        lx = perm_length(x.perm)
        if lx > lw:
            res = ZERO
        elif lw == 0:
            res = ONE if (x.perm == w and not any(x.exps)) else ZERO
        else:
            i = self.pivot(w)
            s_el = self.params.s(i)
            sw = perm_mul(simple_perm(self.params.n, i), w)
            sx = multiply(s_el, x)
            res = self._r(sx, sw)
            if perm_length(sx.perm) > lx:
                acc = ZERO
                for d in self._xs[i]:
                    acc = acc + self._r(multiply(d, x), sw)
                if acc:
                    res = res + AVINV * acc
        return self._memo.setdefault(key, res)

    def table(self) -> dict[tuple[GroupElement, GroupElement], GenericScalar]:
        els = self.params.elements()
        out = {}
        for y in els:
            for x in els:
                r = self(x, y)
                if r:
                    out[(x, y)] = r
        return out


@lru_cache(maxsize=32)
def _default_rstar(params: GroupParams) -> RStar:
    return RStar(params)


def r_star(x: GroupElement, y: GroupElement, params: GroupParams) -> GenericScalar:
    """
    >>> P = GroupParams(2, 2)
    >>> str(r_star(P.diag((1, 0)), P.s(1), P))
    'a*v^-1'
    >>> r_star(P.identity(), P.s(1), P).is_zero()
    True
    """
    return _default_rstar(params)(x, y)


@lru_cache(maxsize=32)
def _generic_algebra(params: GroupParams) -> HeckeAlgebra:
    return HeckeAlgebra(params, GenericRing())


def r_star_direct(y: GroupElement, params: GroupParams) -> dict[GroupElement, GenericScalar]:
    """All nonzero R*_{x,y}, read off the expansion of bar(T_y)."""
    params.check(y)
    alg = _generic_algebra(params)
    return {x: c.bar() for x, c in alg.bar_T(y).support.items()}


def r_table(params: GroupParams, method: str = "recursive") -> dict:
    """Nonzero R*_{x,y} over all pairs, keyed ``(x, y)``."""
    if method == "recursive":
        return _default_rstar(params).table()
    if method == "direct":
        out = {}
        for y in params.elements():
            for x, c in r_star_direct(y, params).items():
                out[(x, y)] = c
        return out
    if method == "closed":
        from .subexpr import r_star_closed_all
        out = {}
        for y in params.elements():
            for x, c in r_star_closed_all(y, params).items():
                out[(x, y)] = c
        return out
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Omega-sets


def _reflections(n: int) -> list[Perm]:
    return [Reflection(i, j).perm(n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def reflection_chains(w1: Perm, w2: Perm) -> Iterator[tuple[Perm, ...]]:
    """Every (t_1, ..., t_r) with w2 = w1 t_1...t_r and lengths rising by one."""
    if not bruhat_leq(w1, w2):
        return
    target = perm_length(w2)
    refl = _reflections(len(w1))

    def extend(v, chain):
        if v == w2:
            yield tuple(chain)
            return
        lv = perm_length(v)
        if lv >= target:
            return
        for t in refl:
            vt = perm_mul(v, t)
            if perm_length(vt) == lv + 1 and bruhat_leq(vt, w2):
                chain.append(t)
                yield from extend(vt, chain)
                chain.pop()

    yield from extend(w1, [])


def reflection_chain(w1: Perm, w2: Perm) -> tuple[Perm, ...] | None:
    """The first chain found by greedy extension, or None if w1 is not <= w2."""
    return next(reflection_chains(w1, w2), None)


def omega_from_chain(chain: tuple[Perm, ...], params: GroupParams) -> frozenset[GroupElement]:
    if not chain:
        return frozenset([params.identity()])
    return product_set(*(x_set(Reflection.from_perm(t), params) for t in chain))


@lru_cache(maxsize=4096)
def omega(w1: Perm, w2: Perm, params: GroupParams) -> frozenset[GroupElement]:
    """
    Omega_{w1,w2} = { d : R*_{w1 d, w2} != 0 }.

    >>> P = GroupParams(2, 3)
    >>> sorted(d.exps for d in omega((0, 1), (1, 0), P))
    [(0, 0), (1, 2), (2, 1)]
    """
    chain = reflection_chain(w1, w2)
    if chain is None:
        return frozenset()
    return omega_from_chain(chain, params)


def leq(x: GroupElement, y: GroupElement, params: GroupParams) -> bool:
    params.check(x, y)
    d = multiply(x.d_part(), inverse(y.d_part()))
    return d in omega(x.perm, y.perm, params)


# ---------------------------------------------------------------------------
# the poset and its Hasse diagram


class EnumerationBoundExceeded(ValueError):
    pass


@dataclass
class OrderPoset:
    params: GroupParams
    elements: list[GroupElement]
    below: dict[GroupElement, frozenset[GroupElement]]   # strict down-sets
    hasse_edges: list[tuple[GroupElement, GroupElement]]  # (lower, upper)
    components: list[list[GroupElement]] = field(default_factory=list)

    def leq(self, x: GroupElement, y: GroupElement) -> bool:
        return x == y or x in self.below[y]

    def relation(self) -> set[tuple[GroupElement, GroupElement]]:
        rel = {(x, x) for x in self.elements}
        for y, xs in self.below.items():
            rel.update((x, y) for x in xs)
        return rel


def hasse(params: GroupParams, max_elements: int = 5000) -> OrderPoset:
    if params.order > max_elements:
        raise EnumerationBoundExceeded(
            f"|G({params.b},1,{params.n})| = {params.order} exceeds bound {max_elements}")
    els = params.elements()
    index = {x: k for k, x in enumerate(els)}
    down = [0] * len(els)
    for ky, y in enumerate(els):
        mask = 0
        for kx, x in enumerate(els):
            if kx != ky and leq(x, y, params):
                mask |= 1 << kx
        down[ky] = mask
    edges = []
    for ky, y in enumerate(els):
        covered_through = 0
        m = down[ky]
        k = 0
        while m:
            if m & 1:
                covered_through |= down[k]
            m >>= 1
            k += 1
        covers = down[ky] & ~covered_through
        k = 0
        while covers:
            if covers & 1:
                edges.append((els[k], y))
            covers >>= 1
            k += 1
    below = {y: frozenset(els[k] for k in range(len(els)) if down[ky] >> k & 1)
             for ky, y in enumerate(els)}
    comps = _components(els, edges, index)
    return OrderPoset(params, els, below, edges, comps)


def _components(els, edges, index) -> list[list[GroupElement]]:
    parent = list(range(len(els)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x, y in edges:
        rx, ry = find(index[x]), find(index[y])
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[GroupElement]] = {}
    for k, x in enumerate(els):
        groups.setdefault(find(k), []).append(x)
    return [groups[r] for r in sorted(groups)]


def wh_prime_cosets(params: GroupParams) -> list[frozenset[GroupElement]]:
    """The cosets (W H') d_0 for d_0 in X_0."""
    hp = h_prime(params)
    out = []
    for d0 in sorted(x_zero(params)):
        out.append(frozenset(multiply(multiply(params.perm_element(w), h), d0)
                             for w in params.perms() for h in hp))
    return out


def _elem_key(x: GroupElement):
    return (length(x), x.perm, x.exps)


def to_dot(poset: OrderPoset, name: str | None = None) -> str:
    """Deterministic DOT text, one cluster per connected component."""
    P = poset.params
    name = name or f"G_{P.b}_1_{P.n}"
    lines = [f'graph "{name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    comp_of = {}
    for k, comp in enumerate(poset.components):
        for x in comp:
            comp_of[x] = k
    for k, comp in enumerate(poset.components):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="component {k}";')
        for x in sorted(comp, key=_elem_key):
            lines.append(f'    "{format_element(x)}";')
        for lo, hi in sorted((e for e in poset.hasse_edges if comp_of[e[0]] == k),
                             key=lambda e: (_elem_key(e[0]), _elem_key(e[1]))):
            lines.append(f'    "{format_element(lo)}" -- "{format_element(hi)}";')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def r_table_csv(table: dict) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["x", "y", "r_star"])
    for (x, y), c in sorted(table.items(), key=lambda kv: (_elem_key(kv[0][1]), _elem_key(kv[0][0]))):
        wr.writerow([format_element(x), format_element(y), json.dumps(c.to_json())])
    return buf.getvalue()
