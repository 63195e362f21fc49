"""
Kazhdan-Lusztig basis of the specialized algebra over Z_b[v, v^-1].

For fixed y the coefficients P*_{x,y} of C_y = sum_x P*_{x,y} T_x are found by
descending induction on l(x). With

    g = R*_{x,y} + sum_{x < z < y} R*_{x,z} P*_{z,y}      (R* specialized)

the defining condition bar(P*_{x,y}) - P*_{x,y} = g has the unique solution
P*_{x,y} = -(part of g in strictly negative v-degree), provided g is
bar-antisymmetric with zero constant term. Both conditions are checked for
every g; a failure means a bug upstream, never a legal input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .group import GroupElement, GroupParams, length
from .hecke import HeckeAlgebra, HeckeElement
from .rpoly import RStar, leq
from .scalars import SpecializedRing, SpecializedScalar, specialize

__all__ = ["KLConsistencyError", "KLSolver", "kl_solver", "c_element", "p_star", "p"]


class KLConsistencyError(RuntimeError):
    """An intermediate g failed bar-antisymmetry or v^0-vanishing."""


def _key(x: GroupElement):
    return (length(x), x.perm, x.exps)


class KLSolver:
    def __init__(self, params: GroupParams):
        self.params = params
        self.ring = SpecializedRing(params.b)
        self.algebra = HeckeAlgebra(params, self.ring)
        self._rstar = RStar(params)
        self._rsp: dict[tuple[GroupElement, GroupElement], SpecializedScalar] = {}
        self._columns: dict[GroupElement, dict[GroupElement, SpecializedScalar]] = {}
        self.g_checks = 0
        self._elements = params.elements()

    def r_specialized(self, x: GroupElement, z: GroupElement) -> SpecializedScalar:
        key = (x, z)
        hit = self._rsp.get(key)
        if hit is None:
            hit = specialize(self._rstar(x, z), self.params.b)
            self._rsp[key] = hit
        return hit

    def column(self, y: GroupElement) -> dict[GroupElement, SpecializedScalar]:
        """Nonzero P*_{x,y}, keyed by x."""
        self.params.check(y)
        hit = self._columns.get(y)
        if hit is not None:
            return hit
        P = self.params
        below = [x for x in self._elements if x != y and leq(x, y, P)]
        below.sort(key=_key, reverse=True)
        col: dict[GroupElement, SpecializedScalar] = {y: self.ring.one()}
        for x in below:
            g = self.r_specialized(x, y)
            for z, pz in col.items():
                if z == y:
                    continue
                r = self.r_specialized(x, z)
                if r:
                    g = g + r * pz
            self._check_g(g, x, y)
            pstar = -g.negative_part()
            if pstar:
                col[x] = pstar
        self._columns[y] = col
        return col

    def _check_g(self, g: SpecializedScalar, x, y) -> None:
        self.g_checks += 1
        if g.bar() != -g:
            raise KLConsistencyError(f"g for ({x}, {y}) is not bar-antisymmetric: {g}")
        if g.coeff(0) != 0:
            raise KLConsistencyError(f"g for ({x}, {y}) has nonzero constant term: {g}")

    def p_star(self, x: GroupElement, y: GroupElement) -> SpecializedScalar:
        self.params.check(x)
        return self.column(y).get(x, self.ring.zero())

    def p(self, x: GroupElement, y: GroupElement) -> SpecializedScalar:
        """P_{x,y} = v^(l(y) - l(x)) P*_{x,y}."""
        return self.p_star(x, y).shift_v(length(y) - length(x))

    def c_element(self, y: GroupElement) -> HeckeElement:
        return HeckeElement(self.algebra, dict(self.column(y)))

    def degree_report(self, ys=None) -> list[dict]:
        """
        Pairs x < y where the v^-1-degree of P*_{x,y} differs from
        l(y) - l(x). Reported, not asserted.
        """
        out = []
        for y in (ys if ys is not None else self._elements):
            for x, ps in self.column(y).items():
                if x == y:
                    continue
                deg = -ps.v_degrees()[0]
                if deg != length(y) - length(x):
                    out.append({"x": x, "y": y, "degree": deg, "gap": length(y) - length(x)})
        return out


@lru_cache(maxsize=16)
def kl_solver(params: GroupParams) -> KLSolver:
    return KLSolver(params)


def c_element(y: GroupElement, params: GroupParams) -> HeckeElement:
    return kl_solver(params).c_element(y)


def p_star(x: GroupElement, y: GroupElement, params: GroupParams) -> SpecializedScalar:
    return kl_solver(params).p_star(x, y)


def p(x: GroupElement, y: GroupElement, params: GroupParams) -> SpecializedScalar:
    """
    >>> P = GroupParams(2, 1)
    >>> str(p(P.identity(), P.s(1), P))
    '1'
    """
    return kl_solver(params).p(x, y)
