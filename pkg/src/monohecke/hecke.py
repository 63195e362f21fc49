"""
The generic Hecke algebra of G(b,1,n) in the basis {T_x}.

Products are computed from the defining relations alone: the right factor
``T_y`` is written as ``T_{s_1} ... T_{s_p} T_d`` along a reduced word and
the rules

    T_x T_d = T_{xd}
    T_x T_s = T_{xs}                                  if l(xs) > l(x)
    T_x T_s = T_{xs} + a v^-1 sum_{d in X_s} T_{xd}   if l(xs) < l(x)

are applied one generator at a time. The same code serves the generic ring
Z[a, v, v^-1] and the specialized ring Z_b[v, v^-1] (where ``a v^-1`` becomes
``v/b - v^-1/b``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .group import (
    GroupElement, GroupParams, ParameterMismatch, Reflection,
    inverse, length, multiply, reduced_word, simple_perm, x_set,
)
from .scalars import GenericRing, SpecializedRing, specialize

__all__ = ["HeckeAlgebra", "HeckeElement", "E1Report"]


class HeckeAlgebra:
    """H over a coefficient ring (generic by default)."""

    def __init__(self, params: GroupParams, ring=None):
        self.params = params
        self.ring = ring if ring is not None else GenericRing()
        if isinstance(self.ring, SpecializedRing) and self.ring.b != params.b:
            raise ParameterMismatch("specialized ring built for a different b")
        self._xs = {i: sorted(x_set(Reflection(i, i + 1), params)) for i in params.generators()}
        self._avinv = self.ring.a_vinv()
        self._basis_cache: dict[tuple[GroupElement, tuple[int, ...]], dict] = {}
        self._bar_cache: dict[GroupElement, HeckeElement] = {}

    def __eq__(self, other):
        return (isinstance(other, HeckeAlgebra) and other.params == self.params
                and other.ring == self.ring)

    def __hash__(self):
        return hash((self.params, self.ring))

    def __repr__(self):
        return f"HeckeAlgebra(n={self.params.n}, b={self.params.b}, {self.ring!r})"

    # -- constructors ------------------------------------------------------

    def element(self, support: Mapping[GroupElement, object]) -> "HeckeElement":
        self.params.check(*support)
        return HeckeElement(self, {x: c for x, c in support.items() if c})

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def one(self) -> "HeckeElement":
        return self.T(self.params.identity())

    def T(self, x: GroupElement) -> "HeckeElement":
        self.params.check(x)
        return HeckeElement(self, {x: self.ring.one()})

    def t(self, x: GroupElement) -> "HeckeElement":
        """The unnormalized basis element ``t_x = v^l(x) T_x``."""
        self.params.check(x)
        return HeckeElement(self, {x: self.ring.v_power(length(x))})

    def x_s(self, i: int) -> list[GroupElement]:
        return self._xs[i]

    # -- generator actions ---------------------------------------------------

    def _right_s(self, sup: dict, i: int) -> dict:
        s = simple_perm(self.params.n, i)
        b = self.params.b
        xs = self._xs[i]
        out: dict = {}
        for x, c in sup.items():
            xs_el = GroupElement(tuple(x.perm[j] for j in s),
                                 tuple(x.exps[s[j]] for j in range(len(s))), b)
            _acc(out, xs_el, c)
            if x.perm[i - 1] > x.perm[i]:
                cc = c * self._avinv
                for d in xs:
                    _acc(out, multiply(x, d), cc)
        return out

    def _left_s(self, i: int, sup: dict) -> dict:
        s_el = self.params.s(i)
        xs = self._xs[i]
        out: dict = {}
        for x, c in sup.items():
            sx = multiply(s_el, x)
            _acc(out, sx, c)
            # l(sx) < l(x) iff i+1 precedes i in one-line notation of x
            if x.perm.index(i - 1) > x.perm.index(i):
                cc = c * self._avinv
                for d in xs:
                    _acc(out, multiply(d, x), cc)
        return out

    def _basis_times_w(self, x: GroupElement, word: tuple[int, ...]) -> dict:
        key = (x, word)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        if not word:
            res = {x: self.ring.one()}
        else:
            res = self._right_s(self._basis_times_w(x, word[:-1]), word[-1])
        self._basis_cache[key] = res
        return res

    def basis_product(self, x: GroupElement, y: GroupElement) -> dict:
        """Support dict of ``T_x T_y``."""
        word = reduced_word(y.perm)
        sup = self._basis_times_w(x, word)
        if not any(y.exps):
            return sup
        d = y.d_part()
        return {multiply(z, d): c for z, c in sup.items()}

    def multiply(self, h1: "HeckeElement", h2: "HeckeElement") -> "HeckeElement":
        self._check(h1, h2)
        out: dict = {}
        for x, c1 in h1.support.items():
            for y, c2 in h2.support.items():
                c = c1 * c2
                for z, c3 in self.basis_product(x, y).items():
                    _acc(out, z, c * c3)
        return HeckeElement(self, out)

    def multiply_left_rules(self, h1: "HeckeElement", h2: "HeckeElement") -> "HeckeElement":
        """Same product, computed by letting T_x act on the left of h2."""
        self._check(h1, h2)
        out: dict = {}
        for x, c1 in h1.support.items():
            sup = dict(h2.support)
            d = x.d_part()
            sup = {multiply(d, z): c for z, c in sup.items()}
            for i in reversed(reduced_word(x.perm)):
                sup = self._left_s(i, sup)
            for z, c in sup.items():
                _acc(out, z, c1 * c)
        return HeckeElement(self, out)

    def _check(self, *hs: "HeckeElement") -> None:
        for h in hs:
            if h.algebra != self:
                raise ParameterMismatch(f"element of {h.algebra!r} used in {self!r}")

    # -- inverses, bar, trace ------------------------------------------------

    def inverse_s(self, i: int) -> "HeckeElement":
        """T_s^-1 = T_s - a v^-1 sum_{d in X_s} T_d."""
        sup = {self.params.s(i): self.ring.one()}
        for d in self._xs[i]:
            _acc(sup, d, -self._avinv)
        return HeckeElement(self, sup)

    def inverse_t(self, x: GroupElement) -> "HeckeElement":
        """T_x^-1 for x = w d: T_{d^-1} T_{s_p}^-1 ... T_{s_1}^-1."""
        self.params.check(x)
        h = self.T(inverse(x.d_part()))
        for i in reversed(reduced_word(x.perm)):
            h = h * self.inverse_s(i)
        return h

    def bar_T(self, x: GroupElement) -> "HeckeElement":
        """bar(T_x) = T_{x^-1}^-1."""
        hit = self._bar_cache.get(x)
        if hit is None:
            hit = self.inverse_t(inverse(x))
            self._bar_cache[x] = hit
        return hit

    def bar(self, h: "HeckeElement") -> "HeckeElement":
        self._check(h)
        out: dict = {}
        for x, c in h.support.items():
            cb = c.bar()
            for z, c2 in self.bar_T(x).support.items():
                _acc(out, z, cb * c2)
        return HeckeElement(self, out)

    def tau(self, h: "HeckeElement"):
        self._check(h)
        return h.support.get(self.params.identity(), self.ring.zero())

    def specialize(self, h: "HeckeElement") -> "HeckeElement":
        """Coefficientwise image in the specialized algebra."""
        if not isinstance(self.ring, GenericRing):
            raise TypeError("only generic elements can be specialized")
        target = HeckeAlgebra(self.params, SpecializedRing(self.params.b))
        return HeckeElement(target, {x: specialize(c, self.params.b) for x, c in h.support.items()})

    # -- the idempotent-like element e_1 -------------------------------------

    def e1(self) -> "HeckeElement":
        return HeckeElement(self, {d: self.ring.one() for d in self.params.diagonals()})

    def e1_check(self) -> "E1Report":
        return e1_check(self)


def _acc(out: dict, key, c) -> None:
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


class HeckeElement:
    """Finite sum of T_x with scalar coefficients; zero terms are never stored."""

    __slots__ = ("algebra", "support")

    def __init__(self, algebra: HeckeAlgebra, support: dict):
        self.algebra = algebra
        self.support = support

    def coeff(self, x: GroupElement):
        return self.support.get(x, self.algebra.ring.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self.algebra._check(other)
        out = dict(self.support)
        for x, c in other.support.items():
            _acc(out, x, c)
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.algebra, {x: -c for x, c in self.support.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "HeckeElement":
        return self.scale(other)

    def scale(self, c) -> "HeckeElement":
        out = {}
        for x, c2 in self.support.items():
            p = c * c2
            if p:
                out[x] = p
        return HeckeElement(self.algebra, out)

    def bar(self) -> "HeckeElement":
        return self.algebra.bar(self)

    def t_coefficients(self) -> dict:
        """Coefficients in the basis t_x = v^l(x) T_x."""
        return {x: c.shift_v(-length(x)) for x, c in self.support.items()}

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra == other.algebra and self.support == other.support

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        from .notation import format_element
        if not self.support:
            return "0"
        terms = sorted(self.support.items(), key=lambda kv: _order_key(kv[0]))
        return " + ".join(f"({c})*T[{format_element(x)}]" for x, c in terms)

    def to_json(self) -> list[dict]:
        from .notation import format_element
        terms = sorted(self.support.items(), key=lambda kv: _order_key(kv[0]))
        return [{"element_expr": format_element(x), "scalar": c.to_json()} for x, c in terms]


def _order_key(x: GroupElement):
    return (length(x), x.perm, x.exps)


@dataclass
class E1Report:
    n: int
    b: int
    passed: bool
    checks: list[dict] = field(default_factory=list)


def e1_check(alg: HeckeAlgebra) -> E1Report:
    """
    Check that e_1 = sum_d t_d is central and that t~_s = t_s e_1 satisfies
    t~_s^2 = b^n q t~_1 + b^(n+1) a t~_s.
    """
    P = alg.params
    ring = alg.ring
    e1 = alg.e1()
    checks = []
    gens = [alg.T(d) for d in P.diagonals()] + [alg.T(P.s(i)) for i in P.generators()]
    central = True
    for g in gens:
        if g * e1 != e1 * g:
            central = False
            checks.append({"name": "central", "pass": False, "witness": repr(g)})
    checks.append({"name": "central", "pass": central})
    sq = e1 * e1 == e1.scale(ring.const(P.b ** P.n))
    checks.append({"name": "e1^2 = b^n e1", "pass": sq})
    ok = central and sq
    q = ring.v_power(2)
    for i in P.generators():
        ts = alg.t(P.s(i)) * e1
        lhs = ts * ts
        rhs = e1.scale(q * ring.const(P.b ** P.n)) + ts.scale(ring.a() * ring.const(P.b ** (P.n + 1)))
        good = lhs == rhs
        ok = ok and good
        entry = {"name": f"quadratic relation for s{i}", "pass": good}
        if not good:
            entry["witness"] = repr(lhs - rhs)
        checks.append(entry)
    return E1Report(P.n, P.b, ok, checks)
