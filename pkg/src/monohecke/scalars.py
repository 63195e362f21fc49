"""
Exact scalar rings.

``GenericScalar``
    elements of Z[a, v, v^-1], stored sparsely as ``{(a_deg, v_deg): coeff}``.
``SpecializedScalar``
    elements of Z_b[v, v^-1] (Laurent polynomials whose coefficients have
    powers of ``b`` as denominators), stored as ``{v_deg: (num, b_pow)}``
    meaning ``num / b**b_pow``.

``specialize`` is the quotient map by the ideal (b*a - (v^2 - 1)), i.e.
``a -> (v^2 - 1)/b``.  Both rings carry a bar involution (``v -> 1/v`` and,
on the generic side, ``a -> -a v^-2``) and ``specialize`` commutes with it.

>>> a, v = GenericScalar.a(), GenericScalar.v()
>>> (a * v**-1).bar() == -(a * v**-1)
True
>>> print(specialize(a * v**-1, 2))
1/2*v - 1/2*v^-1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

__all__ = [
    "GenericScalar", "SpecializedScalar", "specialize",
    "GenericRing", "SpecializedRing", "ScalarMismatch",
]


class ScalarMismatch(ValueError):
    """Specialized scalars with different ``b`` were combined."""


def _fmt_coeff(c, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class GenericScalar:
    """Element of Z[a, v, v^-1] with integer coefficients."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t = {}
        if terms:
            for k, c in terms.items():
                if k[0] < 0:
                    raise ValueError("negative a-degree")
                if c:
                    t[k] = int(c)
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t: dict) -> "GenericScalar":
        out = cls.__new__(cls)
        out._t = t
        out._h = None
        return out

    @classmethod
    def const(cls, c: int) -> "GenericScalar":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def a(cls) -> "GenericScalar":
        return cls._raw({(1, 0): 1})

    @classmethod
    def v(cls) -> "GenericScalar":
        return cls._raw({(0, 1): 1})

    @classmethod
    def monomial(cls, a_deg: int, v_deg: int, coeff: int = 1) -> "GenericScalar":
        return cls({(a_deg, v_deg): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def _coerce(self, other) -> "GenericScalar":
        if isinstance(other, GenericScalar):
            return other
        if isinstance(other, int):
            return GenericScalar.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for k, c in other._t.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return GenericScalar._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return GenericScalar._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t: dict = {}
        for (i1, j1), c1 in self._t.items():
            for (i2, j2), c2 in other._t.items():
                k = (i1 + i2, j1 + j2)
                s = t.get(k, 0) + c1 * c2
                if s:
                    t[k] = s
                else:
                    t.pop(k, None)
        return GenericScalar._raw(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            # only monomials in v are units
            if len(self._t) != 1:
                raise ValueError("only v-monomials can be inverted")
            ((i, j), c), = self._t.items()
            if i != 0 or c not in (1, -1):
                raise ValueError("only v-monomials can be inverted")
            return GenericScalar._raw({(0, j * k): c ** (-k)})
        out = GenericScalar.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift_v(self, k: int) -> "GenericScalar":
        """Multiply by ``v**k``."""
        if not k:
            return self
        return GenericScalar._raw({(i, j + k): c for (i, j), c in self._t.items()})

    def bar(self) -> "GenericScalar":
        # a^i v^j -> (-a v^-2)^i v^-j
        return GenericScalar._raw({(i, -j - 2 * i): (-c if i & 1 else c)
                                   for (i, j), c in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = GenericScalar.const(other)
        if not isinstance(other, GenericScalar):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def a_degree(self) -> int:
        return max((i for i, _ in self._t), default=-1)

    def v_degrees(self) -> tuple[int, int]:
        """(min, max) v-degree; raises on zero."""
        vs = [j for _, j in self._t]
        return min(vs), max(vs)

    def in_avinv(self) -> dict[int, int] | None:
        """
        Coefficients ``{k: c}`` if this is a polynomial in ``a*v^-1``, else None.

        >>> (GenericScalar.a() * GenericScalar.v() ** -1).in_avinv()
        {1: 1}
        """
        out = {}
        for (i, j), c in self._t.items():
            if j != -i:
                return None
            out[i] = c
        return dict(sorted(out.items()))

    def evaluate(self, a, q):
        """
        Value at ``a -> a``, ``v^2 -> q``; every v-degree must be even.
        Returns an int when the result is integral, else a Fraction.
        """
        if any(j % 2 for _, j in self._t):
            j = next(j for _, j in self._t if j % 2)
            raise ValueError(f"odd v-degree {j} cannot be evaluated at v^2 = q")
        if all(j >= 0 for _, j in self._t) and isinstance(a, int) and isinstance(q, int):
            return sum(c * a ** i * q ** (j // 2) for (i, j), c in self._t.items())
        total = Fraction(0)
        for (i, j), c in self._t.items():
            total += c * Fraction(a) ** i * Fraction(q) ** (j // 2)
        return int(total) if total.denominator == 1 else total

    def to_json(self) -> list[dict]:
        return [{"a_deg": i, "v_deg": j, "coeff": str(c)} for (i, j), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "GenericScalar":
        return cls({(d["a_deg"], d["v_deg"]): int(d["coeff"]) for d in data})

    def __repr__(self):
        return f"GenericScalar({self})"

    def __str__(self):
        parts = []
        for (i, j), c in sorted(self._t.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = []
            if i:
                mono.append("a" if i == 1 else f"a^{i}")
            if j:
                mono.append("v" if j == 1 else f"v^{j}")
            parts.append(_fmt_coeff(c, "*".join(mono)))
        return _join(parts)


class SpecializedScalar:
    """Element of Z_b[v, v^-1]; each coefficient is ``num / b**b_pow``."""

    __slots__ = ("b", "_t", "_h")

    def __init__(self, b: int, terms: Mapping[int, object] | None = None):
        """``terms`` maps v-degree to an int, a Fraction, or a ``(num, b_pow)`` pair."""
        if b < 1:
            raise ValueError("b must be positive")
        self.b = b
        self._h = None
        t: dict[int, tuple[int, int]] = {}
        for k, c in (terms or {}).items():
            if isinstance(c, tuple):
                num, e = c
            else:
                num, e = _to_bpow(Fraction(c), b)
            if num:
                t[k] = _normalize(num, e, b)
        self._t = t

    @classmethod
    def _raw(cls, b: int, t: dict) -> "SpecializedScalar":
        out = cls.__new__(cls)
        out.b = b
        out._t = t
        out._h = None
        return out

    @classmethod
    def const(cls, b: int, c) -> "SpecializedScalar":
        return cls(b, {0: c})

    @classmethod
    def v(cls, b: int) -> "SpecializedScalar":
        return cls._raw(b, {1: (1, 0)})

    @property
    def terms(self) -> dict[int, tuple[int, int]]:
        return dict(self._t)

    def coeff(self, k: int) -> Fraction:
        num, e = self._t.get(k, (0, 0))
        return Fraction(num, self.b ** e)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def _coerce(self, other):
        if isinstance(other, SpecializedScalar):
            if other.b != self.b:
                raise ScalarMismatch(f"b={self.b} vs b={other.b}")
            return other
        if isinstance(other, (int, Fraction)):
            return SpecializedScalar.const(self.b, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = self.b
        t = dict(self._t)
        for k, (n2, e2) in other._t.items():
            if k in t:
                n1, e1 = t[k]
                e = max(e1, e2)
                num = n1 * b ** (e - e1) + n2 * b ** (e - e2)
                if num:
                    t[k] = _normalize(num, e, b)
                else:
                    del t[k]
            else:
                t[k] = (n2, e2)
        return SpecializedScalar._raw(b, t)

    __radd__ = __add__

    def __neg__(self):
        return SpecializedScalar._raw(self.b, {k: (-n, e) for k, (n, e) in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = self.b
        acc: dict[int, tuple[int, int]] = {}
        for k1, (n1, e1) in self._t.items():
            for k2, (n2, e2) in other._t.items():
                k = k1 + k2
                num, e = n1 * n2, e1 + e2
                if k in acc:
                    n0, e0 = acc[k]
                    m = max(e, e0)
                    num = num * b ** (m - e) + n0 * b ** (m - e0)
                    e = m
                acc[k] = (num, e)
        t = {k: _normalize(num, e, b) for k, (num, e) in acc.items() if num}
        return SpecializedScalar._raw(b, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        out = SpecializedScalar.const(self.b, 1)
        for _ in range(k):
            out = out * self
        return out

    def shift_v(self, k: int) -> "SpecializedScalar":
        if not k:
            return self
        return SpecializedScalar._raw(self.b, {j + k: c for j, c in self._t.items()})

    def bar(self) -> "SpecializedScalar":
        return SpecializedScalar._raw(self.b, {-k: c for k, c in self._t.items()})

    def negative_part(self) -> "SpecializedScalar":
        """Terms of strictly negative v-degree."""
        return SpecializedScalar._raw(self.b, {k: c for k, c in self._t.items() if k < 0})

    def v_degrees(self) -> tuple[int, int]:
        ks = list(self._t)
        return min(ks), max(ks)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SpecializedScalar.const(self.b, other)
        if not isinstance(other, SpecializedScalar):
            return NotImplemented
        return self.b == other.b and self._t == other._t

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.b, frozenset(self._t.items())))
        return self._h

    def to_json(self) -> list[dict]:
        return [{"v_deg": k, "num": str(n), "b_pow": e} for k, (n, e) in self.items()]

    @classmethod
    def from_json(cls, b: int, data) -> "SpecializedScalar":
        return cls(b, {d["v_deg"]: (int(d["num"]), d["b_pow"]) for d in data})

    def __repr__(self):
        return f"SpecializedScalar(b={self.b}, {self})"

    def __str__(self):
        parts = []
        for k, (n, e) in sorted(self._t.items(), reverse=True):
            mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
            if e == 0:
                parts.append(_fmt_coeff(n, mono))
                continue
            c = f"{n}/{self.b}" if e == 1 else f"{n}/{self.b}^{e}"
            parts.append(f"{c}*{mono}" if mono else c)
        return _join(parts)


def _normalize(num: int, e: int, b: int) -> tuple[int, int]:
    if b > 1:
        while e > 0 and num % b == 0:
            num //= b
            e -= 1
    else:
        e = 0
    return num, e


def _to_bpow(c: Fraction, b: int) -> tuple[int, int]:
    den = c.denominator
    e = 0
    p = 1
    while den != 1 and p % den:
        if b == 1 or e > 4 * den.bit_length() + 8:
            raise ValueError(f"{c} is not in Z_{b}")
        p *= b
        e += 1
    return c.numerator * (p // den), e


def specialize(f: GenericScalar, b: int) -> SpecializedScalar:
    """Image under a -> (v^2 - 1)/b."""
    # a^i = (v^2 - 1)^i / b^i, expanded binomially
    acc = SpecializedScalar(b)
    by_a: dict[int, dict[int, int]] = {}
    for (i, j), c in f._t.items():
        by_a.setdefault(i, {})[j] = c
    for i, vs in by_a.items():
        binom = _binomials(i)
        part = {}
        for j, c in vs.items():
            for k, bk in enumerate(binom):
                # (v^2 - 1)^i = sum_k C(i,k) v^{2k} (-1)^{i-k}
                deg = j + 2 * k
                coef = c * bk * (-1 if (i - k) & 1 else 1)
                part[deg] = part.get(deg, 0) + coef
        acc = acc + SpecializedScalar(b, {d: (num, i) for d, num in part.items() if num})
    return acc


def _binomials(i: int) -> list[int]:
    row = [1]
    for _ in range(i):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row


class GenericRing:
    """Coefficient ring Z[a, v, v^-1] as used by the Hecke algebra."""

    name = "generic"

    def zero(self) -> GenericScalar:
        return GenericScalar()

    def one(self) -> GenericScalar:
        return GenericScalar.const(1)

    def const(self, c: int) -> GenericScalar:
        return GenericScalar.const(c)

    def v_power(self, k: int) -> GenericScalar:
        return GenericScalar._raw({(0, k): 1})

    def a_vinv(self) -> GenericScalar:
        """The coefficient ``a v^-1`` of the quadratic relation."""
        return GenericScalar._raw({(1, -1): 1})

    def a(self) -> GenericScalar:
        return GenericScalar.a()

    def __eq__(self, other):
        return isinstance(other, GenericRing)

    def __hash__(self):
        return hash("generic")

    def __repr__(self):
        return "GenericRing()"


class SpecializedRing:
    """Coefficient ring Z_b[v, v^-1] obtained from a -> (v^2 - 1)/b."""

    name = "specialized"

    def __init__(self, b: int):
        self.b = b
        self._avinv = SpecializedScalar(b, {1: (1, 1), -1: (-1, 1)})

    def zero(self) -> SpecializedScalar:
        return SpecializedScalar(self.b)

    def one(self) -> SpecializedScalar:
        return SpecializedScalar.const(self.b, 1)

    def const(self, c) -> SpecializedScalar:
        return SpecializedScalar.const(self.b, c)

    def v_power(self, k: int) -> SpecializedScalar:
        return SpecializedScalar._raw(self.b, {k: (1, 0)})

    def a_vinv(self) -> SpecializedScalar:
        return self._avinv

    def a(self) -> SpecializedScalar:
        return SpecializedScalar(self.b, {2: (1, 1), 0: (-1, 1)})

    def __eq__(self, other):
        return isinstance(other, SpecializedRing) and other.b == self.b

    def __hash__(self):
        return hash(("specialized", self.b))

    def __repr__(self):
        return f"SpecializedRing({self.b})"
