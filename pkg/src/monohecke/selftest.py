"""
Invariant suite for one group G(b,1,n), as run by ``monohecke selftest``.

Each ``check_*`` function returns ``(passed, witness)``; ``run_selftest``
collects them into a :class:`~monohecke.report.Report`.

>>> rep = run_selftest(GroupParams(2, 2))
>>> rep.passed
True
"""

from __future__ import annotations

import random

from .group import GroupParams, h_prime, inverse, length, multiply
from .hecke import HeckeAlgebra, e1_check
from .kl import KLConsistencyError, kl_solver
from .notation import format_element, parse_element
from .report import Report
from .rpoly import leq, r_table, wh_prime_cosets

__all__ = [
    "run_selftest", "check_group_axioms", "check_parser_roundtrip", "check_rstar_agreement",
    "check_partial_order", "check_components", "check_trace", "check_kl", "check_e1",
    "leq_masks",
]

fmt = format_element


def check_group_axioms(P: GroupParams, samples: int = 3000, seed: int = 0):
    els = P.elements()
    e = P.identity()
    for x in els:
        if multiply(x, e) != x or multiply(e, x) != x or multiply(x, inverse(x)) != e:
            return False, {"x": fmt(x)}
    rng = random.Random(seed)
    triples = ([(x, y, z) for x in els for y in els for z in els] if len(els) ** 3 <= samples
               else [tuple(rng.choice(els) for _ in range(3)) for _ in range(samples)])
    for x, y, z in triples:
        if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
            return False, {"x": fmt(x), "y": fmt(y), "z": fmt(z)}
    return True, None


def check_parser_roundtrip(P: GroupParams):
    for x in P.elements():
        if parse_element(fmt(x), P) != x:
            return False, {"x": fmt(x)}
    return True, None


def check_rstar_agreement(P: GroupParams):
    """Recursive, bar-expansion and subexpression R* tables coincide."""
    tables = {m: r_table(P, m) for m in ("recursive", "direct", "closed")}
    ref = tables["recursive"]
    for m in ("direct", "closed"):
        t = tables[m]
        for key in set(ref) | set(t):
            if ref.get(key, 0) != t.get(key, 0):
                x, y = key
                return False, {"method": m, "x": fmt(x), "y": fmt(y),
                               "recursive": str(ref.get(key, 0)), m: str(t.get(key, 0))}
    return True, None


def leq_masks(P: GroupParams) -> tuple[list, list[int]]:
    """(elements, down) with bit k of down[j] set iff elements[k] <= elements[j]."""
    els = P.elements()
    down = []
    for y in els:
        m = 0
        for k, x in enumerate(els):
            if leq(x, y, P):
                m |= 1 << k
        down.append(m)
    return els, down


def check_partial_order(P: GroupParams):
    els, down = leq_masks(P)
    for j, y in enumerate(els):
        if not down[j] >> j & 1:
            return False, {"reflexivity": fmt(y)}
        m, k = down[j], 0
        while m:
            if m & 1:
                if k != j and down[k] >> j & 1:
                    return False, {"antisymmetry": [fmt(els[k]), fmt(y)]}
                if down[k] & ~down[j]:
                    return False, {"transitivity": [fmt(els[k]), fmt(y)]}
            m >>= 1
            k += 1
    return True, None


def _components(P: GroupParams) -> list[frozenset]:
    els, down = leq_masks(P)
    parent = list(range(len(els)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for j in range(len(els)):
        m, k = down[j], 0
        while m:
            if m & 1:
                parent[find(k)] = find(j)
            m >>= 1
            k += 1
    groups: dict[int, set] = {}
    for k, x in enumerate(els):
        groups.setdefault(find(k), set()).add(x)
    return [frozenset(g) for g in groups.values()]


def check_components(P: GroupParams):
    """Exactly b components; for odd b they are the cosets of W H'."""
    comps = _components(P)
    if len(comps) != P.b:
        return False, {"components": len(comps), "b": P.b}
    if P.b % 2 and set(comps) != set(wh_prime_cosets(P)):
        return False, {"components_differ_from_cosets": True}
    return True, None


def check_trace(P: GroupParams):
    """tau(T_x T_y) = 1 if x y = 1 else 0."""
    alg = HeckeAlgebra(P)
    e = P.identity()
    for x in P.elements():
        xinv = inverse(x)
        for y in P.elements():
            val = alg.basis_product(x, y).get(e, 0)
            if val != (1 if y == xinv else 0):
                return False, {"x": fmt(x), "y": fmt(y), "tau": str(val)}
    return True, None


def check_kl(P: GroupParams):
    """bar(C_y) = C_y, C_{yd} = C_y T_d, and every intermediate g passed its checks."""
    solver = kl_solver(P)
    alg = solver.algebra
    try:
        for y in P.elements():
            C = solver.c_element(y)
            if alg.bar(C) != C:
                return False, {"bar_invariance": fmt(y)}
        for y in P.elements():
            if any(y.exps):
                continue
            for d in P.diagonals():
                if solver.c_element(multiply(y, d)) != solver.c_element(y) * alg.T(d):
                    return False, {"shift": [fmt(y), fmt(d)]}
    except KLConsistencyError as exc:
        return False, {"g_check": str(exc)}
    return True, None


def check_e1(P: GroupParams):
    rep = e1_check(HeckeAlgebra(P))
    return rep.passed, rep.checks


def run_selftest(P: GroupParams, trace: bool = True) -> Report:
    rep = Report({"n": P.n, "b": P.b, "order": P.order})
    rep.add("group_axioms", *check_group_axioms(P))
    rep.add("parser_roundtrip", *check_parser_roundtrip(P))
    rep.add("rstar_three_way", *check_rstar_agreement(P))
    rep.add("partial_order", *check_partial_order(P))
    rep.add("components", *check_components(P))
    if trace:
        rep.add("trace_form", *check_trace(P))
    rep.add("kl_basis", *check_kl(P))
    rep.add("e1_subalgebra", *check_e1(P))
    degree = kl_solver(P).degree_report()
    rep.notes["kl_degree_exceptions"] = [
        {"x": fmt(r["x"]), "y": fmt(r["y"]), "degree": r["degree"], "gap": r["gap"]}
        for r in degree]
    rep.notes["h_prime_size"] = len(h_prime(P))
    rep.notes["max_length"] = max(length(x) for x in P.elements())
    return rep
