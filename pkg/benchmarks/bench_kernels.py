"""
Compare the pure-Python and compiled GL_n(F_q) counting kernels.

Usage::

    python benchmarks/bench_kernels.py [--q 5 7] [--repeat 3]

Times coset labelling (``orbit_labels``) and structure-constant counting
(``count_products``) for every backend that imports, and checks the two
backends produce identical arrays.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from monohecke.glnq import FieldParams, GLOracle, available_backends, get_backend


def _gens(o: GLOracle) -> list[int]:
    n, F = o.n, o.F
    gens = [o._diag([F.power(F.b) if r == i else 1 for r in range(n)]) for i in range(n)]
    return gens + [o._elementary(i, i + 1, 1) for i in range(n - 1)]


def bench(q: int, a: int, repeat: int) -> list[dict]:
    F = FieldParams(q, a, (q - 1) // a)
    rows, ref = [], None
    for name in available_backends():
        K = get_backend(name)
        o = GLOracle(2, F, backend=name)
        gens, reps = _gens(o), o.WH_b

        def label():
            return np.asarray(K.orbit_labels(2, q, reps, gens, gens))

        def count():
            return [np.asarray(K.count_products(2, q, o.labels, o.inv, hs, reps)) for hs in o.coset_members]

        t_lab = min(timeit.repeat(label, number=1, repeat=repeat))
        t_cnt = min(timeit.repeat(count, number=1, repeat=repeat))
        out = [label()] + count()
        same = ref is None or all(np.array_equal(u, v) for u, v in zip(ref, out))
        ref = ref if ref is not None else out
        rows.append({"backend": name, "q": q, "a": a, "orbit_labels_s": t_lab,
                     "count_products_s": t_cnt, "agrees": same})
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--q", type=int, nargs="+", default=[5, 7])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'backend':8} {'q':>3} {'a':>3} {'orbit_labels':>13} {'count_products':>15}  agrees")
    for q in args.q:
        for row in bench(q, 1, args.repeat):
            print(f"{row['backend']:8} {row['q']:3d} {row['a']:3d} {row['orbit_labels_s']:12.4f}s "
                  f"{row['count_products_s']:14.4f}s  {row['agrees']}")


if __name__ == "__main__":
    main()
