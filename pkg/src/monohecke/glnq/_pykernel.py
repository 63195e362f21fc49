"""
Pure-Python counting kernels for small GL_n(F_q), q prime.

A matrix M is encoded as the integer sum_{r,c} M[r][c] * q**(r*n + c).
Same API as the compiled ``_ckernel``; used when that extension is missing.
"""

from __future__ import annotations

from collections import deque

NAME = "python"


def decode(n: int, q: int, code: int) -> list[int]:
    out = []
    for _ in range(n * n):
        code, r = divmod(code, q)
        out.append(r)
    return out


def encode(n: int, q: int, entries) -> int:
    code = 0
    for e in reversed(entries):
        code = code * q + (e % q)
    return code


def _mul(n, q, A, B):
    return [sum(A[r * n + k] * B[k * n + c] for k in range(n)) % q
            for r in range(n) for c in range(n)]


def matmul(n: int, q: int, c1: int, c2: int) -> int:
    return encode(n, q, _mul(n, q, decode(n, q, c1), decode(n, q, c2)))


def _det(n, q, M):
    if n == 1:
        return M[0] % q
    if n == 2:
        return (M[0] * M[3] - M[1] * M[2]) % q
    if n == 3:
        return (M[0] * (M[4] * M[8] - M[5] * M[7])
                - M[1] * (M[3] * M[8] - M[5] * M[6])
                + M[2] * (M[3] * M[7] - M[4] * M[6])) % q
    raise ValueError("n <= 3 only")


def _adjugate(n, M):
    if n == 1:
        return [1]
    if n == 2:
        return [M[3], -M[1], -M[2], M[0]]
    out = [0] * 9
    for r in range(3):
        for c in range(3):
            rows = [i for i in range(3) if i != c]
            cols = [j for j in range(3) if j != r]
            minor = (M[rows[0] * 3 + cols[0]] * M[rows[1] * 3 + cols[1]]
                     - M[rows[0] * 3 + cols[1]] * M[rows[1] * 3 + cols[0]])
            out[r * 3 + c] = minor if (r + c) % 2 == 0 else -minor
    return out


def enumerate_invertible(n: int, q: int):
    """(list of codes of GL_n(F_q), inverse table indexed by code, -1 if singular)."""
    size = q ** (n * n)
    codes = []
    inv = [-1] * size
    for c in range(size):
        M = decode(n, q, c)
        det = _det(n, q, M)
        if det:
            dinv = pow(det, q - 2, q)
            codes.append(c)
            inv[c] = encode(n, q, [e * dinv for e in _adjugate(n, M)])
    return codes, inv


def orbit_labels(n: int, q: int, reps, left_gens, right_gens):
    """
    Label every matrix by the index of the rep whose double orbit (under the
    monoids generated by left_gens on the left and right_gens on the right)
    contains it; -1 for unreached codes. Raises if two reps share an orbit.
    """
    size = q ** (n * n)
    labels = [-1] * size
    L = [decode(n, q, g) for g in left_gens]
    R = [decode(n, q, g) for g in right_gens]
    for k, rep in enumerate(reps):
        if labels[rep] != -1:
            raise ValueError(f"representatives {labels[rep]} and {k} share a double coset")
        labels[rep] = k
        queue = deque([rep])
        while queue:
            c = queue.popleft()
            M = decode(n, q, c)
            for G in L:
                nb = encode(n, q, _mul(n, q, G, M))
                if labels[nb] == -1:
                    labels[nb] = k
                    queue.append(nb)
                elif labels[nb] != k:
                    raise ValueError(f"representatives {labels[nb]} and {k} share a double coset")
            for G in R:
                nb = encode(n, q, _mul(n, q, M, G))
                if labels[nb] == -1:
                    labels[nb] = k
                    queue.append(nb)
                elif labels[nb] != k:
                    raise ValueError(f"representatives {labels[nb]} and {k} share a double coset")
    return labels


def members(labels, k: int) -> list[int]:
    return [c for c, lab in enumerate(labels) if lab == k]


def count_products(n: int, q: int, labels, inv, members_y, reps):
    """
    counts[zi][xi] = #{h in members_y : label(reps[zi] * h^-1) == xi}
    = |D_x cap z D_y^-1| for the double coset D_y given by ``members_y``.
    """
    m = len(reps)
    counts = [[0] * m for _ in range(m)]
    Z = [decode(n, q, z) for z in reps]
    for h in members_y:
        H = decode(n, q, inv[h])
        for zi in range(m):
            lab = labels[encode(n, q, _mul(n, q, Z[zi], H))]
            counts[zi][lab] += 1
    return counts
