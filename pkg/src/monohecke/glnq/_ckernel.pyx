# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""
Compiled counting kernels for small GL_n(F_q), q prime, n <= 3.

Same API and matrix encoding as ``_pykernel``: M is stored as the integer
sum_{r,c} M[r][c] * q**(r*n + c).
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"


cdef inline void _decode(int n, int q, long code, int* out) noexcept nogil:
    cdef int k
    for k in range(n * n):
        out[k] = code % q
        code = code // q


cdef inline long _encode(int n, int q, int* m) noexcept nogil:
    cdef long code = 0
    cdef int k
    for k in range(n * n - 1, -1, -1):
        code = code * q + m[k]
    return code


cdef inline void _mul(int n, int q, int* A, int* B, int* C) noexcept nogil:
    cdef int r, c, k, acc
    for r in range(n):
        for c in range(n):
            acc = 0
            for k in range(n):
                acc += A[r * n + k] * B[k * n + c]
            C[r * n + c] = acc % q


cdef inline int _det(int n, int q, int* M) noexcept nogil:
    cdef long d
    if n == 1:
        d = M[0]
    elif n == 2:
        d = M[0] * M[3] - M[1] * M[2]
    else:
        d = (M[0] * (M[4] * M[8] - M[5] * M[7])
             - M[1] * (M[3] * M[8] - M[5] * M[6])
             + M[2] * (M[3] * M[7] - M[4] * M[6]))
    d = d % q
    if d < 0:
        d += q
    return <int>d


cdef inline int _powmod(int base, int e, int q) noexcept nogil:
    cdef long r = 1
    cdef long b = base % q
    while e > 0:
        if e & 1:
            r = (r * b) % q
        b = (b * b) % q
        e >>= 1
    return <int>r


cdef void _inverse(int n, int q, int* M, int* out) noexcept nogil:
    cdef int det = _det(n, q, M)
    cdef int dinv = _powmod(det, q - 2, q)
    cdef int adj[9]
    cdef int r, c, i0, i1, j0, j1
    cdef long minor, val
    if n == 1:
        adj[0] = 1
    elif n == 2:
        adj[0] = M[3]
        adj[1] = -M[1]
        adj[2] = -M[2]
        adj[3] = M[0]
    else:
        for r in range(3):
            for c in range(3):
                # minor deleting row c and column r
                i0 = 1 if c == 0 else 0
                i1 = 1 if c == 2 else 2
                j0 = 1 if r == 0 else 0
                j1 = 1 if r == 2 else 2
                minor = M[i0 * 3 + j0] * M[i1 * 3 + j1] - M[i0 * 3 + j1] * M[i1 * 3 + j0]
                adj[r * 3 + c] = <int>(minor if (r + c) % 2 == 0 else -minor)
    for r in range(n * n):
        val = (<long>adj[r] * dinv) % q
        if val < 0:
            val += q
        out[r] = <int>val


def decode(int n, int q, long code):
    cdef int m[9]
    _decode(n, q, code, m)
    return [m[k] for k in range(n * n)]


def encode(int n, int q, entries):
    cdef long code = 0
    for e in reversed(list(entries)):
        code = code * q + (e % q)
    return code


def matmul(int n, int q, long c1, long c2):
    cdef int A[9]
    cdef int B[9]
    cdef int C[9]
    _decode(n, q, c1, A)
    _decode(n, q, c2, B)
    _mul(n, q, A, B, C)
    return _encode(n, q, C)


def enumerate_invertible(int n, int q):
    cdef long size = 1
    cdef int k
    for k in range(n * n):
        size *= q
    inv_arr = np.full(size, -1, dtype=np.int64)
    cdef cnp.int64_t[:] inv = inv_arr
    codes = []
    cdef int M[9]
    cdef int Minv[9]
    cdef long c
    for c in range(size):
        _decode(n, q, c, M)
        if _det(n, q, M) != 0:
            _inverse(n, q, M, Minv)
            inv[c] = _encode(n, q, Minv)
            codes.append(c)
    return np.array(codes, dtype=np.int64), inv_arr


def orbit_labels(int n, int q, reps, left_gens, right_gens):
    cdef long size = 1
    cdef int k
    for k in range(n * n):
        size *= q
    labels_arr = np.full(size, -1, dtype=np.int64)
    cdef cnp.int64_t[:] labels = labels_arr
    queue_arr = np.empty(size, dtype=np.int64)
    cdef cnp.int64_t[:] queue = queue_arr
    cdef int nl = len(left_gens)
    cdef int nr = len(right_gens)
    cdef int[:, :] L = np.array([decode(n, q, g) for g in left_gens], dtype=np.intc).reshape(nl, n * n)
    cdef int[:, :] R = np.array([decode(n, q, g) for g in right_gens], dtype=np.intc).reshape(nr, n * n)
    cdef int M[9]
    cdef int G[9]
    cdef int P[9]
    cdef long head, tail, c, nb, rep
    cdef int lab, gi, t
    for lab in range(len(reps)):
        rep = reps[lab]
        if labels[rep] != -1:
            raise ValueError(f"representatives {labels[rep]} and {lab} share a double coset")
        labels[rep] = lab
        head = 0
        tail = 1
        queue[0] = rep
        while head < tail:
            c = queue[head]
            head += 1
            _decode(n, q, c, M)
            for gi in range(nl):
                for t in range(n * n):
                    G[t] = L[gi, t]
                _mul(n, q, G, M, P)
                nb = _encode(n, q, P)
                if labels[nb] == -1:
                    labels[nb] = lab
                    queue[tail] = nb
                    tail += 1
                elif labels[nb] != lab:
                    raise ValueError(f"representatives {labels[nb]} and {lab} share a double coset")
            for gi in range(nr):
                for t in range(n * n):
                    G[t] = R[gi, t]
                _mul(n, q, M, G, P)
                nb = _encode(n, q, P)
                if labels[nb] == -1:
                    labels[nb] = lab
                    queue[tail] = nb
                    tail += 1
                elif labels[nb] != lab:
                    raise ValueError(f"representatives {labels[nb]} and {lab} share a double coset")
    return labels_arr


def members(labels, long k):
    return np.flatnonzero(np.asarray(labels) == k)


def count_products(int n, int q, labels_in, inv_in, members_y, reps):
    cdef cnp.int64_t[:] labels = np.asarray(labels_in, dtype=np.int64)
    cdef cnp.int64_t[:] inv = np.asarray(inv_in, dtype=np.int64)
    cdef cnp.int64_t[:] hs = np.asarray(members_y, dtype=np.int64)
    cdef long m = len(reps)
    counts_arr = np.zeros((m, m), dtype=np.int64)
    cdef cnp.int64_t[:, :] counts = counts_arr
    cdef int[:, :] Z = np.array([decode(n, q, z) for z in reps], dtype=np.intc).reshape(m, n * n)
    cdef int H[9]
    cdef int Zm[9]
    cdef int P[9]
    cdef long hi, zi, lab
    cdef int t
    with nogil:
        for hi in range(hs.shape[0]):
            _decode(n, q, inv[hs[hi]], H)
            for zi in range(m):
                for t in range(n * n):
                    Zm[t] = Z[zi, t]
                _mul(n, q, Zm, H, P)
                lab = labels[_encode(n, q, P)]
                counts[zi, lab] += 1
    return counts_arr
