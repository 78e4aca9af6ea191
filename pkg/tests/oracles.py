"""Dense, loop-based reference computations used to check the fast paths.

Nothing here imports the package's kernels; only plain numpy on explicit
matrices.
"""

import itertools
import math

import numpy as np


def dense_adjacency(n, edges):
    A = np.zeros((n, n))
    for u, v in edges:
        A[u, v] = A[v, u] = 1.0
    return A


def dense_P(M):
    return M / M.sum(axis=1, keepdims=True)


def dense_Q(M):
    """Annealed transition matrix from the explicit expected-link matrix."""
    d = M.sum(axis=1)
    C = np.outer(d, d) / d.sum()
    return C / C.sum(axis=1, keepdims=True)


def dense_alpha(M, s, l):
    a = np.zeros(len(M))
    a[s] = 1.0
    P = dense_P(M)
    for _ in range(l):
        a = a @ P
    return a


def dense_beta_steps(M, s, l):
    """All of beta_0..beta_l; raises if a step clamps to all zeros."""
    P, Q = dense_P(M), dense_Q(M)
    b = np.zeros(len(M))
    b[s] = 1.0
    out = [b]
    for _ in range(l):
        raw = np.maximum(b @ P - b @ Q, 0.0)
        assert raw.sum() > 0
        b = raw / raw.sum()
        out.append(b)
    return out


def dense_psi(M, s, l):
    b = dense_beta_steps(M, s, l)[-1]
    psi = b / M.sum(axis=1)
    return psi / psi.sum()


def cut_and_volume(n, edges, nodes):
    S = set(nodes)
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    cut = sum(1 for u, v in edges if (u in S) != (v in S))
    return cut, sum(deg[u] for u in S)


def conductance(n, edges, nodes):
    cut, vol = cut_and_volume(n, edges, nodes)
    total = 2 * len(edges)
    return cut / min(vol, total - vol)


def naive_modularity(A, labels):
    """Newman-Girvan sum over all ordered node pairs."""
    n = len(A)
    k = A.sum(axis=1)
    two_m = k.sum()
    q = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] == labels[j]:
                q += A[i, j] - k[i] * k[j] / two_m
    return q / two_m


def naive_nmi(a, b):
    N = len(a)
    ca, cb = sorted(set(a)), sorted(set(b))
    num = 0.0
    for x in ca:
        for y in cb:
            nij = sum(1 for i in range(N) if a[i] == x and b[i] == y)
            if nij:
                ni = sum(1 for i in range(N) if a[i] == x)
                nj = sum(1 for i in range(N) if b[i] == y)
                num += nij * math.log(nij * N / (ni * nj))
    den = sum(a.count(x) * math.log(a.count(x) / N) for x in ca)
    den += sum(b.count(y) * math.log(b.count(y) / N) for y in cb)
    return -2 * num / den


def partitions_upto(n, k):
    """Every labelling of n nodes with at most k labels (restricted growth strings)."""
    for labels in itertools.product(range(k), repeat=n):
        seen = -1
        ok = True
        for x in labels:
            if x > seen + 1:
                ok = False
                break
            seen = max(seen, x)
        if ok:
            yield list(labels)
