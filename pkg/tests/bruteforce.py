"""Independent brute-force enumerator used to cross-check the library.

Works on plain nested lists of IEEE floats (math.inf encodes the infinities,
with the opposite-infinity sums spelled out by hand) and computes every
sup/inf by exhaustive loops.  Deliberately shares no code with the package.
"""

import math

INF = math.inf


def low_add(a, b):
    if (a == INF and b == -INF) or (a == -INF and b == INF):
        return -INF
    return a + b


def upp_add(a, b):
    if (a == INF and b == -INF) or (a == -INF and b == INF):
        return INF
    return a + b


def conjugate(c, f):
    """f^c over the dual indices; c is |X| x |Y| row-major, f has length |X|."""
    nx, ny = len(c), len(c[0])
    return [max(low_add(c[i][j], -f[i]) for i in range(nx)) for j in range(ny)]


def reverse_conjugate(c, g):
    nx, ny = len(c), len(c[0])
    return [max(low_add(c[i][j], -g[j]) for j in range(ny)) for i in range(nx)]


def biconjugate(c, f):
    return reverse_conjugate(c, conjugate(c, f))


def lagrangian(c, r):
    nx, ny = len(c), len(c[0])
    return [
        [min(upp_add(row[i], -c[i][j]) for i in range(nx)) for j in range(ny)]
        for row in r
    ]


def rockafellian(c, lag):
    nx, ny = len(c), len(c[0])
    return [
        [max(low_add(row[j], c[i][j]) for j in range(ny)) for i in range(nx)]
        for row in lag
    ]


def column_minima(table):
    return [min(row[j] for row in table) for j in range(len(table[0]))]


def weak_duality(c, r, i):
    """(primal, dual) values at primal index i."""
    phi = column_minima(r)
    psi = column_minima(lagrangian(c, r))
    dual = max(low_add(c[i][j], psi[j]) for j in range(len(psi)))
    return phi[i], dual
