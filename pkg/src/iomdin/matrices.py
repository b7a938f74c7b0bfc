"""Exact linear algebra for integer intersection forms.

Everything here runs over exact arithmetic (integers, Fractions); no
floating point is ever used to decide definiteness or determinants.
"""
from __future__ import annotations

import heapq
from fractions import Fraction


def bareiss_det(rows) -> int:
    """Determinant of a square integer matrix, by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_abs(rows) -> int:
    return abs(bareiss_det(rows))


def is_negative_definite(rows) -> bool:
    """Sign test on leading principal minors: (-1)^k det_k > 0 for all k."""
    n = len(rows)
    for k in range(1, n + 1):
        minor = bareiss_det([r[:k] for r in rows[:k]])
        if minor == 0:
            return False
        if (minor > 0) != (k % 2 == 0):
            return False
    return True


def matrix_rank(rows) -> int:
    n = len(rows)
    if n == 0:
        return 0
    m = [[Fraction(x) for x in r] for r in rows]
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, n):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        for i in range(row + 1, n):
            if m[i][col] != 0:
                f = m[i][col] / inv
                for j in range(col, ncols):
                    m[i][j] -= f * m[row][j]
        rank += 1
        row += 1
        if row == n:
            break
    return rank


def charpoly(rows):
    """Coefficients [c_0 .. c_n] of det(x I - M) = sum c_i x^i, exactly.

    Computed by evaluating the determinant at n+1 integer points and
    interpolating over the rationals; the result is integral.
    """
    n = len(rows)
    if n == 0:
        return [1]
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        ys.append(bareiss_det(shifted))
    coef = [Fraction(y) for y in ys]
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * (n + 1)
    poly[0] = coef[n]
    for i in range(n - 1, -1, -1):
        # poly <- poly * (x - xs[i]) + coef[i]
        for j in range(n, 0, -1):
            poly[j] = poly[j - 1] - xs[i] * poly[j]
        poly[0] = coef[i] - xs[i] * poly[0]
    out = []
    for c in poly:
        assert c.denominator == 1
        out.append(int(c))
    return out


def is_negative_semidefinite(rows) -> bool:
    """Exact test: all eigenvalues of -M are >= 0.

    A real symmetric matrix is positive semidefinite iff the coefficients
    of its characteristic polynomial weakly alternate in sign, so the test
    reduces to exact sign checks on charpoly(-M).
    """
    n = len(rows)
    neg = [[-rows[i][j] for j in range(n)] for i in range(n)]
    cs = charpoly(neg)
    for i, c in enumerate(cs):
        if c == 0:
            continue
        if (c > 0) != ((n - i) % 2 == 0):
            return False
    return True


def graph_lattice_profile(diag, offdiag):
    """(|det|, negative-definite?) of a sparse symmetric integer form.

    ``diag`` maps a key to its diagonal entry, ``offdiag`` maps unordered
    pairs (as frozensets of two distinct keys) to the off-diagonal entry.
    Symmetric elimination in min-degree order keeps tree-shaped forms
    fill-free, so chain-heavy resolution graphs of any size are handled in
    near-linear time.  A zero pivot disproves definiteness; the remaining
    block then falls back to dense rational elimination for the determinant.
    """
    diag = {v: Fraction(d) for v, d in diag.items()}
    adj = {v: {} for v in diag}
    for key, c in offdiag.items():
        u, v = tuple(key)
        if u == v:
            raise ValueError("loop entries belong on the diagonal")
        if c != 0:
            adj[u][v] = adj[v][u] = Fraction(c)
    det = Fraction(1)
    definite = True
    remaining = set(diag)
    # lazy-deletion min-degree heap; order only affects speed, not the result
    heap = [(len(adj[v]), v) for v in diag]
    heapq.heapify(heap)
    while remaining:
        v = heapq.heappop(heap)[1]
        while v not in remaining:
            v = heapq.heappop(heap)[1]
        remaining.discard(v)
        piv = diag[v]
        if piv == 0:
            definite = False
            det *= _dense_block_det(diag, adj, sorted(remaining | {v}))
            break
        if piv > 0:
            definite = False
        det *= piv
        nbrs = [(u, c) for u, c in adj[v].items() if u in remaining]
        for i, (u, cu) in enumerate(nbrs):
            diag[u] -= cu * cu / piv
            for w, cw in nbrs[i + 1:]:
                cur = adj[u].get(w, Fraction(0)) - cu * cw / piv
                if cur == 0:
                    adj[u].pop(w, None)
                    adj[w].pop(u, None)
                else:
                    adj[u][w] = adj[w][u] = cur
        for u, _ in nbrs:
            del adj[u][v]
            heapq.heappush(heap, (sum(1 for x in adj[u] if x in remaining), u))
    assert det.denominator == 1
    return abs(int(det)), definite


def _dense_block_det(diag, adj, keys):
    idx = {k: i for i, k in enumerate(keys)}
    m = [[Fraction(0)] * len(keys) for _ in keys]
    for k in keys:
        m[idx[k]][idx[k]] = diag[k]
        for u, c in adj[k].items():
            if u in idx:
                m[idx[k]][idx[u]] = c
    return _dense_fraction_det(m)


def _dense_fraction_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / m[k][k]
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det
