"""Hirzebruch-Jung strings from an exact lattice model.

A string Str(alpha, beta; m | a, b; c) is the decorated chain of rational
curves resolving the normalization of {z^m = u^alpha v^beta}, carrying the
vanishing orders of the function u^a v^b z^c.  The model: in the lattice

    N = {(x, y) in Z^2 : alpha*x + beta*y == 0 (mod m)}

take the boundary lattice points of the convex hull of the nonzero points
of N in the first quadrant, running from (m/gcd(m,alpha), 0) on the x-axis
to (0, m/gcd(m,beta)) on the y-axis.  Interior boundary points are the
chain vertices; the point (x, y) carries multiplicity

    a*x + b*y + c*(alpha*x + beta*y)/m

and the self-intersection -b_i comes from n_{i-1} + n_{i+1} = b_i * n_i.
Consecutive boundary points always span the lattice: det(n_i, n_{i+1}) = m.

compute_string walks the boundary by the consecutive-point recurrence in
O(chain length); hull_oracle re-derives it by brute enumeration and convex
hull extraction, as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class StringSpec:
    alpha: int
    beta: int
    m: int
    a: int = 0
    b: int = 0
    c: int = 1

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1 or self.m < 1:
            raise ValueError("string parameters alpha, beta, m must be >= 1 "
                             "(got %d, %d, %d)" % (self.alpha, self.beta, self.m))
        if gcd(gcd(self.alpha, self.beta), self.m) != 1:
            raise ValueError("gcd(alpha, beta, m) must be 1; divide out the "
                             "common factor first")
        if min(self.a, self.b, self.c) < 0 or (self.a, self.b, self.c) == (0, 0, 0):
            raise ValueError("function exponents must be non-negative and not all zero")

    def reversed(self) -> "StringSpec":
        return StringSpec(self.beta, self.alpha, self.m, self.b, self.a, self.c)

    def multiplicity_at(self, x: int, y: int) -> int:
        t = self.alpha * x + self.beta * y
        assert t % self.m == 0
        return self.a * x + self.b * y + self.c * (t // self.m)

    def end_points(self):
        x0 = self.m // gcd(self.m, self.alpha)
        y1 = self.m // gcd(self.m, self.beta)
        return (x0, 0), (0, y1)


@dataclass(frozen=True)
class HJChain:
    mults: tuple
    selfints: tuple
    end_alpha_mult: int
    end_beta_mult: int

    def __len__(self):
        return len(self.mults)

    def pairs(self):
        return tuple(zip(self.mults, self.selfints))

    def reversed(self) -> "HJChain":
        return HJChain(self.mults[::-1], self.selfints[::-1],
                       self.end_beta_mult, self.end_alpha_mult)


def _chain_from_boundary(spec: StringSpec, pts) -> HJChain:
    mults = []
    selfints = []
    for i in range(1, len(pts) - 1):
        mults.append(spec.multiplicity_at(*pts[i]))
        px, py = pts[i - 1]
        nx, ny = pts[i + 1]
        cx, cy = pts[i]
        # n_{i-1} + n_{i+1} = b_i * n_i, componentwise
        if cx != 0:
            b, r = divmod(px + nx, cx)
        else:
            b, r = divmod(py + ny, cy)
        assert r == 0 and b * cx == px + nx and b * cy == py + ny and b >= 2
        selfints.append(-b)
    return HJChain(tuple(mults), tuple(selfints),
                   spec.multiplicity_at(*pts[0]),
                   spec.multiplicity_at(*pts[-1]))


def compute_string(spec: StringSpec) -> HJChain:
    """The decorated chain, by the boundary-point recurrence (fast path)."""
    pts = boundary_points(spec)
    return _chain_from_boundary(spec, pts)


def boundary_points(spec: StringSpec):
    """All boundary lattice points, from the x-axis end to the y-axis end."""
    m, alpha, beta = spec.m, spec.alpha, spec.beta
    ga = gcd(m, alpha)
    gb = gcd(m, beta)
    x0 = m // ga
    # basis of N: e1 = (x0, 0); e2 = (x1, ga) with the least positive height
    # (gcd(ga, beta) = 1 because gcd(alpha, beta, m) = 1)
    if x0 == 1:
        x1 = 0
    else:
        x1 = (-beta * ga * pow(alpha // ga, -1, x0)) % x0
    # the y-axis end v = (0, m/gb) in the (e1, e2) basis
    bv = m // (ga * gb)
    assert (x1 * bv) % x0 == 0
    av = -(x1 * bv) // x0
    # walk the hull boundary in basis coordinates: consecutive points span N,
    # so each next point is b * current - previous with the least b staying
    # inside the cone, measured by the determinant against v
    pts_ab = [(1, 0)]
    ca, cb = -(-av // bv), 1
    pts_ab.append((ca, cb))
    d_prev = bv
    d_cur = ca * bv - cb * av
    pa, pb = 1, 0
    while d_cur > 0:
        b = -(-d_prev // d_cur)
        na, nb = b * ca - pa, b * cb - pb
        pts_ab.append((na, nb))
        pa, pb, ca, cb = ca, cb, na, nb
        d_prev, d_cur = d_cur, ca * bv - cb * av
    assert (ca, cb) == (av, bv)
    return [(a * x0 + b * x1, b * ga) for a, b in pts_ab]


def hull_oracle(spec: StringSpec) -> HJChain:
    """Same chain by explicit lattice-point enumeration (independent oracle).

    Enumerates the nonzero lattice points in the triangle spanned by the two
    axis ends, then gift-wraps the side of their hull facing the origin.
    Successive boundary steps strictly decrease x and increase y, so at each
    point the next one is the most counterclockwise candidate in that cone,
    nearest first on ties; this keeps collinear boundary points.
    """
    m, alpha, beta = spec.m, spec.alpha, spec.beta
    (x0, _), (_, y1) = spec.end_points()
    gb = gcd(m, beta)
    mp = m // gb
    bp_inv = pow(beta // gb, -1, mp)
    pts = []
    for x in range(x0 + 1):
        t = alpha * x
        if t % gb != 0:
            continue
        y = (-(t // gb) * bp_inv) % mp
        ymax = (y1 * (x0 - x)) // x0
        while y <= ymax:
            if (x, y) != (0, 0):
                pts.append((x, y))
            y += mp
    start, goal = (x0, 0), (0, y1)
    assert start in pts and goal in pts
    boundary = [start]
    cur = start
    while cur != goal:
        best = None
        for q in pts:
            wx, wy = q[0] - cur[0], q[1] - cur[1]
            if wx >= 0 or wy <= 0:
                continue
            if best is None:
                best = q
                continue
            bx, by = best[0] - cur[0], best[1] - cur[1]
            cross = wx * by - wy * bx
            if cross < 0 or (cross == 0 and -wx < -bx):
                best = q
        boundary.append(best)
        cur = best
    return _chain_from_boundary(spec, boundary)
