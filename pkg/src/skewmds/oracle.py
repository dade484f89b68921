"""Brute-force coding-theory ground truth.

Everything here is deliberately naive: exhaustive message enumeration for
the exact minimum distance, and two weight criteria on left multiples of g.
The point is independence from the matrix/Vandermonde machinery, so these
routines share no shortcuts with it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded, NotRightDivisor, NotSquare, PreconditionViolated
from .galois_ring import GaloisRing, RingElement
from .matrices import GRMatrix, VerificationReport
from .skew import SkewPoly

ENUMERATION_BUDGET = 2**24


@dataclass(frozen=True)
class CodeInstance:
    """The free length-2k code generated by [I_k | M]."""

    matrix: GRMatrix

    @property
    def ring(self) -> GaloisRing:
        return self.matrix.ring

    @property
    def k(self) -> int:
        return self.matrix.rows

    def generator(self) -> GRMatrix:
        m = self.matrix
        if m.rows != m.cols:
            raise NotSquare("code block must be square")
        ident = GRMatrix.identity(m.ring, m.rows)
        rows = [list(ident.row(i)) + list(m.row(i)) for i in range(m.rows)]
        return GRMatrix.from_rows(m.ring, rows)


def _check_budget(ring: GaloisRing, k: int) -> None:
    if ring.size**k > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"{ring.size}^{k} messages exceed the {ENUMERATION_BUDGET} budget"
        )


def _messages(ring: GaloisRing, k: int):
    """All nonzero tuples in ring^k."""
    elems = ring.elements()
    for u in product(elems, repeat=k):
        if any(u):
            yield u


def min_distance(code: CodeInstance) -> int:
    """Exact minimum Hamming distance of the code, by full enumeration.

    For u ranging over nonzero messages, wt(u * [I|M]) = wt(u) + wt(u*M).
    """
    ring = code.ring
    k = code.k
    _check_budget(ring, k)
    m = code.matrix
    best = 2 * k
    cols = [[m[i, j] for i in range(k)] for j in range(k)]
    for u in _messages(ring, k):
        w = sum(1 for x in u if x)
        if w >= best:
            continue
        for col in cols:
            acc = ring.zero
            for x, y in zip(u, col):
                if x:
                    acc = acc + x * y
            if acc:
                w += 1
                if w >= best:
                    break
        if w < best:
            best = w
    return best


def weight_criterion_full(g: SkewPoly, n: int) -> bool:
    """True iff every nonzero left multiple c(X)*g(X), deg c < deg g, has
    weight at least k+1.  Requires g to right-divide X^n - 1."""
    ring = g.ring
    k = g.degree
    if n < 2 * k:
        raise PreconditionViolated("need n >= 2k")
    if not g.right_divides(SkewPoly.x_pow_minus_one(ring, n)):
        raise NotRightDivisor("g does not right-divide X^n - 1")
    _check_budget(ring, k)
    for cs in _messages(ring, k):
        c = SkewPoly(ring, cs)
        if (c * g).weight() <= k:
            return False
    return True


def support_basis(g: SkewPoly, t: int) -> list[SkewPoly]:
    """Left multiples b_r = X^(t+r) - (X^(t+r) mod* g), r = 0..k-1.

    Each has support inside {0..k-1, t..t+k-1}; together they span every
    left multiple of g supported there.
    """
    ring = g.ring
    k = g.degree
    out = []
    for r in range(k):
        xp = SkewPoly.x_power(ring, t + r)
        out.append(xp - xp.right_mod(g))
    return out


def weight_criterion_support(g: SkewPoly, t: int) -> bool:
    """True iff every nonzero combination sum u_r b_r of the support basis
    has weight at least k+1; equivalent to the chain matrix being MDS."""
    ring = g.ring
    k = g.degree
    if t < k:
        raise PreconditionViolated("need t >= k")
    _check_budget(ring, k)
    basis = support_basis(g, t)
    for u in _messages(ring, k):
        combo = SkewPoly.zero(ring)
        for coeff, b in zip(u, basis):
            if coeff:
                combo = combo + b.scale(coeff)
        if combo.weight() <= k:
            return False
    return True


def oracle_report(code: CodeInstance) -> VerificationReport:
    """A verification report whose verdict comes only from enumeration."""
    start = time.perf_counter()
    d = min_distance(code)
    return VerificationReport(
        mds=(d == code.k + 1),
        min_distance=d,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
    )
