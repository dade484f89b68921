"""Dense matrices over a Galois ring: companion matrices, sigma-twisted
product chains, exact determinants, the all-minors MDS test, and the
quasi-involutory check.

The MDS test runs in the residue field: determinants commute with the
projection GR -> F_{p^m} and an element is a unit exactly when its residue
is nonzero, so a minor is a unit iff the projected minor is nonzero.  The
ring-side all-minors check is kept as a test oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence

from .errors import (
    DegreeTooSmall,
    MixedRings,
    NotMonic,
    NotSquare,
    PreconditionViolated,
)
from .galois_ring import GaloisRing, RingElement
from .skew import SkewPoly


class GRMatrix:
    """Row-major dense matrix of RingElements tied to one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(
        self,
        ring: GaloisRing,
        rows: int,
        cols: int,
        entries: Sequence[RingElement],
    ):
        if rows * cols != len(entries):
            raise NotSquare(f"{rows}x{cols} needs {rows*cols} entries")
        for x in entries:
            if x.ring is not ring:
                raise MixedRings("entry from a different ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, ring: GaloisRing, rows: Sequence[Sequence[RingElement]]):
        flat = [x for row in rows for x in row]
        return cls(ring, len(rows), len(rows[0]) if rows else 0, flat)

    @classmethod
    def identity(cls, ring: GaloisRing, k: int) -> "GRMatrix":
        return cls(
            ring,
            k,
            k,
            [ring.one if i == j else ring.zero for i in range(k) for j in range(k)],
        )

    def __getitem__(self, ij: tuple[int, int]) -> RingElement:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[RingElement, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GRMatrix):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.rows, self.cols, self.entries))

    def __matmul__(self, other: "GRMatrix") -> "GRMatrix":
        if self.ring is not other.ring:
            raise MixedRings("matrices over different rings")
        if self.cols != other.rows:
            raise NotSquare("inner dimensions do not match")
        ring = self.ring
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ring.zero
                for l in range(self.cols):
                    acc = acc + self[i, l] * other[l, j]
                out.append(acc)
        return GRMatrix(ring, self.rows, other.cols, out)

    def __neg__(self) -> "GRMatrix":
        return GRMatrix(self.ring, self.rows, self.cols, [-x for x in self.entries])

    def sigma_twist(self, i: int) -> "GRMatrix":
        """Entrywise sigma^i."""
        ring = self.ring
        return GRMatrix(
            ring, self.rows, self.cols, [ring.sigma(x, i) for x in self.entries]
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "GRMatrix":
        return GRMatrix(
            self.ring,
            len(rows),
            len(cols),
            [self[i, j] for i in rows for j in cols],
        )

    def determinant(self) -> RingElement:
        """Exact determinant by cofactor expansion with column-mask memoization.

        Elimination over a ring with zero divisors would need pivot case
        analysis; at desk scale (k <= 12) cofactor expansion is branch-free.
        """
        if self.rows != self.cols:
            raise NotSquare("determinant of a non-square matrix")
        k = self.rows
        ring = self.ring
        if k == 0:
            return ring.one
        memo: dict[int, RingElement] = {}

        def rec(row: int, mask: int) -> RingElement:
            if row == k:
                return ring.one
            cached = memo.get(mask)
            if cached is not None:
                return cached
            acc = ring.zero
            sign = 1
            for j in range(k):
                bit = 1 << j
                if mask & bit:
                    continue
                a = self[row, j]
                if a:
                    sub = rec(row + 1, mask | bit)
                    term = a * sub
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
            memo[mask] = acc
            return acc

        return rec(0, 0)

    def determinant_permanent_oracle(self) -> RingElement:
        """Independent signed permutation-sum determinant (test oracle)."""
        if self.rows != self.cols:
            raise NotSquare("determinant of a non-square matrix")
        k = self.rows
        ring = self.ring
        acc = ring.zero
        for perm in permutations(range(k)):
            inv = sum(
                1
                for i in range(k)
                for j in range(i + 1, k)
                if perm[i] > perm[j]
            )
            term = ring.one
            for i in range(k):
                term = term * self[i, perm[i]]
            acc = acc + (term if inv % 2 == 0 else -term)
        return acc

    def residue_codes(self) -> list[list[int]]:
        """Entries projected to residue-field integer codes."""
        rf = self.ring.residue_field
        return [
            [rf.encode(self[i, j].coeffs) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(x) for x in self.row(i)) + "]"
            for i in range(self.rows)
        )


@dataclass
class VerificationReport:
    """Structured verdict of an MDS / involutory verification."""

    mds: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    quasi_involutory: Optional[bool] = None
    min_distance: Optional[int] = None
    failing_column_subset: Optional[tuple[int, ...]] = None
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        out = {
            "mds": self.mds,
            "witness": (
                {"rows": list(self.witness[0]), "cols": list(self.witness[1])}
                if self.witness is not None
                else None
            ),
            "quasi_involutory": self.quasi_involutory,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.min_distance is not None:
            out["min_distance"] = self.min_distance
        if self.failing_column_subset is not None:
            out["failing_column_subset"] = list(self.failing_column_subset)
        return out


def companion(g: SkewPoly) -> GRMatrix:
    """Companion matrix: superdiagonal ones, last row (-g_0, ..., -g_{k-1})."""
    if not g.is_monic():
        raise NotMonic("companion matrix requires a monic polynomial")
    k = g.degree
    if k < 2:
        raise DegreeTooSmall("companion matrix requires degree >= 2")
    ring = g.ring
    entries = []
    for i in range(k - 1):
        entries.extend(
            ring.one if j == i + 1 else ring.zero for j in range(k)
        )
    entries.extend(-g.coeff(j) for j in range(k))
    return GRMatrix(ring, k, k, entries)


def twisted_chain(g: SkewPoly, t: int) -> GRMatrix:
    """The product C_g^[t-1] C_g^[t-2] ... C_g^[1] C_g.

    Row r equals the coefficient vector of X^(t+r) mod* g; both routes are
    implemented, with `chain_rows` as the division-based one.
    """
    if t < 1:
        raise DegreeTooSmall("chain length must be >= 1")
    c = companion(g)
    acc = c
    for i in range(1, t):
        acc = c.sigma_twist(i) @ acc
    return acc


def chain_rows(g: SkewPoly, t: int) -> GRMatrix:
    """Rows X^(t+r) mod* g for r = 0..k-1, via right division only."""
    if not g.is_monic():
        raise NotMonic("requires a monic polynomial")
    k = g.degree
    ring = g.ring
    rows = []
    for r in range(k):
        rem = SkewPoly.x_power(ring, t + r).right_mod(g)
        rows.append([rem.coeff(j) for j in range(k)])
    return GRMatrix.from_rows(ring, rows)


def _residue_det(field, codes: list[list[int]]) -> int:
    """Determinant over the residue field by Gaussian elimination."""
    k = len(codes)
    a = [row[:] for row in codes]
    det = 1
    for col in range(k):
        piv = next((i for i in range(col, k) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = field.neg(det)
        det = field.mul(det, a[col][col])
        inv = field.inv(a[col][col])
        for i in range(col + 1, k):
            if a[i][col]:
                f = field.mul(a[i][col], inv)
                for j in range(col, k):
                    a[i][j] = field.sub(a[i][j], field.mul(f, a[col][j]))
    return det


def is_mds(a: GRMatrix) -> VerificationReport:
    """All-minors MDS test over the residue field.

    Every square submatrix of every order 1..k must have a unit determinant;
    equivalently every projected minor must be nonzero.  Minors are scanned
    by increasing order, then lexicographic row and column subsets, stopping
    at the first failure, which is reported as the witness.
    """
    start = time.perf_counter()
    if a.rows != a.cols:
        raise NotSquare("MDS test requires a square matrix")
    k = a.rows
    field = a.ring.residue_field
    codes = a.residue_codes()
    for order in range(1, k + 1):
        for rows in combinations(range(k), order):
            for cols in combinations(range(k), order):
                sub = [[codes[i][j] for j in cols] for i in rows]
                if _residue_det(field, sub) == 0:
                    return VerificationReport(
                        mds=False,
                        witness=(rows, cols),
                        elapsed_ms=(time.perf_counter() - start) * 1e3,
                    )
    return VerificationReport(
        mds=True, elapsed_ms=(time.perf_counter() - start) * 1e3
    )


def is_mds_ring_oracle(a: GRMatrix) -> bool:
    """Direct all-minors-unit check computed in the ring (test oracle)."""
    if a.rows != a.cols:
        raise NotSquare("MDS test requires a square matrix")
    k = a.rows
    for order in range(1, k + 1):
        for rows in combinations(range(k), order):
            for cols in combinations(range(k), order):
                if not a.submatrix(rows, cols).determinant().is_unit():
                    return False
    return True


def check_quasi_involutory(g: SkewPoly) -> bool:
    """Whether N_g^[k] N_g = I_k for N_g = twisted_chain(g, k).

    Requires g to right-divide X^(2k) - 1 and order(sigma) | 2k; under those
    preconditions the relation is guaranteed, so the boolean exists to let
    tests falsify the implementation rather than the mathematics.
    """
    if not g.is_monic():
        raise NotMonic("requires a monic polynomial")
    k = g.degree
    ring = g.ring
    if ring.sigma_order and (2 * k) % ring.sigma_order != 0:
        raise PreconditionViolated(f"order(sigma) = {ring.sigma_order} does not divide {2*k}")
    if not g.right_divides(SkewPoly.x_pow_minus_one(ring, 2 * k)):
        raise PreconditionViolated("g does not right-divide X^(2k) - 1")
    n_g = twisted_chain(g, k)
    return n_g.sigma_twist(k) @ n_g == GRMatrix.identity(ring, k)
