"""Generalized Vandermonde machinery for the root-based MDS criteria.

Rows are roots, columns are exponents: entry (j, l) of the generalized
matrix is N^sigma_{i_l}(a_j).  The k-column-subset determinant criterion
decides the MDS property of the twisted companion chain of the W-polynomial
with those right roots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .errors import (
    CharacteristicMismatch,
    MixedRings,
    NotAUnit,
    UnsupportedShape,
)
from .galois_ring import GaloisRing, RingElement
from .matrices import GRMatrix, VerificationReport, _residue_det
from .skew import sigma_norm_table


def support_exponents(k: int, t: int) -> tuple[int, ...]:
    """The canonical exponent set E = {0..k-1} union {t..t+k-1}, t >= k."""
    return tuple(range(k)) + tuple(range(t, t + k))


@dataclass(frozen=True)
class GenVandermonde:
    """A generalized Vandermonde matrix V(a_1..a_k; columns)."""

    roots: tuple[RingElement, ...]
    columns: tuple[int, ...]
    matrix: GRMatrix


def gen_vandermonde(
    roots: Sequence[RingElement], columns: Sequence[int]
) -> GenVandermonde:
    """Matrix with entry (j, l) = N^sigma_{columns[l]}(roots[j])."""
    if not roots:
        raise MixedRings("at least one root is required")
    ring = roots[0].ring
    for a in roots:
        if a.ring is not ring:
            raise MixedRings("roots from different rings")
    columns = tuple(columns)
    if any(c < 0 for c in columns) or list(columns) != sorted(set(columns)):
        raise UnsupportedShape("columns must be strictly increasing and >= 0")
    top = max(columns)
    rows = []
    for a in roots:
        norms = sigma_norm_table(a, top)
        rows.append([norms[c] for c in columns])
    return GenVandermonde(
        tuple(roots), columns, GRMatrix.from_rows(ring, rows)
    )


def classical_vdm_det(values: Sequence[RingElement]) -> RingElement:
    """prod_{i<j} (a_j - a_i), the classical Vandermonde determinant."""
    ring = values[0].ring
    acc = ring.one
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            acc = acc * (values[j] - values[i])
    return acc


def indexed_vdm_det(
    values: Sequence[RingElement], exponents: Sequence[int]
) -> RingElement:
    """Determinant of the generalized Vandermonde with column exponent set T.

    Supported shapes for T (|T| = k = #values):
      {0..k-1}         -> classical product;
      {0..k-2, k}      -> classical * (sum a_i);
      {0, 2..k-1, k+1} -> classical * (prod a_i) * [(sum a_i)(sum a_i^-1) - 1],
    the last requiring every value to be a unit.
    """
    k = len(values)
    t = tuple(exponents)
    if len(t) != k:
        raise UnsupportedShape("|T| must equal the number of values")
    ring = values[0].ring
    base = classical_vdm_det(values)
    if t == tuple(range(k)):
        return base
    if t == tuple(range(k - 1)) + (k,):
        total = ring.zero
        for a in values:
            total = total + a
        return base * total
    if t == (0,) + tuple(range(2, k)) + (k + 1,):
        for a in values:
            if not a.is_unit():
                raise NotAUnit("this shape requires all values to be units")
        s = ring.zero
        sinv = ring.zero
        prod_a = ring.one
        for a in values:
            s = s + a
            sinv = sinv + ring.inverse(a)
            prod_a = prod_a * a
        return base * prod_a * (s * sinv - ring.one)
    raise UnsupportedShape(f"unsupported exponent set {t}")


def linearized_matrix(h: Sequence[RingElement]) -> GRMatrix:
    """Matrix with entry (i, j) = h_i^(p^j)."""
    ring = h[0].ring
    k = len(h)
    p = ring.p
    rows = [[x ** (p**j) for j in range(k)] for x in h]
    return GRMatrix.from_rows(ring, rows)


def linearized_det(h: Sequence[RingElement]) -> RingElement:
    """Closed-form determinant of the linearized matrix (characteristic p).

    det = h_0 * prod_{j=1}^{k-1} prod_{c in F_p^j} (h_j - sum_{i<j} c_i h_i).
    """
    ring = h[0].ring
    if ring.s != 1:
        raise CharacteristicMismatch("requires a ring of characteristic p (s = 1)")
    k = len(h)
    acc = h[0]
    p = ring.p
    for j in range(1, k):
        for cs in product(range(p), repeat=j):
            term = h[j]
            for c, hi in zip(cs, h):
                if c:
                    term = term - ring.from_int(c) * hi
            acc = acc * term
    return acc


def mds_via_vandermonde(
    roots: Sequence[RingElement], k: int, t: int
) -> VerificationReport:
    """Theorem-5 criterion: the chain matrix of the W-polynomial with these
    right roots is MDS iff every k-column submatrix of V(roots; E) has a
    unit determinant, E = {0..k-1} union {t..t+k-1}."""
    start = time.perf_counter()
    if len(roots) != k:
        raise UnsupportedShape("need exactly k roots")
    exponents = support_exponents(k, t)
    v = gen_vandermonde(roots, exponents)
    field = v.matrix.ring.residue_field
    codes = v.matrix.residue_codes()
    for cols in combinations(range(2 * k), k):
        sub = [[codes[i][j] for j in cols] for i in range(k)]
        if _residue_det(field, sub) == 0:
            return VerificationReport(
                mds=False,
                failing_column_subset=tuple(exponents[c] for c in cols),
                elapsed_ms=(time.perf_counter() - start) * 1e3,
            )
    return VerificationReport(
        mds=True, elapsed_ms=(time.perf_counter() - start) * 1e3
    )
