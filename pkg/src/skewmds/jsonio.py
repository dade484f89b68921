"""JSON (de)serialization for rings, elements, polynomials and matrices.

Wire formats:
  ring    {"p": 5, "s": 2, "m": 3, "modulus": [3, 3, 0, 1], "sigma_exponent": 2}
  element [c_0, c_1, ..., c_{m-1}]        (integer coordinates, low to high)
  poly    {"ring": <ring>, "coeffs": [<element>, ...]}  (degree-ascending)
  matrix  {"ring": <ring>, "rows": r, "cols": c, "entries": [[<element>..]..]}
"""

from __future__ import annotations

from typing import Any, Sequence

from .errors import DegreeMismatch, UnsupportedShape
from .galois_ring import GaloisRing, RingElement, make_ring
from .matrices import GRMatrix
from .skew import SkewPoly


def ring_to_json(ring: GaloisRing) -> dict:
    return ring.config()


def ring_from_json(obj: dict) -> GaloisRing:
    return make_ring(
        obj["p"],
        obj["s"],
        obj["m"],
        modulus=obj.get("modulus"),
        sigma_exponent=obj.get("sigma_exponent", 0),
    )


def element_to_json(x: RingElement) -> list[int]:
    return list(x.coeffs)


def element_from_json(ring: GaloisRing, obj: Sequence[int] | int) -> RingElement:
    if isinstance(obj, int):
        return ring.from_int(obj)
    if len(obj) > ring.m:
        raise DegreeMismatch(f"{len(obj)} coordinates for residue degree {ring.m}")
    return ring.element(list(obj) + [0] * (ring.m - len(obj)))


def poly_to_json(f: SkewPoly) -> dict:
    return {
        "ring": ring_to_json(f.ring),
        "coeffs": [element_to_json(c) for c in f.coeffs],
    }


def poly_from_json(obj: dict, ring: GaloisRing | None = None) -> SkewPoly:
    if ring is None:
        ring = ring_from_json(obj["ring"])
    return SkewPoly(ring, [element_from_json(ring, c) for c in obj["coeffs"]])


def matrix_to_json(a: GRMatrix) -> dict:
    return {
        "ring": ring_to_json(a.ring),
        "rows": a.rows,
        "cols": a.cols,
        "entries": [
            [element_to_json(a[i, j]) for j in range(a.cols)]
            for i in range(a.rows)
        ],
    }


def matrix_from_json(obj: dict, ring: GaloisRing | None = None) -> GRMatrix:
    if ring is None:
        ring = ring_from_json(obj["ring"])
    entries = obj["entries"]
    if len(entries) != obj["rows"] or any(
        len(row) != obj["cols"] for row in entries
    ):
        raise UnsupportedShape("entry grid does not match rows/cols")
    return GRMatrix.from_rows(
        ring, [[element_from_json(ring, e) for e in row] for row in entries]
    )
