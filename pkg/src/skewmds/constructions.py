"""Generative families of skew polynomials whose twisted companion chains
are (candidate) MDS.

Each family picks right roots as powers of a Teichmuller generator xi of a
working ring, builds the W-polynomial, and verifies the chain.  Families
split into two kinds: unconditional ones (consecutive powers, nilpotent
perturbations), where a non-MDS verdict is an internal error, and iff
families (gap patterns, Frobenius orbits), where an explicit side condition
is evaluated independently and must agree with the verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import (
    BaseNotMds,
    DegreeMismatch,
    DuplicateRoot,
    InternalInconsistency,
    NotAUnit,
    NotMonic,
    NotNilpotent,
    PreconditionViolated,
    RequiresFieldCase,
    UnsupportedShape,
)
from .galois_ring import Embedding, GaloisRing, RingElement
from .matrices import GRMatrix, VerificationReport, is_mds, twisted_chain
from .skew import SkewPoly, build_w_poly, sigma_norm_table
from .vandermonde import support_exponents

FAMILIES = (
    "consecutive_powers",
    "scaled_consecutive",
    "root_perturbed",
    "gap_at_k",
    "inverse_gap",
    "gap_k_plus_1",
    "frobenius_orbit",
    "frobenius_orbit_with_one",
    "coeff_perturbed",
)

_THEOREM_FAMILIES = {"consecutive_powers", "scaled_consecutive", "root_perturbed"}
_GAP_FAMILIES = {"gap_at_k", "inverse_gap", "gap_k_plus_1"}
_ORBIT_FAMILIES = {"frobenius_orbit", "frobenius_orbit_with_one"}


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters selecting one member of a construction family.

    `t` defaults to k (the square-chain case); `b` is the power offset of
    the consecutive families; `c` an optional unit scale; `eta` nilpotent
    perturbations; `xi_exponent` replaces the generator xi by xi^that, which
    is how parameter sweeps vary the underlying primitive element;
    `extension_degree` pins the working ring (None = pick automatically).
    """

    family: str
    ring: GaloisRing
    k: int
    t: Optional[int] = None
    b: int = 1
    c: Optional[RingElement] = None
    eta: Optional[tuple[RingElement, ...]] = None
    base_spec: Optional["ConstructionSpec"] = None
    xi_exponent: int = 1
    extension_degree: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedShape(f"unknown family {self.family!r}")
        if self.k < 2:
            raise DegreeMismatch("k must be at least 2")
        if self.t is not None and self.t < self.k:
            raise PreconditionViolated("t must be at least k")
        if self.eta is not None:
            object.__setattr__(self, "eta", tuple(self.eta))

    @property
    def chain_length(self) -> int:
        return self.k if self.t is None else self.t

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "ring": self.ring.config(),
            "k": self.k,
            "t": self.chain_length,
            "b": self.b,
            "xi_exponent": self.xi_exponent,
        }
        if self.c is not None:
            out["c"] = list(self.c.coeffs)
        if self.eta is not None:
            out["eta"] = [list(x.coeffs) for x in self.eta]
        if self.extension_degree is not None:
            out["extension_degree"] = self.extension_degree
        if self.base_spec is not None:
            out["base_spec"] = self.base_spec.to_json()
        return out


@dataclass
class ConstructionResult:
    spec: Optional[ConstructionSpec]
    working_ring: GaloisRing
    embedding: Optional[Embedding]
    roots: tuple[RingElement, ...]
    g: SkewPoly
    matrix: GRMatrix
    report: VerificationReport
    coeffs_in_base: tuple[bool, ...]
    condition_holds: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "working_ring": self.working_ring.config(),
            "g": [list(c.coeffs) for c in self.g.coeffs],
            "roots": [list(a.coeffs) for a in self.roots],
            "matrix": {
                "rows": self.matrix.rows,
                "cols": self.matrix.cols,
                "entries": [
                    [list(self.matrix[i, j].coeffs) for j in range(self.matrix.cols)]
                    for i in range(self.matrix.rows)
                ],
            },
            "report": self.report.to_json(),
            "coeffs_in_base": list(self.coeffs_in_base),
        }
        if self.spec is not None:
            out["spec"] = self.spec.to_json()
        if self.condition_holds is not None:
            out["condition_holds"] = self.condition_holds
        return out


# -- working-ring selection ----------------------------------------------

_MAX_EXTENSION = 12


def _norm_residues_distinct(xi: RingElement, upto: int) -> bool:
    ring = xi.ring
    seen = set()
    for norm in sigma_norm_table(xi, upto):
        code = ring.project(norm).code
        if code in seen:
            return False
        seen.add(code)
    return True


def distinct_norm_extension(
    ring: GaloisRing, n: int, xi_exponent: int = 1
) -> tuple[GaloisRing, Embedding, RingElement]:
    """The smallest extension whose Teichmuller generator (raised to
    xi_exponent) has pairwise-distinct norm residues N_0..N_{n-1} mod p.

    Distinct norm residues make every generalized Vandermonde difference a
    unit, which is what the unconditional families rely on.  The base ring
    itself can fail this (l = 1 is tried first), so roots are realized in
    the extension when necessary.
    """
    for l in range(1, _MAX_EXTENSION + 1):
        ext, emb = ring.extend(l)
        xi = ext.teichmuller_generator ** xi_exponent
        if _norm_residues_distinct(xi, n - 1):
            return ext, emb, xi
    raise PreconditionViolated(
        f"no extension of degree <= {_MAX_EXTENSION} separates the "
        f"first {n} norm residues"
    )


def _pinned_ring(
    spec: ConstructionSpec, n: int, require_distinct: bool
) -> tuple[GaloisRing, Embedding, RingElement]:
    l = spec.extension_degree
    if l is None and require_distinct:
        return distinct_norm_extension(spec.ring, n, spec.xi_exponent)
    ext, emb = spec.ring.extend(l if l is not None else 1)
    xi = ext.teichmuller_generator ** spec.xi_exponent
    if require_distinct and not _norm_residues_distinct(xi, n - 1):
        raise PreconditionViolated(
            "norm residues collide in the requested working ring"
        )
    return ext, emb, xi


def _check_distinct(roots: Sequence[RingElement]) -> None:
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == roots[j]:
                raise DuplicateRoot(f"roots {i} and {j} coincide")


def _coeffs_in_base(g: SkewPoly, base: GaloisRing) -> tuple[bool, ...]:
    ring = g.ring
    return tuple(ring.in_base_subring(c, base.m) for c in g.coeffs)


def _finish(
    spec: ConstructionSpec,
    working: GaloisRing,
    emb: Embedding,
    roots: Sequence[RingElement],
    condition: Optional[bool] = None,
    guaranteed: bool = False,
) -> ConstructionResult:
    g = build_w_poly(list(roots))
    mat = twisted_chain(g, spec.chain_length)
    report = is_mds(mat)
    if guaranteed and not report.mds:
        raise InternalInconsistency(
            f"{spec.family}: theorem guarantees MDS but verification failed "
            f"(witness {report.witness})"
        )
    if condition is not None and condition != report.mds:
        raise InternalInconsistency(
            f"{spec.family}: side condition says {condition} but the chain "
            f"verdict is {report.mds}"
        )
    return ConstructionResult(
        spec=spec,
        working_ring=working,
        embedding=emb,
        roots=tuple(roots),
        g=g,
        matrix=mat,
        report=report,
        coeffs_in_base=_coeffs_in_base(g, spec.ring),
        condition_holds=condition,
    )


# -- unconditional families ------------------------------------------------


def consecutive_powers(spec: ConstructionSpec) -> ConstructionResult:
    """Roots c * xi^(b), c * xi^(b+1), ..., c * xi^(b+k-1); always MDS."""
    if spec.family not in ("consecutive_powers", "scaled_consecutive"):
        raise UnsupportedShape(f"wrong family {spec.family!r}")
    n = spec.chain_length + spec.k
    working, emb, xi = _pinned_ring(spec, n, require_distinct=True)
    c = working.one
    if spec.c is not None:
        if not spec.c.is_unit():
            raise NotAUnit("scale c must be a unit")
        c = emb(spec.c)
    roots = [c * xi ** (j + spec.b - 1) for j in range(1, spec.k + 1)]
    _check_distinct(roots)
    return _finish(spec, working, emb, roots, guaranteed=True)


def perturb_roots(spec: ConstructionSpec) -> ConstructionResult:
    """Consecutive powers shifted by nilpotents: a_j = c*xi^(j+b-1) + eta_j."""
    if spec.family != "root_perturbed":
        raise UnsupportedShape(f"wrong family {spec.family!r}")
    eta = spec.eta if spec.eta is not None else ()
    if len(eta) != spec.k:
        raise DegreeMismatch("need one eta per root")
    for x in eta:
        if not x.is_nilpotent():
            raise NotNilpotent(f"{x!r} is not nilpotent")
    n = spec.chain_length + spec.k
    working, emb, xi = _pinned_ring(spec, n, require_distinct=True)
    c = working.one
    if spec.c is not None:
        if not spec.c.is_unit():
            raise NotAUnit("scale c must be a unit")
        c = emb(spec.c)
    roots = [
        c * xi ** (j + spec.b - 1) + emb(eta[j - 1])
        for j in range(1, spec.k + 1)
    ]
    _check_distinct(roots)
    return _finish(spec, working, emb, roots, guaranteed=True)


def perturb_coefficients(
    g: SkewPoly, eta: Sequence[RingElement], t: int
) -> ConstructionResult:
    """Add nilpotents to the non-leading coefficients of an MDS-chain g.

    The perturbed chain differs from the original by a matrix over the
    nilradical, so the MDS property carries over.
    """
    ring = g.ring
    k = g.degree
    if not g.is_monic():
        raise NotMonic("g must be monic")
    if len(eta) != k:
        raise DegreeMismatch("need one eta per non-leading coefficient")
    coerced = []
    for x in eta:
        if x.ring is not ring:
            raise PreconditionViolated("eta entries must live in g's ring")
        if not x.is_nilpotent():
            raise NotNilpotent(f"{x!r} is not nilpotent")
        coerced.append(x)
    base_report = is_mds(twisted_chain(g, t))
    if not base_report.mds:
        raise BaseNotMds("the unperturbed chain is not MDS")
    coeffs = list(g.coeffs)
    for i, x in enumerate(coerced):
        coeffs[i] = coeffs[i] + x
    h = SkewPoly(ring, coeffs)
    mat = twisted_chain(h, t)
    report = is_mds(mat)
    if not report.mds:
        raise InternalInconsistency(
            "nilpotent coefficient perturbation flipped an MDS verdict"
        )
    return ConstructionResult(
        spec=None,
        working_ring=ring,
        embedding=None,
        roots=(),
        g=h,
        matrix=mat,
        report=report,
        coeffs_in_base=tuple(True for _ in h.coeffs),
    )


# -- iff families ------------------------------------------------------------


def _gap_condition(
    spec: ConstructionSpec, xi: RingElement, exponents: Sequence[int]
) -> bool:
    ring = xi.ring
    top = max(exponents)
    norms = sigma_norm_table(xi, top)
    inv_norms = sigma_norm_table(ring.inverse(xi), top)
    for subset in combinations(exponents, spec.k):
        s = ring.zero
        sinv = ring.zero
        for i in subset:
            s = s + norms[i]
            sinv = sinv + inv_norms[i]
        if spec.family == "gap_at_k":
            ok = s.is_unit()
        elif spec.family == "inverse_gap":
            ok = sinv.is_unit()
        else:  # gap_k_plus_1
            ok = (s * sinv - ring.one).is_unit()
        if not ok:
            return False
    return True


def gap_family(spec: ConstructionSpec) -> ConstructionResult:
    """Root patterns with one skipped power, decided by a unit-sum test.

    gap_at_k:     1, xi, ..., xi^(k-2), xi^k      -- sum of norms a unit;
    inverse_gap:  1, xi^2, ..., xi^k              -- sum of inverse norms;
    gap_k_plus_1: 1, xi^2, ..., xi^(k-1), xi^(k+1) -- product of both sums
                  minus one.
    Each condition ranges over every k-subset of the exponent set E and is
    equivalent to the MDS verdict; disagreement is an internal error.
    """
    if spec.family not in _GAP_FAMILIES:
        raise UnsupportedShape(f"wrong family {spec.family!r}")
    k = spec.k
    n = spec.chain_length + k
    working, emb, xi = _pinned_ring(spec, n, require_distinct=True)
    if spec.family == "gap_at_k":
        powers = list(range(k - 1)) + [k]
    elif spec.family == "inverse_gap":
        powers = [0] + list(range(2, k + 1))
    else:
        powers = [0] + list(range(2, k)) + [k + 1]
    roots = [xi**i for i in powers]
    _check_distinct(roots)
    exponents = support_exponents(k, spec.chain_length)
    condition = _gap_condition(spec, xi, exponents)
    return _finish(spec, working, emb, roots, condition=condition)


def _orbit_condition(
    spec: ConstructionSpec, xi: RingElement, exponents: Sequence[int]
) -> bool:
    ring = xi.ring
    p = ring.p
    k = spec.k
    norms = sigma_norm_table(xi, max(exponents))
    with_one = spec.family == "frobenius_orbit_with_one"
    for subset in combinations(exponents, k):
        vals = [norms[i] for i in subset]
        if with_one:
            # c_1 is forced to -(c_2 + ... + c_k); sweep the free tail.
            for tail in product(range(p), repeat=k - 1):
                if not any(tail):
                    continue
                c1 = (-sum(tail)) % p
                total = ring.from_int(c1) * vals[0]
                for c, v in zip(tail, vals[1:]):
                    if c:
                        total = total + ring.from_int(c) * v
                if not total:
                    return False
        else:
            for bs in product(range(p), repeat=k):
                if not any(bs):
                    continue
                total = ring.zero
                for c, v in zip(bs, vals):
                    if c:
                        total = total + ring.from_int(c) * v
                if not total:
                    return False
    return True


def frobenius_orbit(spec: ConstructionSpec) -> ConstructionResult:
    """Field-only families with roots along the p-power orbit of xi.

    frobenius_orbit:          xi, xi^p, ..., xi^(p^(k-1));
    frobenius_orbit_with_one: 1, xi, xi^p, ..., xi^(p^(k-2)).
    MDS iff the selected norms are F_p-independent (resp. independent after
    centering) on every k-subset of E.
    """
    if spec.family not in _ORBIT_FAMILIES:
        raise UnsupportedShape(f"wrong family {spec.family!r}")
    if spec.ring.s != 1:
        raise RequiresFieldCase("Frobenius-orbit families need s = 1")
    k = spec.k
    p = spec.ring.p
    n = spec.chain_length + k
    working, emb, xi = _pinned_ring(spec, n, require_distinct=False)
    if spec.family == "frobenius_orbit":
        roots = [xi ** (p**j) for j in range(k)]
    else:
        roots = [working.one] + [xi ** (p**j) for j in range(k - 1)]
    _check_distinct(roots)
    exponents = support_exponents(k, spec.chain_length)
    condition = _orbit_condition(spec, xi, exponents)
    return _finish(spec, working, emb, roots, condition=condition)


# -- plumbing ----------------------------------------------------------------


def guard_constant_term(g: SkewPoly) -> bool:
    """False iff g_0 is a non-unit, in which case no chain of g is MDS."""
    if not g.is_monic():
        raise NotMonic("guard applies to monic polynomials")
    return g.coeff(0).is_unit()


def build(spec: ConstructionSpec) -> ConstructionResult:
    """Dispatch a spec to its family's constructor."""
    if spec.family in ("consecutive_powers", "scaled_consecutive"):
        return consecutive_powers(spec)
    if spec.family == "root_perturbed":
        return perturb_roots(spec)
    if spec.family in _GAP_FAMILIES:
        return gap_family(spec)
    if spec.family in _ORBIT_FAMILIES:
        return frobenius_orbit(spec)
    if spec.family == "coeff_perturbed":
        if spec.base_spec is None:
            raise PreconditionViolated("coeff_perturbed needs a base_spec")
        base = build(spec.base_spec)
        eta = spec.eta if spec.eta is not None else ()
        emb = base.embedding
        lifted = tuple(
            emb(x) if emb is not None and x.ring is spec.ring else x
            for x in eta
        )
        result = perturb_coefficients(base.g, lifted, spec.chain_length)
        result.spec = spec
        result.embedding = emb
        result.coeffs_in_base = _coeffs_in_base(result.g, spec.ring)
        return result
    raise UnsupportedShape(f"unknown family {spec.family!r}")
