import random

import pytest

from skewmds.constructions import (
    ConstructionSpec,
    build,
    consecutive_powers,
    distinct_norm_extension,
    gap_family,
    guard_constant_term,
    perturb_coefficients,
    perturb_roots,
)
from skewmds.errors import (
    BaseNotMds,
    DegreeMismatch,
    DuplicateRoot,
    NotNilpotent,
    PreconditionViolated,
    RequiresFieldCase,
    UnsupportedShape,
)
from skewmds.galois_ring import make_ring
from skewmds.matrices import is_mds, twisted_chain
from skewmds.skew import SkewPoly


def test_consecutive_powers_always_mds():
    for e in (0, 1):
        ring = make_ring(2, 2, 4, sigma_exponent=e)
        for k in (2, 3):
            for b in (0, 1, 5):
                res = build(ConstructionSpec("consecutive_powers", ring, k, b=b))
                assert res.report.mds
                for a in res.roots:
                    assert res.g.is_right_root(a)


def test_offset_periodicity():
    ring = make_ring(2, 1, 3, sigma_exponent=1)
    r1 = build(ConstructionSpec("consecutive_powers", ring, 2, b=1))
    period = 2 ** r1.working_ring.m - 1  # Teichmuller group order
    r2 = build(ConstructionSpec("consecutive_powers", ring, 2, b=1 + period))
    assert r1.working_ring is r2.working_ring
    assert r1.roots == r2.roots and r1.g == r2.g


def test_base_ring_can_need_an_extension():
    # 2^0 - 1 == 2^4 - 1 (mod 15): the norm exponents collide in the base
    ring = make_ring(2, 1, 4, sigma_exponent=1)
    ext, emb, xi = distinct_norm_extension(ring, 8)
    assert ext.m == 8
    res = build(ConstructionSpec("consecutive_powers", ring, 4))
    assert res.working_ring.m == 8 and res.report.mds


def test_scaled_variant_and_unit_check():
    ring = make_ring(2, 2, 4, sigma_exponent=1)
    c = ring.from_int(3)
    res = build(ConstructionSpec("scaled_consecutive", ring, 3, c=c))
    assert res.report.mds
    from skewmds.errors import NotAUnit

    with pytest.raises(NotAUnit):
        build(ConstructionSpec("scaled_consecutive", ring, 3, c=ring.from_int(2)))


def test_root_perturbation_zero_eta_matches_plain():
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    plain = build(ConstructionSpec("consecutive_powers", ring, 3))
    zero = build(
        ConstructionSpec("root_perturbed", ring, 3, eta=(ring.zero,) * 3)
    )
    assert plain.g == zero.g and plain.roots == zero.roots


def test_root_perturbation_soundness_randomized():
    rng = random.Random(9)
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    for _ in range(50):
        eta = tuple(ring.random_nilpotent(rng) for _ in range(3))
        res = build(ConstructionSpec("root_perturbed", ring, 3, eta=eta))
        assert res.report.mds


def test_root_perturbation_rejects_non_nilpotent():
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    with pytest.raises(NotNilpotent):
        build(ConstructionSpec("root_perturbed", ring, 3, eta=(ring.one,) * 3))
    with pytest.raises(DegreeMismatch):
        build(ConstructionSpec("root_perturbed", ring, 3, eta=(ring.zero,)))


def test_coefficient_perturbation():
    rng = random.Random(10)
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    base = build(ConstructionSpec("consecutive_powers", ring, 3))
    working = base.working_ring
    for _ in range(40):
        eta = [working.random_nilpotent(rng) for _ in range(3)]
        res = perturb_coefficients(base.g, eta, 3)
        assert res.report.mds
    # identity perturbation
    res = perturb_coefficients(base.g, [working.zero] * 3, 3)
    assert res.g == base.g
    # field case has no nonzero nilpotents
    field = make_ring(2, 1, 3, sigma_exponent=1)
    g = build(ConstructionSpec("consecutive_powers", field, 2)).g
    with pytest.raises(NotNilpotent):
        perturb_coefficients(g, [g.ring.one, g.ring.zero], 2)


def test_coefficient_perturbation_needs_mds_base():
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    bad = SkewPoly(ring, [ring.from_int(2), ring.one, ring.one])  # non-unit g0
    with pytest.raises(BaseNotMds):
        perturb_coefficients(bad, [ring.zero, ring.zero], 2)


def test_coeff_perturbed_family_wraps_base_spec():
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    inner = ConstructionSpec("consecutive_powers", ring, 3)
    eta = (ring.from_int(2), ring.zero, ring.from_int(2))
    res = build(ConstructionSpec("coeff_perturbed", ring, 3, eta=eta, base_spec=inner))
    assert res.report.mds
    with pytest.raises(PreconditionViolated):
        build(ConstructionSpec("coeff_perturbed", ring, 3, eta=eta))


def test_gap_families_iff_agreement_exhaustive():
    for (p, s, m) in [(2, 1, 4), (2, 2, 2)]:
        ring = make_ring(p, s, m, sigma_exponent=1)
        for family in ("gap_at_k", "inverse_gap", "gap_k_plus_1"):
            for xe in range(1, p**m - 1):
                try:
                    res = build(ConstructionSpec(family, ring, 2, xi_exponent=xe))
                except (DuplicateRoot, PreconditionViolated):
                    continue
                # build() would have raised InternalInconsistency on mismatch
                assert res.condition_holds == res.report.mds


def test_frobenius_orbit_iff_agreement_exhaustive():
    ring = make_ring(2, 1, 4, sigma_exponent=1)
    seen = set()
    for family in ("frobenius_orbit", "frobenius_orbit_with_one"):
        for k in (2, 3):
            for xe in range(1, 15):
                try:
                    res = build(
                        ConstructionSpec(family, ring, k, xi_exponent=xe)
                    )
                except DuplicateRoot:
                    continue
                assert res.condition_holds == res.report.mds
                seen.add(res.condition_holds)
    assert seen == {True, False}  # the sweep exercises both directions


def test_frobenius_requires_field():
    ring = make_ring(2, 2, 2, sigma_exponent=1)
    with pytest.raises(RequiresFieldCase):
        build(ConstructionSpec("frobenius_orbit", ring, 2))


def test_frobenius_orbit_collapse():
    ring = make_ring(2, 1, 4, sigma_exponent=1)
    # xi = 1 collapses the whole orbit
    with pytest.raises(DuplicateRoot):
        build(ConstructionSpec("frobenius_orbit", ring, 2, xi_exponent=15))


def test_guard_constant_term():
    ring = make_ring(2, 2, 4, sigma_exponent=0)
    good = SkewPoly(ring, [ring.one, ring.zero, ring.one])
    bad = SkewPoly(ring, [ring.from_int(2), ring.zero, ring.one])
    assert guard_constant_term(good)
    assert not guard_constant_term(bad)


def test_guard_predicts_chain_failure():
    rng = random.Random(11)
    ring = make_ring(2, 2, 4, sigma_exponent=1)
    for _ in range(20):
        k = rng.choice([2, 3])
        coeffs = [ring.random_nilpotent(rng)]
        coeffs += [ring.random_element(rng) for _ in range(k - 1)]
        g = SkewPoly(ring, coeffs + [ring.one])
        assert not guard_constant_term(g)
        for t in range(k, 2 * k + 1):
            assert not is_mds(twisted_chain(g, t)).mds


def test_coeffs_in_base_retraction_invariant():
    ring = make_ring(2, 1, 2, sigma_exponent=1)
    res = build(ConstructionSpec("consecutive_powers", ring, 2))
    if all(res.coeffs_in_base) and res.working_ring is not ring:
        emb = res.embedding
        back = SkewPoly(ring, [emb.retract(c) for c in res.g.coeffs])
        assert is_mds(twisted_chain(back, 2)).mds == res.report.mds


def test_spec_validation():
    ring = make_ring(2, 1, 2)
    with pytest.raises(UnsupportedShape):
        ConstructionSpec("no_such_family", ring, 2)
    with pytest.raises(DegreeMismatch):
        ConstructionSpec("consecutive_powers", ring, 1)
    with pytest.raises(PreconditionViolated):
        ConstructionSpec("consecutive_powers", ring, 3, t=2)
