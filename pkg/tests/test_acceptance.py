"""Acceptance gate: nine end-to-end criteria, one pass/fail line each.

Each test prints its verdict line before asserting, so the summary survives
in the captured output either way.
"""

import random
import time
from itertools import combinations, product

from skewmds.constructions import ConstructionSpec, build
from skewmds.galois_ring import make_ring
from skewmds.matrices import (
    GRMatrix,
    check_quasi_involutory,
    is_mds,
    twisted_chain,
)
from skewmds.oracle import CodeInstance, min_distance, weight_criterion_support
from skewmds.skew import (
    SkewPoly,
    build_w_poly,
    right_roots_of_unity,
    sigma_norm_table,
)
from skewmds.vandermonde import (
    classical_vdm_det,
    indexed_vdm_det,
    linearized_det,
    linearized_matrix,
)


def _verdict(num: int, name: str, ok: bool, detail: str = "") -> None:
    tail = f"  ({detail})" if detail else ""
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name}{tail}")
    assert ok, f"criterion {num} failed: {name} {detail}"


def test_criterion_1_golden_involutory_chain():
    start = time.perf_counter()
    ring = make_ring(5, 2, 3, modulus=[3, 3, 0, 1], sigma_exponent=2)
    g = SkewPoly(ring, [ring.from_int(c) for c in (1, 2, 2, 1)])
    from skewmds.matrices import companion

    c = companion(g)
    last_row = [c[2, j].coeffs[0] for j in range(3)]
    n = twisted_chain(g, 3)
    got = [[n[i, j].coeffs[0] for j in range(3)] for i in range(3)]
    constant = all(
        all(x == 0 for x in n[i, j].coeffs[1:]) for i in range(3) for j in range(3)
    )
    ok = (
        last_row == [24, 23, 23]
        and got == [[24, 23, 23], [2, 3, 2], [23, 23, 24]]
        and constant
        and n.sigma_twist(3) @ n == GRMatrix.identity(ring, 3)
        and is_mds(n).mds
    )
    elapsed = time.perf_counter() - start
    _verdict(1, "GR(25,5^6) involutory chain, exact entries", ok and elapsed < 1.0,
             f"{elapsed:.3f}s")


def test_criterion_2_golden_degree_4_chain():
    start = time.perf_counter()
    ring = make_ring(2, 2, 4, modulus=[1, 1, 0, 0, 1], sigma_exponent=1)
    a = ring.zeta
    g = SkewPoly(
        ring,
        [
            ring.one,
            ring.one,
            a**3,
            ring.from_int(3) + ring.from_int(3) * a + a**2 + ring.from_int(2) * a**3,
            ring.one,
        ],
    )
    rep = is_mds(twisted_chain(g, 4))
    elapsed = time.perf_counter() - start
    _verdict(2, "GR(4,2^8) degree-4 chain MDS", rep.mds and elapsed < 1.0,
             f"{elapsed:.3f}s")


def test_criterion_3_golden_perturbed_roots():
    start = time.perf_counter()
    ring = make_ring(2, 2, 8, modulus=[1, 1, 0, 0, 0, 0, 1, 1, 1], sigma_exponent=0)
    xi = ring.zeta
    two = ring.from_int(2)
    plain = build_w_poly([ring.one, xi, xi**2])
    shifted = build_w_poly(
        [ring.one + two, xi + two * xi, xi**2 + two * xi**2]
    )
    ok = (
        is_mds(twisted_chain(plain, 3)).mds
        and is_mds(twisted_chain(shifted, 3)).mds
    )
    elapsed = time.perf_counter() - start
    _verdict(3, "GR(4,2^16) consecutive + nilpotent-perturbed roots",
             ok and elapsed < 5.0, f"{elapsed:.3f}s")


def test_criterion_4_three_way_oracle_agreement():
    start = time.perf_counter()
    rng = random.Random(2024)
    rings = [
        (make_ring(2, 1, 2, sigma_exponent=1), 40),
        (make_ring(2, 1, 3, sigma_exponent=1), 40),
        (make_ring(2, 1, 4, sigma_exponent=1), 20),
        (make_ring(2, 2, 2, sigma_exponent=1), 30),
    ]
    instances = disagreements = 0
    for ring, per_k in rings:
        for k in (2, 3):
            made = 0
            while made < per_k:
                g = SkewPoly(
                    ring,
                    [ring.random_element(rng) for _ in range(k)] + [ring.one],
                )
                if g.degree != k:
                    continue
                made += 1
                for t in (k, k + 1):
                    mat = twisted_chain(g, t)
                    v_minor = is_mds(mat).mds
                    v_dist = min_distance(CodeInstance(mat)) == k + 1
                    v_weight = weight_criterion_support(g, t)
                    instances += 1
                    if not (v_minor == v_dist == v_weight):
                        disagreements += 1
    elapsed = time.perf_counter() - start
    _verdict(4, "three-way oracle agreement",
             instances >= 500 and disagreements == 0 and elapsed < 120.0,
             f"{instances} instances, {disagreements} disagreements, {elapsed:.1f}s")


def test_criterion_5_consecutive_power_soundness_sweep():
    start = time.perf_counter()
    count = failures = 0
    for (p, s, m) in [(2, 1, 4), (2, 2, 4), (3, 1, 3), (5, 2, 3)]:
        for e in (0, 1):
            ring = make_ring(p, s, m, sigma_exponent=e)
            for k in (2, 3, 4):
                for b in range(11):
                    spec = ConstructionSpec("consecutive_powers", ring, k, b=b)
                    res = build(spec)  # raises InternalInconsistency if non-MDS
                    count += 1
                    if not res.report.mds:
                        failures += 1
    elapsed = time.perf_counter() - start
    _verdict(5, "consecutive-power soundness sweep",
             count >= 250 and failures == 0 and elapsed < 120.0,
             f"{count} constructions, {failures} failures, {elapsed:.1f}s")


def test_criterion_6_quasi_involutory_divisors():
    start = time.perf_counter()
    cases = []
    for (p, s, m, e, k) in [
        (3, 1, 2, 0, 2),
        (3, 1, 2, 1, 2),
        (5, 1, 2, 1, 2),
        (5, 1, 2, 1, 3),
        (5, 2, 2, 1, 3),
    ]:
        ring = make_ring(p, s, m, sigma_exponent=e)
        n = 2 * k
        ext, emb, roots = right_roots_of_unity(ring, n)
        xn1 = SkewPoly.x_pow_minus_one(ext, n)
        found = 0
        for subset in combinations(roots, k):
            if found >= 10:
                break
            try:
                g = build_w_poly(list(subset))
            except Exception:
                continue
            if g.degree != k or not g.right_divides(xn1):
                continue
            cases.append(check_quasi_involutory(g))
            found += 1
    elapsed = time.perf_counter() - start
    _verdict(6, "quasi-involutory W-polynomial divisors of X^(2k)-1",
             len(cases) >= 30 and all(cases),
             f"{len(cases)} divisors, {elapsed:.1f}s")


def test_criterion_7_gap_family_iff_criteria():
    start = time.perf_counter()
    checked = exceptions = 0
    for (p, s, m) in [(2, 1, 4), (2, 2, 2)]:
        ring = make_ring(p, s, m, sigma_exponent=1)
        for family in ("gap_at_k", "inverse_gap", "gap_k_plus_1"):
            for xe in range(1, p**m - 1):
                try:
                    res = build(ConstructionSpec(family, ring, 2, xi_exponent=xe))
                except Exception as exc:
                    if type(exc).__name__ == "InternalInconsistency":
                        exceptions += 1
                    continue
                checked += 1
                if res.condition_holds != res.report.mds:
                    exceptions += 1
    elapsed = time.perf_counter() - start
    _verdict(7, "gap-family iff criteria (exhaustive k=2 sweeps)",
             checked > 0 and exceptions == 0,
             f"{checked} sweeps, {exceptions} exceptions, {elapsed:.1f}s")


def test_criterion_8_algebra_property_suite():
    start = time.perf_counter()
    rng = random.Random(99)
    ring = make_ring(2, 2, 3, sigma_exponent=1)
    field = make_ring(3, 1, 2, sigma_exponent=0)
    ok = True

    def rand_poly(r, max_deg):
        d = rng.randrange(max_deg + 1)
        return SkewPoly(r, [r.random_element(rng) for _ in range(d + 1)])

    for _ in range(1000):
        # division identity + uniqueness of (q, r) with deg r < deg g
        f, g = rand_poly(ring, 6), rand_poly(ring, 3)
        if g.degree >= 0 and g.leading.is_unit():
            q, rem = f.right_divmod(g)
            ok &= q * g + rem == f and rem.degree < g.degree
        # evaluation = remainder by X - beta
        beta = ring.random_element(rng)
        _, rem = f.right_divmod(SkewPoly(ring, [-beta, ring.one]))
        ok &= f.right_eval(beta) == (rem.coeff(0) if rem.degree >= 0 else ring.zero)
        # norm recurrence
        norms = sigma_norm_table(beta, 4)
        ok &= all(norms[i + 1] == ring.sigma(norms[i]) * beta for i in range(4))
        # left-scalar associativity: a(fg) = (af)g
        a = ring.random_element(rng)
        ok &= (f * g).scale(a) == f.scale(a) * g
        # twist homomorphism
        x, y = ring.random_element(rng), ring.random_element(rng)
        ok &= ring.sigma(x * y, 2) == ring.sigma(x, 2) * ring.sigma(y, 2)

    for _ in range(1000):
        k = rng.choice([2, 3])
        vals = [field.random_unit(rng) for _ in range(k)]
        power = GRMatrix.from_rows(
            field, [[v**e for e in range(k)] for v in vals]
        )
        ok &= classical_vdm_det(vals) == power.determinant()
        t = tuple(range(k - 1)) + (k,)
        shaped = GRMatrix.from_rows(field, [[v**e for e in t] for v in vals])
        ok &= indexed_vdm_det(vals, t) == shaped.determinant()
        h = [field.random_element(rng) for _ in range(k)]
        ok &= linearized_det(h) == linearized_matrix(h).determinant()

    elapsed = time.perf_counter() - start
    _verdict(8, "algebra property suite (1000-case randomized checks)",
             ok and elapsed < 60.0, f"{elapsed:.1f}s")


def test_criterion_9_non_unit_constant_term_guard():
    start = time.perf_counter()
    rng = random.Random(7)
    ring = make_ring(2, 2, 4, sigma_exponent=1)
    violations = 0
    for _ in range(50):
        k = rng.choice([2, 3, 4])
        g0 = ring.random_nilpotent(rng)
        g = SkewPoly(
            ring,
            [g0] + [ring.random_element(rng) for _ in range(k - 1)] + [ring.one],
        )
        for t in range(k, 2 * k + 1):
            if is_mds(twisted_chain(g, t)).mds:
                violations += 1
    elapsed = time.perf_counter() - start
    _verdict(9, "non-unit constant term forces non-MDS chains",
             violations == 0, f"50 polynomials, {violations} violations, {elapsed:.1f}s")
