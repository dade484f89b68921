"""Skew polynomial arithmetic in GR(p^s, p^(s*m))[X; sigma].

Multiplication follows the twist rule a*X^i * b*X^j = a sigma^i(b) X^(i+j).
Right division, right evaluation via sigma-norms, iterative W-polynomial
(least common left multiple) construction, and right roots of X^n - 1 in a
splitting extension.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    CharacteristicDividesLength,
    DependentRoots,
    DivisionByZero,
    DuplicateRoot,
    MixedRings,
    NonUnitLeadingCoefficient,
)
from .galois_ring import Embedding, GaloisRing, RingElement


class SkewPoly:
    """A polynomial in GR(p^s, p^(s*m))[X; sigma], coefficients low-to-high.

    No trailing zeros are stored; the zero polynomial has an empty
    coefficient sequence and degree -1 by convention.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: Sequence[RingElement]):
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        for c in coeffs:
            if c.ring is not ring:
                raise MixedRings("coefficient from a different ring")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring: GaloisRing) -> "SkewPoly":
        return cls(ring, ())

    @classmethod
    def one(cls, ring: GaloisRing) -> "SkewPoly":
        return cls(ring, (ring.one,))

    @classmethod
    def x_power(cls, ring: GaloisRing, n: int) -> "SkewPoly":
        return cls(ring, (ring.zero,) * n + (ring.one,))

    @classmethod
    def x_pow_minus_one(cls, ring: GaloisRing, n: int) -> "SkewPoly":
        """X^n - 1."""
        return cls(ring, (-ring.one,) + (ring.zero,) * (n - 1) + (ring.one,))

    @classmethod
    def from_ints(cls, ring: GaloisRing, ints: Sequence[int]) -> "SkewPoly":
        return cls(ring, [ring.from_int(c) for c in ints])

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> RingElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    @property
    def leading(self) -> RingElement:
        if not self.coeffs:
            raise DivisionByZero("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def weight(self) -> int:
        """Hamming weight: number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def support(self) -> set[int]:
        return {i for i, c in enumerate(self.coeffs) if c}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "SkewPoly") -> None:
        if self.ring is not other.ring:
            raise MixedRings("polynomials over different rings")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """Skew product: bilinear extension of aX^i * bX^j = a sigma^i(b) X^(i+j)."""
        self._check(other)
        ring = self.ring
        if not self.coeffs or not other.coeffs:
            return SkewPoly.zero(ring)
        out = [ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * ring.sigma(b, i)
        return SkewPoly(ring, out)

    def scale(self, c: RingElement) -> "SkewPoly":
        """Left scalar multiple c * f."""
        return SkewPoly(self.ring, [c * a for a in self.coeffs])

    def right_divmod(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """Unique (q, r) with self = q * g + r and deg r < deg g (or r = 0)."""
        self._check(g)
        ring = self.ring
        if not g:
            raise DivisionByZero("right division by the zero polynomial")
        if not g.leading.is_unit():
            raise NonUnitLeadingCoefficient(
                "right division requires a unit leading coefficient"
            )
        r = list(self.coeffs)
        k = g.degree
        qlen = max(len(r) - k, 0)
        q = [ring.zero] * qlen
        lc_inv = ring.inverse(g.leading)
        while len(r) > k and any(r):
            while r and not r[-1]:
                r.pop()
            d = len(r) - 1
            if d < k:
                break
            # eliminate the top term: c X^(d-k) * g has leading c sigma^(d-k)(lc)
            c = r[-1] * ring.inverse(ring.sigma(g.leading, d - k))
            q[d - k] = q[d - k] + c
            for j, gj in enumerate(g.coeffs):
                r[d - k + j] = r[d - k + j] - c * ring.sigma(gj, d - k)
            r.pop()
        return SkewPoly(ring, q), SkewPoly(ring, r)

    def right_mod(self, g: "SkewPoly") -> "SkewPoly":
        return self.right_divmod(g)[1]

    def right_divides(self, f: "SkewPoly") -> bool:
        """True iff self divides f from the right."""
        return not f.right_divmod(self)[1]

    # -- evaluation ----------------------------------------------------------

    def right_eval(self, beta: RingElement) -> RingElement:
        """Right evaluation: sum a_i N_i^sigma(beta), the remainder of right
        division by X - beta."""
        if beta.ring is not self.ring:
            raise MixedRings("evaluation point from a different ring")
        ring = self.ring
        acc = ring.zero
        norm = ring.one
        for i, a in enumerate(self.coeffs):
            if i:
                norm = ring.sigma(norm) * beta
            if a:
                acc = acc + a * norm
        return acc

    def is_right_root(self, beta: RingElement) -> bool:
        return not self.right_eval(beta)

    def is_central(self) -> bool:
        """True iff self lies in the center GR^sigma[X^t], t = order(sigma)."""
        t = self.ring.sigma_order
        for i, c in enumerate(self.coeffs):
            if c and (i % t != 0 or self.ring.sigma(c) != c):
                return False
        return True

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                x = "X" if i == 1 else f"X^{i}"
                parts.append(x if cs == "1" else f"{cs} {x}".replace(" X", "X"))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkewPoly({self})"


def sigma_norm(beta: RingElement, i: int) -> RingElement:
    """N_i^sigma(beta) = beta sigma(beta) ... sigma^(i-1)(beta); N_0 = 1."""
    ring = beta.ring
    acc = ring.one
    for _ in range(i):
        acc = ring.sigma(acc) * beta
    return acc


def sigma_norm_table(beta: RingElement, upto: int) -> list[RingElement]:
    """N_0 .. N_upto, via the recurrence N_{i+1} = sigma(N_i) beta."""
    ring = beta.ring
    out = [ring.one]
    for _ in range(upto):
        out.append(ring.sigma(out[-1]) * beta)
    return out


def build_w_poly(roots: Sequence[RingElement]) -> SkewPoly:
    """The monic W-polynomial with the given right roots.

    Iterative least-common-left-multiple: g_1 = X - a_1; at each step the
    next root a is folded in via the conjugate a^c = sigma(c) a c^{-1} with
    c = g(a).  A nonzero non-unit evaluation obstructs the step.
    """
    if not roots:
        raise DependentRoots("at least one root is required")
    ring = roots[0].ring
    for r in roots:
        if r.ring is not ring:
            raise MixedRings("roots from different rings")
    seen = set(roots[:1])
    g = SkewPoly(ring, (-roots[0], ring.one))
    for a in roots[1:]:
        if a in seen:
            raise DuplicateRoot(f"repeated root {a!r}")
        seen.add(a)
        c = g.right_eval(a)
        if not c:
            raise DuplicateRoot(f"{a!r} is already a right root; degree would drop")
        if not c.is_unit():
            raise DependentRoots(
                "intermediate evaluation is a zero divisor; lclm step undefined"
            )
        conj = ring.sigma(c) * a * ring.inverse(c)
        g = SkewPoly(ring, (-conj, ring.one)) * g
    return g


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n (gcd(a, n) = 1)."""
    x = a % n
    order = 1
    while x != 1:
        x = (x * a) % n
        order += 1
    return order


def splitting_degree(ctx: GaloisRing, n: int) -> int:
    """Residue degree of the ring in which every right root of X^n - 1 lives.

    For sigma = theta^e with e > 0 this is lcm(m, e*n): the Teichmuller
    elements fixed by the q0^n power map (q0 = p^e) all lie there.  For
    sigma = id the right roots are the classical n-th roots of unity, so the
    degree is lcm(m, ord_n(p)).
    """
    if ctx.e:
        return math.lcm(ctx.m, ctx.e * n)
    if n == 1:
        return ctx.m
    return math.lcm(ctx.m, multiplicative_order(ctx.p, n))


def right_roots_of_unity(
    ctx: GaloisRing, n: int
) -> tuple[GaloisRing, Embedding, list[RingElement]]:
    """All right roots of X^n - 1 in the splitting extension of ctx.

    Returns (extension ring, embedding of ctx, sorted list of roots).  Each
    root is of the form sigma(beta) / beta for a Teichmuller unit beta with
    beta^(q0^n) = beta, and is re-verified by right evaluation.
    """
    if n < 1 or math.gcd(n, ctx.p) != 1:
        raise CharacteristicDividesLength(f"gcd({n}, {ctx.p}) != 1")
    big_n = splitting_degree(ctx, n)
    ext, emb = ctx.extend(big_n // ctx.m)
    seen: set[RingElement] = set()
    roots: list[RingElement] = []
    if ext.e:
        q0 = ctx.p**ext.e
        # Teichmuller beta with beta^(q0^n) = beta: order divides q0^n - 1,
        # hence divides gcd(p^N - 1, q0^n - 1).
        group = ctx.p**ext.m - 1
        sub = math.gcd(group, q0**n - 1)
        xi = ext.teichmuller_generator
        step = group // sub
        beta = ext.one
        gen = xi**step
        for _ in range(sub):
            gamma = ext.sigma(beta) * ext.inverse(beta)
            if gamma not in seen:
                seen.add(gamma)
                roots.append(gamma)
            beta = beta * gen
    else:
        # classical n-th roots of unity in the Teichmuller group
        group = ctx.p**ext.m - 1
        xi = ext.teichmuller_generator
        gen = xi ** (group // math.gcd(group, n))
        gamma = ext.one
        while True:
            if gamma in seen:
                break
            seen.add(gamma)
            roots.append(gamma)
            gamma = gamma * gen
    x_n_1 = SkewPoly.x_pow_minus_one(ext, n)
    bad = [g for g in roots if not x_n_1.is_right_root(g)]
    if bad:
        raise AssertionError(f"constructed non-roots of X^{n}-1: {bad[:3]}")
    roots.sort(key=lambda g: g.coeffs)
    return ext, emb, roots
