"""Exact arithmetic in Galois rings GR(p^s, p^(s*m)).

A Galois ring is the quotient Z_{p^s}[Y] / <f(Y)> for a monic polynomial f of
degree m whose reduction mod p is primitive irreducible over F_p.  Elements
are dense coefficient vectors in the basis 1, zeta, ..., zeta^(m-1) with
integer coefficients mod p^s, where zeta is the class of Y.

The ring is local with maximal ideal <p>; an element is a unit exactly when
its residue projection to F_{p^m} is nonzero, and nilpotent otherwise.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import (
    BadAutomorphismExponent,
    DegreeMismatch,
    MixedRings,
    ModulusNotBasicPrimitive,
    NotAUnit,
    NotPrime,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class ResidueField:
    """The residue field F_{p^m} = F_p[Y] / <fbar(Y)>.

    Elements are integer codes in [0, p^m): the base-p digit expansion gives
    the coefficient vector.  Multiplication uses discrete log tables built
    from the primitive root ybar (the class of Y), which also certifies that
    fbar is primitive irreducible: the powers of ybar must enumerate all
    q - 1 nonzero codes.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(c % p for c in modulus)
        if len(self.modulus) != m + 1 or self.modulus[m] != 1:
            raise ModulusNotBasicPrimitive("modulus must be monic of degree m")
        if self.modulus[0] == 0:
            raise ModulusNotBasicPrimitive("constant term zero: Y is not a unit")
        self._build_log_tables()

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed([c % self.p for c in coeffs]):
            code = code * self.p + c
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def _mul_by_y(self, code: int) -> int:
        """Multiply a code by the class of Y: digit shift plus one reduction."""
        p, m = self.p, self.m
        if m == 1:
            return (code * ((-self.modulus[0]) % p)) % p
        top = code // (self.q // p)
        code = (code % (self.q // p)) * p
        if top:
            digits = list(self.decode(code))
            for j in range(m):
                digits[j] = (digits[j] - top * self.modulus[j]) % p
            code = self.encode(digits)
        return code

    def _build_log_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        ybar = (-self.modulus[0]) % p if m == 1 else p
        exp = [0] * max(q - 1, 1)
        log = [-1] * q
        acc = 1
        for i in range(q - 1):
            if log[acc] != -1:
                raise ModulusNotBasicPrimitive(
                    "class of Y is not primitive in the residue ring"
                )
            exp[i] = acc
            log[acc] = i
            acc = self._mul_by_y(acc)
        if acc != 1 or any(log[c] == -1 for c in range(1, q)):
            raise ModulusNotBasicPrimitive(
                "residue modulus is not primitive irreducible"
            )
        self.ybar = ybar
        self._exp = exp
        self._log = log

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        da, db = self.decode(a), self.decode(b)
        return self.encode([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotAUnit("zero has no inverse in the residue field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]


class ResidueElement:
    """An element of the residue field F_{p^m}, as a coefficient vector mod p."""

    __slots__ = ("field", "code")

    def __init__(self, field: ResidueField, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return self.field is other.field and self.code == other.code

    def __hash__(self) -> int:
        return hash((id(self.field), self.code))

    def __add__(self, other: "ResidueElement") -> "ResidueElement":
        return ResidueElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other: "ResidueElement") -> "ResidueElement":
        return ResidueElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other: "ResidueElement") -> "ResidueElement":
        return ResidueElement(self.field, self.field.mul(self.code, other.code))

    def __repr__(self) -> str:
        return f"ResidueElement{self.coeffs}"


class RingElement:
    """One element of a GaloisRing as a coefficient vector mod p^s."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "GaloisRing", coeffs: Sequence[int]):
        q = ring.char
        self.ring = ring
        self.coeffs = tuple(c % q for c in coeffs)
        if len(self.coeffs) != ring.m:
            raise DegreeMismatch(
                f"expected {ring.m} coefficients, got {len(self.coeffs)}"
            )

    def _check(self, other: "RingElement") -> None:
        if self.ring is not other.ring:
            raise MixedRings("operands belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(
            self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(
            self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_unit(self) -> bool:
        return any(c % self.ring.p for c in self.coeffs)

    def is_nilpotent(self) -> bool:
        """True also for zero (zero is nilpotent)."""
        return not self.is_unit()

    def inverse(self) -> "RingElement":
        return self.ring.inverse(self)

    def residue(self) -> ResidueElement:
        return self.ring.project(self)

    def sigma(self, i: int = 1) -> "RingElement":
        return self.ring.sigma(self, i)

    def __repr__(self) -> str:
        return f"RingElement{self.coeffs}"

    def __str__(self) -> str:
        if not any(self.coeffs[1:]):
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


class GaloisRing:
    """The ambient ring GR(p^s, p^(s*m)) with automorphism sigma = theta^e.

    Immutable after construction; all operations are pure, so contexts and
    elements may be shared freely across threads.
    """

    def __init__(
        self,
        p: int,
        s: int,
        m: int,
        modulus: Sequence[int] | None = None,
        sigma_exponent: int = 0,
    ):
        if not is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        if s < 1 or m < 1:
            raise ModulusNotBasicPrimitive("s and m must be positive")
        if not 0 <= sigma_exponent < m:
            raise BadAutomorphismExponent(
                f"sigma exponent {sigma_exponent} not in [0, {m})"
            )
        self.p = p
        self.s = s
        self.m = m
        self.e = sigma_exponent
        self.char = p**s
        self.size = p ** (s * m)
        if modulus is None:
            modulus = default_modulus(p, s, m)
        modulus = tuple(c % self.char for c in modulus)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise ModulusNotBasicPrimitive("modulus must be monic of degree m")
        self.modulus = modulus
        # Raises ModulusNotBasicPrimitive if the reduction mod p is not
        # primitive irreducible.
        self.residue_field = ResidueField(p, m, modulus)
        self._high_powers = self._reduction_table()
        self.zero = RingElement(self, (0,) * m)
        self.one = RingElement(self, (1,) + (0,) * (m - 1))
        if m == 1:
            self.zeta = RingElement(self, ((-modulus[0]) % self.char,))
        else:
            self.zeta = RingElement(self, (0, 1) + (0,) * (m - 2))
        self._theta_matrix = self._build_theta_matrix()
        self._theta_powers: dict[int, tuple[tuple[int, ...], ...]] = {
            0: _identity_matrix(m),
            1: self._theta_matrix,
        }
        self.sigma_order = m // math.gcd(m, self.e) if self.e else 1
        self._teich = self._teichmuller_lift(self.zeta)
        self._teich_set: list[RingElement] | None = None

    # -- construction helpers ------------------------------------------------

    def _reduction_table(self) -> list[tuple[int, ...]]:
        """Coefficient vectors of zeta^m .. zeta^(2m-2)."""
        q, m = self.char, self.m
        table = []
        cur = [(-c) % q for c in self.modulus[:m]]  # zeta^m
        table.append(tuple(cur))
        for _ in range(m - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(m):
                    cur[j] = (cur[j] - top * self.modulus[j]) % q
            table.append(tuple(cur))
        return table

    def _mul_coeffs(
        self, a: Sequence[int], b: Sequence[int]
    ) -> list[int]:
        q, m = self.char, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % q for c in prod[:m]]
        for i in range(m, 2 * m - 1):
            c = prod[i] % q
            if c:
                hp = self._high_powers[i - m]
                for j in range(m):
                    out[j] = (out[j] + c * hp[j]) % q
        return out

    def _poly_eval(self, poly: Sequence[int], x: RingElement) -> RingElement:
        acc = self.zero
        for c in reversed(poly):
            acc = acc * x + self.from_int(c)
        return acc

    def _hensel_root(self, start: RingElement, poly: Sequence[int]) -> RingElement:
        """Newton-lift a simple residue root of poly (a Z_{p^s} polynomial)."""
        deriv = [(i * c) % self.char for i, c in enumerate(poly)][1:]
        r = start
        for _ in range(self.s + 2):
            fr = self._poly_eval(poly, r)
            if not fr:
                return r
            r = r - fr * self.inverse(self._poly_eval(deriv, r))
        fr = self._poly_eval(poly, r)
        if fr:
            raise ModulusNotBasicPrimitive("Hensel lifting failed to converge")
        return r

    def _build_theta_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of the Frobenius theta in the basis 1, zeta, ..., zeta^(m-1).

        theta is the unique automorphism inducing x -> x^p on the residue
        field; it sends zeta to the root of the modulus congruent to zeta^p
        mod p, found by Hensel lifting.
        """
        m = self.m
        if m == 1:
            return _identity_matrix(1)
        root = self._hensel_root(self.zeta**self.p, self.modulus)
        cols = []
        acc = self.one
        for _ in range(m):
            cols.append(acc.coeffs)
            acc = acc * root
        # store row-major: entry [i][j] = coefficient i of theta(zeta^j)
        return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))

    def _teichmuller_lift(self, x: RingElement) -> RingElement:
        """The Teichmuller representative congruent to x mod p (x a unit)."""
        t = x
        for _ in range(self.s):
            t = t ** (self.p**self.m)
        return t

    # -- public operations ---------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> RingElement:
        return RingElement(self, coeffs)

    def from_int(self, c: int) -> RingElement:
        return RingElement(self, (c,) + (0,) * (self.m - 1))

    @property
    def teichmuller_generator(self) -> RingElement:
        """A Teichmuller element of multiplicative order p^m - 1."""
        return self._teich

    def teichmuller_set(self) -> list[RingElement]:
        """The set {0, 1, xi, ..., xi^(p^m - 2)} of size p^m."""
        if self._teich_set is None:
            out = [self.zero, self.one]
            acc = self._teich
            for _ in range(self.p**self.m - 2):
                out.append(acc)
                acc = acc * self._teich
            self._teich_set = out
        return list(self._teich_set)

    def inverse(self, x: RingElement) -> RingElement:
        if not x.is_unit():
            raise NotAUnit(f"{x!r} is nilpotent or zero")
        rf = self.residue_field
        y = self.element(rf.decode(rf.inv(rf.encode(x.coeffs))))
        # Hensel: y <- y(2 - xy) doubles p-adic precision each step.
        two = self.from_int(2)
        for _ in range(max(1, (self.s - 1).bit_length() + 1)):
            y = y * (two - x * y)
        return y

    def _theta_power_matrix(self, j: int) -> tuple[tuple[int, ...], ...]:
        j %= self.m
        if j not in self._theta_powers:
            self._theta_powers[j] = _mat_mul_mod(
                self._theta_power_matrix(j - 1), self._theta_matrix, self.char
            )
        return self._theta_powers[j]

    def theta(self, x: RingElement, i: int = 1) -> RingElement:
        """Apply the Frobenius theta^i."""
        mat = self._theta_power_matrix(i % self.m)
        q = self.char
        return RingElement(
            self,
            [sum(r * c for r, c in zip(row, x.coeffs)) % q for row in mat],
        )

    def sigma(self, x: RingElement, i: int = 1) -> RingElement:
        """Apply sigma^i where sigma = theta^e."""
        if i < 0:
            i %= self.sigma_order
        return self.theta(x, (self.e * i) % self.m)

    def project(self, x: RingElement) -> ResidueElement:
        rf = self.residue_field
        return ResidueElement(rf, rf.encode(x.coeffs))

    def elements(self) -> Iterator[RingElement]:
        """All p^(s*m) elements, in mixed-radix order."""
        q, m = self.char, self.m
        coeffs = [0] * m
        for _ in range(self.size):
            yield RingElement(self, coeffs)
            for i in range(m):
                coeffs[i] += 1
                if coeffs[i] < q:
                    break
                coeffs[i] = 0

    def element_index(self, x: RingElement) -> int:
        idx = 0
        for c in reversed(x.coeffs):
            idx = idx * self.char + c
        return idx

    def element_from_index(self, idx: int) -> RingElement:
        coeffs = []
        for _ in range(self.m):
            coeffs.append(idx % self.char)
            idx //= self.char
        return RingElement(self, coeffs)

    def random_element(self, rng) -> RingElement:
        return RingElement(
            self, [rng.randrange(self.char) for _ in range(self.m)]
        )

    def random_unit(self, rng) -> RingElement:
        while True:
            x = self.random_element(rng)
            if x.is_unit():
                return x

    def random_nilpotent(self, rng) -> RingElement:
        return RingElement(
            self,
            [self.p * rng.randrange(self.char // self.p) for _ in range(self.m)],
        )

    def config(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "m": self.m,
            "modulus": list(self.modulus),
            "sigma_exponent": self.e,
        }

    def __repr__(self) -> str:
        return (
            f"GR({self.p}^{self.s}, {self.p}^{self.s * self.m}; "
            f"e={self.e})"
        )

    # -- extensions ----------------------------------------------------------

    def extend(self, l: int) -> tuple["GaloisRing", "Embedding"]:
        """The degree-l extension ring together with the base embedding."""
        if l < 1:
            raise DegreeMismatch("extension degree must be >= 1")
        if l == 1:
            return self, Embedding(self, self, self.zeta)
        ext = make_ring(self.p, self.s, self.m * l, sigma_exponent=self.e % (self.m * l))
        root = _find_subring_root(self, ext)
        return ext, Embedding(self, ext, root)

    def in_base_subring(self, x: RingElement, m_sub: int) -> bool:
        """True iff x is fixed by theta^m_sub (x lies in GR(p^s, p^(s*m_sub)))."""
        if x.ring is not self:
            raise MixedRings("element not in this ring")
        if self.m % m_sub != 0:
            raise DegreeMismatch(f"{m_sub} does not divide residue degree {self.m}")
        return self.theta(x, m_sub) == x


class Embedding:
    """A ring monomorphism base -> ext sending the base zeta to `root`."""

    def __init__(self, base: GaloisRing, ext: GaloisRing, root: RingElement):
        self.base = base
        self.ext = ext
        self.root = root
        self._powers = [ext.one]
        for _ in range(base.m - 1):
            self._powers.append(self._powers[-1] * root)

    def __call__(self, x: RingElement) -> RingElement:
        if x.ring is not self.base:
            raise MixedRings("element not in the base ring")
        if self.ext is self.base:
            return x
        acc = self.ext.zero
        for c, zp in zip(x.coeffs, self._powers):
            acc = acc + self.ext.from_int(c) * zp
        return acc

    def retract(self, y: RingElement) -> RingElement:
        """Solve y = sum c_i root^i for base coordinates c_i.

        Gaussian elimination over Z_{p^s} with unit-pivot selection; the
        system is consistent exactly when y lies in the embedded subring.
        """
        if y.ring is not self.ext:
            raise MixedRings("element not in the extension ring")
        if self.ext is self.base:
            return y
        q = self.ext.char
        n, k = self.ext.m, self.base.m
        # rows: n equations, columns: k unknowns + rhs
        rows = [
            [self._powers[j].coeffs[i] for j in range(k)] + [y.coeffs[i]]
            for i in range(n)
        ]
        piv_cols: list[int] = []
        r = 0
        for col in range(k):
            piv = next(
                (i for i in range(r, n) if rows[i][col] % self.ext.p), None
            )
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][col], -1, q)
            rows[r] = [(v * inv) % q for v in rows[r]]
            for i in range(n):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
            piv_cols.append(col)
            r += 1
        for i in range(r, n):
            if rows[i][k]:
                raise DegreeMismatch("element is not in the embedded subring")
        sol = [0] * k
        for i, col in enumerate(piv_cols):
            sol[col] = rows[i][k]
        return self.base.element(sol)


def _identity_matrix(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def _mat_mul_mod(a, b, q):
    n = len(a)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % q for col in bt) for row in a
    )


def _find_subring_root(base: GaloisRing, ext: GaloisRing) -> RingElement:
    """A root of the base modulus inside ext, congruent mod p to a subfield
    root of its residue; Hensel-lifted to full precision."""
    rf = ext.residue_field
    fbar = [c % base.p for c in base.modulus]
    step = (rf.q - 1) // (base.p**base.m - 1)
    cand_code = None
    for j in range(base.p**base.m - 1):
        code = rf.pow(rf.encode(ext._teich.coeffs), j * step)
        acc = 0
        for c in reversed(fbar):
            acc = rf.add(rf.mul(acc, code), c % base.p)
        if acc == 0:
            cand_code = code
            break
    if cand_code is None:
        raise ModulusNotBasicPrimitive("base modulus has no root in the extension")
    start = ext.element(rf.decode(cand_code))
    return ext._hensel_root(start, base.modulus)


@lru_cache(maxsize=None)
def default_modulus(p: int, s: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic degree-m polynomial over Z_{p^s}
    whose reduction mod p is primitive irreducible over F_p."""
    if not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    # A candidate with any coefficient >= p reduces to one already tried, so
    # the search only needs coefficients in [0, p).
    coeffs = [0] * m
    for _ in range(p**m):
        cand = tuple(coeffs) + (1,)
        try:
            ResidueField(p, m, cand)
            return cand
        except ModulusNotBasicPrimitive:
            pass
        for i in range(m):
            coeffs[i] += 1
            if coeffs[i] < p:
                break
            coeffs[i] = 0
    raise ModulusNotBasicPrimitive(
        f"no primitive polynomial of degree {m} over F_{p}"
    )


_RING_CACHE: dict[tuple, GaloisRing] = {}


def make_ring(
    p: int,
    s: int,
    m: int,
    modulus: Sequence[int] | None = None,
    sigma_exponent: int = 0,
) -> GaloisRing:
    """Construct (or fetch from cache) a validated GR(p^s, p^(s*m)) context."""
    key = (p, s, m, tuple(modulus) if modulus is not None else None, sigma_exponent)
    ring = _RING_CACHE.get(key)
    if ring is None:
        ring = GaloisRing(p, s, m, modulus, sigma_exponent)
        # A ring requested with the default modulus must be the same object as
        # one requested with that modulus spelled out, whichever came first.
        concrete = (p, s, m, tuple(ring.modulus), sigma_exponent)
        ring = _RING_CACHE.setdefault(concrete, ring)
        _RING_CACHE[key] = ring
    return ring
