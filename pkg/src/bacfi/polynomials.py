"""Exact integer polynomials: Sturm root isolation and root location.

Everything exact runs on integer or rational arithmetic; the only
floating point lives in :func:`numeric_roots`, kept as an independent
cross-check used by the tests.

Root location relies on the reciprocal trick: g = gcd(p, reverse(p))
collects the roots of p whose inverse is also a root.  After removing
roots at +-1, g is palindromic of even degree 2m and can be written as
x^m * q(x + 1/x); real roots of q in the open interval (-2, 2) match
conjugate pairs of p on the unit circle, real roots of q outside [-2, 2]
match real reciprocal pairs, and non-real roots of q match quadruples
off the reals and the circle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence

from .errors import (
    NonConvergence,
    NoRealRootGreaterThanOne,
    NotSquareFree,
    ZeroPolynomial,
)

Interval = tuple[Fraction, Fraction]

DEFAULT_ENCLOSURE_WIDTH = Fraction(1, 10 ** 6)
CERTIFICATE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients lowest degree first, no trailing
    zeros; the empty tuple is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def reverse(self) -> "IntPolynomial":
        """x^deg * p(1/x)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content and normalize the leading sign to +."""
        if self.is_zero:
            return self
        g = self.content()
        sign = 1 if self.leading > 0 else -1
        return IntPolynomial(tuple(sign * c // g for c in self.coeffs))

    def is_reciprocal(self) -> bool:
        """Whether p(x) = +-x^deg * p(1/x)."""
        if self.is_zero:
            return False
        rev = tuple(reversed(self.coeffs))
        return self.coeffs == rev or self.coeffs == tuple(-c for c in rev)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def poly_from_coeffs(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in coeffs))


# -- rational polynomial helpers -----------------------------------------

def _fstrip(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(rem) >= len(b):
        factor = rem[-1] * inv
        shift = len(rem) - len(b)
        quot[shift] = factor
        for i in range(len(b)):
            rem[shift + i] -= factor * b[i]
        rem.pop()
        _fstrip(rem)
        if not rem:
            break
    return _fstrip(quot), rem


def _to_fractions(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_fractions(c: Sequence[Fraction]) -> IntPolynomial:
    """Clear denominators and return the primitive integer polynomial."""
    if not c:
        return IntPolynomial(())
    den = 1
    for f in c:
        den = den * f.denominator // int_gcd(den, f.denominator)
    ints = [int(f * den) for f in c]
    return IntPolynomial(tuple(ints)).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    fa, fb = _to_fractions(a), _to_fractions(b)
    while fb:
        _, fr = _fdivmod(fa, fb)
        fa, fb = fb, fr
    return _from_fractions(fa)


def poly_div_exact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial | None:
    """a / b when the division is exact over Q with integer quotient,
    else None."""
    if b.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    quot, rem = _fdivmod(_to_fractions(a), _to_fractions(b))
    if rem:
        return None
    if any(f.denominator != 1 for f in quot):
        return None
    return IntPolynomial(tuple(int(f) for f in quot))


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'), primitive with positive leading sign."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no square-free part")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    quot, rem = _fdivmod(_to_fractions(p), _to_fractions(g))
    assert not rem, "gcd must divide p"
    return _from_fractions(quot)


# -- Sturm sequences -------------------------------------------------------

def sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    chain = [_to_fractions(p), _to_fractions(p.derivative())]
    while chain[-1]:
        _, rem = _fdivmod(chain[-2], chain[-1])
        chain.append([-c for c in rem])
    chain.pop()
    return chain


def _eval_fractions(c: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def _sign_variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for c in chain:
        v = _eval_fractions(c, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: IntPolynomial) -> Fraction:
    """A rational B with every complex root strictly inside |x| < B."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root bound")
    lead = abs(p.leading)
    top = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(top, lead) + 2


def count_real_roots(p: IntPolynomial, lo: Fraction, hi: Fraction,
                     chain: Sequence[Sequence[Fraction]] | None = None) -> int:
    """Number of distinct real roots in (lo, hi]; p must be square-free
    and nonzero at both endpoints would be ideal, zero at lo is allowed."""
    if chain is None:
        chain = sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def _nonroot_midpoint(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    m = (lo + hi) / 2
    while p(m) == 0:
        m = (lo + m) / 2
    return m


def isolate_real_roots(p: IntPolynomial) -> list[Interval]:
    """Disjoint open rational intervals, one per distinct real root.

    Non-square-free input is replaced by its square-free part (with a
    warning); endpoints are never roots, so each interval brackets a
    sign change and can be refined to any width by bisection.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    sf = square_free_part(p)
    if sf.degree != p.degree:
        warnings.warn("input polynomial is not square-free; isolating the roots "
                      "of its square-free part", stacklevel=2)
    chain = sturm_chain(sf)
    bound = root_bound(sf)
    total = count_real_roots(sf, -bound, bound, chain)
    out: list[Interval] = []

    def recurse(lo: Fraction, hi: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = _nonroot_midpoint(sf, lo, hi)
        left = count_real_roots(sf, lo, mid, chain)
        recurse(lo, mid, left)
        recurse(mid, hi, count - left)

    recurse(-bound, bound, total)
    out.sort()
    return out


def refine_interval(p: IntPolynomial, interval: Interval, width: Fraction) -> Interval:
    """Shrink an isolating interval below the given width by bisection."""
    lo, hi = interval
    flo = p(lo)
    if flo == 0 or p(hi) == 0:
        raise ValueError("isolating interval endpoints must not be roots")
    while hi - lo > width:
        mid = _nonroot_midpoint(p, lo, hi)
        if (flo > 0) != (p(mid) > 0):
            hi = mid
        else:
            lo, flo = mid, p(mid)
    return lo, hi


def largest_real_root_enclosure(p: IntPolynomial,
                                width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval | None:
    """Enclosure of the largest real root of p, or None."""
    intervals = isolate_real_roots(p)
    if not intervals:
        return None
    sf = square_free_part(p)
    return refine_interval(sf, intervals[-1], width)


# -- reciprocal reduction and root classification --------------------------

def reciprocal_reduction(g: IntPolynomial) -> IntPolynomial:
    """The polynomial q with x^m * q(x + 1/x) = g for palindromic g of
    degree 2m."""
    coeffs = g.coeffs
    if g.is_zero or g.degree % 2 != 0 or coeffs != tuple(reversed(coeffs)):
        raise ValueError("reciprocal reduction needs a palindromic polynomial of even degree")
    m = g.degree // 2
    # Peel the top coefficient with (x^2 + 1)^d * x^(m-d), descending d.
    residue = list(coeffs)
    q = [0] * (m + 1)
    for d in range(m, -1, -1):
        c = residue[m + d]
        q[d] = c
        if c:
            # subtract c * x^(m-d) * (x^2+1)^d
            binom = 1
            for k in range(d + 1):
                residue[m - d + 2 * k] -= c * binom
                binom = binom * (d - k) // (k + 1)
    assert all(x == 0 for x in residue), "palindromic peeling must terminate at zero"
    return IntPolynomial(tuple(q))


def _strip_root(p: IntPolynomial, root: int) -> tuple[IntPolynomial, bool]:
    """Remove a factor (x - root) if root is a zero; p is square-free so
    at most one factor comes off."""
    if p(root) != 0:
        return p, False
    quot = poly_div_exact(p, IntPolynomial((-root, 1)))
    assert quot is not None
    return quot, True


@dataclass(frozen=True)
class RootClassification:
    real_count: int
    unit_circle_count: int        # non-real roots of modulus one
    other_count: int              # roots off the reals and the unit circle
    largest_real_root: Interval | None
    reciprocal: bool
    irreducible_mod_p_certificate: int | None


def classify_roots(p: IntPolynomial,
                   enclosure_width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> RootClassification:
    """Exact root-location counts of a square-free integer polynomial.

    Roots at +-1 count as real only, so the three counts always sum to
    the degree; the unit-circle and off-locus counts are even.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot classify roots of the zero polynomial")
    sf = square_free_part(p)
    if sf.degree != p.degree:
        raise NotSquareFree(
            f"polynomial has repeated roots; classify its square-free part {sf} instead"
        )
    degree = p.degree
    real = count_real_roots(sf, -root_bound(sf), root_bound(sf)) if degree else 0

    g = poly_gcd(sf, sf.reverse())
    g, _ = _strip_root(g, 1)
    g, _ = _strip_root(g, -1)
    # with +-1 removed the remaining root set is closed under inversion
    # and avoids the fixed points, so g is genuinely palindromic
    assert g.coeffs == tuple(reversed(g.coeffs)), "gcd with reverse must be palindromic"
    if g.degree > 0:
        q = reciprocal_reduction(g)
        # roots +-2 of q would mean roots +-1 of g, which were stripped
        assert q(2) != 0 and q(-2) != 0
        circle_pairs = count_real_roots(q, Fraction(-2), Fraction(2))
    else:
        circle_pairs = 0
    unit_circle = 2 * circle_pairs
    other = degree - real - unit_circle
    assert other >= 0 and other % 2 == 0, "off-locus roots come in conjugate pairs"
    return RootClassification(
        real_count=real,
        unit_circle_count=unit_circle,
        other_count=other,
        largest_real_root=largest_real_root_enclosure(sf, enclosure_width),
        reciprocal=p.is_reciprocal(),
        irreducible_mod_p_certificate=irreducibility_certificate(p),
    )


def split_square_free_factors(p: IntPolynomial) -> list[IntPolynomial]:
    """Coprime factors of the square-free part found without full
    factorization: roots at +-1, the gcd with the reverse, and the
    complement."""
    sf = square_free_part(p)
    factors: list[IntPolynomial] = []
    rest = sf
    for root in (1, -1):
        rest, had = _strip_root(rest, root)
        if had:
            factors.append(IntPolynomial((-root, 1)))
    if rest.degree > 0:
        g = poly_gcd(rest, rest.reverse())
        if 0 < g.degree < rest.degree:
            h = poly_div_exact(rest, g)
            assert h is not None
            factors.extend([g.primitive(), h.primitive()])
        else:
            factors.append(rest.primitive())
    return factors


def factor_with_largest_real_root(p: IntPolynomial) -> tuple[IntPolynomial, Interval]:
    """The square-free coprime factor containing the largest real root
    of p, with an enclosure of that root."""
    sf = square_free_part(p)
    enclosure = largest_real_root_enclosure(sf)
    if enclosure is None:
        raise ValueError("polynomial has no real root")
    factors = split_square_free_factors(sf)
    lo, hi = enclosure
    while True:
        hits = [f for f in factors if f.degree > 0 and count_real_roots(f, lo, hi) > 0]
        if len(hits) == 1:
            return hits[0], (lo, hi)
        lo, hi = refine_interval(sf, (lo, hi), (hi - lo) / 4)


# -- Thurston/Penner exclusion ---------------------------------------------

@dataclass(frozen=True)
class ExclusionVerdict:
    """Which classical constructions are ruled out for every power of a
    map with this stretch-factor polynomial.

    A Galois conjugate off the reals and the unit circle rules out all
    powers of Thurston's construction; a conjugate on the unit circle
    rules out all powers of Penner's.  The flags carry the meaning
    stated only when the input is the minimal polynomial of the stretch
    factor; ``certified`` records whether irreducibility was proven by a
    modular reduction.
    """

    no_power_thurston: bool
    no_power_penner: bool
    certified: bool
    certificate_prime: int | None
    classification: RootClassification

    @property
    def certainty(self) -> str:
        return "certified" if self.certified else "conditional on irreducibility"


def exclusion_verdict(p: IntPolynomial) -> ExclusionVerdict:
    """Exclusion flags for the candidate minimal polynomial of a stretch
    factor; requires a real root strictly greater than one."""
    classification = classify_roots(p)
    sf = square_free_part(p)
    trimmed, _ = _strip_root(sf, 1)
    trimmed, _ = _strip_root(trimmed, -1)
    has_large_root = trimmed.degree > 0 and \
        count_real_roots(trimmed, Fraction(1), root_bound(trimmed)) > 0
    if not has_large_root:
        raise NoRealRootGreaterThanOne(
            "no real root exceeds 1, so this cannot be a stretch factor's polynomial"
        )
    prime = classification.irreducible_mod_p_certificate
    return ExclusionVerdict(
        no_power_thurston=classification.other_count > 0,
        no_power_penner=classification.unit_circle_count > 0,
        certified=prime is not None,
        certificate_prime=prime,
        classification=classification,
    )


# -- modular irreducibility certificate -------------------------------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_rem(out, f, p)


def _fp_rem(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    d = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) > d:
        c = a[-1] * inv % p
        if c:
            shift = len(a) - len(f)
            for i in range(len(f)):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _fp_trim(a)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            c = r[-1] * inv % p
            shift = len(r) - len(b)
            for i in range(len(b)):
                r[shift + i] = (r[shift + i] - c * b[i]) % p
            r.pop()
            _fp_trim(r)
        a, b = b, r
    return a


def _fp_pow_frobenius(base: list[int], p: int, k: int, f: list[int]) -> list[int]:
    """base^(p^k) mod f over F_p."""
    out = list(base)
    for _ in range(k):
        acc = [1]
        sq = out
        e = p
        while e:
            if e & 1:
                acc = _fp_mulmod(acc, sq, f, p)
            sq = _fp_mulmod(sq, sq, f, p)
            e >>= 1
        out = acc
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def irreducible_mod(poly: IntPolynomial, p: int) -> bool:
    """Rabin's irreducibility test for poly reduced modulo the prime p;
    False whenever the reduction drops degree."""
    f = [c % p for c in poly.coeffs]
    if not f or f[-1] == 0:
        return False
    d = len(f) - 1
    if d == 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _fp_sub(_fp_pow_frobenius(x, p, d, f), x, p):
        return False
    for ell in _prime_factors(d):
        delta = _fp_sub(_fp_pow_frobenius(x, p, d // ell, f), x, p)
        if len(_fp_gcd(f, delta, p)) != 1:
            return False
    return True


def irreducibility_certificate(poly: IntPolynomial,
                               primes: Sequence[int] = CERTIFICATE_PRIMES) -> int | None:
    """The first prime under which poly is irreducible, certifying
    irreducibility over Q; None if no certificate is found."""
    if poly.degree < 1:
        return None
    for p in primes:
        if irreducible_mod(poly, p):
            return p
    return None


# -- floating point oracle ---------------------------------------------------

def numeric_roots(p: IntPolynomial, tol: float = 1e-10, max_iter: int = 1000) -> list[complex]:
    """All complex roots by simultaneous (Durand-Kerner) iteration.

    Independent of the exact machinery above; used by the tests as an
    oracle for the Sturm-based classification.
    """
    if p.degree < 1:
        raise ValueError("numeric_roots needs degree >= 1")
    lead = complex(p.leading)
    monic = [complex(c) / lead for c in p.coeffs]
    degree = p.degree

    def evaluate(z: complex) -> complex:
        acc = complex(0)
        for c in reversed(monic):
            acc = acc * z + c
        return acc

    z = [complex(0.4, 0.9) ** k for k in range(1, degree + 1)]
    for _ in range(max_iter):
        worst = 0.0
        for k in range(degree):
            denom = complex(1)
            for j in range(degree):
                if j != k:
                    denom *= z[k] - z[j]
            if denom == 0:
                z[k] += complex(1e-8, 1e-8)
                worst = float("inf")
                continue
            delta = evaluate(z[k]) / denom
            z[k] -= delta
            worst = max(worst, abs(delta))
        if worst < tol:
            return sorted(z, key=lambda w: (round(w.real, 9), round(w.imag, 9)))
    raise NonConvergence(f"root iteration did not reach tolerance {tol} "
                         f"after {max_iter} sweeps")


def classify_numeric(roots: Sequence[complex], threshold: float = 1e-6) -> tuple[int, int, int]:
    """(real, unit-circle, other) counts from approximate roots, with
    the thresholds used by the agreement tests."""
    real = sum(1 for z in roots if abs(z.imag) < threshold)
    circle = sum(1 for z in roots
                 if abs(z.imag) >= threshold and abs(abs(z) - 1.0) < threshold)
    return real, circle, len(roots) - real - circle
