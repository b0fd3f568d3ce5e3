"""Constructions of the two-variable Gould-Hopper family H^(p,q)_{n,m}.

The family is defined by the terminating double-factorial sum

    H^(p,q)_{n,m}(z, w | g)
        = n! m! * sum_k  g^k/k! * z^(n-pk)/(n-pk)! * w^(m-qk)/(m-qk)!

where k runs from 0 to floor(n/p) ^ floor(m/q); a zero order (p = 0 or
q = 0) simply removes its bound, and p = q = 0 is rejected.  `explicit`
evaluates this sum term by term and is the ground truth against which
everything else in the package is certified.

The other constructors are deliberately independent routes to the same
polynomial:

* `operational`   - expand exp(g * Dz^p Dw^q) applied to z^n w^m;
* `via_creation`  - iterate the raising operators z + p g Dz^(p-1) Dw^q
                    and w + q g Dz^p Dw^(q-1);
* `via_recurrence`- fill an (n+1) x (m+1) table from the two-term
                    raising recurrences, starting at H_{0,0} = 1;
* `via_genfun`    - read n! m! times the u^n v^m coefficient off the
                    generating series exp(zu + wv + g u^p v^q);
* `hypergeom_form`- the terminating hypergeometric rewriting (p, q >= 1).

Agreeing exactly across all routes is part of the package's test gate,
so none of them shares code with `explicit` beyond the base ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import (
    Poly,
    SeriesUV,
    TruncationError,
    rising_factorial,
    series_exp,
)


class InvalidParamsError(ValueError):
    """Family parameters outside the admissible range (e.g. p = q = 0)."""


class UnsupportedRepresentationError(ValueError):
    """A representation that requires p >= 1 and q >= 1 was asked for p*q = 0."""


@dataclass(frozen=True)
class FamilyParams:
    """Index bundle (p, q, n, m) for one member of the family.

    p, q are the derivative orders carried by the deformation term and
    n, m the polynomial degrees in z and w.  All four are nonnegative
    integers and p + q >= 1.
    """

    p: int
    q: int
    n: int
    m: int

    def __post_init__(self) -> None:
        for field in ("p", "q", "n", "m"):
            value = getattr(self, field)
            if not isinstance(value, int) or value < 0:
                raise InvalidParamsError(f"{field} must be a nonnegative integer, got {value!r}")
        if self.p == 0 and self.q == 0:
            raise InvalidParamsError("p and q cannot both be zero")

    @property
    def k_max(self) -> int:
        """Upper summation bound floor(n/p) ^ floor(m/q); a zero order is unbounded."""
        bounds = []
        if self.p:
            bounds.append(self.n // self.p)
        if self.q:
            bounds.append(self.m // self.q)
        return min(bounds)


@dataclass(frozen=True)
class GHPoly:
    """A family member together with the indices that produced it."""

    params: FamilyParams
    poly: Poly


_Z = Poly.variable("z")
_W = Poly.variable("w")
_G = Poly.variable("g")


@lru_cache(maxsize=None)
def explicit_poly(p: int, q: int, n: int, m: int) -> Poly:
    """The defining sum as a bare Poly in z, w, g (cached)."""
    params = FamilyParams(p, q, n, m)
    fact = math.factorial
    total = Poly.zero()
    for k in range(params.k_max + 1):
        coeff = Fraction(fact(n) * fact(m), fact(k) * fact(n - p * k) * fact(m - q * k))
        total = total + Poly.monomial({"z": n - p * k, "w": m - q * k, "g": k}, coeff)
    return total


def explicit(params: FamilyParams) -> GHPoly:
    """Evaluate the defining double-factorial sum directly."""
    return GHPoly(params, explicit_poly(params.p, params.q, params.n, params.m))


def gould_hopper_1d(n: int, p: int) -> Poly:
    """One-variable relative H^(p)_n(z | g) = n! sum_k g^k/k! z^(n-pk)/(n-pk)!."""
    if p < 1:
        raise InvalidParamsError("the one-variable family needs p >= 1")
    if n < 0:
        raise InvalidParamsError("n must be >= 0")
    fact = math.factorial
    total = Poly.zero()
    for k in range(n // p + 1):
        coeff = Fraction(fact(n), fact(k) * fact(n - p * k))
        total = total + Poly.monomial({"z": n - p * k, "g": k}, coeff)
    return total


def operational(params: FamilyParams) -> GHPoly:
    """Apply the exponential operator exp(g Dz^p Dw^q) to z^n w^m.

    On a polynomial the exponential truncates by itself: the k-th term
    differentiates pk times in z and qk times in w, which eventually
    kills the monomial.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    base = Poly.monomial({"z": n, "w": m})
    total = Poly.zero()
    k = 0
    while True:
        term = base.diff("z", p * k).diff("w", q * k)
        if term.is_zero():
            break
        total = total + term * Poly.monomial({"g": k}, Fraction(1, math.factorial(k)))
        if p == 0 and q == 0:  # unreachable, params forbid it
            break
        k += 1
    return GHPoly(params, total)


def _apply_z_raise(poly: Poly, p: int, q: int) -> Poly:
    # z + p g Dz^(p-1) Dw^q; the derivative part disappears when p = 0.
    out = _Z * poly
    if p >= 1:
        out = out + p * _G * poly.diff("z", p - 1).diff("w", q)
    return out


def _apply_w_raise(poly: Poly, p: int, q: int) -> Poly:
    # w + q g Dz^p Dw^(q-1); the derivative part disappears when q = 0.
    out = _W * poly
    if q >= 1:
        out = out + q * _G * poly.diff("z", p).diff("w", q - 1)
    return out


def via_creation(params: FamilyParams) -> GHPoly:
    """Iterate the two raising operators on the constant 1.

    The w-operator is applied m times first, then the z-operator n
    times: (z + p g Dz^(p-1) Dw^q)^n (w + q g Dz^p Dw^(q-1))^m {1}.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    poly = Poly.one()
    for _ in range(m):
        poly = _apply_w_raise(poly, p, q)
    for _ in range(n):
        poly = _apply_z_raise(poly, p, q)
    return GHPoly(params, poly)


def _comb0(n: int, k: int) -> int:
    # Binomial coefficient that is zero outside 0 <= k <= n.
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def via_recurrence(params: FamilyParams) -> GHPoly:
    """Fill the full index table from the two raising recurrences.

    H_{i+1,j} = z H_{i,j} + g p! q! C(i,p-1) C(j,q)   H_{i+1-p,j-q}
    H_{i,j+1} = w H_{i,j} + g p! q! C(i,p)   C(j,q-1) H_{i-p,j+1-q}

    Out-of-range binomials and negative indices contribute nothing.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    pq_fact = math.factorial(p) * math.factorial(q)
    table: dict[tuple[int, int], Poly] = {(0, 0): Poly.one()}

    def lookup(i: int, j: int) -> Poly:
        if i < 0 or j < 0:
            return Poly.zero()
        return table[(i, j)]

    for j in range(m):
        prev = table[(0, j)]
        step = _W * prev
        c = pq_fact * _comb0(0, p) * _comb0(j, q - 1)
        if c:
            step = step + c * _G * lookup(0 - p, j + 1 - q)
        table[(0, j + 1)] = step
    for i in range(n):
        for j in range(m + 1):
            prev = table[(i, j)]
            step = _Z * prev
            c = pq_fact * _comb0(i, p - 1) * _comb0(j, q)
            if c:
                step = step + c * _G * lookup(i + 1 - p, j - q)
            table[(i + 1, j)] = step
    return GHPoly(params, table[(n, m)])


@lru_cache(maxsize=None)
def _generating_series(p: int, q: int, order: int) -> SeriesUV:
    arg = _Z * Poly.variable("u") + _W * Poly.variable("v") + _G * Poly.monomial({"u": p, "v": q})
    return series_exp(arg, order)


def via_genfun(params: FamilyParams, order: int) -> GHPoly:
    """Extract n! m! [u^n v^m] exp(zu + wv + g u^p v^q).

    `order` is the series truncation order and must be at least n + m.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    if order < n + m:
        raise TruncationError(f"order {order} cannot reach the coefficient ({n},{m})")
    series = _generating_series(p, q, order)
    scale = math.factorial(n) * math.factorial(m)
    return GHPoly(params, series.coeff(n, m) * Fraction(scale))


def origin_value(params: FamilyParams) -> Poly:
    """The value at z = w = 0, a polynomial in g alone.

    Nonzero exactly when some k wipes out both monomial factors, i.e.
    p | n, q | m with equal quotients (interpreting a zero order as
    constraining its degree to 0); the value is then n! m! g^k / k!.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    return explicit_poly(p, q, n, m).subst({"z": 0, "w": 0})


def hypergeom_form(params: FamilyParams) -> GHPoly:
    """Terminating hypergeometric rewriting; needs p >= 1 and q >= 1.

    z^n w^m * pFq-style sum with parameter blocks (j-1-n)/p for
    j = 1..p and (j-1-m)/q for j = 1..q, and argument
    (-p)^p (-q)^q g / (z^p w^q).  The sum terminates, every term is a
    genuine monomial (exponents n-pk, m-qk), so the result is again a
    polynomial.
    """
    p, q, n, m = params.p, params.q, params.n, params.m
    if p < 1 or q < 1:
        raise UnsupportedRepresentationError("hypergeometric form needs p >= 1 and q >= 1")
    arg_scale = Fraction((-p) ** p * (-q) ** q)
    total = Poly.zero()
    for k in range(params.k_max + 1):
        coeff = Fraction(1, math.factorial(k)) * arg_scale ** k
        for j in range(1, p + 1):
            coeff *= rising_factorial(Fraction(j - 1 - n, p), k)
        for j in range(1, q + 1):
            coeff *= rising_factorial(Fraction(j - 1 - m, q), k)
        total = total + Poly.monomial({"z": n - p * k, "w": m - q * k, "g": k}, coeff)
    return GHPoly(params, total)


# -- independent classical reference families -------------------------
#
# Used by the test gate to anchor the family to textbook sequences.
# These are computed by their own classical definitions and must not
# call into any of the constructors above.

def hermite_classical(n: int) -> Poly:
    """Physicists' Hermite polynomial H_n via the three-term recurrence.

    H_0 = 1, H_1 = 2z, H_{k+1} = 2z H_k - 2k H_{k-1}; returned in z.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prev = Poly.one()
    if n == 0:
        return prev
    curr = 2 * _Z
    for k in range(1, n):
        prev, curr = curr, 2 * _Z * curr - 2 * k * prev
    return curr


def ito_hermite(n: int, m: int) -> Poly:
    """Complex (Ito) Hermite polynomial by its direct double-factorial sum.

    H_{n,m}(z, w) = n! m! sum_j (-1)^j/j! * z^(n-j)/(n-j)! * w^(m-j)/(m-j)!
    with w standing in for the conjugate variable.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be >= 0")
    fact = math.factorial
    total = Poly.zero()
    for j in range(min(n, m) + 1):
        coeff = Fraction((-1) ** j * fact(n) * fact(m), fact(j) * fact(n - j) * fact(m - j))
        total = total + Poly.monomial({"z": n - j, "w": m - j}, coeff)
    return total


# Strategy registry used by the command-line front end.
STRATEGIES = {
    "explicit": lambda params, order: explicit(params),
    "operational": lambda params, order: operational(params),
    "creation": lambda params, order: via_creation(params),
    "recurrence": lambda params, order: via_recurrence(params),
    "genfun": lambda params, order: via_genfun(params, order if order is not None else params.n + params.m),
    "hypergeom": lambda params, order: hypergeom_form(params),
}
