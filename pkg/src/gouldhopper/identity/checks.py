"""Checkers turning each cataloged identity into an exact difference.

Every function here computes left-hand side minus right-hand side of one
identity: as a Poly for algebraic and differential statements, as a
truncated series folded back into a Poly carrying u, v for
generating-function statements, or as a constant Poly for scalar
hypergeometric statements.  A zero difference certifies the identity on
that parameter cell.

Conventions shared by all the displays:

* rising factorial (x)_k = x (x+1) ... (x+k-1);
* binomial coefficients vanish outside 0 <= k <= n;
* the reciprocal factorial of a negative integer is zero, and a family
  member with a negative index is the zero polynomial;
* floor(j/0) = +infinity, so a zero order removes its summation bound.

Each checker takes (params, variant) where `variant` is "printed" or,
for tags carrying a correction in MISPRINT_LEDGER, "corrected".
Checkers of uncorrected tags ignore the variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from ..exactalg import (
    Poly,
    SeriesUV,
    as_scalar,
    rising_factorial,
    series_binomial_neg,
    series_exp,
)
from ..ghcore import FamilyParams, explicit_poly, gould_hopper_1d, hypergeom_form
from .tags import IdentityTag

_Z = Poly.variable("z")
_W = Poly.variable("w")
_G = Poly.variable("g")
_T = Poly.variable("t")
_ZP = Poly.variable("zp")
_WP = Poly.variable("wp")
_GP = Poly.variable("gp")
_A = Poly.variable("a")
_B = Poly.variable("b")
_C = Poly.variable("c")
_U = Poly.variable("u")
_V = Poly.variable("v")

_fact = math.factorial


@dataclass
class CheckResult:
    """Outcome of one checker: the exact difference plus context."""

    difference: Poly
    series_order: int | None = None
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.difference.is_zero()


def _comb0(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _inv_fact(x: int) -> Fraction:
    # 1/x! with the Gamma-function convention 1/(negative)! = 0.
    return Fraction(1, _fact(x)) if x >= 0 else Fraction(0)


def _gh(p: int, q: int, n: int, m: int) -> Poly:
    return explicit_poly(p, q, n, m)


def _gh0(p: int, q: int, n: int, m: int) -> Poly:
    # Family member, with negative indices reading as zero.
    if n < 0 or m < 0:
        return Poly.zero()
    return explicit_poly(p, q, n, m)


@lru_cache(maxsize=None)
def _gh_all_primed(p: int, q: int, n: int, m: int) -> Poly:
    return _gh(p, q, n, m).subst({"z": _ZP, "w": _WP, "g": _GP})


@lru_cache(maxsize=None)
def _gh_zw_primed(p: int, q: int, n: int, m: int) -> Poly:
    return _gh(p, q, n, m).subst({"z": _ZP, "w": _WP})


@lru_cache(maxsize=None)
def _gh_z_primed(p: int, q: int, n: int, m: int) -> Poly:
    return _gh(p, q, n, m).subst({"z": _ZP})


@lru_cache(maxsize=None)
def _gh_w_primed(p: int, q: int, n: int, m: int) -> Poly:
    return _gh(p, q, n, m).subst({"w": _WP})


@lru_cache(maxsize=None)
def _gh_half(p: int, q: int, n: int, m: int, gsign: int) -> Poly:
    half = Fraction(1, 2)
    return _gh(p, q, n, m).subst({"z": half * _Z, "w": half * _W, "g": gsign * _G})


@lru_cache(maxsize=None)
def _gh_scaled_g(p: int, q: int, n: int, m: int, num: int, den: int) -> Poly:
    return _gh(p, q, n, m).subst({"g": Fraction(num, den) * _G})


def pochhammer_tail(n: int, k: int, var: str = "z") -> Poly:
    """P_k^n = sum_{j=0}^{k-1} (-1)^(k-j) (-n)_(k-j) C(k,j) var^j.

    The finite correction polynomial appearing in the closed form of
    sum_n (n)_k x^n / n!; P_0^n is empty, hence zero.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    total = Poly.zero()
    for j in range(k):
        coeff = Fraction((-1) ** (k - j)) * rising_factorial(-n, k - j) * _comb0(k, j)
        total = total + Poly.monomial({var: j}, coeff)
    return total


def _require_series_order(order: int, p: int, q: int) -> None:
    if order < p + q:
        raise ValueError(f"series order {order} is too small for orders (p,q)=({p},{q})")


# ---------------------------------------------------------------------
# basic structure
# ---------------------------------------------------------------------

def _check_symmetry(ps: Mapping, variant: str) -> CheckResult:
    """H^(p,q)_{n,m}(z,w|g) = H^(q,p)_{m,n}(w,z|g)."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"z": _W, "w": _Z})
    return CheckResult(lhs - _gh(q, p, m, n))


def _check_hypergeom(ps: Mapping, variant: str) -> CheckResult:
    """The terminating hypergeometric rewriting reproduces the defining sum."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    return CheckResult(hypergeom_form(FamilyParams(p, q, n, m)).poly - _gh(p, q, n, m))


def _check_hyp_2f0_1f1(ps: Mapping, variant: str) -> CheckResult:
    """2F0(-n,-m;;-1/z) against its 1F1 form, evaluated at rational z.

    Printed prefactor z^-(min); the corrected variant uses (-z)^-(min).
    """
    n, m = ps["n"], ps["m"]
    zval = as_scalar(ps["z"])
    if zval == 0:
        raise ValueError("z must be nonzero")
    s, big, d = min(n, m), max(n, m), abs(n - m)
    lhs = Fraction(0)
    for k in range(s + 1):
        lhs += (
            rising_factorial(-n, k)
            * rising_factorial(-m, k)
            * (-1 / zval) ** k
            / _fact(k)
        )
    f11 = Fraction(0)
    for k in range(s + 1):
        f11 += rising_factorial(-s, k) / rising_factorial(d + 1, k) * zval ** k / _fact(k)
    base = zval if variant == "printed" else -zval
    rhs = Fraction(_fact(big), _fact(d)) * base ** (-s) * f11
    return CheckResult(Poly.const(lhs - rhs))


def _check_origin_value(ps: Mapping, variant: str) -> CheckResult:
    """Closed form of the value at z = w = 0.

    Printed: n!/(n/p)! g^(n/p) when p | n, q | m and the quotients agree
    (plus the stated p = 0 special case).  Corrected: n! m! g^k / k!
    for the unique k with n = pk and m = qk, zero when no such k exists.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    actual = _gh(p, q, n, m).subst({"z": 0, "w": 0})
    if variant == "printed":
        if p >= 1 and q >= 1:
            if n % p == 0 and m % q == 0 and n // p == m // q:
                predicted = Poly.monomial({"g": n // p}, Fraction(_fact(n), _fact(n // p)))
            else:
                predicted = Poly.zero()
        elif p == 0:
            # stated separately: nonzero only for n = 0 with q | m
            if n == 0 and q >= 1 and m % q == 0:
                predicted = Poly.monomial({"g": m // q}, Fraction(_fact(m), _fact(m // q)))
            else:
                predicted = Poly.zero()
        else:  # q == 0
            if m == 0 and p >= 1 and n % p == 0:
                predicted = Poly.monomial({"g": n // p}, Fraction(_fact(n), _fact(n // p)))
            else:
                predicted = Poly.zero()
    else:
        matches = [
            k for k in range(FamilyParams(p, q, n, m).k_max + 1)
            if n - p * k == 0 and m - q * k == 0
        ]
        if matches:
            k = matches[0]
            predicted = Poly.monomial({"g": k}, Fraction(_fact(n) * _fact(m), _fact(k)))
        else:
            predicted = Poly.zero()
    return CheckResult(actual - predicted)


def _check_homogeneity(ps: Mapping, variant: str) -> CheckResult:
    """a^n b^m H(z,w|g) = H(az, bw | g a^p b^q)."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    lhs = Poly.monomial({"a": n, "b": m}) * h
    rhs = h.subst({"z": _A * _Z, "w": _B * _W, "g": _G * Poly.monomial({"a": p, "b": q})})
    return CheckResult(lhs - rhs)


def _check_limit(ps: Mapping, variant: str) -> CheckResult:
    """Shrinking the deformation recovers the monomial.

    The scaling limit t -> 0 of t^(n+m) H(z/t, w/t | g) equals, after
    homogeneity, the t-free part of H(z, w | t^(p+q) g); the statement
    certified here is that this part is exactly z^n w^m.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    deformed = _gh(p, q, n, m).subst({"g": _G * Poly.monomial({"t": p + q})})
    lhs = deformed.coefficient("t", 0)
    return CheckResult(
        lhs - Poly.monomial({"z": n, "w": m}),
        notes="limit encoded as the t-free part of the t^(p+q)-deformed member",
    )


# ---------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------

def _family_series(p: int, q: int, order: int) -> SeriesUV:
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            coeffs[(i, j)] = _gh(p, q, i, j) * Fraction(1, _fact(i) * _fact(j))
    return SeriesUV(order, coeffs)


def _exp_series(p: int, q: int, order: int) -> SeriesUV:
    return series_exp(_Z * _U + _W * _V + _G * Poly.monomial({"u": p, "v": q}), order)


def _check_gen_full(ps: Mapping, variant: str) -> CheckResult:
    """sum H_{n,m} u^n v^m/(n! m!) = exp(zu + wv + g u^p v^q)."""
    p, q, order = ps["p"], ps["q"], ps["order"]
    _require_series_order(order, p, q)
    diff = _family_series(p, q, order) - _exp_series(p, q, order)
    return CheckResult(diff.to_poly(), series_order=order)


def _check_gen_partial_u(ps: Mapping, variant: str) -> CheckResult:
    """sum_n H_{n,m} u^n/n! = H^(q)_m(w | u^p g) exp(zu), at fixed m."""
    p, q, m, order = ps["p"], ps["q"], ps["m"], ps["order"]
    _require_series_order(order, p, q)
    lhs = SeriesUV(order, {
        (i, 0): _gh(p, q, i, m) * Fraction(1, _fact(i)) for i in range(order + 1)
    })
    base = gould_hopper_1d(m, q).subst({"z": _W, "g": _G * Poly.monomial({"u": p})})
    rhs = SeriesUV.from_poly(base, order) * series_exp(_Z * _U, order)
    return CheckResult((lhs - rhs).to_poly(), series_order=order)


def _check_gen_partial_v(ps: Mapping, variant: str) -> CheckResult:
    """sum_m H_{n,m} v^m/m! = H^(p)_n(z | v^q g) exp(wv), at fixed n."""
    p, q, n, order = ps["p"], ps["q"], ps["n"], ps["order"]
    _require_series_order(order, p, q)
    lhs = SeriesUV(order, {
        (0, j): _gh(p, q, n, j) * Fraction(1, _fact(j)) for j in range(order + 1)
    })
    base = gould_hopper_1d(n, p).subst({"g": _G * Poly.monomial({"v": q})})
    rhs = SeriesUV.from_poly(base, order) * series_exp(_W * _V, order)
    return CheckResult((lhs - rhs).to_poly(), series_order=order)


def _check_gen_pochhammer_g(ps: Mapping, variant: str) -> CheckResult:
    """Rising-factorial weighted generating series, polynomial form.

    Right-hand side as displayed:
        uvzw exp(zu+wv+g u^p v^q) ((uz)^(j-1)+P^j_{j-1}(uz))
                                  ((vw)^(k-1)+P^k_{k-1}(vw)).
    Printed left-hand side weights H_{n,m} by (n)_j (m)_k; the corrected
    variant instead applies the degree-weight operators z Dz^j z^(j-1)
    and w Dw^k w^(k-1) to H_{n,m}, matching the right-hand side exactly.
    """
    p, q, j, k, order = ps["p"], ps["q"], ps["j"], ps["k"], ps["order"]
    if j < 1 or k < 1:
        raise ValueError("weight orders j, k must be >= 1")
    _require_series_order(order, p, q)
    coeffs = {}
    for n in range(order + 1):
        for m in range(order + 1 - n):
            h = _gh(p, q, n, m)
            if variant == "printed":
                weighted = rising_factorial(n, j) * rising_factorial(m, k) * h
            else:
                inner = _W * (Poly.monomial({"w": k - 1}) * h).diff("w", k)
                weighted = _Z * (Poly.monomial({"z": j - 1}) * inner).diff("z", j)
            coeffs[(n, m)] = weighted * Fraction(1, _fact(n) * _fact(m))
    lhs = SeriesUV(order, coeffs)
    fac_u = (_U * _Z) ** (j - 1) + pochhammer_tail(j, j - 1).subst({"z": _U * _Z})
    fac_v = (_V * _W) ** (k - 1) + pochhammer_tail(k, k - 1).subst({"z": _V * _W})
    prefactor = _U * _V * _Z * _W * fac_u * fac_v
    rhs = SeriesUV.from_poly(prefactor, order) * _exp_series(p, q, order)
    return CheckResult((lhs - rhs).to_poly(), series_order=order)


def _check_gen_pochhammer_s(ps: Mapping, variant: str) -> CheckResult:
    """Rising-factorial weighted series at rational parameter values.

    sum (a)_n (b)_m H_{n,m}(z0,w0|g0) u^n v^m/(n!m!)
      = (1-u z0)^-a (1-v w0)^-b
        * sum_K prod((a+i-1)/p)_K prod((b+i-1)/q)_K X^K / K!
    with X = p^p q^q g0 * ARG / ((1-u z0)^p (1-v w0)^q); printed ARG is
    u v, the corrected variant carries u^p v^q.
    """
    p, q, order = ps["p"], ps["q"], ps["order"]
    aval, bval = as_scalar(ps["a"]), as_scalar(ps["b"])
    zval, wval = as_scalar(ps["z"]), as_scalar(ps["w"])
    gval = as_scalar(ps["g"])
    if p < 1 or q < 1:
        raise ValueError("needs p >= 1 and q >= 1")
    if zval == 0 or wval == 0:
        raise ValueError("z and w must be nonzero")
    _require_series_order(order, p, q)
    coeffs = {}
    for n in range(order + 1):
        for m in range(order + 1 - n):
            hval = _gh(p, q, n, m).subst({"z": zval, "w": wval, "g": gval}).as_fraction()
            value = (
                rising_factorial(aval, n)
                * rising_factorial(bval, m)
                * hval
                / (_fact(n) * _fact(m))
            )
            coeffs[(n, m)] = Poly.const(value)
    lhs = SeriesUV(order, coeffs)

    binom_a = series_binomial_neg(Poly.monomial({"u": 1}, zval), aval, order)
    binom_b = series_binomial_neg(Poly.monomial({"v": 1}, wval), bval, order)
    arg_exps = {"u": 1, "v": 1} if variant == "printed" else {"u": p, "v": q}
    x = (
        SeriesUV.from_poly(Poly.monomial(arg_exps, gval * p ** p * q ** q), order)
        * series_binomial_neg(Poly.monomial({"u": 1}, zval), Fraction(p), order)
        * series_binomial_neg(Poly.monomial({"v": 1}, wval), Fraction(q), order)
    )
    hyp = SeriesUV.one(order)
    power = SeriesUV.one(order)
    for kk in range(1, order + 1):
        power = power * x
        if power.is_zero():
            break
        coeff = Fraction(1, _fact(kk))
        for i in range(1, p + 1):
            coeff *= rising_factorial((aval + i - 1) / p, kk)
        for i in range(1, q + 1):
            coeff *= rising_factorial((bval + i - 1) / q, kk)
        hyp = hyp + power * coeff
    rhs = binom_a * binom_b * hyp
    return CheckResult((lhs - rhs).to_poly(), series_order=order)


# ---------------------------------------------------------------------
# addition / multiplication behaviour
# ---------------------------------------------------------------------

def _check_runge_general(ps: Mapping, variant: str) -> CheckResult:
    """H(z+z', w+w' | g+g') as a binomial double sum of primed pairs."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"z": _Z + _ZP, "w": _W + _WP, "g": _G + _GP})
    rhs = Poly.zero()
    for k in range(n + 1):
        for j in range(m + 1):
            rhs = rhs + (
                _comb0(n, k) * _comb0(m, j)
                * _gh(p, q, k, j)
                * _gh_all_primed(p, q, n - k, m - j)
            )
    return CheckResult(lhs - rhs)


def _check_runge_cancel(ps: Mapping, variant: str) -> CheckResult:
    """Half arguments with opposite deformations collapse to z^n w^m."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    rhs = Poly.zero()
    for k in range(n + 1):
        for j in range(m + 1):
            rhs = rhs + (
                _comb0(n, k) * _comb0(m, j)
                * _gh_half(p, q, k, j, 1)
                * _gh_half(p, q, n - k, m - j, -1)
            )
    return CheckResult(Poly.monomial({"z": n, "w": m}) - rhs)


def _check_runge_half(ps: Mapping, variant: str) -> CheckResult:
    """Equal-argument splitting with deformation 2^(p+q-1) g.

    The printed display omits the prefactor 2^-(n+m) on the sum.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    scale = 2 ** (p + q - 1)
    total = Poly.zero()
    for k in range(n + 1):
        for j in range(m + 1):
            total = total + (
                _comb0(n, k) * _comb0(m, j)
                * _gh_scaled_g(p, q, k, j, scale, 1)
                * _gh_scaled_g(p, q, n - k, m - j, scale, 1)
            )
    if variant != "printed":
        total = total * Fraction(1, 2 ** (n + m))
    return CheckResult(_gh(p, q, n, m) - total)


def _check_runge_scaled(ps: Mapping, variant: str) -> CheckResult:
    """Two-point splitting at a common deformation, root-cleared form.

    The display carries irrational argument scalings 2^(1/2p), 2^(1/2q);
    multiplying both sides by 2^(n/2p + m/2q) and using homogeneity
    turns it into H(z+z', w+w' | 2g) = sum of binomial-weighted pairs,
    which is the polynomial statement certified here.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"z": _Z + _ZP, "w": _W + _WP, "g": 2 * _G})
    rhs = Poly.zero()
    for k in range(n + 1):
        for j in range(m + 1):
            rhs = rhs + (
                _comb0(n, k) * _comb0(m, j)
                * _gh(p, q, k, j)
                * _gh_zw_primed(p, q, n - k, m - j)
            )
    return CheckResult(
        lhs - rhs,
        notes="both sides scaled by 2^(n/2p + m/2q) to clear the irrational scalings",
    )


def _check_mult_c(ps: Mapping, variant: str) -> CheckResult:
    """H(z,w|cg) = n!m! sum_k (c-1)^k g^k/k! H_{n-pk,m-qk}/((n-pk)!(m-qk)!)."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"g": _C * _G})
    rhs = Poly.zero()
    for k in range(FamilyParams(p, q, n, m).k_max + 1):
        rhs = rhs + (
            (_C - 1) ** k
            * Poly.monomial({"g": k})
            * _gh(p, q, n - p * k, m - q * k)
            * Fraction(
                _fact(n) * _fact(m),
                _fact(k) * _fact(n - p * k) * _fact(m - q * k),
            )
        )
    return CheckResult(lhs - rhs)


def _check_mult_abc(ps: Mapping, variant: str) -> CheckResult:
    """H(az, bw | cg) expanded over (c - a^p b^q)^k with rescaled members."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"z": _A * _Z, "w": _B * _W, "g": _C * _G})
    rhs = Poly.zero()
    for k in range(FamilyParams(p, q, n, m).k_max + 1):
        rhs = rhs + (
            (_C - Poly.monomial({"a": p, "b": q})) ** k
            * Poly.monomial({"g": k, "a": n - p * k, "b": m - q * k})
            * _gh(p, q, n - p * k, m - q * k)
            * Fraction(
                _fact(n) * _fact(m),
                _fact(k) * _fact(n - p * k) * _fact(m - q * k),
            )
        )
    return CheckResult(lhs - rhs)


def _check_mult_gh(ps: Mapping, variant: str) -> CheckResult:
    """One-variable rescaling: H^(p)_n(az|cg) over (c - a^p)^k."""
    p, n = ps["p"], ps["n"]
    lhs = gould_hopper_1d(n, p).subst({"z": _A * _Z, "g": _C * _G})
    rhs = Poly.zero()
    for k in range(n // p + 1):
        rhs = rhs + (
            (_C - Poly.monomial({"a": p})) ** k
            * Poly.monomial({"g": k, "a": n - p * k})
            * gould_hopper_1d(n - p * k, p)
            * Fraction(_fact(n), _fact(k) * _fact(n - p * k))
        )
    return CheckResult(lhs - rhs)


def _check_add_zw(ps: Mapping, variant: str) -> CheckResult:
    """H(z+z', w+w'|g) = sum C(n,i) C(m,j) z^i w^j H_{n-i,m-j}(z',w'|g)."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p, q, n, m).subst({"z": _Z + _ZP, "w": _W + _WP})
    rhs = Poly.zero()
    for i in range(n + 1):
        for j in range(m + 1):
            rhs = rhs + (
                _comb0(n, i) * _comb0(m, j)
                * Poly.monomial({"z": i, "w": j})
                * _gh_zw_primed(p, q, n - i, m - j)
            )
    return CheckResult(lhs - rhs)


def _check_add_half(ps: Mapping, variant: str) -> CheckResult:
    """Equal-split shift formula.

    Printed: H(z,w|g) = 2^(n+m) sum C C z^i w^j H_{n-i,m-j}(z,w|2^(p+q-1) g).
    Corrected: prefactor 2^-(n+m) and deformation scale 2^(p+q) g.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    if variant == "printed":
        prefactor = Fraction(2 ** (n + m))
        scale = 2 ** (p + q - 1)
    else:
        prefactor = Fraction(1, 2 ** (n + m))
        scale = 2 ** (p + q)
    total = Poly.zero()
    for i in range(n + 1):
        for j in range(m + 1):
            total = total + (
                _comb0(n, i) * _comb0(m, j)
                * Poly.monomial({"z": i, "w": j})
                * _gh_scaled_g(p, q, n - i, m - j, scale, 1)
            )
    return CheckResult(_gh(p, q, n, m) - prefactor * total)


# ---------------------------------------------------------------------
# derivatives and inverses
# ---------------------------------------------------------------------

def _check_deriv_z(ps: Mapping, variant: str) -> CheckResult:
    """Dz H_{n,m} = n H_{n-1,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    return CheckResult(_gh(p, q, n, m).diff("z") - n * _gh0(p, q, n - 1, m))


def _check_deriv_w(ps: Mapping, variant: str) -> CheckResult:
    """Dw H_{n,m} = m H_{n,m-1}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    return CheckResult(_gh(p, q, n, m).diff("w") - m * _gh0(p, q, n, m - 1))


def _check_deriv_gamma(ps: Mapping, variant: str) -> CheckResult:
    """Dg H_{n,m} = Dz^p Dw^q H_{n,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    return CheckResult(h.diff("g") - h.diff("z", p).diff("w", q))


def _check_deriv_jk(ps: Mapping, variant: str) -> CheckResult:
    """Dz^j Dw^k H_{n,m} = n!m!/((n-j)!(m-k)!) H_{n-j,m-k}, zero past the degrees."""
    p, q, n, m, j, k = ps["p"], ps["q"], ps["n"], ps["m"], ps["j"], ps["k"]
    lhs = _gh(p, q, n, m).diff("z", j).diff("w", k)
    if j <= n and k <= m:
        rhs = Fraction(_fact(n) * _fact(m), _fact(n - j) * _fact(m - k)) * _gh(p, q, n - j, m - k)
    else:
        rhs = Poly.zero()
    return CheckResult(lhs - rhs)


def _check_deriv_gamma_k(ps: Mapping, variant: str) -> CheckResult:
    """Dg^k H_{n,m} = n!m!/((n-pk)!(m-qk)!) H_{n-pk,m-qk}, zero past the bound."""
    p, q, n, m, k = ps["p"], ps["q"], ps["n"], ps["m"], ps["k"]
    lhs = _gh(p, q, n, m).diff("g", k)
    if k <= FamilyParams(p, q, n, m).k_max:
        rhs = (
            Fraction(_fact(n) * _fact(m), _fact(n - p * k) * _fact(m - q * k))
            * _gh(p, q, n - p * k, m - q * k)
        )
    else:
        rhs = Poly.zero()
    return CheckResult(lhs - rhs)


def _check_inverse_sum(ps: Mapping, variant: str) -> CheckResult:
    """z^n w^m = n!m! sum_k (-g)^k/k! H_{n-pk,m-qk}/((n-pk)!(m-qk)!)."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    rhs = Poly.zero()
    for k in range(FamilyParams(p, q, n, m).k_max + 1):
        rhs = rhs + (
            Poly.monomial({"g": k}, Fraction((-1) ** k))
            * _gh(p, q, n - p * k, m - q * k)
            * Fraction(
                _fact(n) * _fact(m),
                _fact(k) * _fact(n - p * k) * _fact(m - q * k),
            )
        )
    return CheckResult(Poly.monomial({"z": n, "w": m}) - rhs)


def _check_inverse_op(ps: Mapping, variant: str) -> CheckResult:
    """z^n w^m = exp(-g Dz^p Dw^q) H_{n,m}; the operator sum truncates."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    rhs = Poly.zero()
    for k in range(FamilyParams(p, q, n, m).k_max + 1):
        term = h.diff("z", p * k).diff("w", q * k)
        rhs = rhs + Poly.monomial({"g": k}, Fraction((-1) ** k, _fact(k))) * term
    return CheckResult(Poly.monomial({"z": n, "w": m}) - rhs)


# ---------------------------------------------------------------------
# recurrences and operators
# ---------------------------------------------------------------------

def _check_rec_raise_n(ps: Mapping, variant: str) -> CheckResult:
    """H_{n+1,m} = z H_{n,m} + g p! q! C(n,p-1) C(m,q) H_{n+1-p,m-q}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    rhs = _Z * _gh(p, q, n, m)
    c = _fact(p) * _fact(q) * _comb0(n, p - 1) * _comb0(m, q)
    if c:
        rhs = rhs + c * _G * _gh0(p, q, n + 1 - p, m - q)
    return CheckResult(_gh(p, q, n + 1, m) - rhs)


def _check_rec_raise_n_op(ps: Mapping, variant: str) -> CheckResult:
    """H_{n+1,m} = (z + p g Dz^(p-1) Dw^q) H_{n,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    rhs = _Z * h
    if p >= 1:
        rhs = rhs + p * _G * h.diff("z", p - 1).diff("w", q)
    return CheckResult(_gh(p, q, n + 1, m) - rhs)


def _check_rec_raise_m(ps: Mapping, variant: str) -> CheckResult:
    """H_{n,m+1} = w H_{n,m} + g p! q! C(n,p) C(m,q-1) H_{n-p,m+1-q}.

    The printed display lowers the second index to m-1-q instead.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    low = m - 1 - q if variant == "printed" else m + 1 - q
    rhs = _W * _gh(p, q, n, m)
    c = _fact(p) * _fact(q) * _comb0(n, p) * _comb0(m, q - 1)
    if c:
        rhs = rhs + c * _G * _gh0(p, q, n - p, low)
    return CheckResult(_gh(p, q, n, m + 1) - rhs)


def _check_rec_raise_m_op(ps: Mapping, variant: str) -> CheckResult:
    """H_{n,m+1} = (w + q g Dz^p Dw^(q-1)) H_{n,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    rhs = _W * h
    if q >= 1:
        rhs = rhs + q * _G * h.diff("z", p).diff("w", q - 1)
    return CheckResult(_gh(p, q, n, m + 1) - rhs)


def _check_creation(ps: Mapping, variant: str) -> CheckResult:
    """Iterated raising operator applied to a bare monomial.

    p >= 1: (z + p g Dz^(p-1) Dw^q)^n {w^m} (with Dw^0 = id when q = 0);
    p = 0:  the mirrored (w + q g Dw^(q-1))^m {z^n}.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    if p >= 1:
        acc = Poly.monomial({"w": m})
        for _ in range(n):
            acc = _Z * acc + p * _G * acc.diff("z", p - 1).diff("w", q)
    else:
        acc = Poly.monomial({"z": n})
        for _ in range(m):
            acc = _W * acc + q * _G * acc.diff("w", q - 1)
    return CheckResult(_gh(p, q, n, m) - acc)


def _check_creation_both(ps: Mapping, variant: str) -> CheckResult:
    """(z + p g Dz^(p-1) Dw^q)^n (w + q g Dz^p Dw^(q-1))^m {1}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    acc = Poly.one()
    for _ in range(m):
        step = _W * acc
        if q >= 1:
            step = step + q * _G * acc.diff("z", p).diff("w", q - 1)
        acc = step
    for _ in range(n):
        step = _Z * acc
        if p >= 1:
            step = step + p * _G * acc.diff("z", p - 1).diff("w", q)
        acc = step
    return CheckResult(_gh(p, q, n, m) - acc)


def _check_param_rec(ps: Mapping, variant: str) -> CheckResult:
    """Order-raising expansion of H^(p+1,q)_{n,m} over the base family.

    Printed: n!m! sum_k sum_{j<=k} C(j,k) g^k (-1)^(k-j)
             H_{n-j-pk, m-k} / ((n-j-pk)! (m-qk)!).
    Corrected: binomial C(k,j), lowered index m-qk, and factor 1/k!.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    lhs = _gh(p + 1, q, n, m)
    rhs = Poly.zero()
    for k in range(FamilyParams(p, q, n, m).k_max + 1):
        for j in range(k + 1):
            if variant == "printed":
                binom = _comb0(j, k)
                second = m - k
                kfact = Fraction(1)
            else:
                binom = _comb0(k, j)
                second = m - q * k
                kfact = Fraction(1, _fact(k))
            first = n - j - p * k
            weight = (
                binom * kfact * Fraction((-1) ** (k - j))
                * _inv_fact(first) * _inv_fact(m - q * k)
            )
            if weight == 0 or first < 0 or second < 0:
                continue
            rhs = rhs + Poly.monomial({"g": k}, weight) * _gh(p, q, first, second)
    rhs = _fact(n) * _fact(m) * rhs
    return CheckResult(lhs - rhs)


def _op_exp_poly_times_diff(h: Poly, p: int, q: int, k_bound: int, mode: str) -> Poly:
    """Expand exp(g OP Dz^p Dw^q) h for the three order-raising operators.

    mode "z":  OP = Dz - 1;   mode "w": OP = Dw - 1;
    mode "zw": OP = Dz Dw - 1; mode "zw_printed": OP = Dz + Dw - 2.
    """
    total = Poly.zero()
    for k in range(k_bound + 1):
        base = h.diff("z", p * k).diff("w", q * k)
        if base.is_zero() and k > 0:
            break
        term = Poly.zero()
        if mode == "z":
            for j in range(k + 1):
                term = term + _comb0(k, j) * Fraction((-1) ** (k - j)) * base.diff("z", j)
        elif mode == "w":
            for j in range(k + 1):
                term = term + _comb0(k, j) * Fraction((-1) ** (k - j)) * base.diff("w", j)
        elif mode == "zw":
            for j in range(k + 1):
                term = term + (
                    _comb0(k, j) * Fraction((-1) ** (k - j)) * base.diff("z", j).diff("w", j)
                )
        else:  # "zw_printed": trinomial expansion of (Dz + Dw - 2)^k
            for i in range(k + 1):
                for j in range(k + 1 - i):
                    ell = k - i - j
                    coeff = Fraction(_fact(k), _fact(i) * _fact(j) * _fact(ell)) * (-2) ** ell
                    term = term + coeff * base.diff("z", i).diff("w", j)
        total = total + Poly.monomial({"g": k}, Fraction(1, _fact(k))) * term
    return total


def _check_param_op_p(ps: Mapping, variant: str) -> CheckResult:
    """H^(p+1,q)_{n,m} = exp(g (Dz - 1) Dz^p Dw^q) H^(p,q)_{n,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    k_bound = FamilyParams(p, q, n, m).k_max
    rhs = _op_exp_poly_times_diff(_gh(p, q, n, m), p, q, k_bound, "z")
    return CheckResult(_gh(p + 1, q, n, m) - rhs)


def _check_param_op_q(ps: Mapping, variant: str) -> CheckResult:
    """H^(p,q+1)_{n,m} = exp(g (Dw - 1) Dz^p Dw^q) H^(p,q)_{n,m}."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    k_bound = FamilyParams(p, q, n, m).k_max
    rhs = _op_exp_poly_times_diff(_gh(p, q, n, m), p, q, k_bound, "w")
    return CheckResult(_gh(p, q + 1, n, m) - rhs)


def _check_param_op_pq(ps: Mapping, variant: str) -> CheckResult:
    """Simultaneous order raising.

    Printed exponent g (Dz + Dw - 2) Dz^p Dw^q; the corrected operator
    is g (Dz Dw - 1) Dz^p Dw^q, the composition of the two single-order
    raisings.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    k_bound = FamilyParams(p, q, n, m).k_max
    mode = "zw_printed" if variant == "printed" else "zw"
    rhs = _op_exp_poly_times_diff(_gh(p, q, n, m), p, q, k_bound, mode)
    return CheckResult(_gh(p + 1, q + 1, n, m) - rhs)


# ---------------------------------------------------------------------
# expansions around shifted points
# ---------------------------------------------------------------------

def _check_nielsen_n(ps: Mapping, variant: str) -> CheckResult:
    """H_{n+n',m}(z,...) = sum C(n,i) C(n',j) (z-z')^(i+j) H_{n+n'-i-j,m}(z',...)."""
    p, q, n, np_, m = ps["p"], ps["q"], ps["n"], ps["np"], ps["m"]
    lhs = _gh(p, q, n + np_, m)
    shift = _Z - _ZP
    powers = [Poly.one()]
    for _ in range(n + np_):
        powers.append(powers[-1] * shift)
    rhs = Poly.zero()
    for i in range(n + 1):
        for j in range(np_ + 1):
            rhs = rhs + (
                _comb0(n, i) * _comb0(np_, j)
                * powers[i + j]
                * _gh_z_primed(p, q, n + np_ - i - j, m)
            )
    return CheckResult(lhs - rhs)


def _check_nielsen_m(ps: Mapping, variant: str) -> CheckResult:
    """H_{n,m+m'}(...,w) = sum C(m,k) C(m',l) (w-w')^(k+l) H_{n,m+m'-k-l}(...,w')."""
    p, q, n, m, mp_ = ps["p"], ps["q"], ps["n"], ps["m"], ps["mp"]
    lhs = _gh(p, q, n, m + mp_)
    shift = _W - _WP
    powers = [Poly.one()]
    for _ in range(m + mp_):
        powers.append(powers[-1] * shift)
    rhs = Poly.zero()
    for k in range(m + 1):
        for l in range(mp_ + 1):
            rhs = rhs + (
                _comb0(m, k) * _comb0(mp_, l)
                * powers[k + l]
                * _gh_w_primed(p, q, n, m + mp_ - k - l)
            )
    return CheckResult(lhs - rhs)


def _check_nielsen_full(ps: Mapping, variant: str) -> CheckResult:
    """Simultaneous splitting of both indices around (z', w').

    The display writes (w-w')^(k+l) as a reciprocal with negative
    exponent; both readings are the same multiplication, certified here.
    """
    p, q, n, np_, m, mp_ = ps["p"], ps["q"], ps["n"], ps["np"], ps["m"], ps["mp"]
    lhs = _gh(p, q, n + np_, m + mp_)
    zshift = _Z - _ZP
    wshift = _W - _WP
    zpowers = [Poly.one()]
    for _ in range(n + np_):
        zpowers.append(zpowers[-1] * zshift)
    wpowers = [Poly.one()]
    for _ in range(m + mp_):
        wpowers.append(wpowers[-1] * wshift)
    # group the quadruple sum by the total shift powers i+j and k+l;
    # every grouped term shares the same polynomial factors
    zweights = [
        sum(_comb0(n, i) * _comb0(np_, s - i) for i in range(s + 1))
        for s in range(n + np_ + 1)
    ]
    wweights = [
        sum(_comb0(m, k) * _comb0(mp_, s - k) for k in range(s + 1))
        for s in range(m + mp_ + 1)
    ]
    rhs = Poly.zero()
    for zi, zc in enumerate(zweights):
        for wi, wc in enumerate(wweights):
            rhs = rhs + (
                zc * wc
                * zpowers[zi] * wpowers[wi]
                * _gh_zw_primed(p, q, n + np_ - zi, m + mp_ - wi)
            )
    return CheckResult(
        lhs - rhs,
        notes="(w-w')^-(k+l) in the denominator read as the factor (w-w')^(k+l)",
    )


# ---------------------------------------------------------------------
# connections to other families
# ---------------------------------------------------------------------

def _check_conn_gh_from_pq(ps: Mapping, variant: str) -> CheckResult:
    """H^(p)_n(z|g) = sum_k C(n,k) H^(p-q,q)_{n-k,k}(z-w, w|g); needs p >= max(q,1)."""
    p, q, n = ps["p"], ps["q"], ps["n"]
    if p < 1 or p < q:
        raise ValueError("needs p >= 1 and p >= q")
    lhs = gould_hopper_1d(n, p)
    rhs = Poly.zero()
    for k in range(n + 1):
        rhs = rhs + _comb0(n, k) * _gh(p - q, q, n - k, k).subst({"z": _Z - _W})
    return CheckResult(lhs - rhs)


def _check_conn_gh_sum(ps: Mapping, variant: str) -> CheckResult:
    """H^(p+q)_n(z+w|g) = sum_k C(n,k) H^(p,q)_{n-k,k}(z,w|g)."""
    p, q, n = ps["p"], ps["q"], ps["n"]
    lhs = gould_hopper_1d(n, p + q).subst({"z": _Z + _W})
    rhs = Poly.zero()
    for k in range(n + 1):
        rhs = rhs + _comb0(n, k) * _gh(p, q, n - k, k)
    return CheckResult(lhs - rhs)


def _check_conn_ito(ps: Mapping, variant: str) -> CheckResult:
    """The complex-Hermite cross-sum collapses to the order-2 one-variable member.

    sum_k C(n,k) H^(1,1)_{n-k,k}(z-w, w|-1) = H^(2)_n(z|-1); the second
    argument drops out, which is the one-variable expression behind the
    difference-argument display.
    """
    n = ps["n"]
    lhs = gould_hopper_1d(n, 2).subst({"g": -1})
    rhs = Poly.zero()
    for k in range(n + 1):
        rhs = rhs + _comb0(n, k) * _gh(1, 1, n - k, k).subst({"z": _Z - _W, "g": -1})
    return CheckResult(
        lhs - rhs,
        notes="difference-argument form: the shifted first argument removes w entirely",
    )


def _check_conn_pq_from_gh(ps: Mapping, variant: str) -> CheckResult:
    """Two-variable member as a quadruple sum of one-variable pairs.

    Printed inner factorials l! i! (k-l)! (j-i)!; the corrected pairing
    is l! i! (k-i)! (j-l)!.  Reciprocal factorials of negative integers
    vanish.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    if p < 1 or q < 1:
        raise ValueError("needs p >= 1 and q >= 1")
    lhs = _gh(p, q, n, m)
    gh_z = {r: gould_hopper_1d(r, p) for r in range(n + 1)}
    gh_w = {r: gould_hopper_1d(r, q).subst({"z": _W}) for r in range(m + 1)}
    rhs = Poly.zero()
    for k in range(n // p + 1):
        for j in range(m // q + 1):
            for l in range((n - p * k) // p + 1):
                for i in range((m - q * j) // q + 1):
                    if variant == "printed":
                        pair = _inv_fact(k - l) * _inv_fact(j - i)
                    else:
                        pair = _inv_fact(k - i) * _inv_fact(j - l)
                    weight = (
                        Fraction(1, (-2) ** (l + i)) * Fraction((-1) ** (k + j))
                        * _inv_fact(l) * _inv_fact(i) * pair
                        * _inv_fact(n - p * (l + k)) * _inv_fact(m - q * (i + j))
                    )
                    if weight == 0:
                        continue
                    rhs = rhs + (
                        Poly.monomial({"g": k + j}, weight)
                        * gh_z[n - p * (l + k)]
                        * gh_w[m - q * (i + j)]
                    )
    rhs = _fact(n) * _fact(m) * rhs
    return CheckResult(lhs - rhs)


# ---------------------------------------------------------------------
# differential equations
# ---------------------------------------------------------------------

def _check_pde_heat(ps: Mapping, variant: str) -> CheckResult:
    """(Dg - Dz^p Dw^q) H_{n,m} = 0."""
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    return CheckResult(h.diff("g") - h.diff("z", p).diff("w", q))


def _check_pde_eigen_n(ps: Mapping, variant: str) -> CheckResult:
    """Eigenrelation in n: (z Dz + g Dz^p Dw^q) H_{n,m} = n H_{n,m}.

    The printed operator omits the factor p on the deformation term;
    the corrected operator is z Dz + p g Dz^p Dw^q (the composition of
    the raising operator with Dz).  They agree exactly when p = 1.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    factor = 1 if variant == "printed" else p
    lhs = _Z * h.diff("z") + factor * _G * h.diff("z", p).diff("w", q)
    return CheckResult(lhs - n * h)


def _check_pde_eigen_m(ps: Mapping, variant: str) -> CheckResult:
    """Eigenrelation in m: (w Dw + g Dz^p Dw^q) H_{n,m} = m H_{n,m}.

    Corrected operator w Dw + q g Dz^p Dw^q; printed omits the factor q.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    h = _gh(p, q, n, m)
    factor = 1 if variant == "printed" else q
    lhs = _W * h.diff("w") + factor * _G * h.diff("z", p).diff("w", q)
    return CheckResult(lhs - m * h)


def _check_pde_product(ps: Mapping, variant: str) -> CheckResult:
    """Product eigenrelation, eigenvalue nm; needs p, q >= 1.

    Printed: (z + g Dz^(p-1) Dw^q)(w + g Dz^p Dw^(q-1)) Dz Dw H = nm H;
    the corrected raising factors carry p and q on their g terms.
    """
    p, q, n, m = ps["p"], ps["q"], ps["n"], ps["m"]
    if p < 1 or q < 1:
        raise ValueError("needs p >= 1 and q >= 1")
    pfac = 1 if variant == "printed" else p
    qfac = 1 if variant == "printed" else q
    h = _gh(p, q, n, m)
    d = h.diff("z").diff("w")
    inner = _W * d + qfac * _G * d.diff("z", p).diff("w", q - 1)
    outer = _Z * inner + pfac * _G * inner.diff("z", p - 1).diff("w", q)
    return CheckResult(outer - n * m * h)


# ---------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------

CheckFn = Callable[[Mapping, str], CheckResult]


@dataclass(frozen=True)
class CheckSpec:
    """Parameter signature, check family, and checker for one tag."""

    keys: tuple[str, ...]
    kind: str  # "algebraic" | "series" | "scalar" | "pde"
    fn: CheckFn


_PQNM = ("p", "q", "n", "m")

CHECKS: dict[IdentityTag, CheckSpec] = {
    IdentityTag.SYMMETRY: CheckSpec(_PQNM, "algebraic", _check_symmetry),
    IdentityTag.HYPERGEOM: CheckSpec(_PQNM, "algebraic", _check_hypergeom),
    IdentityTag.HYP_2F0_1F1: CheckSpec(("n", "m", "z"), "scalar", _check_hyp_2f0_1f1),
    IdentityTag.ORIGIN_VALUE: CheckSpec(_PQNM, "algebraic", _check_origin_value),
    IdentityTag.HOMOGENEITY: CheckSpec(_PQNM, "algebraic", _check_homogeneity),
    IdentityTag.LIMIT: CheckSpec(_PQNM, "algebraic", _check_limit),
    IdentityTag.GEN_PARTIAL_U: CheckSpec(("p", "q", "m", "order"), "series", _check_gen_partial_u),
    IdentityTag.GEN_PARTIAL_V: CheckSpec(("p", "q", "n", "order"), "series", _check_gen_partial_v),
    IdentityTag.GEN_FULL: CheckSpec(("p", "q", "order"), "series", _check_gen_full),
    IdentityTag.GEN_POCHHAMMER_G: CheckSpec(
        ("p", "q", "j", "k", "order"), "series", _check_gen_pochhammer_g
    ),
    IdentityTag.GEN_POCHHAMMER_S: CheckSpec(
        ("p", "q", "a", "b", "z", "w", "g", "order"), "series", _check_gen_pochhammer_s
    ),
    IdentityTag.RUNGE_GENERAL: CheckSpec(_PQNM, "algebraic", _check_runge_general),
    IdentityTag.RUNGE_CANCEL: CheckSpec(_PQNM, "algebraic", _check_runge_cancel),
    IdentityTag.RUNGE_HALF: CheckSpec(_PQNM, "algebraic", _check_runge_half),
    IdentityTag.RUNGE_SCALED: CheckSpec(_PQNM, "algebraic", _check_runge_scaled),
    IdentityTag.MULT_C: CheckSpec(_PQNM, "algebraic", _check_mult_c),
    IdentityTag.MULT_ABC: CheckSpec(_PQNM, "algebraic", _check_mult_abc),
    IdentityTag.MULT_GH: CheckSpec(("p", "n"), "algebraic", _check_mult_gh),
    IdentityTag.ADD_ZW: CheckSpec(_PQNM, "algebraic", _check_add_zw),
    IdentityTag.ADD_HALF: CheckSpec(_PQNM, "algebraic", _check_add_half),
    IdentityTag.DERIV_Z: CheckSpec(_PQNM, "algebraic", _check_deriv_z),
    IdentityTag.DERIV_W: CheckSpec(_PQNM, "algebraic", _check_deriv_w),
    IdentityTag.DERIV_GAMMA: CheckSpec(_PQNM, "algebraic", _check_deriv_gamma),
    IdentityTag.DERIV_JK: CheckSpec(("p", "q", "n", "m", "j", "k"), "algebraic", _check_deriv_jk),
    IdentityTag.DERIV_GAMMA_K: CheckSpec(("p", "q", "n", "m", "k"), "algebraic", _check_deriv_gamma_k),
    IdentityTag.INVERSE_SUM: CheckSpec(_PQNM, "algebraic", _check_inverse_sum),
    IdentityTag.INVERSE_OP: CheckSpec(_PQNM, "algebraic", _check_inverse_op),
    IdentityTag.REC_RAISE_N: CheckSpec(_PQNM, "algebraic", _check_rec_raise_n),
    IdentityTag.REC_RAISE_N_OP: CheckSpec(_PQNM, "algebraic", _check_rec_raise_n_op),
    IdentityTag.REC_RAISE_M: CheckSpec(_PQNM, "algebraic", _check_rec_raise_m),
    IdentityTag.REC_RAISE_M_OP: CheckSpec(_PQNM, "algebraic", _check_rec_raise_m_op),
    IdentityTag.CREATION: CheckSpec(_PQNM, "algebraic", _check_creation),
    IdentityTag.CREATION_BOTH: CheckSpec(_PQNM, "algebraic", _check_creation_both),
    IdentityTag.PARAM_REC: CheckSpec(_PQNM, "algebraic", _check_param_rec),
    IdentityTag.PARAM_OP_P: CheckSpec(_PQNM, "algebraic", _check_param_op_p),
    IdentityTag.PARAM_OP_Q: CheckSpec(_PQNM, "algebraic", _check_param_op_q),
    IdentityTag.PARAM_OP_PQ: CheckSpec(_PQNM, "algebraic", _check_param_op_pq),
    IdentityTag.NIELSEN_N: CheckSpec(("p", "q", "n", "np", "m"), "algebraic", _check_nielsen_n),
    IdentityTag.NIELSEN_M: CheckSpec(("p", "q", "n", "m", "mp"), "algebraic", _check_nielsen_m),
    IdentityTag.NIELSEN_FULL: CheckSpec(
        ("p", "q", "n", "np", "m", "mp"), "algebraic", _check_nielsen_full
    ),
    IdentityTag.CONN_GH_FROM_PQ: CheckSpec(("p", "q", "n"), "algebraic", _check_conn_gh_from_pq),
    IdentityTag.CONN_GH_SUM: CheckSpec(("p", "q", "n"), "algebraic", _check_conn_gh_sum),
    IdentityTag.CONN_ITO: CheckSpec(("n",), "algebraic", _check_conn_ito),
    IdentityTag.CONN_PQ_FROM_GH: CheckSpec(_PQNM, "algebraic", _check_conn_pq_from_gh),
    IdentityTag.PDE_HEAT: CheckSpec(_PQNM, "pde", _check_pde_heat),
    IdentityTag.PDE_EIGEN_N: CheckSpec(_PQNM, "pde", _check_pde_eigen_n),
    IdentityTag.PDE_EIGEN_M: CheckSpec(_PQNM, "pde", _check_pde_eigen_m),
    IdentityTag.PDE_PRODUCT: CheckSpec(_PQNM, "pde", _check_pde_product),
}


def run_check(tag: IdentityTag, params: Mapping, variant: str) -> CheckResult:
    """Validate the parameter bundle and run the tag's checker."""
    spec = CHECKS[tag]
    missing = [key for key in spec.keys if key not in params]
    extra = [key for key in params if key not in spec.keys]
    if missing or extra:
        raise ValueError(
            f"{tag.value} expects parameters {spec.keys}; "
            f"missing {missing or 'none'}, unexpected {extra or 'none'}"
        )
    if variant not in ("printed", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    return spec.fn(params, variant)
