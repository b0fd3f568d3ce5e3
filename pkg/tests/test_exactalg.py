"""Unit and property tests for the exact polynomial/series kernel."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gouldhopper.exactalg import (
    Poly,
    SeriesArgumentError,
    SeriesUV,
    TruncationError,
    VAR_NAMES,
    as_scalar,
    poly_add,
    poly_diff,
    poly_mul,
    poly_subst,
    rising_factorial,
    series_binomial_neg,
    series_coeff,
    series_exp,
)

Z = Poly.variable("z")
W = Poly.variable("w")
G = Poly.variable("g")


# ---------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------

def test_as_scalar_accepts_exact_types():
    assert as_scalar(3) == F(3)
    assert as_scalar(F(2, 5)) == F(2, 5)


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError, match="exact scalar expected"):
        as_scalar(0.5)


def test_rising_factorial_values():
    # [TRIVIAL] (3)_0 = 1, (3)_2 = 3*4, (1/2)_3 = (1/2)(3/2)(5/2).
    assert rising_factorial(3, 0) == 1
    assert rising_factorial(3, 2) == 12
    assert rising_factorial(F(1, 2), 3) == F(15, 8)
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


# ---------------------------------------------------------------------
# polynomial construction and inspection
# ---------------------------------------------------------------------

def test_constructors_and_zero():
    assert Poly.zero().is_zero()
    assert Poly.const(0).is_zero()
    assert not Poly.one().is_zero()
    assert Poly.const(7).as_fraction() == 7
    assert Poly.monomial({"z": 2, "w": 1}, 0).is_zero()


def test_unknown_variable_raises_value_error():
    with pytest.raises(ValueError, match="unknown variable 'x'"):
        Poly.variable("x")
    with pytest.raises(ValueError, match="unknown variable"):
        Poly.monomial({"x": 1})
    with pytest.raises(ValueError, match="unknown variable"):
        Z.diff("x")
    with pytest.raises(ValueError, match="unknown variable"):
        Z.subst({"x": 1})
    with pytest.raises(ValueError, match="unknown variable"):
        Z.degree("x")
    with pytest.raises(ValueError, match="unknown variable"):
        Z.coefficient("x", 0)


def test_monomial_rejects_negative_exponent():
    with pytest.raises(ValueError, match="negative exponent"):
        Poly.monomial({"z": -1})


def test_degree_and_variables():
    p = Z * Z * W + 2 * G
    assert p.degree("z") == 2
    assert p.degree("w") == 1
    assert p.degree("g") == 1
    assert p.degree("t") == 0
    assert Poly.zero().degree("z") == -1
    assert p.total_degree() == 3
    assert p.variables() == {"z", "w", "g"}


def test_coefficient_extraction():
    p = Z ** 2 * W + 3 * Z * G + 5
    assert p.coefficient("z", 2) == W
    assert p.coefficient("z", 1) == 3 * G
    assert p.coefficient("z", 0).as_fraction() == 5
    assert p.coefficient("w", 2).is_zero()


def test_as_fraction_rejects_nonconstant():
    with pytest.raises(ValueError, match="not constant"):
        Z.as_fraction()


def test_equality_with_scalars():
    assert Poly.const(3) == 3
    assert Poly.zero() == 0
    assert Z != 1


# ---------------------------------------------------------------------
# arithmetic, calculus, substitution
# ---------------------------------------------------------------------

def test_arithmetic_basics():
    assert (Z + W) - W == Z
    assert (Z + 1) * (Z - 1) == Z ** 2 - 1
    assert (-Z) + Z == 0
    assert 2 * Z == Z + Z
    assert (Z * F(1, 2)) * 2 == Z


def test_power():
    assert Z ** 0 == Poly.one()
    assert (Z + W) ** 2 == Z ** 2 + 2 * Z * W + W ** 2
    with pytest.raises(ValueError):
        Z ** -1


def test_diff():
    p = Z ** 3 * W + 4 * Z
    assert p.diff("z") == 3 * Z ** 2 * W + 4
    assert p.diff("z", 2) == 6 * Z * W
    assert p.diff("z", 5).is_zero()
    assert p.diff("w") == Z ** 3
    assert p.diff("z", 0) == p
    with pytest.raises(ValueError, match="negative derivative order"):
        p.diff("z", -1)


def test_subst_simultaneous_swap():
    p = Z ** 2 + W
    swapped = p.subst({"z": W, "w": Z})
    assert swapped == W ** 2 + Z


def test_subst_scalar_and_poly():
    p = Z ** 2 * W + 2 * Z * G
    assert p.subst({"g": F(1, 2)}) == Z ** 2 * W + Z
    assert p.subst({"z": Z + 1}).subst({"z": 0}) == W + 2 * G
    assert p.subst({}) == p


def test_functional_aliases():
    assert poly_add(Z, W) == Z + W
    assert poly_mul(Z, W) == Z * W
    assert poly_diff(Z ** 2, "z") == 2 * Z
    assert poly_subst(Z, {"z": 3}) == 3


# ---------------------------------------------------------------------
# canonical rendering and JSON round-trip
# ---------------------------------------------------------------------

def test_text_canonical_forms():
    # [TRIVIAL] graded-lex order, unit coefficients drop the "1 *".
    assert (Z ** 2 * W + 2 * Z * G).text() == "z^2 w + 2 * z g"
    assert (Z * F(1, 2)).text() == "1/2 * z"
    assert (W - Z).text() == "-z + w"
    assert Poly.zero().text() == "0"
    assert Poly.const(F(-3, 4)).text() == "-3/4"


def test_latex_canonical_forms():
    assert (Z ** 2 * W + 2 * Z * G).latex() == "z^{2}w + 2\\gamma z"
    assert (Z * F(1, 2)).latex() == "\\frac{1}{2}z"
    assert Poly.const(F(-3, 4)).latex() == "-\\frac{3}{4}"
    assert Poly.zero().latex() == "0"
    # \gamma must not swallow a following letter
    assert (G * Z).latex() == "\\gamma z"
    assert (G ** 2).latex() == "\\gamma^{2}"


def test_json_round_trip():
    p = Z ** 2 * W - F(3, 7) * G + 5
    obj = p.to_json_obj()
    assert obj[0] == {"exps": {"z": 2, "w": 1}, "num": "1", "den": "1"}
    assert Poly.from_json_obj(obj) == p
    assert Poly.from_json_obj([]) == 0


# ---------------------------------------------------------------------
# ring axioms as properties
# ---------------------------------------------------------------------

_COEFFS = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def small_polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    total = Poly.zero()
    for _ in range(n_terms):
        exps = {
            "z": draw(st.integers(min_value=0, max_value=3)),
            "w": draw(st.integers(min_value=0, max_value=3)),
            "g": draw(st.integers(min_value=0, max_value=2)),
        }
        total = total + Poly.monomial(exps, draw(_COEFFS))
    return total


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Poly.zero() == a
    assert a * Poly.one() == a
    assert a - a == 0


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys())
def test_diff_is_a_derivation(a, b):
    assert (a * b).diff("z") == a.diff("z") * b + a * b.diff("z")
    assert (a + b).diff("w") == a.diff("w") + b.diff("w")


@settings(max_examples=40, deadline=None)
@given(small_polys(), _COEFFS, _COEFFS)
def test_evaluation_is_a_homomorphism(a, x, y):
    bindings = {"z": x, "w": y, "g": F(1, 3)}
    val = a.subst(bindings)
    assert (a * a).subst(bindings) == val * val
    assert (a + a).subst(bindings) == val + val


# ---------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------

def test_series_from_poly_and_coeff():
    u, v = Poly.variable("u"), Poly.variable("v")
    s = SeriesUV.from_poly(Z * u + W * v + u * v * G, 2)
    assert s.coeff(1, 0) == Z
    assert s.coeff(0, 1) == W
    assert s.coeff(1, 1) == G
    assert s.coeff(0, 0).is_zero()
    assert series_coeff(s, 2, 0).is_zero()
    with pytest.raises(TruncationError, match="beyond order"):
        s.coeff(2, 1)
    with pytest.raises(ValueError):
        s.coeff(-1, 0)


def test_series_truncation_drops_high_order():
    u = Poly.variable("u")
    s = SeriesUV.from_poly(u ** 3, 2)
    assert s.is_zero()


def test_series_arithmetic():
    u = Poly.variable("u")
    s = SeriesUV.from_poly(u, 4)
    sq = s * s
    assert sq.coeff(2, 0) == 1
    assert (sq - sq).is_zero()
    assert (s * Z).coeff(1, 0) == Z
    assert (2 * s).coeff(1, 0) == 2
    assert SeriesUV.one(4).coeff(0, 0) == 1


def test_series_exp_oracle():
    # [DERIVED] exp(zu + wv + g uv): coefficient of u v is z*w + g
    # (from d^2/du dv at 0 of exp evaluated by hand).
    u, v = Poly.variable("u"), Poly.variable("v")
    s = series_exp(Z * u + W * v + G * u * v, 4)
    assert s.coeff(0, 0) == 1
    assert s.coeff(1, 0) == Z
    assert s.coeff(1, 1) == Z * W + G
    assert s.coeff(2, 0) == Z ** 2 * F(1, 2)


def test_series_exp_multiplicativity():
    u, v = Poly.variable("u"), Poly.variable("v")
    a = Z * u
    b = W * v
    lhs = series_exp(a + b, 6)
    rhs = series_exp(a, 6) * series_exp(b, 6)
    assert (lhs - rhs).is_zero()


def test_series_exp_requires_zero_constant_term():
    with pytest.raises(SeriesArgumentError, match="zero constant term"):
        series_exp(Poly.one(), 3)
    with pytest.raises(ValueError, match="order is required"):
        series_exp(Poly.variable("u"))


def test_series_binomial_neg_oracle():
    # [DERIVED] (1 - u)^(-1/2) = 1 + u/2 + 3u^2/8 + 5u^3/16 + ...
    # (generalized binomial series, coefficients (1/2)_k / k!).
    u = Poly.variable("u")
    s = series_binomial_neg(u, F(1, 2), 3)
    assert [s.coeff(k, 0).as_fraction() for k in range(4)] == [
        F(1), F(1, 2), F(3, 8), F(5, 16)
    ]


def test_series_binomial_neg_geometric():
    # [TRIVIAL] exponent 1 gives the geometric series 1/(1 - u).
    u = Poly.variable("u")
    s = series_binomial_neg(u, 1, 5)
    assert all(s.coeff(k, 0) == 1 for k in range(6))


def test_series_binomial_neg_requires_zero_constant_term():
    with pytest.raises(SeriesArgumentError, match="zero constant term"):
        series_binomial_neg(Poly.one(), 1, 3)


def test_series_order_validation():
    with pytest.raises(ValueError, match="order must be >= 0"):
        SeriesUV(-1)


def test_var_alphabet_is_fixed():
    # The kernel's whole alphabet; everything else must be rejected.
    assert set("zwgt") <= set(VAR_NAMES)
    assert {"zp", "wp", "gp", "a", "b", "c", "u", "v"} <= set(VAR_NAMES)
    assert len(VAR_NAMES) == 12
