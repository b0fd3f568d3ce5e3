"""Exact sparse polynomial and truncated power-series arithmetic.

Everything here is computed over arbitrary-precision rationals
(``fractions.Fraction``), so a zero produced by the algebra is a proved
zero, never a rounding accident.

Polynomials live in a fixed, ordered alphabet of ring variables::

    z  w  g  t  zp  wp  gp  a  b  c  u  v

``g`` is the deformation parameter (written gamma in textual interfaces),
``zp``/``wp``/``gp`` are the primed companions of ``z``/``w``/``g``,
``t`` is the evolution variable of the heat module, ``a``/``b``/``c``
are auxiliary scale parameters, and ``u``/``v`` double as the generating
variables of :class:`SeriesUV`.

A :class:`Poly` maps exponent vectors (one slot per alphabet entry) to
nonzero coefficients; the zero polynomial stores nothing.  The canonical
term order is graded lexicographic over the alphabet above - compare
total degree first, then the exponent vectors - read descending, and
every serialization (text, LaTeX, JSON, CSV) follows it, which is what
makes the output of two identical runs byte-for-byte equal.

No division, gcd, or factorization is provided: the identity engine
built on top only ever needs ring operations, substitution, formal
differentiation, and truncated series in ``u``, ``v``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int]

VAR_NAMES: tuple[str, ...] = ("z", "w", "g", "t", "zp", "wp", "gp", "a", "b", "c", "u", "v")
VAR_INDEX: dict[str, int] = {name: i for i, name in enumerate(VAR_NAMES)}

_NVARS = len(VAR_NAMES)
_ZERO_EXPS = (0,) * _NVARS

# Presentation order used only by the LaTeX renderer: parameters first,
# then the main variables, so a term prints as "2\gamma z" rather than
# "2z\gamma".  Term sorting is untouched by this.
_LATEX_VAR_ORDER: tuple[str, ...] = ("g", "gp", "t", "a", "b", "c", "z", "w", "zp", "wp", "u", "v")
_LATEX_NAMES: dict[str, str] = {
    "z": "z", "w": "w", "g": "\\gamma", "t": "t",
    "zp": "z'", "wp": "w'", "gp": "\\gamma'",
    "a": "a", "b": "b", "c": "c", "u": "u", "v": "v",
}
_CONTROL_WORD_TAIL = re.compile(r"\\[A-Za-z]+$")


class TruncationError(ValueError):
    """A series coefficient beyond the truncation order was requested."""


class SeriesArgumentError(ValueError):
    """A series argument violates a precondition (nonzero constant term)."""


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact scalar expected, got {type(value).__name__}")


def rising_factorial(x: ScalarLike, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError("rising_factorial needs k >= 0")
    acc = Fraction(1)
    xf = as_scalar(x)
    for i in range(k):
        acc *= xf + i
    return acc


def _var_index(name: str) -> int:
    try:
        return VAR_INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}") from None


class Poly:
    """Immutable sparse multivariate polynomial with Fraction coefficients.

    Instances are never mutated after construction; all operations return
    new polynomials, so sharing (and caching) them is safe.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        # Internal: callers must pass already-normalized data (no zero
        # coefficients, exponent tuples of full alphabet length).
        self._terms: dict[tuple[int, ...], Fraction] = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, value: ScalarLike) -> "Poly":
        c = as_scalar(value)
        if c == 0:
            return cls()
        return cls({_ZERO_EXPS: c})

    @classmethod
    def one(cls) -> "Poly":
        return cls({_ZERO_EXPS: Fraction(1)})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        """The polynomial consisting of the single variable `name`."""
        exps = [0] * _NVARS
        exps[_var_index(name)] = 1
        return cls({tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: ScalarLike = 1) -> "Poly":
        """Build coeff * prod(var^e) from a {name: exponent} mapping."""
        c = as_scalar(coeff)
        if c == 0:
            return cls()
        vec = [0] * _NVARS
        for name, e in exps.items():
            if e < 0:
                raise ValueError(f"negative exponent for {name}")
            vec[_var_index(name)] = e
        return cls({tuple(vec): c})

    # -- inspection ---------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order: graded lex, leading term first."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, name: str) -> int:
        """Largest exponent of `name`; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        idx = _var_index(name)
        return max(exps[idx] for exps in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def variables(self) -> set[str]:
        used: set[str] = set()
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(VAR_NAMES[i])
        return used

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXPS, Fraction(0))

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial; raises if any variable is left."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and _ZERO_EXPS in self._terms:
            return self._terms[_ZERO_EXPS]
        raise ValueError("polynomial is not constant")

    def coefficient(self, name: str, power: int) -> "Poly":
        """The coefficient of name^power, itself a polynomial without `name`."""
        idx = _var_index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            if exps[idx] == power:
                reduced = list(exps)
                reduced[idx] = 0
                out[tuple(reduced)] = c
        return Poly(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly | ScalarLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other: "Poly | ScalarLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Poly | ScalarLike") -> "Poly":
        return (-self) + other

    def __mul__(self, other: "Poly | ScalarLike") -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if c == 0:
                return Poly()
            return Poly({exps: c * v for exps, v in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus and substitution ------------------------------------

    def diff(self, name: str, order: int = 1) -> "Poly":
        """Formal partial derivative d^order / d name^order."""
        if order < 0:
            raise ValueError("negative derivative order")
        if order == 0:
            return self
        idx = _var_index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[idx]
            if e < order:
                continue
            factor = 1
            for i in range(order):
                factor *= e - i
            reduced = list(exps)
            reduced[idx] = e - order
            out[tuple(reduced)] = c * factor
        return Poly(out)

    def subst(self, bindings: Mapping[str, "Poly | ScalarLike"]) -> "Poly":
        """Substitute polynomials (or exact scalars) for variables.

        All substitutions happen simultaneously, so swapping two
        variables with ``{"z": w, "w": z}`` behaves as expected.
        """
        if not bindings:
            return self
        normalized: dict[int, Poly] = {}
        for name, value in bindings.items():
            normalized[_var_index(name)] = value if isinstance(value, Poly) else Poly.const(value)
        powers: dict[int, list[Poly]] = {idx: [Poly.one()] for idx in normalized}
        result = Poly()
        for exps, coeff in self._terms.items():
            kept = list(exps)
            acc: Poly | None = None
            for idx, repl in normalized.items():
                e = exps[idx]
                if not e:
                    continue
                kept[idx] = 0
                cache = powers[idx]
                while len(cache) <= e:
                    cache.append(cache[-1] * repl)
                acc = cache[e] if acc is None else acc * cache[e]
            base = Poly({tuple(kept): coeff})
            result = result + (base if acc is None else base * acc)
        return result

    # -- serialization ------------------------------------------------

    def text(self) -> str:
        """Canonical plain-text form, e.g. ``z^2 w + 2 * g z``.

        Round-trips through the expression parser in :mod:`.cli`.
        """
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = " ".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VAR_NAMES, exps)
                if e
            )
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag} * {mono}"
            else:
                body = str(mag)
            if position == 0:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(chunks)

    def latex(self) -> str:
        """LaTeX form, e.g. ``z^{2}w + 2\\gamma z``."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for name in _LATEX_VAR_ORDER:
                e = exps[VAR_INDEX[name]]
                if not e:
                    continue
                sym = _LATEX_NAMES[name]
                factors.append(sym if e == 1 else f"{sym}^{{{e}}}")
            mono = ""
            for factor in factors:
                # keep a control word like \gamma from swallowing the next letter
                if mono and _CONTROL_WORD_TAIL.search(mono):
                    mono += " "
                mono += factor
            mag = abs(coeff)
            if mag.denominator == 1:
                mag_str = str(mag.numerator)
            else:
                mag_str = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if mono:
                body = mono if mag == 1 else f"{mag_str}{mono}"
            else:
                body = mag_str
            if position == 0:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(chunks)

    def to_json_obj(self) -> list[dict]:
        """JSON-ready form: a list of terms in canonical order.

        Each term is ``{"exps": {var: int, ...}, "num": str, "den": str}``
        with numerator/denominator as exact decimal strings.
        """
        out = []
        for exps, coeff in self.sorted_terms():
            out.append({
                "exps": {name: e for name, e in zip(VAR_NAMES, exps) if e},
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
            })
        return out

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "Poly":
        total = cls()
        for term in obj:
            coeff = Fraction(int(term["num"]), int(term["den"]))
            total = total + cls.monomial(dict(term["exps"]), coeff)
        return total

    def __repr__(self) -> str:
        return f"Poly({self.text()})"


class SeriesUV:
    """Bivariate power series in u, v truncated at total order ``order``.

    Coefficients are :class:`Poly` values free of u and v; the pair
    ``(i, j)`` indexes the coefficient of ``u^i v^j`` and only pairs with
    ``i + j <= order`` are stored.  Multiplication silently drops
    products beyond the truncation order.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], Poly] | None = None):
        if order < 0:
            raise ValueError("series order must be >= 0")
        self._order = order
        self._coeffs: dict[tuple[int, int], Poly] = {}
        if coeffs:
            for (i, j), poly in coeffs.items():
                if i + j <= order and not poly.is_zero():
                    self._coeffs[(i, j)] = poly

    @property
    def order(self) -> int:
        return self._order

    @classmethod
    def one(cls, order: int) -> "SeriesUV":
        return cls(order, {(0, 0): Poly.one()})

    @classmethod
    def from_poly(cls, poly: Poly, order: int) -> "SeriesUV":
        """Read u/v exponents of a polynomial off as series indices.

        Terms of total u,v-degree beyond `order` are dropped.
        """
        ui = VAR_INDEX["u"]
        vi = VAR_INDEX["v"]
        coeffs: dict[tuple[int, int], Poly] = {}
        for exps, c in poly.terms():
            i, j = exps[ui], exps[vi]
            if i + j > order:
                continue
            stripped = list(exps)
            stripped[ui] = 0
            stripped[vi] = 0
            key = (i, j)
            coeffs[key] = coeffs.get(key, Poly.zero()) + Poly({tuple(stripped): c})
        return cls(order, coeffs)

    def coeff(self, i: int, j: int) -> Poly:
        """Coefficient of u^i v^j; raises beyond the truncation order."""
        if i < 0 or j < 0:
            raise ValueError("series indices must be >= 0")
        if i + j > self._order:
            raise TruncationError(f"coefficient ({i},{j}) lies beyond order {self._order}")
        return self._coeffs.get((i, j), Poly.zero())

    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self) -> Iterator[tuple[tuple[int, int], Poly]]:
        return iter(self._coeffs.items())

    def to_poly(self) -> Poly:
        """Fold the series back into a polynomial carrying u, v factors."""
        total = Poly.zero()
        for (i, j), poly in self._coeffs.items():
            total = total + poly * Poly.monomial({"u": i, "v": j})
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesUV):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SeriesUV") -> "SeriesUV":
        if not isinstance(other, SeriesUV):
            return NotImplemented
        order = min(self._order, other._order)
        out: dict[tuple[int, int], Poly] = {}
        for key in set(self._coeffs) | set(other._coeffs):
            if key[0] + key[1] > order:
                continue
            s = self._coeffs.get(key, Poly.zero()) + other._coeffs.get(key, Poly.zero())
            if not s.is_zero():
                out[key] = s
        return SeriesUV(order, out)

    def __neg__(self) -> "SeriesUV":
        return SeriesUV(self._order, {k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other: "SeriesUV") -> "SeriesUV":
        return self + (-other)

    def __mul__(self, other: "SeriesUV | Poly | ScalarLike") -> "SeriesUV":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if isinstance(other, Poly):
            if {"u", "v"} & other.variables():
                other = SeriesUV.from_poly(other, self._order)
            else:
                return SeriesUV(self._order, {k: p * other for k, p in self._coeffs.items()})
        if not isinstance(other, SeriesUV):
            return NotImplemented
        order = min(self._order, other._order)
        out: dict[tuple[int, int], Poly] = {}
        for (i1, j1), p1 in self._coeffs.items():
            for (i2, j2), p2 in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > order:
                    continue
                key = (i, j)
                s = out.get(key, Poly.zero()) + p1 * p2
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return SeriesUV(order, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"SeriesUV(order={self._order}, {self.to_poly().text()})"


# -- module-level operations ------------------------------------------
#
# Thin functional aliases over the methods above; these are the names the
# rest of the package (and external callers) program against.

def poly_add(a: Poly, b: Poly) -> Poly:
    """Sum of two polynomials."""
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Product of two polynomials."""
    return a * b


def poly_diff(a: Poly, name: str, order: int = 1) -> Poly:
    """Formal partial derivative of `a` with respect to `name`."""
    return a.diff(name, order)


def poly_subst(a: Poly, bindings: Mapping[str, Poly | ScalarLike]) -> Poly:
    """Simultaneous substitution of polynomials/scalars for variables."""
    return a.subst(bindings)


def series_coeff(series: SeriesUV, i: int, j: int) -> Poly:
    """Coefficient of u^i v^j in a truncated series."""
    return series.coeff(i, j)


def series_exp(arg: SeriesUV | Poly, order: int | None = None) -> SeriesUV:
    """exp(arg) = sum_k arg^k / k!, truncated at the series order.

    The argument must have zero constant term, otherwise the exponential
    would not be a polynomial-coefficient series.
    """
    if isinstance(arg, Poly):
        if order is None:
            raise ValueError("order is required when the argument is a Poly")
        arg = SeriesUV.from_poly(arg, order)
    if not arg.coeff(0, 0).is_zero():
        raise SeriesArgumentError("series_exp needs a zero constant term")
    acc = SeriesUV.one(arg.order)
    power = SeriesUV.one(arg.order)
    for k in range(1, arg.order + 1):
        power = power * arg * Fraction(1, k)
        if power.is_zero():
            break
        acc = acc + power
    return acc


def series_binomial_neg(base: Poly | SeriesUV, exponent: ScalarLike, order: int) -> SeriesUV:
    """(1 - base)^(-exponent) = sum_k (exponent)_k base^k / k!.

    Uses the rising factorial (x)_k = x (x+1) ... (x+k-1); `base` must
    have zero constant term.
    """
    if isinstance(base, Poly):
        base = SeriesUV.from_poly(base, order)
    if not base.coeff(0, 0).is_zero():
        raise SeriesArgumentError("series_binomial_neg needs a zero constant term")
    a = as_scalar(exponent)
    acc = SeriesUV.one(order)
    power = SeriesUV.one(order)
    for k in range(1, order + 1):
        power = power * base
        if power.is_zero():
            break
        acc = acc + power * (rising_factorial(a, k) / math.factorial(k))
    return acc
