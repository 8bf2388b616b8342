"""Truncated Laurent series in eps over a pluggable coefficient ring.

A series is a window: exact coefficients for every exponent from ``min_order``
up to (excluding) ``precision``, together with the claim that all lower
exponents vanish exactly.  Nothing is known at or above ``precision``.
Operations propagate the tightest sound window: addition meets at the smaller
precision, a product shifts each factor's precision by the partner's lowest
exponent.  The minimal-subtraction projector keeps the strictly negative
exponents; it is exact only once the window reaches eps^0, hence the
``precision >= 0`` demand.  A window that contains no nonzero coefficient is
normalized to ``min_order = precision - 1`` with a single stored zero.

Three coefficient rings are provided: the rationals, the rational-function
field in delta, and polynomials in a formal variable T.  The T ring hosts the
extended derivation d/d(eps) with T treated as log-like, T' = 1/eps: it sends
alpha(T) eps^k to (alpha'(T) + k alpha(T)) eps^(k-1).  On T-free series the
derivation commutes with the projector; with T present it does not, and the
test suite pins the standard witness instead of pretending otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from renzeta.arith import (
    DeltaRationalFunction,
    poly_add,
    poly_derivative,
    poly_format,
    poly_mul,
    poly_neg,
    poly_trim,
)

__all__ = [
    "PrecisionError",
    "IncompletePolePart",
    "InsufficientPrecision",
    "RationalField",
    "DeltaFunctionField",
    "TPolynomialRing",
    "RATIONAL_FIELD",
    "DELTA_FIELD",
    "T_POLY_RING",
    "TPolynomial",
    "T",
    "TruncatedLaurentSeries",
    "zero_series",
    "one_series",
    "scalar_series",
    "series_from_terms",
    "windows_agree",
]


class PrecisionError(ArithmeticError):
    """A requested operation needs more of the series than the window holds."""


class IncompletePolePart(PrecisionError):
    """Pole-part projection of a window that stops below eps^0."""


class InsufficientPrecision(PrecisionError):
    """A coefficient or constant term was requested outside the window."""


# ---------------------------------------------------------------------------
# Coefficient rings.  A ring object bundles the element domain with the few
# hooks the series needs; elements themselves stay plain values.

class RationalField:
    name = "rational"
    has_variable_coefficients = False

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def is_zero(self, c) -> bool:
        return c == 0

    def coefficient_derivative(self, c):
        return self.zero

    def to_float(self, c) -> float:
        return float(c)

    def format_coefficient(self, c) -> str:
        return str(c)

    def coefficient_to_json(self, c):
        return str(c)

    def coefficient_from_json(self, obj):
        return Fraction(obj)


class DeltaFunctionField:
    name = "delta"
    has_variable_coefficients = False

    zero = DeltaRationalFunction(())
    one = DeltaRationalFunction((Fraction(1),))

    def coerce(self, value):
        if isinstance(value, DeltaRationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return DeltaRationalFunction.from_rational(value)
        raise TypeError(f"cannot coerce {value!r} into Q(delta)")

    def is_zero(self, c) -> bool:
        return c.is_zero()

    def coefficient_derivative(self, c):
        return self.zero

    def to_float(self, c) -> float:
        raise TypeError("delta-dependent coefficients have no float value")

    def format_coefficient(self, c) -> str:
        return str(c)

    def coefficient_to_json(self, c):
        return c.to_json()

    def coefficient_from_json(self, obj):
        if isinstance(obj, str):
            return DeltaRationalFunction.parse(obj)
        return DeltaRationalFunction.from_json(obj)


class TPolynomial:
    """Polynomial in the formal variable T with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", poly_trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TPolynomial is immutable")

    @staticmethod
    def _coerce(value):
        if isinstance(value, TPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return TPolynomial((Fraction(value),))
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "TPolynomial":
        return TPolynomial(poly_derivative(self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TPolynomial(poly_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return TPolynomial(poly_neg(self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TPolynomial(poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return poly_format(self.coeffs, "T")

    def __repr__(self):
        return f"TPolynomial({str(self)!r})"


class TPolynomialRing:
    name = "t-poly"
    has_variable_coefficients = True

    zero = TPolynomial(())
    one = TPolynomial((Fraction(1),))

    def coerce(self, value):
        v = TPolynomial._coerce(value)
        if v is None:
            raise TypeError(f"cannot coerce {value!r} into Q[T]")
        return v

    def is_zero(self, c) -> bool:
        return c.is_zero()

    def coefficient_derivative(self, c):
        # d/d(eps) acts on T as 1/eps; the caller shifts the exponent down
        return c.derivative()

    def to_float(self, c) -> float:
        raise TypeError("T-dependent coefficients have no float value")

    def format_coefficient(self, c) -> str:
        return str(c)

    def coefficient_to_json(self, c):
        return [str(x) for x in c.coeffs]

    def coefficient_from_json(self, obj):
        return TPolynomial(tuple(Fraction(x) for x in obj))


RATIONAL_FIELD = RationalField()
DELTA_FIELD = DeltaFunctionField()
T_POLY_RING = TPolynomialRing()
T = TPolynomial((Fraction(0), Fraction(1)))


# ---------------------------------------------------------------------------
# The series itself.

class TruncatedLaurentSeries:
    """Finitely many exact Laurent coefficients plus an O(eps^precision) tail.

    Invariants: at least one stored coefficient; the leading stored
    coefficient is nonzero unless the window holds nothing but zeros, in
    which case exactly one zero is stored and min_order = precision - 1.
    """

    __slots__ = ("ring", "min_order", "coeffs")

    def __init__(self, ring, min_order: int, coeffs):
        cs = [ring.coerce(c) for c in coeffs]
        if not cs:
            raise ValueError("series window must contain at least one slot")
        while len(cs) > 1 and ring.is_zero(cs[0]):
            cs.pop(0)
            min_order += 1
        if len(cs) == 1 and ring.is_zero(cs[0]):
            cs[0] = ring.zero
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "min_order", min_order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedLaurentSeries is immutable")

    @property
    def precision(self) -> int:
        return self.min_order + len(self.coeffs)

    def is_zero_window(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def coefficient(self, exponent: int):
        """Exact coefficient of eps^exponent; errors above the window."""
        if exponent >= self.precision:
            raise InsufficientPrecision(
                f"coefficient of eps^{exponent} needs precision "
                f"> {exponent}, have {self.precision}")
        if exponent < self.min_order:
            return self.ring.zero
        return self.coeffs[exponent - self.min_order]

    # -- ring operations ----------------------------------------------------

    def _check_partner(self, other):
        if self.ring is not other.ring:
            raise TypeError("series over different coefficient rings")

    def __add__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        self._check_partner(other)
        # both min_orders sit below both precisions, so lo < prec holds
        prec = min(self.precision, other.precision)
        lo = min(self.min_order, other.min_order)
        out = [self.coefficient(k) + other.coefficient(k)
               for k in range(lo, prec)]
        return TruncatedLaurentSeries(self.ring, lo, out)

    def __sub__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TruncatedLaurentSeries(
            self.ring, self.min_order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            self._check_partner(other)
            prec = min(self.precision + other.min_order,
                       other.precision + self.min_order)
            lo = self.min_order + other.min_order
            acc = {k: self.ring.zero for k in range(lo, prec)}
            for i, ca in enumerate(self.coeffs):
                if self.ring.is_zero(ca):
                    continue
                ea = self.min_order + i
                for j, cb in enumerate(other.coeffs):
                    e = ea + other.min_order + j
                    if e >= prec:
                        break
                    acc[e] = acc[e] + ca * cb
            return TruncatedLaurentSeries(
                self.ring, lo, [acc[k] for k in range(lo, prec)])
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        c = self.ring.coerce(value)
        if self.ring.is_zero(c):
            return zero_series(self.ring, self.precision)
        return TruncatedLaurentSeries(
            self.ring, self.min_order, [c * x for x in self.coeffs])

    # -- the projector pair -------------------------------------------------

    def pole_part(self) -> "TruncatedLaurentSeries":
        """Strictly negative exponents, exact; needs the window past eps^0.

        The result keeps the argument's precision: at eps^0 and above it is
        exactly zero, so nothing unknown is left inside the window.
        """
        if self.precision < 0:
            raise IncompletePolePart(
                f"pole part needs precision >= 0, have {self.precision}")
        vals = [self.coefficient(k) if k < 0 else self.ring.zero
                for k in range(self.min_order, self.precision)]
        return TruncatedLaurentSeries(self.ring, self.min_order, vals)

    def finite_part(self) -> "TruncatedLaurentSeries":
        """Complementary projection: exponents >= 0 only."""
        if self.precision < 0:
            raise IncompletePolePart(
                f"finite part needs precision >= 0, have {self.precision}")
        vals = [self.coefficient(k) if k >= 0 else self.ring.zero
                for k in range(self.min_order, self.precision)]
        return TruncatedLaurentSeries(self.ring, self.min_order, vals)

    def constant_term(self):
        if self.precision < 1:
            raise InsufficientPrecision(
                f"constant term needs precision >= 1, have {self.precision}")
        return self.coefficient(0)

    # -- calculus -----------------------------------------------------------

    def derivative(self) -> "TruncatedLaurentSeries":
        """d/d(eps), lowering every exponent; the window shrinks by one.

        Over a constant-coefficient ring this is termwise k c eps^(k-1); in
        the T ring each coefficient also contributes its own T-derivative
        at the lowered exponent, since T differentiates to 1/eps.
        """
        vals = {}
        for k, c in self._terms():
            vals[k - 1] = k * c + self.ring.coefficient_derivative(c)
        lo = self.min_order - 1
        prec = self.precision - 1
        return TruncatedLaurentSeries(
            self.ring, lo, [vals.get(k, self.ring.zero)
                            for k in range(lo, prec)])

    # -- window management --------------------------------------------------

    def truncated(self, new_precision: int) -> "TruncatedLaurentSeries":
        """Forget coefficients at and above new_precision."""
        if new_precision > self.precision:
            raise InsufficientPrecision(
                f"cannot extend precision {self.precision} "
                f"to {new_precision}")
        if new_precision <= self.min_order:
            return zero_series(self.ring, new_precision)
        return TruncatedLaurentSeries(
            self.ring, self.min_order,
            self.coeffs[: new_precision - self.min_order])

    def _terms(self):
        for i, c in enumerate(self.coeffs):
            yield self.min_order + i, c

    def terms(self):
        """Iterate (exponent, coefficient) over the stored window."""
        return self._terms()

    # -- output -------------------------------------------------------------

    def evaluate_float(self, x: float) -> float:
        """Numeric value of the window at eps = x; rational ring only."""
        return sum(self.ring.to_float(c) * x ** k for k, c in self._terms())

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return (self.ring is other.ring
                and self.min_order == other.min_order
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ring), self.min_order, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in self._terms():
            if self.ring.is_zero(c):
                continue
            text = self.ring.format_coefficient(c)
            if k == 0:
                parts.append(text)
            else:
                if " " in text and not (text.startswith("(")
                                        and text.endswith(")")):
                    text = f"({text})"
                power = "eps" if k == 1 else f"eps^{k}"
                parts.append(f"{text}·{power}")
        if not parts:
            parts = ["0"]
        return " + ".join(parts) + f" + O(eps^{self.precision})"

    def __repr__(self):
        return f"<series {self}>"

    def to_json(self) -> dict:
        return {
            "var": "eps",
            "minOrder": self.min_order,
            "precision": self.precision,
            "coeffs": [self.ring.coefficient_to_json(c)
                       for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, ring, obj) -> "TruncatedLaurentSeries":
        coeffs = [ring.coefficient_from_json(c) for c in obj["coeffs"]]
        s = cls(ring, obj["minOrder"], coeffs)
        if s.precision != obj["precision"]:
            raise ValueError("inconsistent precision in series JSON")
        return s


# ---------------------------------------------------------------------------
# Constructors and comparisons.

def zero_series(ring, precision: int) -> TruncatedLaurentSeries:
    """The zero value known modulo eps^precision."""
    return TruncatedLaurentSeries(ring, precision - 1, [ring.zero])


def one_series(ring, precision: int) -> TruncatedLaurentSeries:
    return scalar_series(ring, ring.one, precision)


def scalar_series(ring, value, precision: int) -> TruncatedLaurentSeries:
    if precision < 1:
        raise ValueError("a scalar needs the window to include eps^0")
    vals = [ring.coerce(value)] + [ring.zero] * (precision - 1)
    return TruncatedLaurentSeries(ring, 0, vals)


def series_from_terms(ring, terms, precision: int) -> TruncatedLaurentSeries:
    """Series from an {exponent: coefficient} mapping, zero elsewhere."""
    if terms:
        lo = min(terms)
        if lo >= precision:
            raise ValueError("terms lie at or above the requested precision")
    else:
        lo = precision - 1
    vals = [terms.get(k, ring.zero) for k in range(lo, precision)]
    return TruncatedLaurentSeries(ring, lo, vals)


def windows_agree(a: TruncatedLaurentSeries,
                  b: TruncatedLaurentSeries) -> bool:
    """Equality of the two exact values on the window both sides know."""
    if a.ring is not b.ring:
        return False
    prec = min(a.precision, b.precision)
    lo = min(a.min_order, b.min_order)
    return all(a.coefficient(k) == b.coefficient(k)
               for k in range(lo, prec))
