"""Truncated formal power series in one variable over an exact coefficient ring.

A QSeries stores the coefficients of q^0 .. q^order densely.  Coefficients may
live in any exact commutative ring that supports +, -, * among themselves and
with int/Fraction scalars: Fraction itself, LaurentPoly, or another QSeries in
a different variable (nested series).  All arithmetic is exact; there is no
floating point anywhere.

Truncation is explicit: binary operations truncate to the minimum of the two
operand orders and never extend a series silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class NonUnitConstantTerm(ArithmeticError):
    """Inversion of a series whose constant term is not a unit."""


class BadConstantTerm(ArithmeticError):
    """exp of a series with nonzero constant term, or log of one not equal 1."""


def _inv_coeff(c):
    """Multiplicative inverse of a coefficient-ring element."""
    if isinstance(c, (int, Fraction)):
        if c == 0:
            raise NonUnitConstantTerm("constant term is zero")
        return Fraction(1) / Fraction(c)
    invert = getattr(c, "inverse", None) or getattr(c, "inv", None)
    if invert is None:
        raise NonUnitConstantTerm(f"constant term {c!r} is not invertible")
    try:
        return invert()
    except ArithmeticError as exc:
        raise NonUnitConstantTerm(f"constant term {c!r} is not invertible") from exc


class QSeries:
    """sum(coeffs[i] * var**i for i <= order), an element of R[[var]]/var^(order+1)."""

    def __init__(self, coeffs, order=None, var="q"):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient to fix the ring")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        zero = coeffs[0] * 0
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(zero)
        self.coeffs = coeffs
        self.order = order
        self.var = var

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, order, var="q"):
        return cls([value], order, var)

    @classmethod
    def one(cls, order, var="q"):
        return cls.constant(Fraction(1), order, var)

    @classmethod
    def zero(cls, order, var="q"):
        return cls.constant(Fraction(0), order, var)

    @classmethod
    def gen(cls, order, var="q"):
        """The series var itself."""
        s = cls.zero(order, var)
        if order >= 1:
            s.coeffs[1] = Fraction(1)
        return s

    # -- basics ------------------------------------------------------------

    def _ring_zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, i):
        """Coefficient of var**i (0 for i < 0; IndexError beyond the order)."""
        if i < 0:
            return self._ring_zero()
        if i > self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1], order, self.var)

    def map_coeffs(self, f):
        """Apply f to every coefficient (e.g. a variable specialization)."""
        return QSeries([f(c) for c in self.coeffs], self.order, self.var)

    def is_same_ring(self, other):
        return isinstance(other, QSeries) and other.var == self.var

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other):
        if self.is_same_ring(other):
            if self.order != other.order:
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, QSeries):
            return NotImplemented
        # scalar: equal iff constant series with that constant term
        return self.coeffs[0] == other and not any(bool(c) for c in self.coeffs[1:])

    def __hash__(self):
        raise TypeError("QSeries is unhashable")

    def __repr__(self):
        shown = ", ".join(repr(c) for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"QSeries({self.var}; order={self.order}; [{shown}{tail}])"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if self.is_same_ring(other):
            n = min(self.order, other.order)
            return QSeries(
                [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n, self.var
            )
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return QSeries(coeffs, self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not self.is_same_ring(other):
            return QSeries([c * other for c in self.coeffs], self.order, self.var)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            acc = a[0] * b[i]
            for j in range(1, i + 1):
                acc = acc + a[j] * b[i - j]
            out.append(acc)
        return QSeries(out, n, self.var)

    def __rmul__(self, other):
        return QSeries([other * c for c in self.coeffs], self.order, self.var)

    def __truediv__(self, other):
        if self.is_same_ring(other):
            return self * other.inv()
        return self * _inv_coeff(other)

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            return self.inv() ** (-e)
        result = QSeries([self._ring_zero() + 1], self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inv(self):
        """Multiplicative inverse; requires a unit constant term."""
        c0inv = _inv_coeff(self.coeffs[0])
        a = self.coeffs
        out = [c0inv]
        for n in range(1, self.order + 1):
            acc = a[1] * out[n - 1]
            for j in range(2, n + 1):
                acc = acc + a[j] * out[n - j]
            out.append(-(c0inv * acc))
        return QSeries(out, self.order, self.var)

    def exp(self):
        """Formal exponential; requires constant term 0 and a ring containing Q."""
        a = self.coeffs
        if bool(a[0]):
            raise BadConstantTerm("exp needs constant term 0")
        one = self._ring_zero() + 1
        out = [one]
        for n in range(1, self.order + 1):
            acc = self._ring_zero()
            for j in range(1, n + 1):
                acc = acc + (j * a[j]) * out[n - j]
            out.append(Fraction(1, n) * acc)
        return QSeries(out, self.order, self.var)

    def log(self):
        """Formal logarithm; requires constant term 1."""
        a = self.coeffs
        if not a[0] == 1:
            raise BadConstantTerm("log needs constant term 1")
        out = [self._ring_zero()]
        for n in range(1, self.order + 1):
            acc = n * a[n]
            for j in range(1, n):
                acc = acc - (j * out[j]) * a[n - j]
            out.append(Fraction(1, n) * acc)
        return QSeries(out, self.order, self.var)


def binomial_coeff(e, j):
    """C(e, j) for integer e of either sign and j >= 0, as an exact integer."""
    if j < 0:
        return 0
    if e >= 0:
        return comb(e, j) if j <= e else 0
    # C(-m, j) = (-1)^j C(m+j-1, j)
    return (-1) ** j * comb(-e + j - 1, j)


def eta_product(exponent, order):
    """prod_{n=1}^{order} (1 - q^n)^exponent over Fraction coefficients.

    exponent = -1 gives the partition-number generating function.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, order + 1):
        # multiply in (1 - q^n)^e expanded by the binomial series
        factor = {}
        j = 0
        while j * n <= order:
            factor[j * n] = binomial_coeff(exponent, j) * (-1) ** j
            j += 1
        new = [0] * (order + 1)
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            for m, f in factor.items():
                if i + m > order:
                    break
                new[i + m] += c * f
        coeffs = new
    return QSeries([Fraction(c) for c in coeffs], order)


def geom_factor_product(coeff_at, exponent, order):
    """prod_{n=1}^{order} (1 + coeff_at(n) * q^n)^exponent, truncated at order.

    coeff_at(n) may return any coefficient-ring element (typically a
    LaurentPoly); the factor's q^0 part is 1 by construction.  Each factor is
    expanded by the generalized binomial series, which is exact for integer
    exponents of either sign.
    """
    result = None
    for n in range(1, order + 1):
        c = coeff_at(n)
        terms = [c * 0 + 1]
        power = c * 0 + 1
        j = 1
        while j * n <= order:
            power = power * c
            terms.append(binomial_coeff(exponent, j) * power)
            j += 1
        factor_coeffs = [c * 0] * (order + 1)
        for j, t in enumerate(terms):
            factor_coeffs[j * n] = t
        factor = QSeries(factor_coeffs, order)
        result = factor if result is None else result * factor
    if result is None:
        return QSeries([Fraction(1)], order)
    return result
