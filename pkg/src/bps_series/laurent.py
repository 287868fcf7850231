"""Finite-support Laurent polynomials in one or two variables over Fraction.

Exponents are integer tuples (one entry per variable); by convention a single
variable prints as t and two variables print as tL, tR.  The exponent of a
variable encodes twice the Lefschetz weight 2H, so spin-m weight spaces sit at
integer exponents even for half-integer m.  Zero coefficients are never
stored.
"""

from __future__ import annotations

from fractions import Fraction

_VAR_NAMES = {1: ("t",), 2: ("tL", "tR")}


class LaurentPoly:
    """Exact Laurent polynomial: {exponent tuple: nonzero Fraction}."""

    def __init__(self, terms=None, nvars=1):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if isinstance(exps, int):
                    exps = (exps,)
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} has wrong arity for {nvars} vars")
                c = Fraction(c)
                if c:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value, nvars=1):
        return cls({(0,) * nvars: Fraction(value)}, nvars)

    @classmethod
    def var(cls, index=0, nvars=1, power=1, coeff=1):
        exps = [0] * nvars
        exps[index] = power
        return cls({tuple(exps): Fraction(coeff)}, nvars)

    # -- basics ------------------------------------------------------------

    def coeff(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        return self.terms.get(tuple(exps), Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        raise TypeError("LaurentPoly is unhashable")

    def __repr__(self):
        if not self.terms:
            return "0"
        names = _VAR_NAMES.get(self.nvars) or tuple(
            f"x{i}" for i in range(self.nvars)
        )
        parts = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        out = LaurentPoly(nvars=self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly(nvars=self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly(nvars=self.nvars)
            out = LaurentPoly(nvars=self.nvars)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        get = terms.get
        nv = self.nvars
        if nv == 1:
            for (e1,), c1 in self.terms.items():
                for (e2,), c2 in o.terms.items():
                    k = (e1 + e2,)
                    s = get(k, 0) + c1 * c2
                    terms[k] = s
        else:
            for e1, c1 in self.terms.items():
                for e2, c2 in o.terms.items():
                    k = tuple(a + b for a, b in zip(e1, e2))
                    s = get(k, 0) + c1 * c2
                    terms[k] = s
        out = LaurentPoly(nvars=nv)
        out.terms = {e: c for e, c in terms.items() if c}
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentPoly.const(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            if e > 1:
                base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Inverse of a unit (a single monomial)."""
        if len(self.terms) != 1:
            raise ArithmeticError("only monomials are invertible Laurent polynomials")
        (exps, c), = self.terms.items()
        return LaurentPoly({tuple(-e for e in exps): Fraction(1) / c}, self.nvars)

    # -- structure queries ---------------------------------------------------

    def max_exp(self, var=0):
        """Largest exponent of the given variable (polynomial must be nonzero)."""
        return max(e[var] for e in self.terms)

    def flip(self, var=0):
        """Substitute x_var -> x_var^(-1)."""
        out = LaurentPoly(nvars=self.nvars)
        out.terms = {
            tuple(-x if i == var else x for i, x in enumerate(e)): c
            for e, c in self.terms.items()
        }
        return out

    def is_symmetric(self, var=0):
        return self.flip(var) == self

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def coeff_of_var_power(self, var, power):
        """Collect the coefficient of x_var^power as a polynomial in the others.

        With one variable the result is a Fraction; with two it is a one-variable
        LaurentPoly in the remaining variable.
        """
        if self.nvars == 1:
            return self.coeff((power,))
        rest = {}
        for exps, c in self.terms.items():
            if exps[var] == power:
                key = tuple(x for i, x in enumerate(exps) if i != var)
                rest[key] = c
        return LaurentPoly(rest, self.nvars - 1)

    def subs_one(self, var):
        """Set x_var = 1, returning a polynomial in the remaining variables
        (a Fraction if no variable remains)."""
        if self.nvars == 1:
            if var != 0:
                raise ValueError("no such variable")
            return sum(self.terms.values(), Fraction(0))
        collected = {}
        for exps, c in self.terms.items():
            key = tuple(x for i, x in enumerate(exps) if i != var)
            collected[key] = collected.get(key, Fraction(0)) + c
        return LaurentPoly(collected, self.nvars - 1)

    def diagonal(self):
        """Set all variables equal, returning a one-variable polynomial in the
        total exponent (tL = tR = t)."""
        collected = {}
        for exps, c in self.terms.items():
            key = (sum(exps),)
            collected[key] = collected.get(key, Fraction(0)) + c
        return LaurentPoly(collected, 1)

    def eval_ones(self):
        """Evaluate every variable at 1."""
        return sum(self.terms.values(), Fraction(0))

    def embed(self, nvars, var):
        """View a one-variable polynomial as living in variable `var` of an
        nvars-variable ring."""
        if self.nvars != 1:
            raise ValueError("embed expects a one-variable polynomial")
        terms = {}
        for (e,), c in self.terms.items():
            exps = [0] * nvars
            exps[var] = e
            terms[tuple(exps)] = c
        return LaurentPoly(terms, nvars)
