"""The BPS <-> Gromov-Witten transform over a lattice of curve classes.

The defining identity, as an equality of formal series in lambda and q,

    sum_{g, beta} N_g(beta) q^beta lam^(2g-2)
        = sum_{h, beta, k>=1} n_h(beta) (1/k) (2 sin(k lam/2))^(2h-2) q^(k beta),

is used in both directions: gw_from_gv assembles the right side; gv_from_gw
inverts it class by class in increasing degree, peeling h upward at k = 1 and
checking that every solved n_h(beta) is an integer.

Curve classes are tuples in the nonnegative cone Z_{>=0}^rank with a positive
degree functional (componentwise weights).  Table windows: a BPS table's
window is a support bound (entries outside are zero); a GW table's window is
a truncation (entries outside are unknown, and reading them raises
InsufficientTruncation).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

GW = "gw"
BPS = "bps"


class InsufficientTruncation(ValueError):
    """A value outside a table's truncation window was required."""


class NonIntegralBPS(ValueError):
    """gv_from_gw solved a BPS invariant that is not an integer."""

    def __init__(self, cls, h, value):
        super().__init__(f"n_{h}{cls} = {value} is not an integer")
        self.cls = cls
        self.h = h
        self.value = value


class LambdaSeries:
    """Even Laurent series in lambda with exponents -2, 0, 2, ..., <= order.

    Stored as {even exponent: Fraction}; absent exponents are zero.
    """

    def __init__(self, coeffs=None, order=0):
        self.order = order
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if e < -2 or e % 2:
                    raise ValueError(f"lambda exponent {e} out of range")
                c = Fraction(c)
                if c and e <= order:
                    self.coeffs[e] = c

    def __getitem__(self, e):
        return self.coeffs.get(e, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LambdaSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        order = min(self.order, other.order)
        out = LambdaSeries(order=order)
        for e in set(self.coeffs) | set(other.coeffs):
            if e <= order:
                c = self[e] + other[e]
                if c:
                    out.coeffs[e] = c
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        out = LambdaSeries(order=self.order)
        scalar = Fraction(scalar)
        if scalar:
            out.coeffs = {e: scalar * c for e, c in self.coeffs.items()}
        return out

    def __repr__(self):
        parts = [f"{c}*lam^{e}" for e, c in sorted(self.coeffs.items())]
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _sin_power_cached(k, exponent, lambda_order):
    # 2 sin(k lam / 2) = k lam * u(lam^2),
    # u(y) = sum_m (-1)^m (k^2/4)^m y^m / (2m+1)!,  u(0) = 1.
    m_max = (lambda_order + 2 - exponent) // 2 + 1
    u = []
    for m in range(m_max + 1):
        u.append(Fraction((-1) ** m * k ** (2 * m), 4**m * factorial(2 * m + 1)))
    # u^exponent as a truncated power series in y = lam^2
    ue = _poly_power(u, exponent, m_max)
    coeffs = {}
    for m, c in enumerate(ue):
        e = exponent + 2 * m
        if -2 <= e <= lambda_order and c:
            coeffs[e] = Fraction(k) ** exponent * c
    return tuple(sorted(coeffs.items()))


def _poly_power(u, e, m_max):
    """[y^m] u(y)^e for m <= m_max, with u[0] = 1 and integer e of any sign."""
    one = [Fraction(1)] + [Fraction(0)] * m_max

    def mul(a, b):
        out = [Fraction(0)] * (m_max + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(m_max + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return out

    def inv(a):
        out = [Fraction(1)] + [Fraction(0)] * m_max
        for n in range(1, m_max + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                acc += a[j] * out[n - j]
            out[n] = -acc
        return out

    base = u[: m_max + 1]
    if e < 0:
        base = inv(base)
        e = -e
    result = one
    while e:
        if e & 1:
            result = mul(result, base)
        if e > 1:
            base = mul(base, base)
        e >>= 1
    return result


def sin_power_series(k, exponent, lambda_order):
    """Exact lambda-expansion of (2 sin(k lam/2))^exponent up to lam^lambda_order.

    exponent = 2h - 2 is even; for h = 0 the series starts at lam^(-2).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if exponent % 2 or exponent < -2:
        raise ValueError("exponent must be even and >= -2")
    out = LambdaSeries(order=lambda_order)
    out.coeffs = dict(_sin_power_cached(k, exponent, lambda_order))
    return out


class InvariantTable:
    """Map (genus-or-h, curve class) -> value, with truncation metadata.

    kind "gw": values are Fractions; entries outside the window are unknown.
    kind "bps": values are integers; entries outside the window are zero
    (the window is a support bound).
    """

    def __init__(self, kind, rank, degree_weights, max_genus, max_degree, entries=None):
        if kind not in (GW, BPS):
            raise ValueError(f"kind must be {GW!r} or {BPS!r}")
        if len(degree_weights) != rank or any(w <= 0 for w in degree_weights):
            raise ValueError("need one positive degree weight per lattice direction")
        self.kind = kind
        self.rank = rank
        self.degree_weights = tuple(degree_weights)
        self.max_genus = max_genus
        self.max_degree = max_degree
        self.entries = {}
        for (g, cls), v in (entries or {}).items():
            self.set(g, cls, v)

    def degree(self, cls):
        return sum(w * c for w, c in zip(self.degree_weights, cls))

    def _check_class(self, cls):
        cls = tuple(cls)
        if len(cls) != self.rank or any(c < 0 for c in cls):
            raise ValueError(f"{cls} is not in the rank-{self.rank} effective cone")
        return cls

    def set(self, g, cls, value):
        cls = self._check_class(cls)
        if g < 0:
            raise ValueError("genus must be >= 0")
        if g > self.max_genus or self.degree(cls) > self.max_degree:
            raise InsufficientTruncation(
                f"({g}, {cls}) lies outside the table window "
                f"(max_genus={self.max_genus}, max_degree={self.max_degree})"
            )
        if self.kind == BPS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise NonIntegralBPS(cls, g, value)
                value = int(value)
            value = int(value)
        else:
            value = Fraction(value)
        if value:
            self.entries[(g, cls)] = value
        else:
            self.entries.pop((g, cls), None)

    def get(self, g, cls):
        """Value at (g, cls); zero when absent inside the window.  Outside the
        window: zero for BPS tables (support bound), InsufficientTruncation
        for GW tables (unknown)."""
        cls = self._check_class(cls)
        zero = 0 if self.kind == BPS else Fraction(0)
        if g <= self.max_genus and self.degree(cls) <= self.max_degree:
            return self.entries.get((g, cls), zero)
        if self.kind == BPS:
            return zero
        raise InsufficientTruncation(
            f"N_{g}{cls} is outside the computed window "
            f"(max_genus={self.max_genus}, max_degree={self.max_degree})"
        )

    def classes(self, max_degree=None):
        """All nonzero classes of the cone with degree <= max_degree, ordered by
        (degree, components)."""
        if max_degree is None:
            max_degree = self.max_degree
        return iter_classes(self.rank, self.degree_weights, max_degree)

    def __eq__(self, other):
        return (
            isinstance(other, InvariantTable)
            and self.kind == other.kind
            and self.rank == other.rank
            and self.degree_weights == other.degree_weights
            and self.max_genus == other.max_genus
            and self.max_degree == other.max_degree
            and self.entries == other.entries
        )

    def __repr__(self):
        return (
            f"InvariantTable({self.kind}, rank={self.rank}, "
            f"max_genus={self.max_genus}, max_degree={self.max_degree}, "
            f"{len(self.entries)} entries)"
        )


def iter_classes(rank, degree_weights, max_degree):
    """Yield every nonzero class in Z_{>=0}^rank with degree <= max_degree,
    ordered by (degree, components)."""
    out = []

    def rec(prefix, remaining_budget):
        i = len(prefix)
        if i == rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        w = degree_weights[i]
        for c in range(remaining_budget // w + 1):
            rec(prefix + [c], remaining_budget - c * w)

    rec([], max_degree)
    deg = lambda cls: sum(w * c for w, c in zip(degree_weights, cls))
    out.sort(key=lambda cls: (deg(cls), cls))
    return out


def _divide_class(cls, k):
    """cls / k when every component is divisible, else None."""
    if any(c % k for c in cls):
        return None
    return tuple(c // k for c in cls)


def gw_from_gv(bps, lambda_order, degree_order=None):
    """Assemble the Gromov-Witten table from a BPS table.

    For every entry n_h(beta) and every k with deg(k beta) <= degree_order,
    add n_h(beta) (1/k) (2 sin(k lam/2))^(2h-2) at class k*beta; then
    N_g(beta) is the lam^(2g-2) coefficient.  Exact for every genus with
    2g - 2 <= lambda_order.
    """
    if degree_order is None:
        degree_order = bps.max_degree
    if bps.kind != BPS:
        raise ValueError("gw_from_gv expects a BPS table")
    if degree_order > bps.max_degree:
        raise InsufficientTruncation(
            f"BPS table only covers degree <= {bps.max_degree}, need {degree_order}"
        )
    max_genus = (lambda_order + 2) // 2
    acc = {}  # class -> LambdaSeries
    for (h, beta), n in sorted(bps.entries.items()):
        if not n:
            continue
        deg = bps.degree(beta)
        k = 1
        while k * deg <= degree_order:
            target = tuple(k * c for c in beta)
            contrib = (n * Fraction(1, k)) * sin_power_series(
                k, 2 * h - 2, lambda_order
            )
            acc[target] = acc.get(target, LambdaSeries(order=lambda_order)) + contrib
            k += 1
    gw = InvariantTable(GW, bps.rank, bps.degree_weights, max_genus, degree_order)
    for beta, series in acc.items():
        for g in range(max_genus + 1):
            c = series[2 * g - 2]
            if c:
                gw.set(g, beta, c)
    return gw


def gv_from_gw(gw, lambda_order, degree_order=None):
    """Invert the transform: the unique BPS table reproducing gw.

    Proceeds in increasing degree of beta; at each class, subtract every
    k >= 2 multicover contribution of the already-solved classes, then peel
    h = 0, 1, ... from the k = 1 series (2 sin(lam/2))^(2h-2), whose leading
    term is lam^(2h-2).  Non-integer solutions raise NonIntegralBPS carrying
    the exact rational.
    """
    if gw.kind != GW:
        raise ValueError("gv_from_gw expects a GW table")
    if degree_order is None:
        degree_order = gw.max_degree
    h_max = (lambda_order + 2) // 2
    if gw.max_degree < degree_order or gw.max_genus < h_max:
        raise InsufficientTruncation(
            f"GW table window (max_genus={gw.max_genus}, "
            f"max_degree={gw.max_degree}) does not cover "
            f"genus <= {h_max}, degree <= {degree_order}"
        )
    bps = InvariantTable(BPS, gw.rank, gw.degree_weights, h_max, degree_order)
    for beta in iter_classes(gw.rank, gw.degree_weights, degree_order):
        residual = LambdaSeries(order=lambda_order)
        for g in range(h_max + 1):
            c = gw.get(g, beta)
            if c:
                residual = residual + LambdaSeries({2 * g - 2: c}, lambda_order)
        # remove multicovers k >= 2 of strictly smaller classes
        for k in range(2, max(beta) + 1 if any(beta) else 1):
            source = _divide_class(beta, k)
            if source is None or not any(source):
                continue
            for h in range(h_max + 1):
                n = bps.get(h, source)
                if n:
                    residual = residual - (n * Fraction(1, k)) * sin_power_series(
                        k, 2 * h - 2, lambda_order
                    )
        for h in range(h_max + 1):
            c = residual[2 * h - 2]
            if not c:
                continue
            if c.denominator != 1:
                raise NonIntegralBPS(beta, h, c)
            bps.set(h, beta, int(c))
            residual = residual - int(c) * sin_power_series(1, 2 * h - 2, lambda_order)
        assert not residual, f"unpeeled residual at {beta}: {residual!r}"
    return bps


def roundtrip_check(bps, lambda_order=None, degree_order=None):
    """gv_from_gw(gw_from_gv(bps)) == bps within the windows.

    Returns (ok, diffs) where diffs lists (h, class, expected, got).
    """
    if lambda_order is None:
        lambda_order = 2 * bps.max_genus + 2
    if lambda_order < 2 * bps.max_genus - 2:
        raise InsufficientTruncation(
            f"lambda_order {lambda_order} cannot resolve h <= {bps.max_genus}"
        )
    gw = gw_from_gv(bps, lambda_order, degree_order)
    back = gv_from_gw(gw, lambda_order, degree_order)
    diffs = []
    h_window = min(bps.max_genus, back.max_genus)
    for beta in bps.classes(degree_order):
        for h in range(h_window + 1):
            want = bps.get(h, beta)
            got = back.get(h, beta)
            if want != got:
                diffs.append((h, beta, want, got))
    return not diffs, diffs
