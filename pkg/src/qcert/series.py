"""Truncated formal power series in q over exact coefficient rings.

A ``QSeries`` knows its coefficients exactly through ``q^order`` (i.e. the
series is known modulo ``q^(order+1)``).  Every operation preserves or
shrinks the order; no operation ever claims precision it does not hold.

Builders cover the shapes this project needs: finite and infinite
q-Pochhammer products with a dilation step, theta-style two-sided
("bracket") products, and bilateral Appell-Lerch-type sums with exact
handling of the half-integer n = 0 terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergentProduct, NonUnitConstantTerm, ZeroDenominator
from .rings import (
    LAURENT,
    RAT,
    DualScalar,
    LaurentPoly,
    XPoly,
    XPolyRing,
    as_rat,
    dual_ring,
)


@dataclass(frozen=True)
class Monomial:
    """A product argument of shape coeff * q^qexp * z^zexp * x^xexp.

    Every Pochhammer argument used by the engine has this shape; general
    series arguments are deliberately unsupported.
    """

    coeff: Fraction
    qexp: int
    zexp: int = 0
    xexp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_rat(self.coeff))
        if self.qexp < 0:
            raise ValueError("Monomial q-exponent must be >= 0")

    def bracket_partner(self, modulus: int) -> "Monomial":
        """The companion argument q^modulus / self of a bracket product."""
        if self.xexp:
            raise ValueError("bracket arguments may not involve x")
        if not (1 <= self.qexp <= modulus - 1):
            raise DivergentProduct(
                "bracket product needs 1 <= qexp < modulus on both arguments"
            )
        return Monomial(1 / self.coeff, modulus - self.qexp, -self.zexp)


def mono(coeff, qexp, zexp=0, xexp=0) -> Monomial:
    """Shorthand Monomial constructor."""
    return Monomial(as_rat(coeff), qexp, zexp, xexp)


# ---------------------------------------------------------------------------
# Evaluation contexts: how the formal variable x is represented.
# ---------------------------------------------------------------------------


class PlainContext:
    """x fixed at a rational value (1 by default)."""

    def __init__(self, base_ring, x_value=1):
        self.base_ring = base_ring
        self.ring = base_ring
        self.x_value = as_rat(x_value)

    def x_power(self, j: int):
        return self.ring.lift(self.x_value**j)

    def lift_zc(self, coeff, zexp: int):
        if zexp and self.base_ring is not LAURENT:
            raise TypeError("z-exponents need the Laurent coefficient ring")
        if self.base_ring is LAURENT:
            return LaurentPoly.term(zexp, coeff)
        return self.base_ring.lift(coeff)

    def mon(self, m: Monomial):
        """Lift the non-q part of a monomial into the coefficient ring."""
        out = self.lift_zc(m.coeff, m.zexp)
        if m.xexp:
            out = out * self.x_power(m.xexp)
        return out


class DualContext:
    """x = 1 + eps, so every series carries its d/dx at x = 1."""

    def __init__(self, base_ring):
        self.base_ring = base_ring
        self.ring = dual_ring(base_ring)

    def x_power(self, j: int):
        # (1 + eps)^j = 1 + j*eps exactly, because eps^2 = 0
        base = self.base_ring
        return DualScalar(base.one, base.lift(j) if j else base.zero)

    def lift_zc(self, coeff, zexp: int):
        if zexp and self.base_ring is not LAURENT:
            raise TypeError("z-exponents need the Laurent coefficient ring")
        if self.base_ring is LAURENT:
            val = LaurentPoly.term(zexp, coeff)
        else:
            val = self.base_ring.lift(coeff)
        return DualScalar(val, self.base_ring.zero)

    def mon(self, m: Monomial):
        out = self.lift_zc(m.coeff, m.zexp)
        if m.xexp:
            out = out * self.x_power(m.xexp)
        return out


class XPolyContext:
    """x kept as an honest polynomial variable (derivative oracle)."""

    def __init__(self, base_ring):
        self.base_ring = base_ring
        self.ring = XPolyRing(base_ring)

    def x_power(self, j: int):
        return XPoly({j: self.base_ring.one})

    def lift_zc(self, coeff, zexp: int):
        if zexp and self.base_ring is not LAURENT:
            raise TypeError("z-exponents need the Laurent coefficient ring")
        if self.base_ring is LAURENT:
            val = LaurentPoly.term(zexp, coeff)
        else:
            val = self.base_ring.lift(coeff)
        return XPoly({0: val})

    def mon(self, m: Monomial):
        out = self.lift_zc(m.coeff, m.zexp)
        if m.xexp:
            out = out * self.x_power(m.xexp)
        return out


RAT_CTX = PlainContext(RAT)
LAURENT_CTX = PlainContext(LAURENT)


# ---------------------------------------------------------------------------
# The truncated series itself.
# ---------------------------------------------------------------------------


class QSeries:
    """Formal power series in q known exactly through q^order."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.ring = ring
        self.order = order
        if coeffs is None:
            self.coeffs = [ring.zero] * (order + 1)
        else:
            coeffs = list(coeffs)
            if len(coeffs) != order + 1:
                raise ValueError("coefficient list does not match order")
            self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, ring, order: int) -> "QSeries":
        return cls(ring, order)

    @classmethod
    def one(cls, ring, order: int) -> "QSeries":
        s = cls(ring, order)
        s.coeffs[0] = ring.one
        return s

    @classmethod
    def from_terms(cls, ring, order: int, terms: dict) -> "QSeries":
        s = cls(ring, order)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("negative q-exponent")
            if e <= order:
                s.coeffs[e] = ring.lift(c)
        return s

    def copy(self) -> "QSeries":
        return QSeries(self.ring, self.order, list(self.coeffs))

    # -- basic queries -----------------------------------------------------

    def coefficient(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(
                f"coefficient q^{n} outside known range 0..{self.order}"
            )
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _check_ring(self, other: "QSeries"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError(
                f"incompatible coefficient rings {self.ring!r} vs {other.ring!r}"
            )

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return QSeries(
            self.ring, n, [a + b for a, b in zip(self.coeffs, other.coeffs)][: n + 1]
        )

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        return QSeries(
            self.ring, n, [a - b for a, b in zip(self.coeffs, other.coeffs)][: n + 1]
        )

    def __neg__(self):
        return QSeries(self.ring, self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_ring(other)
        n = min(self.order, other.order)
        zero = self.ring.zero
        out = [zero] * (n + 1)
        a, b = self.coeffs, other.coeffs
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return QSeries(self.ring, n, out)

    def mul_scalar(self, c) -> "QSeries":
        c = self.ring.lift(c)
        if not c:
            return QSeries.zeros(self.ring, self.order)
        return QSeries(self.ring, self.order, [a * c for a in self.coeffs])

    def mul_binomial(self, c, m: int) -> "QSeries":
        """Multiply by (1 + c*q^m) in O(order) coefficient operations."""
        c = self.ring.lift(c)
        if m < 0:
            raise ValueError("binomial exponent must be >= 0")
        if not c:
            return self.copy()
        if m == 0:
            return self.mul_scalar(self.ring.one + c)
        out = list(self.coeffs)
        a = self.coeffs
        for i in range(m, self.order + 1):
            lo = a[i - m]
            if lo:
                out[i] = out[i] + c * lo
        return QSeries(self.ring, self.order, out)

    def div_binomial(self, c, m: int) -> "QSeries":
        """Divide by (1 + c*q^m) in O(order) coefficient operations."""
        c = self.ring.lift(c)
        if m < 0:
            raise ValueError("binomial exponent must be >= 0")
        if not c:
            return self.copy()
        if m == 0:
            unit = self.ring.one + c
            return self.mul_scalar(self.ring.invert(unit))
        out = list(self.coeffs)
        for i in range(m, self.order + 1):
            lo = out[i - m]
            if lo:
                out[i] = out[i] - c * lo
        return QSeries(self.ring, self.order, out)

    def invert(self) -> "QSeries":
        """Multiplicative inverse modulo q^(order+1).

        Requires an invertible constant term (nonzero rational; for
        Laurent coefficients a single-term unit).
        """
        c0 = self.coeffs[0]
        if not self.ring.is_unit(c0):
            raise NonUnitConstantTerm(
                f"constant term {c0!r} is not a unit of {self.ring!r}"
            )
        inv0 = self.ring.invert(c0)
        out = [inv0] + [self.ring.zero] * self.order
        a = self.coeffs
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for j in range(1, n + 1):
                aj = a[j]
                bj = out[n - j]
                if aj and bj:
                    acc = acc + aj * bj
            if acc:
                out[n] = -(inv0 * acc)
        return QSeries(self.ring, self.order, out)

    def pow(self, k: int) -> "QSeries":
        if k < 0:
            return self.invert().pow(-k)
        acc = QSeries.one(self.ring, self.order)
        for _ in range(k):
            acc = acc * self
        return acc

    # -- reshaping ---------------------------------------------------------

    def truncate(self, order: int) -> "QSeries":
        if order >= self.order:
            return self
        return QSeries(self.ring, order, self.coeffs[: order + 1])

    def shift(self, k: int, cap: int | None = None) -> "QSeries":
        """Multiply by q^k (k >= 0).  Knowledge extends to order + k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        order = self.order + k
        if cap is not None:
            order = min(order, cap)
        zero = self.ring.zero
        out = [zero] * (order + 1)
        for i, c in enumerate(self.coeffs):
            j = i + k
            if j > order:
                break
            out[j] = c
        return QSeries(self.ring, order, out)

    def dilate(self, k: int, cap: int | None = None) -> "QSeries":
        """Substitute q -> q^k; coefficient of q^n moves to q^(k*n)."""
        if k < 1:
            raise ValueError("dilation step must be >= 1")
        order = self.order * k + (k - 1)
        if cap is not None:
            order = min(order, cap)
        zero = self.ring.zero
        out = [zero] * (order + 1)
        for i, c in enumerate(self.coeffs):
            j = i * k
            if j > order:
                break
            out[j] = c
        return QSeries(self.ring, order, out)

    # -- comparisons and views ----------------------------------------------

    def first_difference(self, other: "QSeries") -> int | None:
        """Smallest exponent (up to the common order) where the series
        differ, or None when they agree on the full common range."""
        self._check_ring(other)
        n = min(self.order, other.order)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def agrees_with(self, other: "QSeries") -> bool:
        return self.first_difference(other) is None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            (self.ring is other.ring or self.ring == other.ring)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def integer_coefficients(self) -> list[int]:
        """All coefficients as ints; raises if any denominator is not 1."""
        if self.ring is not RAT:
            raise TypeError("integer view needs rational coefficients")
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of q^{i} is non-integral: {c}")
            out.append(c.numerator)
        return out

    def assert_integral(self) -> "QSeries":
        self.integer_coefficients()
        return self

    def reduce_mod(self, p: int) -> list[int]:
        return [c % p for c in self.integer_coefficients()]

    def dual_parts(self) -> tuple["QSeries", "QSeries"]:
        """Split a dual-coefficient series into (value, derivative)."""
        ring = self.ring
        base = ring.base
        vals = [c.value for c in self.coeffs]
        ders = [c.deriv for c in self.coeffs]
        return (
            QSeries(base, self.order, vals),
            QSeries(base, self.order, ders),
        )

    def xpoly_parts(self) -> tuple["QSeries", "QSeries"]:
        """Evaluate x-polynomial coefficients: (value at 1, d/dx at 1)."""
        base = self.ring.base
        zero = base.zero
        vals = [c.value_at_one(zero) for c in self.coeffs]
        ders = [c.deriv_at_one(zero) for c in self.coeffs]
        return (
            QSeries(base, self.order, vals),
            QSeries(base, self.order, ders),
        )

    def __repr__(self):
        return f"QSeries({self.ring!r}, order={self.order})"

    def __str__(self):
        bits = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if isinstance(c, LaurentPoly):
                cs = repr(c)
                if len(c) > 1 or (len(c) == 1 and not c.is_constant()):
                    cs = f"({cs})"
            else:
                cs = str(c)
            if i == 0:
                bits.append(cs)
            else:
                qs = "q" if i == 1 else f"q^{i}"
                bits.append(qs if cs == "1" else f"{cs}*{qs}")
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O(q^{self.order + 1})".replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Product and sum builders.
# ---------------------------------------------------------------------------


def pochhammer_finite(a: Monomial, n: int, qstep: int = 1, *, order: int, ctx=None) -> QSeries:
    """(a; q^qstep)_n = prod_{k=1..n} (1 - a*q^((k-1)*qstep))."""
    if n < 0:
        raise ValueError("Pochhammer length must be >= 0")
    if qstep < 1:
        raise ValueError("qstep must be >= 1")
    ctx = ctx or RAT_CTX
    s = QSeries.one(ctx.ring, order)
    coeff = ctx.mon(a)
    for k in range(n):
        pos = a.qexp + k * qstep
        if pos > order:
            break
        s = s.mul_binomial(-coeff, pos)
    return s


def pochhammer_infinite(a: Monomial, qstep: int = 1, *, order: int, ctx=None) -> QSeries:
    """(a; q^qstep)_infinity truncated at `order`.

    Factors whose q-valuation exceeds the order contribute 1.  The
    argument must carry a positive q-power (or be 0, giving the empty
    product); otherwise the constant term never settles.
    """
    if qstep < 1:
        raise ValueError("qstep must be >= 1")
    ctx = ctx or RAT_CTX
    if not a.coeff:
        return QSeries.one(ctx.ring, order)
    if a.qexp == 0:
        raise DivergentProduct(
            "infinite product needs a positive q-power in its argument"
        )
    s = QSeries.one(ctx.ring, order)
    coeff = ctx.mon(a)
    pos = a.qexp
    while pos <= order:
        s = s.mul_binomial(-coeff, pos)
        pos += qstep
    return s


def bracket_infinite(a: Monomial, modulus: int, *, order: int, ctx=None) -> QSeries:
    """[a; q^modulus]_infinity = (a; q^M)_inf * (q^M/a; q^M)_inf."""
    partner = a.bracket_partner(modulus)
    left = pochhammer_infinite(a, modulus, order=order, ctx=ctx)
    right = pochhammer_infinite(partner, modulus, order=order, ctx=ctx)
    return left * right


def lerch_sum(
    *,
    quad: int,
    lin: int = 0,
    alternating: bool = True,
    denom_step: int,
    denom_sign: int,
    denom_shift: int = 0,
    num_shift: int = 0,
    include_n0: bool = True,
    order: int,
) -> QSeries:
    """Bilateral Appell-Lerch-type sum over n in Z (optionally without 0):

        sum (+-1)^n q^(quad*n^2 + lin*n + num_shift)
            / (1 + denom_sign * q^(denom_step*n + denom_shift))

    Denominators with negative q-power are rewritten to positive
    valuation via 1/(1 + d*q^-u) = d*q^u/(1 + d*q^u) before geometric
    expansion; a denominator exponent of exactly 0 contributes the exact
    scalar 1/2 when the sign is +1 and raises otherwise.
    """
    if quad < 1:
        raise ValueError("quadratic coefficient must be >= 1")
    if denom_step < 1:
        raise ValueError("denominator step must be >= 1")
    if denom_sign not in (1, -1):
        raise ValueError("denominator sign must be +1 or -1")
    acc = QSeries.zeros(RAT, order)

    def add_term(n: int):
        sign = Fraction(-1 if (alternating and n % 2) else 1)
        v0 = quad * n * n + lin * n + num_shift
        m = denom_step * n + denom_shift
        if m == 0:
            if denom_sign == -1:
                raise ZeroDenominator(
                    f"denominator 1 - q^0 vanishes at summation index n={n}"
                )
            if 0 <= v0 <= order:
                acc.coeffs[v0] = acc.coeffs[v0] + sign / 2
            elif v0 < 0:
                raise ValueError("negative net q-valuation in bilateral sum")
            return
        if m < 0:
            u = -m
            v0 += u
            sign *= denom_sign
            m = u
        if v0 < 0:
            raise ValueError("negative net q-valuation in bilateral sum")
        if v0 > order:
            return
        term = QSeries.zeros(RAT, order)
        term.coeffs[v0] = sign
        term = term.div_binomial(Fraction(denom_sign), m)
        for i in range(v0, order + 1):
            acc.coeffs[i] = acc.coeffs[i] + term.coeffs[i]

    # conservative index bound: beyond the vertex, quad*t^2 - |lin|*t +
    # num_shift underestimates every term's valuation
    spread = abs(lin)

    def low(t: int) -> int:
        return quad * t * t - spread * t + num_shift

    if include_n0:
        add_term(0)
    t = 1
    while True:
        done = low(t) > order and 2 * quad * t - spread > 0
        if done:
            break
        add_term(t)
        add_term(-t)
        t += 1
        if t > 10_000_000:  # pragma: no cover
            raise RuntimeError("bilateral sum failed to truncate")
    return acc


# ---------------------------------------------------------------------------
# Dual-number validation against the polynomial-in-x oracle.
# ---------------------------------------------------------------------------


@dataclass
class DerivativeComparison:
    value_ok: bool
    deriv_ok: bool
    dual_value: QSeries
    dual_deriv: QSeries
    poly_value: QSeries
    poly_deriv: QSeries

    @property
    def ok(self) -> bool:
        return self.value_ok and self.deriv_ok


def derivative_check(build, base_ring, order: int) -> DerivativeComparison:
    """Evaluate `build(ctx)` via dual numbers and via honest polynomials
    in x, and compare value and derivative at x = 1 coefficientwise.

    `build` must accept an evaluation context and return a QSeries over
    that context's ring.
    """
    dual = build(DualContext(base_ring))
    dv, dd = dual.dual_parts()
    poly = build(XPolyContext(base_ring))
    pv, pd = poly.xpoly_parts()
    return DerivativeComparison(
        value_ok=dv.agrees_with(pv),
        deriv_ok=dd.agrees_with(pd),
        dual_value=dv,
        dual_deriv=dd,
        poly_value=pv,
        poly_deriv=pd,
    )


# ---------------------------------------------------------------------------
# Exact JSON serialization.
# ---------------------------------------------------------------------------


def series_to_json(s: QSeries) -> dict:
    """Exact JSON form: {ring, order, terms: [{q_exponent, coefficient}]}.

    Rational coefficients become fraction strings; Laurent coefficients
    become {z_exponent: fraction string} maps.  Zero terms are omitted.
    """
    terms = []
    if s.ring is RAT:
        ring_name = "rational"
        for i, c in enumerate(s.coeffs):
            if c:
                terms.append({"q_exponent": i, "coefficient": str(c)})
    elif s.ring is LAURENT:
        ring_name = "laurent"
        for i, c in enumerate(s.coeffs):
            if c:
                cmap = {str(e): str(v) for e, v in sorted(c.items())}
                terms.append({"q_exponent": i, "coefficient": cmap})
    else:
        raise TypeError(f"serialization is defined for RAT and LAURENT, not {s.ring!r}")
    return {"ring": ring_name, "order": s.order, "terms": terms}


def series_from_json(obj: dict) -> QSeries:
    ring_name = obj["ring"]
    order = int(obj["order"])
    if ring_name == "rational":
        s = QSeries.zeros(RAT, order)
        for t in obj["terms"]:
            s.coeffs[int(t["q_exponent"])] = Fraction(t["coefficient"])
    elif ring_name == "laurent":
        s = QSeries.zeros(LAURENT, order)
        for t in obj["terms"]:
            cmap = {int(e): Fraction(v) for e, v in t["coefficient"].items()}
            s.coeffs[int(t["q_exponent"])] = LaurentPoly(cmap)
    else:
        raise ValueError(f"unknown ring tag {ring_name!r}")
    return s
