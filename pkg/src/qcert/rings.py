"""Exact coefficient domains for truncated q-series.

Four domains are supported:

* ``Rat`` -- arbitrary-precision rationals (``fractions.Fraction``),
* ``LaurentPoly`` -- Laurent polynomials in the rank variable z,
* ``DualScalar`` -- first-order jets a + b*eps with eps^2 = 0, used to
  evaluate d/dx at x = 1 exactly alongside the value,
* ``XPoly`` -- honest polynomials in x, the independent second route for
  validating the dual-number derivative.

Every value is immutable after construction and all operations return
fresh objects, so values can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitConstantTerm

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject inexact types."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class LaurentPoly:
    """Laurent polynomial in z with rational coefficients.

    Stored sparsely as exponent -> nonzero Fraction.  Exponents may be
    negative; the zero polynomial has an empty table.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for e, v in coeffs.items():
                v = as_rat(v)
                if v:
                    table[int(e)] = v
        self._c = table

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def term(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    def items(self):
        return self._c.items()

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def min_exp(self) -> int | None:
        return min(self._c) if self._c else None

    def max_exp(self) -> int | None:
        return max(self._c) if self._c else None

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def constant(self) -> Fraction:
        return self._c.get(0, Fraction(0))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) - v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        out = LaurentPoly.__new__(LaurentPoly)
        if not a or not b:
            out._c = {}
            return out
        # products of nonzero rationals are nonzero, so single-term
        # operands need no zero-filtering
        if len(a) == 1:
            ((e, v),) = a.items()
            out._c = {e + f: v * w for f, w in b.items()}
            return out
        if len(b) == 1:
            ((f, w),) = b.items()
            out._c = {e + f: v * w for e, v in a.items()}
            return out
        c = {}
        for e, v in a.items():
            for f, w in b.items():
                g = e + f
                s = c.get(g, 0) + v * w
                if s:
                    c[g] = s
                else:
                    c.pop(g, None)
        out._c = c
        return out

    __rmul__ = __mul__

    def scale(self, k) -> "LaurentPoly":
        k = as_rat(k)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {} if not k else {e: v * k for e, v in self._c.items()}
        return out

    def invert_term(self) -> "LaurentPoly":
        """Inverse of a single-term unit c*z^e; raises otherwise."""
        if len(self._c) != 1:
            raise NonUnitConstantTerm(
                "LaurentPoly is invertible only when it is a single term"
            )
        ((e, v),) = self._c.items()
        return LaurentPoly({-e: Fraction(1) / v})

    def subs_one(self) -> Fraction:
        """Value at z = 1 (sum of all coefficients)."""
        return sum(self._c.values(), Fraction(0))

    def residue_sums(self, k: int) -> list[Fraction]:
        """Sum coefficients by exponent residue class mod k."""
        out = [Fraction(0)] * k
        for e, v in self._c.items():
            out[e % k] += v
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __repr__(self):
        if not self._c:
            return "0"
        bits = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                bits.append(f"{v}")
            elif e == 1:
                bits.append(f"{v}*z" if v != 1 else "z")
            else:
                bits.append(f"{v}*z^{e}" if v != 1 else f"z^{e}")
        return " + ".join(bits).replace("+ -", "- ")


class DualScalar:
    """First-order jet value + deriv*eps over a base domain (eps^2 = 0)."""

    __slots__ = ("value", "deriv")

    def __init__(self, value, deriv):
        self.value = value
        self.deriv = deriv

    def __bool__(self):
        return bool(self.value) or bool(self.deriv)

    def __add__(self, other):
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(self.value + other.value, self.deriv + other.deriv)

    def __sub__(self, other):
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(self.value - other.value, self.deriv - other.deriv)

    def __neg__(self):
        return DualScalar(-self.value, -self.deriv)

    def __mul__(self, other):
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(
            self.value * other.value,
            self.value * other.deriv + self.deriv * other.value,
        )

    def __eq__(self, other):
        if isinstance(other, DualScalar):
            return self.value == other.value and self.deriv == other.deriv
        return NotImplemented

    def __repr__(self):
        return f"({self.value!r} + {self.deriv!r}*eps)"


class XPoly:
    """Polynomial in x over a base domain, stored as degree -> coeff.

    This is the brute-force twin of DualScalar: evaluating the full
    polynomial and its formal derivative at x = 1 must reproduce the
    dual number's components.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for d, v in coeffs.items():
                if v:
                    table[int(d)] = v
        self._c = table

    def items(self):
        return self._c.items()

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        c = dict(self._c)
        for d, v in other._c.items():
            s = c.get(d)
            s = v if s is None else s + v
            if s:
                c[d] = s
            else:
                c.pop(d, None)
        out = XPoly.__new__(XPoly)
        out._c = c
        return out

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = XPoly.__new__(XPoly)
        out._c = {d: -v for d, v in self._c.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        c = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = d1 + d2
                s = c.get(d)
                s = v1 * v2 if s is None else s + v1 * v2
                if s:
                    c[d] = s
                else:
                    c.pop(d, None)
        out = XPoly.__new__(XPoly)
        out._c = c
        return out

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self._c == other._c
        return NotImplemented

    def value_at_one(self, zero):
        """Sum of all coefficients: the polynomial evaluated at x = 1."""
        acc = zero
        for v in self._c.values():
            acc = acc + v
        return acc

    def deriv_at_one(self, zero):
        """Formal d/dx evaluated at x = 1: sum of degree * coeff."""
        acc = zero
        for d, v in self._c.items():
            if d:
                acc = acc + _int_scale(v, d)
        return acc

    def __repr__(self):
        return f"XPoly({self._c!r})"


def _int_scale(v, k: int):
    """k * v for an integer k and a domain value v."""
    if isinstance(v, Fraction):
        return v * k
    if isinstance(v, LaurentPoly):
        return v.scale(k)
    if isinstance(v, DualScalar):
        return DualScalar(_int_scale(v.value, k), _int_scale(v.deriv, k))
    raise TypeError(f"cannot integer-scale {type(v).__name__}")


# ---------------------------------------------------------------------------
# Ring descriptors: lift/zero/one/invert for each coefficient domain.
# ---------------------------------------------------------------------------


class RatRing:
    """Descriptor for exact rational coefficients."""

    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def lift(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot lift {type(x).__name__} into {self.name}")

    def is_unit(self, c) -> bool:
        return bool(c)

    def invert(self, c) -> Fraction:
        if not c:
            raise NonUnitConstantTerm("division by zero rational")
        return Fraction(1) / c

    def __repr__(self):
        return "RAT"


class LaurentRing:
    """Descriptor for LaurentPoly coefficients in z."""

    name = "laurent"
    zero = LaurentPoly()
    one = LaurentPoly.const(1)

    def lift(self, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot lift {type(x).__name__} into {self.name}")

    def is_unit(self, c) -> bool:
        return isinstance(c, LaurentPoly) and len(c) == 1

    def invert(self, c) -> LaurentPoly:
        if not isinstance(c, LaurentPoly) or not c:
            raise NonUnitConstantTerm("division by zero Laurent polynomial")
        return c.invert_term()

    def __repr__(self):
        return "LAURENT"


class DualRing:
    """Descriptor for DualScalar coefficients over a base ring."""

    def __init__(self, base):
        self.base = base
        self.name = f"dual[{base.name}]"
        self.zero = DualScalar(base.zero, base.zero)
        self.one = DualScalar(base.one, base.zero)

    def lift(self, x):
        if isinstance(x, DualScalar):
            return x
        return DualScalar(self.base.lift(x), self.base.zero)

    def is_unit(self, c) -> bool:
        return isinstance(c, DualScalar) and self.base.is_unit(c.value)

    def invert(self, c) -> DualScalar:
        # (a + b eps)^-1 = a^-1 - a^-1 b a^-1 eps
        inv = self.base.invert(c.value)
        return DualScalar(inv, -(inv * c.deriv * inv))

    def __eq__(self, other):
        return isinstance(other, DualRing) and other.base == self.base

    def __hash__(self):
        return hash(("dual", id(type(self.base))))

    def __repr__(self):
        return f"DUAL({self.base!r})"


class XPolyRing:
    """Descriptor for XPoly coefficients over a base ring."""

    def __init__(self, base):
        self.base = base
        self.name = f"xpoly[{base.name}]"
        self.zero = XPoly()
        self.one = XPoly({0: base.one})

    def lift(self, x):
        if isinstance(x, XPoly):
            return x
        return XPoly({0: self.base.lift(x)})

    def is_unit(self, c) -> bool:
        return isinstance(c, XPoly) and bool(c._c.get(0)) and len(c._c) == 1

    def invert(self, c) -> XPoly:
        # only constant-in-x units are needed (series constant terms)
        if not isinstance(c, XPoly) or len(c._c) != 1 or 0 not in c._c:
            raise NonUnitConstantTerm("XPoly inverse requires a constant unit")
        return XPoly({0: self.base.invert(c._c[0])})

    def __eq__(self, other):
        return isinstance(other, XPolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("xpoly", id(type(self.base))))

    def __repr__(self):
        return f"XPOLY({self.base!r})"


RAT = RatRing()
LAURENT = LaurentRing()

_DUAL_CACHE: dict[int, DualRing] = {}


def dual_ring(base) -> DualRing:
    key = id(base)
    ring = _DUAL_CACHE.get(key)
    if ring is None:
        ring = _DUAL_CACHE[key] = DualRing(base)
    return ring
