"""Rank generating functions, part-count difference series, and the
closed forms they are checked against.

The central objects are the four specializations of the overpartition-pair
rank generating function

    sum_{n>=0} (-1/d, -1/e)_n (x d e q)^n / (z q, x q / z)_n

obtained at (d, e) = (0, 0), (1, 0), (1, 1/q with q -> q^2) and
(0, 1/q with q -> q^2).  The two q^2 families absorb the base change
into every Pochhammer argument, which is what makes their coefficient
distributions match the enumeration oracle.

Part-count difference series (total parts in objects with statistic
congruent to b, minus those congruent to k - b) are produced by
differentiating with respect to x at x = 1 via dual-number coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import UnknownFormId, UnsupportedSpecialization
from .rings import LAURENT, RAT, LaurentPoly
from .series import (
    DualContext,
    Monomial,
    PlainContext,
    QSeries,
    bracket_infinite,
    lerch_sum,
    mono,
    pochhammer_infinite,
)


class Family(str, Enum):
    """Rank statistic families, named by object family and statistic."""

    PAIR_GENERIC = "pair-generic"
    DYSON = "dyson"
    OV_RANK = "ov-rank"
    OV_M2 = "ov-m2"
    DO_M2 = "do-m2"


@dataclass(frozen=True)
class NTDiffSpec:
    """A part-count difference request: residues b vs k-b mod k."""

    family: Family
    b: int
    k: int

    def __post_init__(self):
        if not 1 <= self.b <= self.k - 1:
            raise ValueError("need 1 <= b <= k-1")


@dataclass(frozen=True)
class _FamilyData:
    qstep: int
    # rank gf summand: extras(n) * x^n * q^{lhs_quad(n)} / (z-product)
    lhs_extra: tuple[Monomial, ...]
    lhs_quad: Callable[[int], int]
    # prefactor as displayed for the part-count series, and as literally
    # specialized for the main transformation (they agree as series)
    pref_num: tuple[tuple[Monomial, int], ...]
    pref_den: tuple[tuple[Monomial, int], ...]
    lit_num: tuple[tuple[Monomial, int], ...]
    lit_den: tuple[tuple[Monomial, int], ...]
    # inner summand: nums(n) * (-x)^n * q^{inner_quad(n)}
    #                / ((q^s; q^s)_{n-1} * dens(n))
    inner_num: tuple[Monomial, ...]
    inner_den: tuple[Monomial, ...]
    inner_quad: Callable[[int], int]


_X = 1  # marker for readability: monomials with xexp=1 carry one power of x


def _family_data(family: Family) -> _FamilyData:
    if family == Family.DYSON:
        pref = ((mono(1, 1, xexp=_X), 1),)
        return _FamilyData(
            qstep=1,
            lhs_extra=(),
            lhs_quad=lambda n: n * n,
            pref_num=(),
            pref_den=pref,
            lit_num=(),
            lit_den=pref,
            inner_num=(mono(1, 1, xexp=_X),),
            inner_den=(),
            inner_quad=lambda n: (3 * n * n + n) // 2,
        )
    if family == Family.OV_RANK:
        num = ((mono(-1, 1, xexp=_X), 1),)
        den = ((mono(1, 1, xexp=_X), 1),)
        return _FamilyData(
            qstep=1,
            lhs_extra=(mono(-1, 0),),
            lhs_quad=lambda n: n * (n + 1) // 2,
            pref_num=num,
            pref_den=den,
            lit_num=num,
            lit_den=den,
            inner_num=(mono(1, 1, xexp=_X), mono(-1, 0)),
            inner_den=(mono(-1, 1, xexp=_X),),
            inner_quad=lambda n: n * n + n,
        )
    if family == Family.OV_M2:
        return _FamilyData(
            qstep=2,
            lhs_extra=(mono(-1, 0), mono(-1, 1)),
            lhs_quad=lambda n: n,
            pref_num=((mono(-1, 1, xexp=_X), 1),),
            pref_den=((mono(1, 1, xexp=_X), 1),),
            lit_num=((mono(-1, 2, xexp=_X), 2), (mono(-1, 1, xexp=_X), 2)),
            lit_den=((mono(1, 2, xexp=_X), 2), (mono(1, 1, xexp=_X), 2)),
            inner_num=(mono(1, 2, xexp=_X), mono(-1, 0), mono(-1, 1)),
            inner_den=(mono(-1, 2, xexp=_X), mono(-1, 1, xexp=_X)),
            inner_quad=lambda n: n * n + 2 * n,
        )
    if family == Family.DO_M2:
        num = ((mono(-1, 1, xexp=_X), 2),)
        den = ((mono(1, 2, xexp=_X), 2),)
        return _FamilyData(
            qstep=2,
            lhs_extra=(mono(-1, 1),),
            lhs_quad=lambda n: n * n,
            pref_num=num,
            pref_den=den,
            lit_num=num,
            lit_den=den,
            inner_num=(mono(1, 2, xexp=_X), mono(-1, 1)),
            inner_den=(mono(-1, 1, xexp=_X),),
            inner_quad=lambda n: 2 * n * n + n,
        )
    raise UnsupportedSpecialization(f"no closed summand for {family}")


def _check_specialized(family: Family):
    if family == Family.PAIR_GENERIC:
        raise UnsupportedSpecialization(
            "the generic two-parameter family has no specialized summand"
        )


def _product(num, den, ctx, order: int) -> QSeries:
    """Product of infinite Pochhammers over those in `den`, built from
    binomial factors only."""
    s = QSeries.one(ctx.ring, order)
    for m, step in num:
        c = -ctx.mon(m)
        pos = m.qexp
        while pos <= order:
            s = s.mul_binomial(c, pos)
            pos += step
    for m, step in den:
        c = -ctx.mon(m)
        pos = m.qexp
        while pos <= order:
            s = s.div_binomial(c, pos)
            pos += step
    return s


def _inner_terms(family: Family, ctx, order: int, margin=None):
    """Yield (n, common, quad) where common is the inner summand at level
    n without its q^{quad} shift and without the residue bracket.

    `margin(n)` is how far below q^{quad(n)} the caller's bracket can
    reach; iteration continues while quad(n) - margin(n) <= order.
    """
    d = _family_data(family)
    s = d.qstep
    ring = ctx.ring
    neg_x = -ctx.x_power(1)
    cur = QSeries.one(ring, order)
    n = 1
    while True:
        quad = d.inner_quad(n)
        if quad - (margin(n) if margin else 0) > order:
            return
        for a in d.inner_num:
            cur = cur.mul_binomial(-ctx.mon(a), a.qexp + (n - 1) * s)
        cur = cur.mul_scalar(neg_x)
        if n >= 2:
            cur = cur.div_binomial(ring.lift(-1), s * (n - 1))
        for a in d.inner_den:
            cur = cur.div_binomial(-ctx.mon(a), a.qexp + (n - 1) * s)
        yield n, cur, quad
        n += 1


@lru_cache(maxsize=None)
def _inner_terms_dual_rat(family: Family, order: int) -> tuple:
    """Cached inner terms over dual rationals, shared across all (b, k)."""
    return tuple(_inner_terms(family, DualContext(RAT), order))


@lru_cache(maxsize=None)
def _prefactor_dual_rat(family: Family, order: int) -> QSeries:
    d = _family_data(family)
    return _product(d.pref_num, d.pref_den, DualContext(RAT), order)


# ---------------------------------------------------------------------------
# Rank generating functions.
# ---------------------------------------------------------------------------


def rank_gf_ctx(family: Family, order: int, ctx) -> QSeries:
    """Rank generating function with x supplied by the context."""
    _check_specialized(family)
    d = _family_data(family)
    s = d.qstep
    ring = ctx.ring
    x1 = ctx.x_power(1)
    z = ctx.lift_zc(1, 1)
    xz = ctx.lift_zc(1, -1) * x1
    acc = QSeries.one(ring, order)
    cur = QSeries.one(ring, order)
    n = 1
    while d.lhs_quad(n) <= order:
        for a in d.lhs_extra:
            cur = cur.mul_binomial(-ctx.mon(a), a.qexp + (n - 1) * s)
        cur = cur.mul_scalar(x1)
        cur = cur.div_binomial(-z, s * n).div_binomial(-xz, s * n)
        acc = acc + cur.shift(d.lhs_quad(n), cap=order)
        n += 1
    return acc


@lru_cache(maxsize=None)
def rank_gf(family: Family, order: int) -> QSeries:
    """z-refined rank generating function at x = 1, over LaurentPoly:
    coefficient of z^m q^n counts objects of weight n with statistic m."""
    g = rank_gf_ctx(family, order, PlainContext(LAURENT))
    for n, c in enumerate(g.coeffs):
        if c:
            lo, hi = c.min_exp(), c.max_exp()
            if lo < -n or hi > n:
                raise AssertionError(
                    f"rank exponent out of range at q^{n}: [{lo}, {hi}]"
                )
    return g


def rank_count_diff(family: Family, b1: int, b2: int, k: int, order: int) -> QSeries:
    """Series of (#objects with statistic = b1 mod k) - (= b2 mod k)."""
    g = rank_gf(family, order)
    out = QSeries.zeros(RAT, order)
    for n, c in enumerate(g.coeffs):
        if c:
            sums = c.residue_sums(k)
            out.coeffs[n] = sums[b1 % k] - sums[b2 % k]
    return out


@lru_cache(maxsize=None)
def nt_diff_gf(family: Family, b: int, k: int, order: int) -> QSeries:
    """Series over n of (total parts with statistic = b mod k) minus
    (total parts with statistic = k-b mod k), computed as -d/dx at x = 1
    of the transformed rank sum, with dual-number coefficients."""
    _check_specialized(family)
    NTDiffSpec(family, b, k)  # validates the residue range
    d = _family_data(family)
    s = d.qstep
    ctx = DualContext(RAT)
    ring = ctx.ring
    acc = QSeries.zeros(ring, order)
    xk = ctx.x_power(k)
    for n, common, quad in _inner_terms_dual_rat(family, order):
        e_lo = s * (b - 1) * n
        e_hi = s * (k - b - 1) * n
        e_kn = s * k * n
        p1 = common.shift(quad + e_lo, cap=order) - common.shift(
            quad + e_hi, cap=order
        )
        p1 = p1.div_binomial(ring.lift(-1), e_kn)
        t_hi = common.mul_scalar(ctx.x_power(k - b)).shift(quad + e_hi, cap=order)
        t_lo = common.mul_scalar(ctx.x_power(b)).shift(quad + e_lo, cap=order)
        p2 = (t_hi - t_lo).div_binomial(-xk, e_kn)
        acc = acc + p1 + p2
    total = _prefactor_dual_rat(family, order) * acc
    value, deriv = total.dual_parts()
    if not value.is_zero():
        raise AssertionError("x = 1 evaluation of the difference sum must vanish")
    return -deriv


def nt_diff_combo(terms, order: int) -> QSeries:
    """Integer combination sum(c * nt_diff_gf(family, b, k)) of difference
    series; `terms` is an iterable of (coeff, family, b, k)."""
    acc = QSeries.zeros(RAT, order)
    for c, family, b, k in terms:
        acc = acc + nt_diff_gf(family, b, k, order).mul_scalar(c)
    return acc


# ---------------------------------------------------------------------------
# The main transformation, checked per specialization.
# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    name: str
    ok: bool
    first_mismatch: int | None
    order: int
    lhs: QSeries
    rhs: QSeries


def _thmain_rhs(family: Family, ctx, order: int) -> QSeries:
    d = _family_data(family)
    s = d.qstep
    ring = ctx.ring
    z = ctx.lift_zc(1, 1)
    xzinv = ctx.lift_zc(1, -1) * ctx.x_power(1)
    acc = QSeries.zeros(ring, order)
    for n, common, quad in _inner_terms(family, ctx, order, margin=lambda n: s * n):
        # 1/(q^{sn} (1 - z q^{sn}))  +  x z^-1 / (1 - x q^{sn} / z)
        p1 = common.shift(quad - s * n, cap=order).div_binomial(-z, s * n)
        p2 = (
            common.mul_scalar(xzinv)
            .shift(quad, cap=order)
            .div_binomial(-xzinv, s * n)
        )
        acc = acc + p1 + p2
    pref = _product(d.lit_num, d.lit_den, ctx, order)
    return QSeries.one(ring, order) - pref * acc


def thmain_check(family: Family, order: int, dual: bool = True) -> IdentityReport:
    """Compare the rank sum with its transformed product form, over z,
    either at x = 1 or with the exact first derivative carried along."""
    _check_specialized(family)
    ctx = DualContext(LAURENT) if dual else PlainContext(LAURENT)
    lhs = rank_gf_ctx(family, order, ctx)
    rhs = _thmain_rhs(family, ctx, order)
    first = lhs.first_difference(rhs)
    return IdentityReport(
        name=f"main-transformation[{family.value}]",
        ok=first is None,
        first_mismatch=first,
        order=order,
        lhs=lhs,
        rhs=rhs,
    )


# ---------------------------------------------------------------------------
# Generic pair series for sampled parameter values.
# ---------------------------------------------------------------------------


def genovpair_series(d, e, x, order: int) -> QSeries:
    """The joint pair generating function with numeric weights d, e, x
    (all nonzero rationals) and z left formal:

        sum_n (-1/d, -1/e)_n (x d e q)^n / (z q, x q / z)_n
    """
    d = Fraction(d)
    e = Fraction(e)
    x = Fraction(x)
    if not d or not e:
        raise ValueError("sampled weights d, e must be nonzero (limits are hardcoded per family)")
    ctx = PlainContext(LAURENT, x_value=x)
    ring = ctx.ring
    z = ctx.lift_zc(1, 1)
    xz = ctx.lift_zc(1, -1) * ctx.x_power(1)
    scale = ring.lift(x * d * e)
    inv_d = ring.lift(Fraction(1) / d)
    inv_e = ring.lift(Fraction(1) / e)
    acc = QSeries.one(ring, order)
    cur = QSeries.one(ring, order)
    for n in range(1, order + 1):
        cur = cur.mul_binomial(inv_d, n - 1).mul_binomial(inv_e, n - 1)
        cur = cur.mul_scalar(scale).shift(1, cap=order)
        cur = cur.div_binomial(-z, n).div_binomial(-xz, n)
        acc = acc + cur
    return acc


# ---------------------------------------------------------------------------
# Closed forms: infinite products, theta quotients, bilateral sums.
# ---------------------------------------------------------------------------


def _conv(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, u in a.items():
        for j, v in b.items():
            k = i + j
            w = out.get(k, 0) + u * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _alt_kernel_sum(order: int, quad, ymult: int, ypoly: dict, denoms) -> QSeries:
    """sum_{n>=1} (-1)^n q^{quad(n)} (sum_j ypoly[j] q^{ymult*n*j})
    / prod_{(sgn, mult)} (1 + sgn * q^{mult*n}), truncated at `order`."""
    acc = QSeries.zeros(RAT, order)
    n = 1
    while quad(n) <= order:
        sign = -1 if n % 2 else 1
        term = QSeries.zeros(RAT, order)
        live = False
        for j, c in ypoly.items():
            e = quad(n) + ymult * n * j
            if e <= order:
                term.coeffs[e] = Fraction(sign * c)
                live = True
        if live:
            for sgn, mult in denoms:
                term = term.div_binomial(Fraction(sgn), mult * n)
            acc = acc + term
        n += 1
    return acc


def _sbar2(b: int, order: int) -> QSeries:
    """Bilateral sum with quadratic exponent n^2 + 2bn over 1 - q^{10n}."""
    return lerch_sum(
        quad=1, lin=2 * b, denom_step=10, denom_sign=-1,
        include_n0=False, order=order,
    )


def _s2(b: int, order: int) -> QSeries:
    """Bilateral sum with quadratic exponent 2n^2 + bn over 1 - q^{10n}."""
    return lerch_sum(
        quad=2, lin=b, denom_step=10, denom_sign=-1,
        include_n0=False, order=order,
    )


_QUINTIC_FULL = {0: 1, 1: 2, 2: 4, 3: 2, 4: 1}
_QUINTIC_MID = {1: 2, 2: 1, 3: 2}
# (y - 1)^3 (y^2 - 1); multiplied below by the brace polynomial per form
_CUBE_DIFF = _conv({0: -1, 1: 3, 2: -3, 3: 1}, {0: -1, 2: 1})


def _quintic_ov(order: int, brace: dict) -> QSeries:
    num = _conv(_CUBE_DIFF, brace)
    inner = _alt_kernel_sum(
        order, lambda n: n * n + 2 * n, 2, num, [(1, 2), (-1, 10), (-1, 10)]
    )
    return closed_form("overpartition-gf", order).mul_scalar(2) * inner


def _quintic_do(order: int, brace: dict) -> QSeries:
    num = _conv(_CUBE_DIFF, brace)
    inner = _alt_kernel_sum(
        order, lambda n: 2 * n * n + n, 2, num, [(-1, 10), (-1, 10)]
    )
    return closed_form("distinct-odd-gf", order) * inner


def _quartic_13(order: int, quad, ymult: int, dmult: int) -> QSeries:
    inner = _alt_kernel_sum(
        order, quad, ymult, {0: 1, 1: -4, 2: 6, 3: -4, 4: 1},
        [(-1, dmult), (-1, dmult)],
    )
    return closed_form("overpartition-gf", order).mul_scalar(2) * inner


def _theta_base9_lhs(order: int) -> QSeries:
    # the matching cube on both bracket factors is forced by the identity's
    # own derivation (and by expansion); see also _theta_base9_lhs_alt
    num = bracket_infinite(mono(1, 3), 9, order=order).pow(3) * pochhammer_infinite(
        mono(1, 9), 9, order=order
    ).pow(2)
    den = bracket_infinite(mono(-1, 3), 9, order=order).pow(3) * pochhammer_infinite(
        mono(-1, 9), 9, order=order
    ).pow(2)
    return num * den.invert()


def _theta_base9_lhs_alt(order: int) -> QSeries:
    """Same quotient rewritten over base-3 Pochhammers, an independent
    construction used to cross-check the bracket form."""
    num = pochhammer_infinite(mono(1, 3), 3, order=order).pow(3) * pochhammer_infinite(
        mono(-1, 9), 9, order=order
    )
    den = pochhammer_infinite(mono(-1, 3), 3, order=order).pow(
        3
    ) * pochhammer_infinite(mono(1, 9), 9, order=order)
    return num * den.invert()


def _theta_base9_rhs(order: int) -> QSeries:
    a = lerch_sum(quad=9, lin=6, denom_step=9, denom_sign=1, order=order)
    b = lerch_sum(
        quad=9, lin=12, num_shift=3, denom_step=9, denom_sign=1,
        denom_shift=3, order=order,
    )
    c = lerch_sum(
        quad=9, lin=18, num_shift=9, denom_step=9, denom_sign=1,
        denom_shift=6, order=order,
    )
    ratio = pochhammer_infinite(mono(-1, 9), 9, order=order).pow(
        2
    ) * bracket_infinite(mono(-1, 3), 9, order=order).invert()
    return a.mul_scalar(2) - b.mul_scalar(2) + ratio.mul_scalar(4) * c


def _theta_overpartition_rhs(order: int) -> QSeries:
    lead = pochhammer_infinite(mono(1, 18), 18, order=order).pow(3)
    den = (
        bracket_infinite(mono(1, 3), 18, order=order).pow(8)
        * pochhammer_infinite(mono(1, 6), 6, order=order).pow(4)
        * bracket_infinite(mono(1, 9), 18, order=order)
    )
    e = pochhammer_infinite(mono(-1, 9), 9, order=order)
    finv = bracket_infinite(mono(-1, 3), 9, order=order).invert()
    inner = (
        QSeries.one(RAT, order)
        + (e.pow(2) * finv).shift(1, cap=order).mul_scalar(2)
        + (e.pow(4) * finv.pow(2)).shift(2, cap=order).mul_scalar(4)
    )
    return lead * den.invert() * inner


def _mod3_kernel_onesided(order: int) -> QSeries:
    return _alt_kernel_sum(
        order, lambda n: n * n + n, 1, {0: 1, 1: 1}, [(1, 3)]
    )


def _mod3_kernel_bilateral(order: int) -> QSeries:
    half = QSeries.from_terms(RAT, order, {0: Fraction(-1, 2)})
    return half + lerch_sum(quad=1, lin=1, denom_step=3, denom_sign=1, order=order)


def _mod3_kernel_base9(order: int) -> QSeries:
    half = QSeries.from_terms(RAT, order, {0: Fraction(-1, 2)})
    a = lerch_sum(quad=9, lin=6, denom_step=9, denom_sign=1, order=order)
    b = lerch_sum(
        quad=9, lin=12, num_shift=3, denom_step=9, denom_sign=1,
        denom_shift=3, order=order,
    )
    c = lerch_sum(
        quad=9, lin=18, num_shift=8, denom_step=9, denom_sign=1,
        denom_shift=6, order=order,
    )
    return half + a - b + c


def _eta7_quotient(order: int, mid_pow: int, low_pow: int) -> QSeries:
    num = (
        pochhammer_infinite(mono(1, 7), 7, order=order).pow(3)
        * (
            pochhammer_infinite(mono(1, 3), 7, order=order)
            * pochhammer_infinite(mono(1, 4), 7, order=order)
        ).pow(mid_pow)
    )
    den = (
        pochhammer_infinite(mono(1, 1), 7, order=order)
        * pochhammer_infinite(mono(1, 6), 7, order=order)
        * (
            pochhammer_infinite(mono(1, 2), 7, order=order)
            * pochhammer_infinite(mono(1, 5), 7, order=order)
        ).pow(low_pow)
    )
    return num.mul_scalar(-7) * den.invert()


_FORM_BUILDERS: dict[str, Callable[[int], QSeries]] = {}


def _form(name: str):
    def deco(fn):
        _FORM_BUILDERS[name] = fn
        return fn

    return deco


_form("partition-gf")(
    lambda order: pochhammer_infinite(mono(1, 1), 1, order=order).invert()
)
_form("overpartition-gf")(
    lambda order: pochhammer_infinite(mono(-1, 1), 1, order=order)
    * pochhammer_infinite(mono(1, 1), 1, order=order).invert()
)
_form("overpartition-pair-gf")(
    lambda order: closed_form("overpartition-gf", order).pow(2)
)
_form("distinct-odd-gf")(
    lambda order: pochhammer_infinite(mono(-1, 1), 2, order=order)
    * pochhammer_infinite(mono(1, 2), 2, order=order).invert()
)
_form("ovm2-ntdiff-1-5-rhs")(lambda order: _quintic_ov(order, _QUINTIC_FULL))
_form("ovm2-ntdiff-2-5-rhs")(lambda order: _quintic_ov(order, _QUINTIC_MID))
_form("dom2-ntdiff-1-5-rhs")(lambda order: _quintic_do(order, _QUINTIC_FULL))
_form("dom2-ntdiff-2-5-rhs")(lambda order: _quintic_do(order, _QUINTIC_MID))
_form("ovrank-ntdiff-1-3-rhs")(
    lambda order: _quartic_13(order, lambda n: n * n + n, 1, 3)
)
_form("ovm2-ntdiff-1-3-rhs")(
    lambda order: _quartic_13(order, lambda n: n * n + 2 * n, 2, 6)
)
_form("mod3-kernel-onesided")(_mod3_kernel_onesided)
_form("mod3-kernel-bilateral")(_mod3_kernel_bilateral)
_form("mod3-kernel-base9")(_mod3_kernel_base9)
_form("mod3-combined-rhs")(
    lambda order: closed_form("overpartition-gf", order).mul_scalar(2)
    * _mod3_kernel_onesided(order)
)
_form("theta-overpartition-rhs")(_theta_overpartition_rhs)
_form("theta-base9-lhs")(_theta_base9_lhs)
_form("theta-base9-lhs-alt")(_theta_base9_lhs_alt)
_form("theta-base9-rhs")(_theta_base9_rhs)
_form("ovm2-mod5-kernel-onesided")(
    lambda order: closed_form("overpartition-gf", order).mul_scalar(2)
    * _alt_kernel_sum(
        order, lambda n: n * n + 2 * n, 2, {0: 1, 1: -3, 2: 3, 3: -1}, [(-1, 10)]
    )
)
_form("ovm2-mod5-kernel")(
    lambda order: closed_form("overpartition-gf", order).mul_scalar(2)
    * (_sbar2(1, order) + _sbar2(3, order).mul_scalar(3))
)
_form("dom2-mod5-kernel-onesided")(
    lambda order: closed_form("distinct-odd-gf", order)
    * _alt_kernel_sum(
        order, lambda n: 2 * n * n + n, 2, {0: 1, 1: -2, 3: 2, 4: -1}, [(-1, 10)]
    )
)
_form("dom2-mod5-kernel")(
    lambda order: closed_form("distinct-odd-gf", order)
    * (_s2(1, order) - _s2(3, order).mul_scalar(2))
)
_form("ovm2-count-diff-1-2-5")(
    lambda order: rank_count_diff(Family.OV_M2, 1, 2, 5, order)
)
_form("ovm2-count-diff-1-2-5-rhs")(
    lambda order: -closed_form("ovm2-mod5-kernel", order)
)
_form("dom2-count-diff-1-2-5")(
    lambda order: rank_count_diff(Family.DO_M2, 1, 2, 5, order)
)
_form("dom2-count-diff-1-2-5-rhs")(
    lambda order: -closed_form("dom2-mod5-kernel", order)
)
_form("eta7-rank-7n5-rhs")(lambda order: _eta7_quotient(order, 1, 2))
_form("eta7-rank-7n4-rhs")(lambda order: _eta7_quotient(order, 2, 3))
_form("eta5-crank-rank-5n4-rhs")(
    lambda order: pochhammer_infinite(mono(1, 5), 5, order=order)
    .pow(4)
    .mul_scalar(-5)
    * pochhammer_infinite(mono(1, 1), 1, order=order).invert()
)

_CONJECTURE_FORMS = (
    "eta7-rank-7n5-rhs",
    "eta7-rank-7n4-rhs",
    "eta5-crank-rank-5n4-rhs",
)


def form_ids() -> list[str]:
    return sorted(_FORM_BUILDERS)


@lru_cache(maxsize=None)
def closed_form(form_id: str, order: int) -> QSeries:
    """Expand a registered closed form to the requested order."""
    try:
        builder = _FORM_BUILDERS[form_id]
    except KeyError:
        raise UnknownFormId(
            f"unknown form id {form_id!r}; known ids: {', '.join(form_ids())}"
        ) from None
    return builder(order)


def conjecture_rhs(form_id: str, order: int) -> QSeries:
    """The eta-quotient right sides of the conjectured exact identities."""
    if form_id not in _CONJECTURE_FORMS:
        raise UnknownFormId(
            f"{form_id!r} is not a conjectured product; "
            f"expected one of {', '.join(_CONJECTURE_FORMS)}"
        )
    return closed_form(form_id, order)


def lemma42_check(order: int) -> IdentityReport:
    """Theta quotient vs. its three-term bilateral-sum expansion, base 9.

    The bilateral sums individually carry half-integer coefficients; the
    combination must be integral and must match the quotient exactly.
    """
    lhs = closed_form("theta-base9-lhs", order)
    rhs = closed_form("theta-base9-rhs", order)
    rhs.assert_integral()
    first = lhs.first_difference(rhs)
    return IdentityReport(
        name="theta-base9",
        ok=first is None,
        first_mismatch=first,
        order=order,
        lhs=lhs,
        rhs=rhs,
    )
