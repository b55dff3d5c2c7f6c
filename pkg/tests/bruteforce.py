"""Naive, independent reference implementations used as oracles.

Everything here is deliberately dumb: dense dict-based polynomial
arithmetic, product expansion factor by factor, and the classic
recurrence for the partition numbers.  Nothing imports qcert series
internals, so agreement is meaningful.
"""

from fractions import Fraction


def poly_mul(a: dict, b: dict, order: int) -> dict:
    out: dict = {}
    for i, u in a.items():
        if i > order:
            continue
        for j, v in b.items():
            k = i + j
            if k <= order:
                out[k] = out.get(k, Fraction(0)) + u * v
    return {k: v for k, v in out.items() if v}


def poly_inv(a: dict, order: int) -> dict:
    inv = {0: Fraction(1) / a[0]}
    for n in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, n + 1):
            if j in a and (n - j) in inv:
                s += a[j] * inv[n - j]
        if s:
            inv[n] = -s / a[0]
    return inv


def _factor(coeff, pos: int) -> dict:
    """1 - coeff*q^pos as a dict (pos may be 0)."""
    out = {0: Fraction(1)}
    out[pos] = out.get(pos, Fraction(0)) - coeff
    return {k: v for k, v in out.items() if v}


def pochhammer(coeff, qexp: int, step: int, order: int) -> dict:
    """(coeff*q^qexp ; q^step)_inf expanded one binomial at a time."""
    out = {0: Fraction(1)}
    pos = qexp
    while pos <= order:
        out = poly_mul(out, _factor(Fraction(coeff), pos), order)
        pos += step
    return out


def pochhammer_n(coeff, qexp: int, step: int, n: int, order: int) -> dict:
    out = {0: Fraction(1)}
    for k in range(n):
        out = poly_mul(out, _factor(Fraction(coeff), qexp + k * step), order)
    return out


def coeffs(poly: dict, order: int) -> list:
    return [poly.get(i, Fraction(0)) for i in range(order + 1)]


def partition_numbers(order: int) -> list[int]:
    """p(0..order) by the pentagonal-number recurrence."""
    p = [1] + [0] * order
    for n in range(1, order + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p
