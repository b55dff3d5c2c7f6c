"""Exhaustive enumeration of partition-like objects and their statistics.

This module is the brute-force oracle for the whole project: every
generating function is checked against counts and statistic tallies
computed here by walking actual objects.

Conventions for objects a definition leaves open:

* the empty partition / overpartition / pair has every rank statistic 0;
  it contributes one object to residue class 0 of count-type tallies and
  nothing to part-count or ones-count tallies;
* in an overpartition whose largest value occurs both overlined and
  non-overlined, the overlined copy is taken as "the largest part", so
  the chi adjustments below see an overlined largest part.  This choice
  is validated against the rank generating functions by the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BoundExceeded, RepeatedOddPart

# Default sweep limits: full sweeps up to these weights finish in minutes.
DEFAULT_BOUNDS = {
    "partition": 80,
    "distinct_odd": 80,
    "overpartition": 40,
    "pair": 24,
}


# ---------------------------------------------------------------------------
# Object types.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Overpartition:
    """Parts as (value, overlined) pairs in canonical order.

    Canonical order: values non-increasing, and at equal value the
    overlined copy (at most one per value) precedes the plain copies.
    """

    parts: tuple[tuple[int, bool], ...]

    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    def num_parts(self) -> int:
        return len(self.parts)

    def largest(self) -> int:
        return self.parts[0][0] if self.parts else 0

    def overlined_count(self) -> int:
        return sum(1 for _, ov in self.parts if ov)


@dataclass(frozen=True, slots=True)
class OverpartitionPair:
    """A pair (lam, mu) of overpartitions."""

    lam: Overpartition
    mu: Overpartition

    def weight(self) -> int:
        return self.lam.weight() + self.mu.weight()


# ---------------------------------------------------------------------------
# Enumerators.  All stream objects; none materializes a full level.
# ---------------------------------------------------------------------------


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as non-increasing tuples, each exactly once."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    buf: list[int] = []

    def rec(rem: int, maxv: int):
        if rem == 0:
            yield tuple(buf)
            return
        for v in range(min(rem, maxv), 0, -1):
            buf.append(v)
            yield from rec(rem - v, v)
            buf.pop()

    yield from rec(n, max_part if max_part is not None else n)


def enumerate_distinct_odd(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n in which no odd part repeats."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    buf: list[int] = []

    def rec(rem: int, maxv: int):
        if rem == 0:
            yield tuple(buf)
            return
        for v in range(min(rem, maxv), 0, -1):
            buf.append(v)
            # an odd value may appear once; evens repeat freely
            yield from rec(rem - v, v - 1 if v % 2 else v)
            buf.pop()

    yield from rec(n, n)


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """All overpartitions of n, each exactly once, canonically ordered."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    buf: list[tuple[int, bool]] = []

    def rec(rem: int, maxv: int):
        if rem == 0:
            yield Overpartition(tuple(buf))
            return
        for v in range(min(rem, maxv), 0, -1):
            for mult in range(1, rem // v + 1):
                for first_ov in (True, False):
                    buf.append((v, first_ov))
                    for _ in range(mult - 1):
                        buf.append((v, False))
                    yield from rec(rem - v * mult, v - 1)
                    del buf[-mult:]

    yield from rec(n, n)


def enumerate_overpartition_pairs(n: int) -> Iterator[OverpartitionPair]:
    """All overpartition pairs of total weight n."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    for j in range(n + 1):
        mus = list(enumerate_overpartitions(n - j))
        for lam in enumerate_overpartitions(j):
            for mu in mus:
                yield OverpartitionPair(lam, mu)


def count_partitions(n: int) -> int:
    return sum(1 for _ in enumerate_partitions(n))


def count_distinct_odd(n: int) -> int:
    return sum(1 for _ in enumerate_distinct_odd(n))


def count_overpartitions(n: int) -> int:
    return sum(1 for _ in enumerate_overpartitions(n))


def count_overpartition_pairs(n: int) -> int:
    return sum(1 for _ in enumerate_overpartition_pairs(n))


# ---------------------------------------------------------------------------
# Statistics.
# ---------------------------------------------------------------------------


def dyson_rank(parts: tuple[int, ...]) -> int:
    """Largest part minus number of parts; 0 for the empty partition."""
    if not parts:
        return 0
    return parts[0] - len(parts)


def ov_rank(op: Overpartition) -> int:
    """Dyson's rank carried over verbatim to overpartitions."""
    if not op.parts:
        return 0
    return op.parts[0][0] - len(op.parts)


def m2_rank_overpartition(op: Overpartition) -> int:
    """ceil(largest/2) - #parts + #(odd plain parts) - chi.

    chi is 1 exactly when the largest part is odd and non-overlined;
    with canonical ordering that means the leading entry is plain.
    """
    if not op.parts:
        return 0
    largest, lead_ov = op.parts[0]
    odd_plain = sum(1 for v, ov in op.parts if v % 2 and not ov)
    chi = 1 if (largest % 2 and not lead_ov) else 0
    return -(-largest // 2) - len(op.parts) + odd_plain - chi


def m2_rank_distinct_odd(parts: tuple[int, ...]) -> int:
    """ceil(largest/2) - #parts for partitions without repeated odd parts."""
    if not parts:
        return 0
    odds = [v for v in parts if v % 2]
    if len(odds) != len(set(odds)):
        raise RepeatedOddPart(f"partition {parts} repeats an odd part")
    return -(-parts[0] // 2) - len(parts)


def pair_rank(pair: OverpartitionPair) -> int:
    """Largest part of the pair, minus #parts of lam, minus #overlined of
    mu, minus chi; chi is 1 when the largest part is plain and lives in mu.

    Parts are ranked overlined-lam > plain-lam > overlined-mu > plain-mu
    at equal value, so "the largest part" is in mu only when mu strictly
    exceeds lam in value.
    """
    lam, mu = pair.lam, pair.mu
    if not lam.parts and not mu.parts:
        return 0
    l_lam = lam.largest()
    l_mu = mu.largest()
    largest = max(l_lam, l_mu)
    chi = 0
    if l_mu > l_lam and not mu.parts[0][1]:
        chi = 1
    return largest - lam.num_parts() - mu.overlined_count() - chi


def crank(parts: tuple[int, ...]) -> int:
    """Largest part when 1 is absent; otherwise #(parts > #ones) - #ones."""
    if not parts:
        return 0
    ones = count_ones(parts)
    if ones == 0:
        return parts[0]
    bigger = sum(1 for v in parts if v > ones)
    return bigger - ones


def count_ones(parts: tuple[int, ...]) -> int:
    ones = 0
    for v in reversed(parts):
        if v != 1:
            break
        ones += 1
    return ones


# ---------------------------------------------------------------------------
# Cached raw sweeps: one enumeration pass per (object family, n) serves
# every statistic and every modulus.  Counters are keyed by the raw
# statistic value; weights are object counts, part counts, or ones.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partition_sweep(n: int) -> dict[str, Counter]:
    rank_count: Counter = Counter()
    rank_parts: Counter = Counter()
    crank_count: Counter = Counter()
    crank_ones: Counter = Counter()
    if n == 0:
        rank_count[0] = 1
        crank_count[0] = 1
    else:
        for parts in enumerate_partitions(n):
            t = len(parts)
            r = parts[0] - t
            rank_count[r] += 1
            rank_parts[r] += t
            ones = count_ones(parts)
            if ones == 0:
                c = parts[0]
            else:
                c = sum(1 for v in parts if v > ones) - ones
            crank_count[c] += 1
            if ones:
                crank_ones[c] += ones
    return {
        "rank_count": rank_count,
        "rank_parts": rank_parts,
        "crank_count": crank_count,
        "crank_ones": crank_ones,
    }


@lru_cache(maxsize=None)
def overpartition_sweep(n: int) -> dict[str, Counter]:
    rank_count: Counter = Counter()
    rank_parts: Counter = Counter()
    m2_count: Counter = Counter()
    m2_parts: Counter = Counter()
    if n == 0:
        rank_count[0] = 1
        m2_count[0] = 1
    else:
        for op in enumerate_overpartitions(n):
            parts = op.parts
            t = len(parts)
            largest, lead_ov = parts[0]
            r = largest - t
            rank_count[r] += 1
            rank_parts[r] += t
            odd_plain = sum(1 for v, ov in parts if v % 2 and not ov)
            chi = 1 if (largest % 2 and not lead_ov) else 0
            m2 = -(-largest // 2) - t + odd_plain - chi
            m2_count[m2] += 1
            m2_parts[m2] += t
    return {
        "rank_count": rank_count,
        "rank_parts": rank_parts,
        "m2_count": m2_count,
        "m2_parts": m2_parts,
    }


@lru_cache(maxsize=None)
def distinct_odd_sweep(n: int) -> dict[str, Counter]:
    m2_count: Counter = Counter()
    m2_parts: Counter = Counter()
    if n == 0:
        m2_count[0] = 1
    else:
        for parts in enumerate_distinct_odd(n):
            t = len(parts)
            m2 = -(-parts[0] // 2) - t
            m2_count[m2] += 1
            m2_parts[m2] += t
    return {"m2_count": m2_count, "m2_parts": m2_parts}


@lru_cache(maxsize=None)
def _ov_summaries(n: int) -> list[tuple[int, int, int, int, int]]:
    """Per-overpartition summaries used by the pair sweeps:
    (largest, leading part overlined, #parts, #overlined, #plain)."""
    out = []
    for op in enumerate_overpartitions(n):
        parts = op.parts
        t = len(parts)
        ovc = sum(1 for _, ov in parts if ov)
        if parts:
            out.append((parts[0][0], int(parts[0][1]), t, ovc, t - ovc))
        else:
            out.append((0, 0, 0, 0, 0))
    return out


@lru_cache(maxsize=None)
def pair_sweep(n: int) -> dict[str, Counter]:
    rank_count: Counter = Counter()
    rank_parts: Counter = Counter()
    if n == 0:
        rank_count[0] = 1
        return {"rank_count": rank_count, "rank_parts": rank_parts}
    for j in range(n + 1):
        for llam, _lam_ov, tlam, _ovlam, _plam in _ov_summaries(j):
            for lmu, mu_ov, tmu, ovmu, _pmu in _ov_summaries(n - j):
                chi = 1 if (lmu > llam and not mu_ov) else 0
                r = max(llam, lmu) - tlam - ovmu - chi
                rank_count[r] += 1
                rank_parts[r] += tlam + tmu
    return {"rank_count": rank_count, "rank_parts": rank_parts}


@lru_cache(maxsize=None)
def pair_profile(n: int, limit: int | None = None) -> Counter:
    """Joint distribution over pairs of weight n, keyed by (r, s, t, m):
    r = overlined-in-lam + plain-in-mu, s = #parts of mu, t = total
    parts, m = pair rank."""
    bound = DEFAULT_BOUNDS["pair"] if limit is None else limit
    if n > bound:
        raise BoundExceeded(f"pair profile at n={n} exceeds bound {bound}")
    profile: Counter = Counter()
    if n == 0:
        profile[(0, 0, 0, 0)] = 1
        return profile
    for j in range(n + 1):
        for llam, _lam_ov, tlam, ovlam, _plam in _ov_summaries(j):
            for lmu, mu_ov, tmu, ovmu, pmu in _ov_summaries(n - j):
                chi = 1 if (lmu > llam and not mu_ov) else 0
                m = max(llam, lmu) - tlam - ovmu - chi
                profile[(ovlam + pmu, tmu, tlam + tmu, m)] += 1
    return profile


# ---------------------------------------------------------------------------
# Tallies by residue class.
# ---------------------------------------------------------------------------

# family -> (sweep function, raw-counter key)
_TALLY_TABLE = {
    "NT": (partition_sweep, "rank_parts"),
    "N": (partition_sweep, "rank_count"),
    "NTbar": (overpartition_sweep, "rank_parts"),
    "Nbar": (overpartition_sweep, "rank_count"),
    "NTbar2": (overpartition_sweep, "m2_parts"),
    "Nbar2": (overpartition_sweep, "m2_count"),
    "NT2": (distinct_odd_sweep, "m2_parts"),
    "N2": (distinct_odd_sweep, "m2_count"),
    "Momega": (partition_sweep, "crank_ones"),
    "M": (partition_sweep, "crank_count"),
    "NTpair": (pair_sweep, "rank_parts"),
    "Npair": (pair_sweep, "rank_count"),
}

TALLY_FAMILIES = tuple(_TALLY_TABLE)

# family -> which enumeration bound governs it
FAMILY_BOUND_KEY = {
    "NT": "partition",
    "N": "partition",
    "Momega": "partition",
    "M": "partition",
    "NTbar": "overpartition",
    "Nbar": "overpartition",
    "NTbar2": "overpartition",
    "Nbar2": "overpartition",
    "NT2": "distinct_odd",
    "N2": "distinct_odd",
    "NTpair": "pair",
    "Npair": "pair",
}


def tally(family: str, n: int, k: int) -> list[int]:
    """Exact counters by residue class mod k for the given family at
    weight n.  Part-count families sum parts, count families count
    objects, Momega sums ones."""
    if k < 1:
        raise ValueError("modulus must be >= 1")
    try:
        sweep, key = _TALLY_TABLE[family]
    except KeyError:
        raise ValueError(
            f"unknown statistic family {family!r}; known: {sorted(_TALLY_TABLE)}"
        ) from None
    raw = sweep(n)[key]
    out = [0] * k
    for value, weight in raw.items():
        out[value % k] += weight
    return out


def raw_tally(family: str, n: int) -> Counter:
    """Counter keyed by the raw statistic value (no residue reduction)."""
    sweep, key = _TALLY_TABLE[family]
    return sweep(n)[key]


def clear_caches():
    """Drop all memoized sweeps (mainly for tests)."""
    partition_sweep.cache_clear()
    overpartition_sweep.cache_clear()
    distinct_odd_sweep.cache_clear()
    _ov_summaries.cache_clear()
    pair_sweep.cache_clear()
    pair_profile.cache_clear()
