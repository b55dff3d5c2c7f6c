"""Declarative registry and runner for every congruence, relation,
identity, and conjecture the project certifies.

Each check is a CheckSpec; running one produces a CheckReport with a
PASS / FAIL / SKIPPED status and, on failure, a reproducible witness
(the first offending index with the value found and the value
expected).  Conjecture checks are flagged so that a failing conjecture
is loudly reported without failing the suite unless strict mode is on.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from fnmatch import fnmatch

from . import combinatorics as comb
from . import genfun
from .combinatorics import DEFAULT_BOUNDS, FAMILY_BOUND_KEY, raw_tally, tally
from .errors import EnumBoundExceeded, InsufficientOrder, QcertError
from .genfun import Family, closed_form, nt_diff_combo, thmain_check
from .series import QSeries

# statistic family -> generating-function family for part-count series
_SERIES_FAMILY = {
    "NT": Family.DYSON,
    "NTbar": Family.OV_RANK,
    "NTbar2": Family.OV_M2,
    "NT2": Family.DO_M2,
}


@dataclass(frozen=True)
class StatTerm:
    coeff: int
    family: str
    residue: int
    modulus: int

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("zero coefficient in statistic combination")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue out of range")


@dataclass(frozen=True)
class CheckSpec:
    id: str
    kind: str  # CONGRUENCE | EXACT_RELATION | EXACT_IDENTITY | ORACLE_XCHECK
    category: str  # theorem | classic | new | conjecture | identity | xcheck
    statement: str
    engines: str  # SERIES | ENUM | BOTH | MIXED | FORM
    lhs: tuple[StatTerm, ...] = ()
    lhs_form: str | None = None
    rhs_form: str | None = None
    modulus: int | None = None
    progression: tuple[int, int] | None = None  # (offset i, step M)
    bound: int = 0  # largest weight n examined on the lhs scale
    enum_bound: int | None = None  # enum confirmation range for BOTH
    special: str | None = None  # named runner for structural checks
    informational: bool = False

    @property
    def conjecture(self) -> bool:
        return self.category == "conjecture"


@dataclass
class CheckReport:
    id: str
    kind: str
    engine: str
    order: int
    bound: int
    status: str  # PASS | FAIL | SKIPPED
    statement: str
    conjecture: bool = False
    informational: bool = False
    witness: dict | None = None
    skip_reason: str | None = None
    notes: list[str] = field(default_factory=list)
    ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "statement": self.statement,
            "kind": self.kind,
            "engine": self.engine,
            "order": self.order,
            "bound": self.bound,
            "status": self.status,
            "conjecture": self.conjecture,
            "informational": self.informational,
            "ms": round(self.ms, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.skip_reason:
            out["skip_reason"] = self.skip_reason
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass
class VerifyConfig:
    order: int | None = None
    enum_bounds: dict = field(default_factory=lambda: dict(DEFAULT_BOUNDS))
    strict_conjectures: bool = False
    unsafe_bounds: bool = False
    threads: int | None = None
    seed: int = 0
    include_informational: bool = True


def _term_str(t: StatTerm) -> str:
    c = "" if t.coeff == 1 else ("-" if t.coeff == -1 else f"{t.coeff}*")
    return f"{c}{t.family}({t.residue},{t.modulus},n)"


def _combo_str(terms) -> str:
    out = ""
    for i, t in enumerate(terms):
        s = _term_str(t)
        if i == 0:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


# ---------------------------------------------------------------------------
# Engines.
# ---------------------------------------------------------------------------


def _split_terms(terms):
    series_terms = [t for t in terms if t.family in _SERIES_FAMILY]
    enum_terms = [t for t in terms if t.family not in _SERIES_FAMILY]
    return series_terms, enum_terms


def _series_combo(series_terms, order: int) -> QSeries:
    """Rewrite a statistic combination as difference series.

    A part-count series exists only for antisymmetric residue pairs
    (coefficient c on residue b, -c on k - b); every statement in the
    registry has this shape.
    """
    grouped: dict[tuple[str, int], dict[int, int]] = {}
    for t in series_terms:
        res = grouped.setdefault((t.family, t.modulus), {})
        res[t.residue % t.modulus] = res.get(t.residue % t.modulus, 0) + t.coeff
    combo = []
    for (family, k), res in sorted(grouped.items()):
        if res.get(0):
            raise ValueError("residue 0 has no antisymmetric partner")
        for m in range(1, k // 2 + 1):
            c_lo = res.get(m, 0)
            c_hi = res.get(k - m, 0)
            if c_lo + c_hi != 0:
                raise ValueError(
                    f"residues {m},{k - m} mod {k} are not antisymmetric"
                )
            if c_lo:
                combo.append((c_lo, _SERIES_FAMILY[family], m, k))
    return nt_diff_combo(combo, order)


def _enum_value(terms, n: int) -> int:
    acc = 0
    for t in terms:
        acc += t.coeff * tally(t.family, n, t.modulus)[t.residue]
    return acc


def _enum_limit_for(terms, config: VerifyConfig) -> int:
    keys = {FAMILY_BOUND_KEY[t.family] for t in terms}
    return min(config.enum_bounds[k] for k in keys) if keys else 0


def _require_enum_range(spec: CheckSpec, terms, upto: int, config: VerifyConfig):
    limit = _enum_limit_for(terms, config)
    if upto > limit and not config.unsafe_bounds:
        raise EnumBoundExceeded(
            f"{spec.id} needs enumeration to n={upto}, limit is {limit} "
            "(pass unsafe bounds to override)"
        )


def _progression_points(i: int, step: int, bound: int):
    return range(i, bound + 1, step)


# ---------------------------------------------------------------------------
# Check runners by kind.
# ---------------------------------------------------------------------------


def _run_progression_zero(spec: CheckSpec, bound: int, config: VerifyConfig, report: CheckReport):
    """CONGRUENCE (mod p) or EXACT_RELATION (= 0) along a progression."""
    i, step = spec.progression
    series_terms, enum_terms = _split_terms(spec.lhs)
    use_series = bool(series_terms) and spec.engines != "ENUM"
    series_vals = None
    if use_series:
        try:
            series = _series_combo(series_terms, bound).assert_integral()
            series_vals = series.coeffs
        except ValueError as exc:
            # combination is not expressible as difference series
            # (possible for perturbed specs); fall back to enumeration
            use_series = False
            enum_terms = list(spec.lhs)
            report.notes.append(f"series engine unavailable: {exc}")
    enum_needed = bool(enum_terms) or not use_series
    if enum_needed:
        enum_like = enum_terms if (enum_terms and use_series) else spec.lhs
        _require_enum_range(spec, enum_like, bound, config)

    for n in _progression_points(i, step, bound):
        val = 0
        if use_series:
            val += int(series_vals[n])
            if enum_terms:
                val += _enum_value(enum_terms, n)
        else:
            val = _enum_value(spec.lhs, n)
        bad = (val % spec.modulus != 0) if spec.kind == "CONGRUENCE" else (val != 0)
        if bad:
            expected = f"0 (mod {spec.modulus})" if spec.kind == "CONGRUENCE" else "0"
            report.status = "FAIL"
            report.witness = {"n": n, "value": val, "expected": expected}
            return

    # independent confirmation by full enumeration on the overlap
    if spec.engines == "BOTH" and use_series:
        confirm_to = min(spec.enum_bound or 0, bound)
        _require_enum_range(spec, spec.lhs, confirm_to, config)
        for n in _progression_points(i, step, confirm_to):
            ev = _enum_value(spec.lhs, n)
            sv = int(series_vals[n]) + (_enum_value(enum_terms, n) if enum_terms else 0)
            if ev != sv:
                report.status = "FAIL"
                report.witness = {
                    "n": n,
                    "value": sv,
                    "expected": f"{ev} (enumeration)",
                }
                return
        report.notes.append(f"enumeration confirms values for n <= {confirm_to}")
    report.status = "PASS"


def _run_exact_identity(spec: CheckSpec, bound: int, config: VerifyConfig, report: CheckReport):
    if spec.progression is None:
        lhs = (
            closed_form(spec.lhs_form, bound)
            if spec.lhs_form
            else _series_combo(spec.lhs, bound)
        )
        rhs = closed_form(spec.rhs_form, bound)
        if spec.modulus:
            diff = (lhs - rhs).reduce_mod(spec.modulus)
            first = next((n for n, v in enumerate(diff) if v), None)
            if first is not None:
                report.status = "FAIL"
                report.witness = {
                    "n": first,
                    "value": int((lhs - rhs).coeffs[first]),
                    "expected": f"0 (mod {spec.modulus})",
                }
                return
        else:
            first = lhs.first_difference(rhs)
            if first is not None:
                report.status = "FAIL"
                report.witness = {
                    "n": first,
                    "value": str(lhs.coeffs[first]),
                    "expected": str(rhs.coeffs[first]),
                }
                return
        report.status = "PASS"
        return

    # progression form: sum over t of lhs(step*t + i) q^t equals the rhs
    i, step = spec.progression
    t_max = (bound - i) // step
    if t_max < 1:
        raise InsufficientOrder(
            f"{spec.id}: bound {bound} yields fewer than two samples of "
            f"the progression {step}n+{i}"
        )
    series_terms, enum_terms = _split_terms(spec.lhs)
    series_vals = None
    if series_terms:
        series_vals = _series_combo(series_terms, bound).assert_integral().coeffs
    if enum_terms:
        _require_enum_range(spec, enum_terms, i + step * t_max, config)
    rhs = closed_form(spec.rhs_form, t_max).assert_integral()
    for t in range(t_max + 1):
        n = i + step * t
        val = 0
        if series_vals is not None:
            val += int(series_vals[n])
        if enum_terms:
            val += _enum_value(enum_terms, n)
        want = int(rhs.coeffs[t])
        if val != want:
            report.status = "FAIL"
            report.witness = {"n": n, "value": val, "expected": want}
            return
    report.notes.append(f"progression index up to {t_max}")
    report.status = "PASS"


def _run_special(spec: CheckSpec, bound: int, config: VerifyConfig, report: CheckReport):
    kind, _, arg = spec.special.partition(":")
    if kind == "thmain":
        res = thmain_check(Family(arg), bound, dual=True)
        if res.ok:
            report.status = "PASS"
            report.notes.append("value and derivative components both match")
        else:
            report.status = "FAIL"
            report.witness = {
                "n": res.first_mismatch,
                "value": str(res.lhs.coeffs[res.first_mismatch]),
                "expected": str(res.rhs.coeffs[res.first_mismatch]),
            }
        return
    if kind == "xcheck":
        _XCHECKS[arg](spec, bound, config, report)
        return
    raise QcertError(f"unknown special runner {spec.special!r}")


# ---------------------------------------------------------------------------
# Oracle cross-checks: series engine vs exhaustive enumeration.
# ---------------------------------------------------------------------------


def _poly_matches_counter(poly, counter) -> bool:
    table = {e: v for e, v in poly.items()} if poly else {}
    return table == {m: Fraction(c) for m, c in counter.items() if c}


def _xcheck_rank_distribution(spec, bound, config, report, family, count_family,
                              diff_family, diff_pairs, gf_id):
    _require_enum_range(spec, [StatTerm(1, count_family, 0, 1)], bound, config)
    g = genfun.rank_gf(family, bound)
    for n in range(bound + 1):
        if not _poly_matches_counter(g.coeffs[n], raw_tally(count_family, n)):
            report.status = "FAIL"
            report.witness = {
                "n": n,
                "value": str(g.coeffs[n]),
                "expected": str(dict(sorted(raw_tally(count_family, n).items()))),
            }
            return
    counts = closed_form(gf_id, bound)
    for n in range(bound + 1):
        total = sum(raw_tally(count_family, n).values())
        if Fraction(total) != counts.coeffs[n]:
            report.status = "FAIL"
            report.witness = {"n": n, "value": total, "expected": str(counts.coeffs[n])}
            return
    for b, k in diff_pairs:
        series = genfun.nt_diff_gf(family, b, k, bound)
        for n in range(bound + 1):
            tl = tally(diff_family, n, k)
            want = tl[b] - tl[(k - b) % k]
            if series.coeffs[n] != want:
                report.status = "FAIL"
                report.witness = {
                    "n": n,
                    "value": str(series.coeffs[n]),
                    "expected": want,
                }
                report.notes.append(f"part-count difference b={b} mod {k}")
                return
    report.notes.append(
        f"distribution, counts, and part-count differences agree to n={bound}"
    )
    report.status = "PASS"


def _xcheck_pair(spec, bound, config, report):
    limit = config.enum_bounds["pair"]
    if bound > limit and not config.unsafe_bounds:
        raise EnumBoundExceeded(f"pair cross-check bound {bound} > limit {limit}")
    g = genfun.genovpair_series(1, 1, 1, bound)
    counts = closed_form("overpartition-pair-gf", bound)
    for n in range(bound + 1):
        sweep = comb.pair_sweep(n)["rank_count"]
        if not _poly_matches_counter(g.coeffs[n], sweep):
            report.status = "FAIL"
            report.witness = {
                "n": n,
                "value": str(g.coeffs[n]),
                "expected": str(dict(sorted(sweep.items()))),
            }
            return
        if Fraction(sum(sweep.values())) != counts.coeffs[n]:
            report.status = "FAIL"
            report.witness = {
                "n": n,
                "value": sum(sweep.values()),
                "expected": str(counts.coeffs[n]),
            }
            return
    # joint profile vs the generic series at sampled integer weights
    samples = [(2, 1, 1), (1, 2, 1), (2, 3, 1), (1, 1, 2), (3, 2, 2)]
    if config.seed:
        rng = random.Random(config.seed)
        samples = samples + [
            tuple(rng.randint(1, 4) for _ in range(3)) for _ in range(2)
        ]
    profile_to = min(bound, 10)
    for d, e, x in samples:
        series = genfun.genovpair_series(d, e, x, profile_to)
        for n in range(profile_to + 1):
            want: dict[int, Fraction] = {}
            for (r, s, t, m), cnt in comb.pair_profile(n).items():
                want[m] = want.get(m, Fraction(0)) + cnt * Fraction(d) ** r * Fraction(
                    e
                ) ** s * Fraction(x) ** t
            got = {exp: v for exp, v in series.coeffs[n].items()}
            if got != {m: v for m, v in want.items() if v}:
                report.status = "FAIL"
                report.witness = {
                    "n": n,
                    "value": str(series.coeffs[n]),
                    "expected": str(dict(sorted(want.items()))),
                }
                report.notes.append(f"sampled weights (d,e,x)=({d},{e},{x})")
                return
    report.notes.append(
        f"rank distribution to n={bound}; joint profile at {len(samples)} "
        f"sampled weights to n={profile_to}"
    )
    report.status = "PASS"


_XCHECKS = {
    "rank-part": lambda spec, bound, config, report: _xcheck_rank_distribution(
        spec, bound, config, report, Family.DYSON, "N", "NT",
        [(1, 5), (2, 5), (1, 7), (2, 7), (3, 7)], "partition-gf",
    ),
    "rank-ov": lambda spec, bound, config, report: _xcheck_rank_distribution(
        spec, bound, config, report, Family.OV_RANK, "Nbar", "NTbar",
        [(1, 3)], "overpartition-gf",
    ),
    "m2-ov": lambda spec, bound, config, report: _xcheck_rank_distribution(
        spec, bound, config, report, Family.OV_M2, "Nbar2", "NTbar2",
        [(1, 5), (2, 5), (1, 3)], "overpartition-gf",
    ),
    "m2-do": lambda spec, bound, config, report: _xcheck_rank_distribution(
        spec, bound, config, report, Family.DO_M2, "N2", "NT2",
        [(1, 5), (2, 5)], "distinct-odd-gf",
    ),
    "pair": _xcheck_pair,
}


# ---------------------------------------------------------------------------
# Public runner.
# ---------------------------------------------------------------------------


def run_check(spec: CheckSpec, order: int | None = None, config: VerifyConfig | None = None) -> CheckReport:
    """Execute one check and return its report.

    `order` overrides the spec's bound (largest lhs weight examined).
    Raises InsufficientOrder when a progression cannot be sampled at
    least twice at the requested order.
    """
    config = config or VerifyConfig()
    bound = order if order is not None else (config.order or spec.bound)
    report = CheckReport(
        id=spec.id,
        kind=spec.kind,
        engine=spec.engines,
        order=bound,
        bound=bound,
        status="SKIPPED",
        statement=spec.statement,
        conjecture=spec.conjecture,
        informational=spec.informational,
    )
    if spec.progression is not None:
        i, step = spec.progression
        if bound < i + step:
            raise InsufficientOrder(
                f"{spec.id}: order {bound} cannot sample the progression "
                f"{step}n+{i} at least twice"
            )
    start = time.perf_counter()
    try:
        if spec.special:
            _run_special(spec, bound, config, report)
        elif spec.kind in ("CONGRUENCE", "EXACT_RELATION") and spec.progression:
            _run_progression_zero(spec, bound, config, report)
        elif spec.kind == "CONGRUENCE":
            _run_exact_identity(spec, bound, config, report)
        elif spec.kind == "EXACT_IDENTITY":
            _run_exact_identity(spec, bound, config, report)
        else:
            raise QcertError(f"cannot dispatch check {spec.id}")
    except (EnumBoundExceeded,) as exc:
        report.status = "SKIPPED"
        report.skip_reason = str(exc)
    report.ms = (time.perf_counter() - start) * 1000.0
    return report


def registry() -> list[CheckSpec]:
    """Every check the suite knows about, in canonical order."""
    return list(_REGISTRY)


def _congruence(id, category, terms, p, prog, bound, engines="SERIES", enum_bound=None, informational=False):
    i, step = prog
    return CheckSpec(
        id=id,
        kind="CONGRUENCE",
        category=category,
        statement=f"{_combo_str(terms)} = 0 (mod {p}) for n = {step}m+{i}",
        engines=engines,
        lhs=tuple(terms),
        modulus=p,
        progression=prog,
        bound=bound,
        enum_bound=enum_bound,
        informational=informational,
    )


def _relation(id, category, terms, prog, bound, engines="ENUM"):
    i, step = prog
    return CheckSpec(
        id=id,
        kind="EXACT_RELATION",
        category=category,
        statement=f"{_combo_str(terms)} = 0 for n = {step}m+{i}",
        engines=engines,
        lhs=tuple(terms),
        progression=prog,
        bound=bound,
    )


def _identity(id, category, rhs_form, bound, *, terms=(), lhs_form=None, prog=None, engines="SERIES", modulus=None):
    if lhs_form:
        lhs_str = lhs_form
    else:
        lhs_str = _combo_str(terms)
        if prog:
            lhs_str = f"sum over m of [{lhs_str}] at n = {prog[1]}m+{prog[0]}"
    rel = f"= {rhs_form}" if modulus is None else f"= {rhs_form} (mod {modulus})"
    return CheckSpec(
        id=id,
        kind="EXACT_IDENTITY" if modulus is None else "CONGRUENCE",
        category=category,
        statement=f"{lhs_str} {rel}",
        engines=engines,
        lhs=tuple(terms),
        lhs_form=lhs_form,
        rhs_form=rhs_form,
        modulus=modulus,
        progression=prog,
        bound=bound,
    )


def _st(c, fam, m, k):
    return StatTerm(c, fam, m, k)


def _build_registry() -> list[CheckSpec]:
    specs: list[CheckSpec] = []

    def combo(fam, pairs, k):
        out = []
        for c, m in pairs:
            out.append(_st(c, fam, m, k))
            out.append(_st(-c, fam, k - m, k))
        return out

    # --- the three headline theorems -----------------------------------
    specs.append(
        _congruence(
            "T1", "theorem", combo("NTbar2", [(1, 1), (2, 2)], 5), 5, (2, 5),
            300, engines="BOTH", enum_bound=37,
        )
    )
    t2_terms = combo("NTbar", [(1, 1)], 3) + combo("NTbar2", [(-1, 1)], 3)
    specs.append(
        _congruence("T2A", "theorem", t2_terms, 3, (0, 3), 300, engines="BOTH", enum_bound=37)
    )
    specs.append(
        _congruence("T2B", "theorem", t2_terms, 3, (1, 3), 300, engines="BOTH", enum_bound=37)
    )
    specs.append(
        _congruence(
            "T3", "theorem", combo("NT2", [(1, 1), (2, 2)], 5), 5, (1, 5),
            300, engines="BOTH", enum_bound=76,
        )
    )

    # --- previously known part-count congruences ------------------------
    nt5 = combo("NT", [(1, 1), (2, 2)], 5)
    for i in (1, 4):
        specs.append(
            _congruence(f"NT5-I{i}", "classic", nt5, 5, (i, 5), 300, engines="BOTH", enum_bound=30)
        )
    nt7 = combo("NT", [(1, 1), (1, 2), (-1, 3)], 7)
    for i in (1, 5):
        specs.append(
            _congruence(f"NT7-I{i}", "classic", nt7, 7, (i, 7), 300, engines="BOTH", enum_bound=30)
        )

    # --- the two further mod-7 families --------------------------------
    alt1 = combo("NT", [(1, 1), (2, 3)], 7)
    for i in (1, 3, 4, 5):
        specs.append(
            _congruence(f"NT7-ALT1-I{i}", "new", alt1, 7, (i, 7), 300, engines="BOTH", enum_bound=30)
        )
    alt2 = combo("NT", [(1, 2), (4, 3)], 7)
    for i in (0, 1, 5):
        specs.append(
            _congruence(f"NT7-ALT2-I{i}", "new", alt2, 7, (i, 7), 300, engines="BOTH", enum_bound=30)
        )

    # --- conjectured congruences, relations, and identities -------------
    c11a = combo("NT", [(1, 1), (3, 2), (-4, 3), (3, 4), (3, 5)], 11)
    specs.append(_congruence("CJ-NT11-I6", "conjecture", c11a, 11, (6, 11), 200))
    c11b = combo("NT", [(1, 1), (-3, 2), (5, 3), (-2, 4), (4, 5)], 11)
    specs.append(_congruence("CJ-NT11-I1", "conjecture", c11b, 11, (1, 11), 200))
    c13a = combo("NT", [(1, 1), (1, 2), (6, 3), (3, 6)], 13)
    specs.append(_congruence("CJ-NT13-I1", "conjecture", c13a, 13, (1, 13), 200))
    c13b = combo("NT", [(1, 1), (3, 3), (-4, 4), (1, 5), (-2, 6)], 13)
    specs.append(_congruence("CJ-NT13-I3", "conjecture", c13b, 13, (3, 13), 200))

    specs.append(
        _identity(
            "CJ-NT7-ETA-7N5", "conjecture", "eta7-rank-7n5-rhs", 7 * 150 + 5,
            terms=combo("NT", [(1, 1), (3, 2)], 7), prog=(5, 7),
        )
    )
    specs.append(
        _identity(
            "CJ-NT7-ETA-7N4", "conjecture", "eta7-rank-7n4-rhs", 7 * 150 + 4,
            terms=combo("NT", [(1, 1), (2, 3)], 7), prog=(4, 7),
        )
    )

    mw5_eq = combo("Momega", [(1, 1), (2, 2)], 5)
    specs.append(_relation("CJ-MW5-EQ-5N4", "conjecture", mw5_eq, (4, 5), 60))

    mixed504 = combo("Momega", [(1, 1)], 5) + combo("NT", [(2, 2)], 5)
    for i in (0, 4):
        specs.append(
            _congruence(f"CJ-MWNT5-I{i}", "conjecture", mixed504, 5, (i, 5), 60, engines="MIXED")
        )
    specs.append(_relation("CJ-MWNT5-EQ-5N2", "conjecture", mixed504, (2, 5), 60, engines="MIXED"))

    mixed512 = combo("NT", [(1, 1)], 5) + combo("Momega", [(2, 2)], 5)
    for i in (1, 2):
        specs.append(
            _congruence(f"CJ-NTMW5-I{i}", "conjecture", mixed512, 5, (i, 5), 60, engines="MIXED")
        )
    specs.append(
        _identity(
            "CJ-NTMW5-ETA-5N4", "conjecture", "eta5-crank-rank-5n4-rhs", 59,
            terms=mixed512, prog=(4, 5), engines="MIXED",
        )
    )
    mixed_eq54 = combo("Momega", [(1, 1)], 5) + combo("NT", [(4, 1)], 5)
    specs.append(_relation("CJ-MWNT5-EQ-5N4", "conjecture", mixed_eq54, (4, 5), 60, engines="MIXED"))

    mw7a = combo("Momega", [(1, 1), (2, 3)], 7)
    for i in (0, 2, 5, 6):
        specs.append(_congruence(f"CJ-MW7-A-I{i}", "conjecture", mw7a, 7, (i, 7), 60, engines="ENUM"))
    mw7b = combo("Momega", [(1, 2), (-3, 3)], 7)
    for i in (0, 1, 4, 5):
        specs.append(_congruence(f"CJ-MW7-B-I{i}", "conjecture", mw7b, 7, (i, 7), 60, engines="ENUM"))

    # --- exact identity suite -------------------------------------------
    specs.append(
        _identity("ID-THETA-BASE9", "identity", "theta-base9-rhs", 200,
                  lhs_form="theta-base9-lhs", engines="FORM")
    )
    specs.append(
        _identity("ID-THETA-OVGF", "identity", "theta-overpartition-rhs", 150,
                  lhs_form="overpartition-gf", engines="FORM")
    )
    specs.append(
        _identity("ID-KERNEL3-BILAT", "identity", "mod3-kernel-bilateral", 150,
                  lhs_form="mod3-kernel-onesided", engines="FORM")
    )
    specs.append(
        _identity("ID-KERNEL3-BASE9", "identity", "mod3-kernel-base9", 150,
                  lhs_form="mod3-kernel-onesided", engines="FORM")
    )
    for id_, fam, b, k, form in [
        ("ID-NTDIFF-OVM2-1-5", "NTbar2", 1, 5, "ovm2-ntdiff-1-5-rhs"),
        ("ID-NTDIFF-OVM2-2-5", "NTbar2", 2, 5, "ovm2-ntdiff-2-5-rhs"),
        ("ID-NTDIFF-DOM2-1-5", "NT2", 1, 5, "dom2-ntdiff-1-5-rhs"),
        ("ID-NTDIFF-DOM2-2-5", "NT2", 2, 5, "dom2-ntdiff-2-5-rhs"),
        ("ID-NTDIFF-OV-1-3", "NTbar", 1, 3, "ovrank-ntdiff-1-3-rhs"),
        ("ID-NTDIFF-OVM2-1-3", "NTbar2", 1, 3, "ovm2-ntdiff-1-3-rhs"),
    ]:
        specs.append(
            _identity(id_, "identity", form, 60,
                      terms=[_st(1, fam, b, k), _st(-1, fam, k - b, k)])
        )
    specs.append(
        _identity("ID-KERNEL5-OVM2", "identity", "ovm2-mod5-kernel", 150,
                  lhs_form="ovm2-mod5-kernel-onesided", engines="FORM")
    )
    specs.append(
        _identity("ID-KERNEL5-DOM2", "identity", "dom2-mod5-kernel", 150,
                  lhs_form="dom2-mod5-kernel-onesided", engines="FORM")
    )
    specs.append(
        _identity("ID-COUNTDIFF-OVM2", "identity", "ovm2-count-diff-1-2-5-rhs", 60,
                  lhs_form="ovm2-count-diff-1-2-5", engines="FORM")
    )
    specs.append(
        _identity("ID-COUNTDIFF-DOM2", "identity", "dom2-count-diff-1-2-5-rhs", 60,
                  lhs_form="dom2-count-diff-1-2-5", engines="FORM")
    )
    specs.append(
        _identity("CG-CHAIN-OVM2-MOD5", "identity", "ovm2-mod5-kernel", 200,
                  terms=combo("NTbar2", [(1, 1), (2, 2)], 5), modulus=5)
    )
    specs.append(
        _identity("CG-CHAIN-DOM2-MOD5", "identity", "dom2-mod5-kernel", 200,
                  terms=combo("NT2", [(1, 1), (2, 2)], 5), modulus=5)
    )
    specs.append(
        _identity("CG-DIS-MOD3", "identity", "mod3-combined-rhs", 200,
                  terms=t2_terms, modulus=3)
    )
    for fam in (Family.DYSON, Family.OV_RANK, Family.OV_M2, Family.DO_M2):
        specs.append(
            CheckSpec(
                id=f"ID-MAIN-{fam.name.replace('_', '')}",
                kind="EXACT_IDENTITY",
                category="identity",
                statement=(
                    f"rank sum equals its product transformation [{fam.value}], "
                    "with exact x-derivative"
                ),
                engines="FORM",
                special=f"thmain:{fam.value}",
                bound=40,
            )
        )

    # --- oracle cross-checks --------------------------------------------
    for id_, key, bound, desc in [
        ("X-RANK-PART", "rank-part", 30, "partition rank"),
        ("X-RANK-OV", "rank-ov", 24, "overpartition rank"),
        ("X-M2-OV", "m2-ov", 24, "overpartition M2-rank"),
        ("X-M2-DO", "m2-do", 40, "distinct-odd M2-rank"),
        ("X-PAIR", "pair", 14, "overpartition pair rank"),
    ]:
        specs.append(
            CheckSpec(
                id=id_,
                kind="ORACLE_XCHECK",
                category="xcheck",
                statement=f"series engine matches exhaustive enumeration ({desc})",
                engines="BOTH",
                special=f"xcheck:{key}",
                bound=bound,
            )
        )

    # --- exploratory residues outside the stated lists ------------------
    seen = {(s.id) for s in specs}
    extras: list[CheckSpec] = []
    for base_id, terms, p, k, stated, bound in [
        ("NT5", nt5, 5, 5, (1, 4), 60),
        ("NT7", nt7, 7, 7, (1, 5), 60),
        ("NT7-ALT1", alt1, 7, 7, (1, 3, 4, 5), 60),
        ("NT7-ALT2", alt2, 7, 7, (0, 1, 5), 60),
    ]:
        for i in range(k):
            if i in stated:
                continue
            sid = f"{base_id}-SCAN-I{i}"
            if sid in seen:
                continue
            extras.append(
                _congruence(sid, "exploratory", terms, p, (i, k), bound, informational=True)
            )
    return specs + extras


_REGISTRY = _build_registry()
_BY_ID = {s.id: s for s in _REGISTRY}

_CATEGORIES = ("theorem", "classic", "new", "conjecture", "identity", "xcheck", "exploratory")
_FILTER_ALIASES = {
    "theorems": "theorem",
    "conjectures": "conjecture",
    "identities": "identity",
    "xchecks": "xcheck",
    "crosschecks": "xcheck",
}


def get_spec(check_id: str) -> CheckSpec:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise QcertError(f"unknown check id {check_id!r}") from None


def select_specs(only: str | None, include_informational: bool = True) -> list[CheckSpec]:
    """Filter the registry by comma-separated categories or id globs."""
    if not only:
        chosen = [s for s in _REGISTRY]
    else:
        tokens = [t.strip() for t in only.split(",") if t.strip()]
        chosen = []
        for s in _REGISTRY:
            for tok in tokens:
                tl = _FILTER_ALIASES.get(tok.lower(), tok.lower())
                if tok.lower() == "all" or s.category == tl or fnmatch(s.id.lower(), tok.lower()):
                    chosen.append(s)
                    break
        if not chosen:
            return []
    if not include_informational:
        chosen = [s for s in chosen if not s.informational]
    return chosen


@dataclass
class RunResult:
    reports: list[CheckReport]
    exit_code: int

    def summary(self) -> dict:
        counts = {"PASS": 0, "FAIL": 0, "SKIPPED": 0}
        conj = {"PASS": 0, "FAIL": 0}
        for r in self.reports:
            if r.informational:
                continue
            counts[r.status] += 1
            if r.conjecture and r.status in conj:
                conj[r.status] += 1
        return {
            "checks": sum(counts.values()),
            "pass": counts["PASS"],
            "fail": counts["FAIL"],
            "skipped": counts["SKIPPED"],
            "conjecture_pass": conj["PASS"],
            "conjecture_fail": conj["FAIL"],
            "exit_code": self.exit_code,
        }

    def to_dict(self) -> dict:
        return {
            "summary": self.summary(),
            "checks": [r.to_dict() for r in self.reports],
        }


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QCERT_THREADS", "1")))
    except ValueError:
        return 1


def run_all(only: str | None = None, order: int | None = None, config: VerifyConfig | None = None) -> RunResult:
    """Run the (filtered) registry; never aborts on a single check's error."""
    config = config or VerifyConfig()
    specs = select_specs(only, config.include_informational)
    threads = config.threads if config.threads is not None else default_threads()

    def run_one(spec: CheckSpec) -> CheckReport:
        try:
            return run_check(spec, order=order, config=config)
        except InsufficientOrder:
            raise  # a usage problem, not a check outcome
        except QcertError as exc:
            return CheckReport(
                id=spec.id, kind=spec.kind, engine=spec.engines,
                order=order or spec.bound, bound=order or spec.bound,
                status="SKIPPED", statement=spec.statement,
                conjecture=spec.conjecture, informational=spec.informational,
                skip_reason=f"{type(exc).__name__}: {exc}",
            )

    if threads > 1 and len(specs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run_one, specs))
    else:
        reports = [run_one(s) for s in specs]

    exit_code = 0
    for r in reports:
        if r.informational:
            continue
        if r.status == "FAIL" and (not r.conjecture or config.strict_conjectures):
            exit_code = 1
    return RunResult(reports=reports, exit_code=exit_code)


def mutate_first_term(spec: CheckSpec, delta: int = 1) -> CheckSpec:
    """A copy of `spec` with its first lhs coefficient perturbed; used to
    prove each check can actually fail."""
    if not spec.lhs:
        raise ValueError("spec has no statistic terms to mutate")
    first = spec.lhs[0]
    mutated = StatTerm(first.coeff + delta, first.family, first.residue, first.modulus)
    return replace(
        spec,
        id=spec.id + "~mutated",
        lhs=(mutated,) + spec.lhs[1:],
        statement=spec.statement + " [mutated]",
    )
