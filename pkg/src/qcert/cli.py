"""Command-line interface: expansion, statistics, verification, and
series-vs-enumeration cross-checking.

Exit codes: 0 success, 1 check failure, 2 usage or infrastructure error.
"""

from __future__ import annotations

import json
import sys

import click

from .combinatorics import DEFAULT_BOUNDS, FAMILY_BOUND_KEY, TALLY_FAMILIES, tally
from .errors import QcertError
from .genfun import closed_form, form_ids
from .series import series_to_json
from .verify import VerifyConfig, run_all, select_specs


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text)


@click.group()
def main():
    """Exact q-series expansion and congruence verification."""


@main.command()
@click.option("--form", "form_id", required=True, help="Registered form id (see `qcert expand --form help`).")
@click.option("--order", type=int, required=True, help="Truncation order N (series known through q^N).")
@click.option("--mod", "mod_p", type=int, default=None, help="Reduce integer coefficients mod p.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
@click.option("--output", type=click.Path(), default=None, help="Write to file instead of stdout.")
def expand(form_id, order, mod_p, fmt, output):
    """Expand a registered closed form to the requested order."""
    if form_id == "help":
        click.echo("\n".join(form_ids()))
        return
    if order < 0:
        raise click.UsageError("order must be >= 0")
    try:
        series = closed_form(form_id, order)
    except QcertError as exc:
        raise click.UsageError(str(exc))
    if mod_p is not None:
        try:
            rows = [(i, c) for i, c in enumerate(series.reduce_mod(mod_p))]
        except (TypeError, ValueError) as exc:
            raise click.UsageError(f"--mod view unavailable: {exc}")
        if fmt == "json":
            _emit(json.dumps({"form": form_id, "order": order, "mod": mod_p,
                              "coefficients": [c for _, c in rows]}, indent=2), output)
        elif fmt == "csv":
            _emit("q_exponent,coefficient\n" + "\n".join(f"{i},{c}" for i, c in rows), output)
        else:
            body = " + ".join(
                (f"{c}" if i == 0 else (f"{c}*q" if i == 1 else f"{c}*q^{i}"))
                for i, c in rows if c
            ) or "0"
            _emit(f"{body} + O(q^{order + 1})  (mod {mod_p})", output)
        return
    if fmt == "json":
        _emit(json.dumps(series_to_json(series), indent=2), output)
    elif fmt == "csv":
        lines = ["q_exponent,coefficient"]
        for i, c in enumerate(series.coeffs):
            if c:
                lines.append(f"{i},{c}")
        _emit("\n".join(lines), output)
    else:
        _emit(str(series), output)


@main.command()
@click.option("--family", required=True, type=click.Choice(sorted(TALLY_FAMILIES)),
              help="Statistic family (NT* sum parts, N* count objects, Momega sums ones).")
@click.option("--k", type=int, required=True, help="Modulus for the residue classes.")
@click.option("--n", "single_n", type=int, default=None, help="Single weight n.")
@click.option("--n-range", "n_range", default=None, help="Weight range lo:hi (inclusive).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv")
@click.option("--unsafe-bounds", is_flag=True, help="Ignore the enumeration limits.")
@click.option("--output", type=click.Path(), default=None)
def stat(family, k, single_n, n_range, fmt, unsafe_bounds, output):
    """Tally a statistic family by residue class via enumeration."""
    if (single_n is None) == (n_range is None):
        raise click.UsageError("give exactly one of --n or --n-range")
    if k < 1:
        raise click.UsageError("modulus must be >= 1")
    if single_n is not None:
        lo = hi = single_n
    else:
        try:
            lo_s, hi_s = n_range.split(":")
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise click.UsageError("--n-range must look like 0:20")
    if lo < 0 or hi < lo:
        raise click.UsageError("invalid weight range")
    limit = DEFAULT_BOUNDS[FAMILY_BOUND_KEY[family]]
    if hi > limit and not unsafe_bounds:
        raise click.UsageError(
            f"weight {hi} exceeds the {family} enumeration bound {limit} "
            "(pass --unsafe-bounds to force)"
        )
    rows = []
    for n in range(lo, hi + 1):
        values = tally(family, n, k)
        for m, v in enumerate(values):
            rows.append((n, m, v))
    if fmt == "json":
        _emit(json.dumps(
            {"family": family, "k": k,
             "rows": [{"n": n, "residue": m, "value": v} for n, m, v in rows]},
            indent=2), output)
    elif fmt == "text":
        lines = [f"{family} mod {k}"]
        for n in range(lo, hi + 1):
            vals = [v for nn, _, v in rows if nn == n]
            lines.append(f"n={n}: " + " ".join(str(v) for v in vals))
        _emit("\n".join(lines), output)
    else:
        _emit("n,residue,value\n" + "\n".join(f"{n},{m},{v}" for n, m, v in rows), output)


def _config_from_flags(strict, threads, unsafe_bounds, seed, explore, enum_bounds=()) -> VerifyConfig:
    cfg = VerifyConfig(
        strict_conjectures=strict,
        unsafe_bounds=unsafe_bounds,
        seed=seed,
        include_informational=explore,
    )
    if threads is not None:
        cfg.threads = threads
    for item in enum_bounds:
        try:
            key, _, val = item.partition("=")
            if key not in cfg.enum_bounds:
                raise ValueError
            cfg.enum_bounds[key] = int(val)
        except ValueError:
            raise click.UsageError(
                f"--enum-bound must look like family=N with family in "
                f"{sorted(cfg.enum_bounds)}; got {item!r}"
            )
    return cfg


def _print_reports(result, fmt, output, report_path):
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            json.dump(result.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    if fmt == "json":
        _emit(json.dumps(result.to_dict(), indent=2, sort_keys=True), output)
        return
    if fmt == "csv":
        lines = ["id,status,kind,engine,bound,ms"]
        for r in result.reports:
            lines.append(f"{r.id},{r.status},{r.kind},{r.engine},{r.bound},{r.ms:.0f}")
        _emit("\n".join(lines), output)
        return
    lines = []
    for r in result.reports:
        tag = r.status
        if r.conjecture and not r.informational:
            tag = f"CONJECTURE-{r.status}"
        if r.informational:
            tag = f"INFO-{r.status}"
        line = f"{r.id:24s} {tag:18s} bound={r.bound:<5d} {r.ms:8.0f}ms"
        if r.witness:
            line += f"  witness={r.witness}"
        if r.skip_reason:
            line += f"  ({r.skip_reason})"
        lines.append(line)
    s = result.summary()
    lines.append(
        f"-- {s['checks']} checks: {s['pass']} pass, {s['fail']} fail, "
        f"{s['skipped']} skipped (conjectures: {s['conjecture_pass']} pass, "
        f"{s['conjecture_fail']} fail)"
    )
    _emit("\n".join(lines), output)


@main.command()
@click.option("--only", default=None,
              help="Comma-separated categories (theorems, classic, new, conjectures, identities, xchecks) or id globs.")
@click.option("--order", type=int, default=None, help="Override every check's bound.")
@click.option("--strict-conjectures", is_flag=True, help="Conjecture failures also fail the run.")
@click.option("--threads", type=int, default=None, help="Worker threads (default: QCERT_THREADS or 1).")
@click.option("--unsafe-bounds", is_flag=True)
@click.option("--seed", type=int, default=0, help="Seed for extra sampled cross-check weights.")
@click.option("--enum-bound", "enum_bounds", multiple=True,
              help="Override an enumeration limit, e.g. --enum-bound overpartition=30.")
@click.option("--explore/--no-explore", default=True, help="Include informational residue scans.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
@click.option("--report", "report_path", type=click.Path(), default=None, help="Write a JSON report file.")
@click.option("--output", type=click.Path(), default=None)
def verify(only, order, strict_conjectures, threads, unsafe_bounds, seed, enum_bounds, explore, fmt, report_path, output):
    """Run the registered checks (all of them by default)."""
    cfg = _config_from_flags(strict_conjectures, threads, unsafe_bounds, seed, explore, enum_bounds)
    try:
        result = run_all(only=only, order=order, config=cfg)
    except QcertError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _print_reports(result, fmt, output, report_path)
    sys.exit(result.exit_code)


@main.command()
@click.option("--family", required=True,
              type=click.Choice(["dyson", "ov-rank", "ov-m2", "do-m2", "pair"]),
              help="Which enumeration oracle to compare against the series engine.")
@click.option("--max-n", type=int, default=None, help="Largest weight to compare.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
@click.option("--report", "report_path", type=click.Path(), default=None)
@click.option("--output", type=click.Path(), default=None)
def crosscheck(family, max_n, fmt, report_path, output):
    """Compare the series engine against exhaustive enumeration."""
    spec_id = {
        "dyson": "X-RANK-PART",
        "ov-rank": "X-RANK-OV",
        "ov-m2": "X-M2-OV",
        "do-m2": "X-M2-DO",
        "pair": "X-PAIR",
    }[family]
    try:
        result = run_all(only=spec_id, order=max_n, config=VerifyConfig())
    except QcertError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _print_reports(result, fmt, output, report_path)
    sys.exit(result.exit_code)


@main.command(name="list-checks")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--output", type=click.Path(), default=None)
def list_checks(fmt, output):
    """List every registered check with its default bound."""
    specs = select_specs(None)
    if fmt == "json":
        _emit(json.dumps(
            [{"id": s.id, "category": s.category, "kind": s.kind,
              "engines": s.engines, "bound": s.bound,
              "informational": s.informational, "statement": s.statement}
             for s in specs], indent=2), output)
        return
    lines = []
    for s in specs:
        flag = " (informational)" if s.informational else ""
        lines.append(f"{s.id:24s} {s.category:12s} {s.kind:14s} bound={s.bound}{flag}")
        lines.append(f"    {s.statement}")
    _emit("\n".join(lines), output)


if __name__ == "__main__":
    main()
