"""qcert: exact q-series arithmetic and an enumeration oracle for
verifying partition-statistic congruences and identities.

The package has five layers:

* ``qcert.rings`` / ``qcert.series`` -- truncated power series in q over
  exact coefficient rings, with Pochhammer, theta-bracket, and bilateral
  Appell-Lerch builders;
* ``qcert.combinatorics`` -- streaming enumeration of partitions,
  overpartitions, overpartition pairs, and distinct-odd partitions, with
  every rank / crank statistic and residue tally;
* ``qcert.genfun`` -- the rank generating functions, part-count
  difference series (exact d/dx at 1 via dual numbers), and the closed
  forms they are compared against;
* ``qcert.verify`` -- the declarative check registry and runner;
* ``qcert.cli`` -- the ``qcert`` command-line tool.
"""

from .combinatorics import (
    Overpartition,
    OverpartitionPair,
    crank,
    count_ones,
    dyson_rank,
    enumerate_distinct_odd,
    enumerate_overpartition_pairs,
    enumerate_overpartitions,
    enumerate_partitions,
    m2_rank_distinct_odd,
    m2_rank_overpartition,
    ov_rank,
    pair_profile,
    pair_rank,
    tally,
)
from .genfun import (
    Family,
    NTDiffSpec,
    closed_form,
    conjecture_rhs,
    form_ids,
    lemma42_check,
    nt_diff_gf,
    rank_gf,
    thmain_check,
)
from .rings import LAURENT, RAT, DualScalar, LaurentPoly, Rat
from .series import (
    Monomial,
    QSeries,
    bracket_infinite,
    derivative_check,
    lerch_sum,
    mono,
    pochhammer_finite,
    pochhammer_infinite,
    series_from_json,
    series_to_json,
)
from .verify import CheckReport, CheckSpec, VerifyConfig, registry, run_all, run_check

__version__ = "0.1.0"
