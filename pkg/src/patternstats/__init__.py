"""Distributions of permutation statistics over pattern-avoiding classes.

The package enumerates pattern classes exactly, evaluates every known
closed form and generating function for the six consecutive statistics
(ascents, descents, double ascents, double descents, peaks, valleys) over
single- and two-pattern classes of length-3 patterns, realizes the Dyck
path and binary-word bijections behind those results, and cross-checks
everything against brute-force oracles and OEIS data.
"""

from .perms import (
    Perm,
    avoids_all,
    complement,
    contains,
    direct_sum,
    ltr_maxima,
    parse_perm,
    reduce_word,
    reverse,
    skew_sum,
)
from .stats import STATS, all_stats, consec3_count, stat
from .dyck import (
    decompose,
    factor_count,
    interior_uud_count,
    is_indecomposable,
    parse_dyck,
    reverse_path,
    semilength,
    uud_count,
)
from .bijections import (
    decode_123_132,
    decode_132_213,
    decode_213_231,
    encode_123_132,
    encode_132_213,
    encode_213_231,
    from_dyck_231,
    from_dyck_321,
    rewrite_312_to_321,
    rewrite_321_to_312,
    to_dyck_231,
    to_dyck_321,
    to_indec_dyck_321,
    uud_des_involution,
)
from .generate import gen_all, gen_bits, gen_class, gen_dyck, gen_indec
from .formulas import catalan, closed_form, closed_form_row, formula_ids
from .series import (
    BivariateSeries,
    series_ddes_132_213,
    series_des_321,
    series_indec_interior_uud,
    series_indec_uud,
    series_pk_321,
)
from .distributions import (
    DistTable,
    VerifyReport,
    dist_table,
    distribution,
    symmetry_check,
    verify_all,
)

__version__ = "0.1.0"
