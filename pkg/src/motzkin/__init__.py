"""Exact enumerative combinatorics of Motzkin permutations.

Motzkin permutations are the 132-avoiding permutations with no occurrence
of the vincular pattern 1-23 (no ascent preceded by a smaller entry); they
are counted by the Motzkin numbers.  The package provides:

- permutations, classical and vincular pattern counting, statistics
  (:mod:`motzkin.permutations`);
- Dyck and Motzkin lattice paths with tunnels (:mod:`motzkin.paths`);
- the bijections between the three worlds (:mod:`motzkin.bijections`);
- exact truncated power series, multivariate marker polynomials, Chebyshev
  machinery, continued fractions (:mod:`motzkin.series`);
- the catalog of generating functions, every one computed by at least two
  independent routes (:mod:`motzkin.catalog`);
- a brute-force oracle with coefficient-by-coefficient verification
  (:mod:`motzkin.oracle`) and a CLI (``motzkin``).
"""

from .permutations import (  # noqa: F401
    Pattern,
    StatProfile,
    avoids,
    is_motzkin,
    is_reverse_motzkin,
    occurrences,
    parse_pattern,
    parse_permutation,
    permutation,
    reverse,
    rl_maxima,
    stats,
)
from .paths import (  # noqa: F401
    LatticePath,
    Tunnel,
    dyck_diag_tunnels,
    dyck_paths,
    good_tunnels,
    gt_counts,
    height,
    motzkin_paths,
    parse_path,
    path_stats,
    tunnels,
)
from .bijections import (  # noqa: F401
    collapse_blocks,
    dyck_to_perm,
    expand_blocks,
    motzkin_permutations,
    motzkin_to_perm,
    perm_to_dyck,
    perm_to_motzkin,
)
from .series import (  # noqa: F401
    MultiSeries,
    PolyPair,
    Series,
    catalan_series,
    cf_eval,
    cheb_p,
    chebyshev_u,
    expand_rational,
    motzkin_numbers,
    motzkin_series,
    sqrt_multiseries,
    sqrt_series,
)
from .catalog import (  # noqa: F401
    CATALOG,
    catalog_series,
    gf_avoid_increasing,
    gf_fixed_points,
    gf_free_rises,
    gf_increasing_exactly,
    gf_increasing_occurrences,
    gf_lds_rises,
    gf_lds_rises_bounded,
    gf_lrm,
    gf_pattern_avoidance,
    gf_rises_descents,
    gf_vincular_12_exactly,
    gf_vincular_21_exactly,
    gf_vincular_occurrences,
)
from .oracle import (  # noqa: F401
    DistributionTable,
    VerificationReport,
    distribution,
    enumerate_universe,
    verify,
    verify_all,
)

__version__ = "0.1.0"
