"""Exact computation of tree polynomials and of the coefficient system
relating dual Kontsevich cycles to adjusted Miller-Morita-Mumford classes.

Layout:

* exact     -- rationals, sparse multivariate polynomials, partitions,
               compositions, Stirling numbers, double factorials
* series    -- truncated formal power series in t
* oracles   -- brute-force enumerations (increasing trees, cyclic
               shuffles, sign-sum tables, cycle statistics)
* treepoly  -- the production recursion for the tree polynomials and all
               closed forms attached to them
* coeffs    -- the b/a coefficient tables, cup products, and the
               degenerate zero-padded extension
* verify    -- named self-checks comparing independent routes
* cli       -- the `kcycles` command-line tool
"""

from .exact import (
    MultiPoly,
    binomial,
    compositions,
    double_factorial,
    format_rational,
    normalize_partition,
    parse_rational,
    partitions_of,
    stirling_first_signed,
    stirling_second,
)
from .series import TruncatedSeries, elementary_series
from .oracles import (
    EnumerationCapError,
    counting_identity_bruteforce,
    counting_identity_closed,
    enumerate_cyclic_shuffles,
    enumerate_increasing_trees,
    even_cycle_histogram,
    oriented_sign_sum,
    reduced_tree_poly_bruteforce,
    shuffle_sign_sum_bruteforce,
    tree_monomial,
    tree_poly_bruteforce,
)
from .treepoly import (
    PFamily,
    double_sum_identity,
    l_poly,
    p_family,
    q_closed_ones,
    q_eval,
    reduced_tree_poly,
    t_closed_main,
    t_closed_ones,
    tree_poly,
    verify_g_recursion,
    xe_tables,
)
from .coeffs import (
    CoeffTable,
    a_lambda_mu,
    a_matrix,
    a_single,
    b_extend,
    b_lambda_mu,
    b_lambda_n,
    b_matrix,
    b_single,
    closed_a_pair,
    closed_b_pair,
    cup_coeff,
    degenerate_a,
    degenerate_b,
    h_sequence,
    shared_table,
    sym_count,
    witten_expansion,
)
from .verify import run_verify

__version__ = "0.1.0"
