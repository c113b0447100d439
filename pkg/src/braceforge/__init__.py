"""Finite skew left braces: construction, structure theory, and the
set-theoretic Yang-Baxter solutions they induce.

Everything is table-based: a structure of order n lives on {0, ..., n-1}
with identity 0 and n x n numpy operation tables.
"""

from .brace import (
    BraceClass,
    SkewBrace,
    are_isomorphic_braces,
    brace_from_group,
    brace_from_group_opposite_addition,
    classify,
    lambda_of,
    star,
    star_identities_check,
    validate_brace,
)
from .constructions import (
    CocycleDatum,
    WindowReport,
    brace_from_cocycle,
    brace_from_ring,
    direct_product,
    enumerate_braces,
    enumerate_braces_bruteforce,
    is_perfect,
    semidirect_product,
    wreath_sub_brace,
    z_window_check,
)
from .errors import BraceForgeError, CapExceeded, ValidationFailed
from .groups import (
    ElementSet,
    FiniteGroup,
    GroupNilpotency,
    abelian,
    all_groups,
    alternating,
    are_isomorphic_groups,
    automorphisms,
    cyclic,
    dicyclic,
    dihedral,
    direct_product_groups,
    nilpotency_analysis,
    quotient_group,
    sub_group,
    subgroup_closure,
    symmetric,
    validate_group,
)
from .laws import LawsReport, run_laws, scan_open_questions, standard_corpus
from .series import (
    NilReport,
    NilpotencyReport,
    SeriesReport,
    SocleSeriesReport,
    left_series,
    nil_report,
    nilpotency_report,
    right_series,
    socle_series_and_mpl,
    strong_series,
)
from .substructure import (
    SubstructureVerdict,
    fix,
    generated_subbrace,
    is_ideal,
    is_left_ideal,
    ker_lambda,
    lambda_orbit,
    quotient_brace,
    socle,
    star_span,
    sub_brace,
)
from .ybe import (
    Solution,
    SolutionReport,
    decomposable_by_bipartition,
    is_indecomposable,
    orbits,
    permutation_solution,
    restrict_solution,
    solution_from_brace,
    validate_solution,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
