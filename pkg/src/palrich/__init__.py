"""Words over finite alphabets analyzed with respect to an involutive
antimorphism: generalized palindromic defect, complexity gaps, Rauzy-graph
criteria, return words, closure-based generators and richness decompositions.
"""

__version__ = "0.1.0"

from .core import (
    Alphabet,
    Antimorphism,
    InputError,
    Morphism,
    PreconditionError,
    Word,
    apply_antimorphism,
    apply_morphism,
    factor_set,
    gamma,
    is_theta_palindrome,
    occurrences,
)
from .palindromes import (
    DefectProfile,
    PalIndex,
    count_theta_palindromes_expand,
    defect,
    defect_profile,
    distinct_theta_palindromes_naive,
    is_rich_finite,
    longest_theta_pal_suffix,
    theta_pal_closure,
)
from .complexity import (
    ComplexityTable,
    check_inequality2,
    closed_under_theta,
    complexity_table,
    is_rich_by_T,
)
from .rauzy import (
    SuperReducedRauzyGraph,
    build_graph,
    check_proposition1,
    simple_paths,
    special_factors,
)
from .returns import (
    crw_palindromicity_scan,
    mirror_bounded_palindromicity,
    occurrences_alternate,
    return_structure,
    unioccurrent_lps_scan,
)
from .generators import (
    DirectiveSequence,
    arnoux_rauzy_check,
    episturmian_source,
    fibonacci_source,
    periodic_source,
    theta_standard_with_seed_source,
    thue_morse_source,
    tribonacci_source,
)
from .decompose import (
    DecomposeError,
    ReturnWordCoding,
    SimplePathCoding,
    richness_conditions_check,
    theorem1_decompose,
    theorem2_decompose,
    theorem3_pipeline,
    verify_eq3,
    verify_eq4,
)
