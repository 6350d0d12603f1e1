"""Exact counts of subset and multiset sums in Z/nZ and finite abelian groups.

The closed forms are driven by divisor-indexed integer matrices whose
entries are Ramanujan sums; brute-force enumeration backs every formula as
a ground-truth oracle.
"""

from .abelian import (
    AbelianGroup,
    GroupElement,
    brute_force_abelian,
    brute_force_multiset,
    canonical_invariant_factors,
    canonicalize_with_element,
    chi_k,
    chi_k_plus,
    d_star,
    fourier_class_function,
    groups_up_to,
    in_d_image,
    invariant_factor_chains,
    profile_count,
    subgroup_size,
    t_abelian,
    t_plus_abelian,
)
from .counting import (
    CountQuery,
    EnumerationBudgetError,
    brute_force,
    brute_force_spectrum,
    canonical_s,
    complement_transfer,
    hadjicostas_rhs,
    irreducible_conics,
    line_pair_conics,
    lyndon,
    lyndon_identity_check,
    necklace_identity_check,
    necklaces,
    t_count,
    t_zero,
    zero_sum_triples,
)
from .discovery import (
    DiscoveryError,
    DiscoveryResult,
    EmpiricalSystem,
    assemble_system,
    empirical_g_prefix,
    solve_matrix,
)
from .divmatrix import (
    DivisorMatrix,
    a_factor,
    build_m,
    char_poly,
    det_bareiss,
    entry_closed_form,
    entry_product_formula,
    kronecker,
    prime_power_block,
    ramanujan_sum,
    ramanujan_sum_roots,
    reversal_matrix,
    squarefree_entry,
    sym_square_mp,
    verify_m_properties,
)
from .numtheory import (
    Factorization,
    binomial,
    divisors,
    factorize,
    is_prime,
    moebius,
    totient,
)
from .series import TruncatedSeries, coefficient, g_component, g_vector, p_series

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CountQuery",
    "DiscoveryError",
    "DiscoveryResult",
    "DivisorMatrix",
    "EmpiricalSystem",
    "EnumerationBudgetError",
    "Factorization",
    "GroupElement",
    "TruncatedSeries",
    "a_factor",
    "assemble_system",
    "binomial",
    "brute_force",
    "brute_force_abelian",
    "brute_force_multiset",
    "brute_force_spectrum",
    "build_m",
    "canonical_invariant_factors",
    "canonical_s",
    "canonicalize_with_element",
    "char_poly",
    "chi_k",
    "chi_k_plus",
    "coefficient",
    "complement_transfer",
    "d_star",
    "det_bareiss",
    "divisors",
    "empirical_g_prefix",
    "entry_closed_form",
    "entry_product_formula",
    "factorize",
    "fourier_class_function",
    "g_component",
    "g_vector",
    "groups_up_to",
    "hadjicostas_rhs",
    "in_d_image",
    "invariant_factor_chains",
    "irreducible_conics",
    "is_prime",
    "kronecker",
    "line_pair_conics",
    "lyndon",
    "lyndon_identity_check",
    "moebius",
    "necklace_identity_check",
    "necklaces",
    "p_series",
    "prime_power_block",
    "profile_count",
    "ramanujan_sum",
    "ramanujan_sum_roots",
    "reversal_matrix",
    "solve_matrix",
    "squarefree_entry",
    "subgroup_size",
    "sym_square_mp",
    "t_abelian",
    "t_count",
    "t_plus_abelian",
    "t_zero",
    "totient",
    "verify_m_properties",
    "zero_sum_triples",
]
