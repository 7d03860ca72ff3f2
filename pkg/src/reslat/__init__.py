"""Exact-arithmetic workbench for residuated lattices and ordered groups."""

from .terms import (
    Term,
    Equation,
    QuasiEquation,
    TermSyntaxError,
    Verdict,
    parse_term,
    parse_equation,
    term_to_str,
    eval_term,
    check_equation,
    check_quasiequation,
    check_equation_sampled,
    gen_Lc,
    le_equation,
    var,
    E,
    mul,
    ldiv,
    rdiv,
    meet,
    join,
)
from .finite import (
    FiniteResLat,
    StructureError,
    NotALattice,
    NotAMonoid,
    NotResiduated,
    derive_residuals,
    validate_axioms,
    check_named_property,
    PROPERTIES,
    negative_cone,
    absolute_value,
    conjugates,
    convex_closure,
    convex_closure_fixpoint,
    all_convex_subuniverses,
    ConvexFamily,
    is_hamiltonian_structure,
    chain_leq,
    enumerate_chain_models,
    structure_to_json,
    structure_from_json,
    load_structure,
)
from .models import MODEL_BUILDERS, model_library, direct_product
from .nilpotent import (
    HeisTriple,
    HEIS_UNIT,
    heis_mul,
    heis_inv,
    heis_pow,
    heis_commutator,
    to_matrix,
    from_matrix,
    mat_mul,
    s2_member,
    s2_cmp,
    s2_le,
    s2_box,
    nth_root,
    DyadicPair,
    DYADIC_UNIT,
    dyadic_mul,
    dyadic_inv,
    dyadic_pow,
    dyadic_cmp,
    dyadic_conjugate,
    DyadicChainAlgebra,
)
from .omon import (
    OrderedMonoidInstance,
    ResidualExhausted,
    residual_search,
    M1Instance,
    S2Instance,
    m1_mul,
    m1_cmp,
    m1_residual,
    m1_word,
    m1_parse,
    s2_residual,
    M1ChainAlgebra,
    S2ChainAlgebra,
    lex_product_order,
    hamvty_witness,
    HamiltonianFailureReport,
)
from .ore import (
    OreFraction,
    f2_cmp,
    f2_le,
    frac_cmp_group,
    frac_cmp_witness,
    conucleus_sigma,
    verify_conucleus,
    F2ChainAlgebra,
)
from .battery import BatteryConfig, ClaimResult, CLAIMS, run_battery

__version__ = "0.1.0"
