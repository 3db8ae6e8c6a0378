"""amcurve: exact arithmetic for Abhyankar-Moh characteristic sequences,
the numerical semigroups they generate, and the coordinate lines in the
affine plane that realize them."""

from .numeric import (
    RATIONAL,
    CoeffDomain,
    DomainMismatchError,
    FpElement,
    Scalar,
    domain_of,
    gcd,
    inverse,
    is_prime,
    prime_field,
)
from .poly import (
    NEG_INF,
    BiPoly,
    ParseError,
    UniPoly,
    parse,
    parse_bipoly,
    parse_unipoly,
)
from .charseq import (
    AxiomReport,
    CharSequence,
    DivisorChain,
    am_from_chain,
    chain_from_am,
    check_axioms,
    divisor_chains,
    enumerate_am,
    gcd_chain,
    telescoping_identity_check,
    telescoping_summands,
)
from .semigroup import (
    NumericalSemigroup,
    SemigroupInvariants,
    generate,
    invariants,
    recover_sequence,
)
from .automorph import (
    Affine,
    AutomorphismError,
    AutoWord,
    ChainSkeleton,
    DivisibilityError,
    ElemX,
    ElemY,
    LeadingFormError,
    affine,
    apply,
    compose,
    decompose_line,
    degree_reduce,
    invert_move,
    jacobian_determinant,
    swap,
    word_from_obj,
    word_to_obj,
)
from .chain import (
    INFINITE,
    ChainAtInfinity,
    IntersectionReport,
    NagataRecord,
    OracleSample,
    build_chain,
    chain_from_skeleton,
    intersection_at_infinity,
    nagata,
    parametrize,
    semigroup_sampling_oracle,
    ultrametric_check,
    verify_theorem,
)

__version__ = "0.1.0"
