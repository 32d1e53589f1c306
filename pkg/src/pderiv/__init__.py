"""Exact p-derivation calculus over the integers and integer polynomials."""

__version__ = "0.1.0"

from .arith import (
    canonical_lift_int,
    check_prime,
    cp_error_term,
    delta_int,
    delta_rat,
    ord_p,
    power_rule_rhs,
    quotient_rule_rhs,
)
from .deriv import (
    FrobeniusLift,
    PDerivation,
    chain_rule_rhs,
    delta_from_lift,
    iterate_delta,
    lift_apply,
    standard_delta,
)
from .errors import ContextError, DivisibilityError, DomainError, NotPrimeError, ParseError
from .expr import format_poly, parse_poly
from .poly import Poly, VarContext
from .singular import (
    RingPresentation,
    arithmetic_singular_generators,
    classical_jacobian_generators,
    mixed_jacobian,
    point_singularity_check,
    ring_of_integers_pure_root,
    singular_fiber_univariate,
)
from .symbpow import (
    MaximalPoint,
    Principal,
    dsgj_member,
    ideal_member,
    power_member_oracle,
    zn_member_rational,
)
