"""p-derivations on Z[x_1, ..., x_n].

Every p-derivation here comes from a Frobenius lift ``phi`` (a ring
endomorphism with ``phi(f) = f**p (mod p)``) through
``delta(f) = (phi(f) - f**p) / p``. The standard one uses ``x_i -> x_i**p``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import check_prime, delta_int
from .errors import DivisibilityError, DomainError
from .poly import (
    Poly,
    VarContext,
    divide_exact,
    divided_partial,
    frobenius_substitute,
    poly_eval,
    reduce_mod_int,
    substitute,
)


def _divide_by_p(numerator: Poly, p: int, what: str) -> Poly:
    try:
        return divide_exact(numerator, p)
    except DivisibilityError as exc:
        raise DivisibilityError(f"{what}: numerator {numerator} not divisible by {p} ({exc})") from None


def standard_delta(p: int, f: Poly) -> Poly:
    """(f(x_1^p, ..., x_n^p) - f^p) / p."""
    p = check_prime(p)
    return _divide_by_p(frobenius_substitute(f, p) - f**p, p, "standard p-derivation")


def iterate_delta(p: int, f: Poly, k: int) -> Poly:
    if k < 0:
        raise DomainError("iteration count must be nonnegative")
    for _ in range(k):
        f = standard_delta(p, f)
    return f


@dataclass(frozen=True)
class FrobeniusLift:
    """Images ``h_i`` of the variables, each congruent to ``x_i**p`` mod p."""

    p: int
    ctx: VarContext
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.ctx.arity:
            raise DomainError(f"need {self.ctx.arity} images, got {len(self.images)}")
        for i, h in enumerate(self.images):
            if h.ctx != self.ctx:
                raise DomainError(f"image of {self.ctx.names[i]} lives in a different context")
            x = Poly.variable(self.ctx, i)
            if reduce_mod_int(h - x**self.p, self.p):
                raise DomainError(
                    f"image {h} of {self.ctx.names[i]} is not congruent to "
                    f"{self.ctx.names[i]}^{self.p} mod {self.p}"
                )

    @classmethod
    def standard(cls, p: int, ctx: VarContext) -> FrobeniusLift:
        return cls(p, ctx, tuple(Poly.variable(ctx, i) ** p for i in range(ctx.arity)))

    def __call__(self, f: Poly) -> Poly:
        return substitute(f, self.images)


@dataclass(frozen=True)
class PDerivation:
    """The p-derivation attached to a Frobenius lift."""

    lift: FrobeniusLift

    @classmethod
    def standard(cls, p: int, ctx: VarContext) -> PDerivation:
        return cls(FrobeniusLift.standard(p, ctx))

    @property
    def p(self) -> int:
        return self.lift.p

    def __call__(self, f: Poly) -> Poly:
        return delta_from_lift(self, f)


def delta_from_lift(op: PDerivation, f: Poly) -> Poly:
    if f.ctx != op.lift.ctx:
        raise DomainError("polynomial and lift use different variable contexts")
    p = op.p
    return _divide_by_p(op.lift(f) - f**p, p, "lift p-derivation")


def lift_apply(op: PDerivation, f: Poly) -> Poly:
    """phi(f) recovered as f**p + p*delta(f)."""
    return f**op.p + op.p * delta_from_lift(op, f)


def chain_rule_rhs(p: int, f: Poly, n: int) -> int:
    """Right side of the chain rule for delta_p(f(n)), f univariate.

    delta_st(f)(n) + sum_{j>=1} p^(j-1) * (f^(j)/j!)(n^p) * delta_p(n)^j
    """
    p = check_prime(p)
    if f.ctx.arity != 1:
        raise DomainError("chain rule is stated for univariate polynomials")
    dn = delta_int(p, n)
    total = poly_eval(standard_delta(p, f), [n])
    npow = n**p
    for j in range(1, f.degree() + 1):
        total += p ** (j - 1) * poly_eval(divided_partial(f, 0, j), [npow]) * dn**j
    assert total.denominator == 1
    return int(total)
