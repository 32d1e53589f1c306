"""Classical and arithmetic Jacobian criteria.

The classical criterion cuts out singular points of ``f_1 = ... = f_m = 0``
with the h x h minors of the matrix of partials. Over Z the matrix gains a
column of standard p-derivations and the partials are raised to the p-th
power; singular primes above p are the primes containing p and those minors.

The relations are assumed to generate a prime ideal. That hypothesis is the
caller's responsibility and is not checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

from .arith import check_prime, delta_int
from .deriv import standard_delta
from .errors import DomainError
from .poly import (
    Poly,
    VarContext,
    partial_derivative,
    poly_eval,
    univariate_gcd_mod_p,
)

SQUAREFREE_LIMIT = 10**12


@dataclass(frozen=True)
class RingPresentation:
    """Z[x_1..x_n] / (f_1..f_m) together with the codimension h."""

    ctx: VarContext
    relations: tuple
    h: int = None

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        if not rels:
            raise DomainError("a presentation needs at least one relation")
        for f in rels:
            if f.ctx != self.ctx:
                raise DomainError("relation lives in a different variable context")
            if f.is_zero():
                raise DomainError("relations must be nonzero")
        h = self.h
        if h is None:
            if len(rels) != 1:
                raise DomainError("codimension h must be given when there are several relations")
            h = 1
        if not 1 <= h <= self.ctx.arity + 1:
            raise DomainError(f"codimension must be between 1 and {self.ctx.arity + 1}, got {h}")
        object.__setattr__(self, "h", h)

    @property
    def is_hypersurface(self) -> bool:
        return len(self.relations) == 1 and self.h == 1


@dataclass(frozen=True)
class MixedJacobian:
    p: int
    matrix: tuple  # rows of Poly; column 0 holds delta_st(f_i)


@dataclass(frozen=True)
class SingularReport:
    kind: str  # "classical" or "arithmetic"
    generators: tuple = field(default_factory=tuple)

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.generators]


def _sign_key(f: Poly):
    # normalise so that f and -f share a key
    if f.is_zero():
        return f
    lead = f.sorted_terms()[0][1]
    return f if lead > 0 else -f


def dedupe_up_to_sign(polys: Sequence[Poly]) -> list[Poly]:
    seen = set()
    out = []
    for f in polys:
        key = _sign_key(f)
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


def determinant(mat: Sequence[Sequence[Poly]]) -> Poly:
    """Cofactor expansion along the first row; division-free."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = None
    for j in range(n):
        entry = mat[0][j]
        if entry.is_zero():
            continue
        sub = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = entry * determinant(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Poly(mat[0][0].ctx)
    return total


def minor_determinants(mat: Sequence[Sequence[Poly]], h: int) -> list[Poly]:
    """Nonzero h x h minors, deduplicated up to sign, in enumeration order."""
    rows, cols = len(mat), len(mat[0]) if mat else 0
    if h < 1:
        raise DomainError("minor size must be positive")
    if h > min(rows, cols):
        return []
    minors = []
    for rs in combinations(range(rows), h):
        for cs in combinations(range(cols), h):
            d = determinant([[mat[r][c] for c in cs] for r in rs])
            if not d.is_zero():
                minors.append(d)
    return dedupe_up_to_sign(minors)


def jacobian_matrix(pres: RingPresentation) -> list[list[Poly]]:
    n = pres.ctx.arity
    return [[partial_derivative(f, j) for j in range(n)] for f in pres.relations]


def classical_jacobian_generators(pres: RingPresentation) -> SingularReport:
    return SingularReport("classical", tuple(minor_determinants(jacobian_matrix(pres), pres.h)))


def mixed_jacobian(p: int, pres: RingPresentation) -> MixedJacobian:
    p = check_prime(p)
    n = pres.ctx.arity
    rows = tuple(
        (standard_delta(p, f),) + tuple(partial_derivative(f, j) ** p for j in range(n))
        for f in pres.relations
    )
    return MixedJacobian(p, rows)


def arithmetic_singular_generators(p: int, pres: RingPresentation) -> SingularReport:
    """p together with the h x h minors of the mixed Jacobian.

    For a hypersurface the list is ``p, delta_st(f), df/dx_1, ..., df/dx_n``
    with unpowered partials, which cut out the same primes once p is present.
    """
    p = check_prime(p)
    const_p = Poly.constant(pres.ctx, p)
    if pres.is_hypersurface:
        (f,) = pres.relations
        gens = [const_p, standard_delta(p, f)]
        gens += [partial_derivative(f, j) for j in range(pres.ctx.arity)]
        return SingularReport("arithmetic", tuple(dedupe_up_to_sign(gens)))
    mj = mixed_jacobian(p, pres)
    minors = minor_determinants([list(r) for r in mj.matrix], pres.h)
    return SingularReport("arithmetic", tuple(dedupe_up_to_sign([const_p] + minors)))


def singular_fiber_univariate(p: int, f: Poly) -> Poly:
    """gcd over F_p of f, delta_st(f) and f'.

    Z[x]/(f) has a singular prime above p exactly when this has degree >= 1.
    """
    p = check_prime(p)
    if f.ctx.arity != 1:
        raise DomainError("singular fiber computation needs a univariate polynomial")
    return univariate_gcd_mod_p([f, standard_delta(p, f), partial_derivative(f, 0)], p)


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    if n > SQUAREFREE_LIMIT:
        raise DomainError(f"{n} is too large for the squarefree check (limit {SQUAREFREE_LIMIT})")
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


@dataclass(frozen=True)
class PureRootVerdict:
    q: int
    n: int
    is_ring_of_integers: bool
    delta: int  # delta_q(-n)
    divisible: bool  # q | delta_q(-n)
    fiber: Poly = None  # gcd witness, only for q == 2

    def describe(self) -> str:
        head = "YES" if self.is_ring_of_integers else "NO"
        cert = f"delta_{self.q}({-self.n}) = {self.delta}"
        if self.fiber is not None:
            return f"{head} ({cert}, singular fiber gcd over F_2 is {self.fiber})"
        if self.divisible:
            return f"{head} ({cert}, divisible by {self.q})"
        return f"{head} ({cert}, {self.q} does not divide {self.delta})"


def ring_of_integers_pure_root(q: int, n: int) -> PureRootVerdict:
    """Decide whether Z[n^(1/q)] is the full ring of integers of Q(n^(1/q)).

    For odd q the answer is "q does not divide delta_q(-n)". For q = 2 the
    fiber above 2 is examined directly with the gcd of x^2 - n, its standard
    2-derivation and its derivative.
    """
    q = check_prime(q)
    if n in (0, 1):
        raise DomainError(f"n must not be {n}")
    if not is_squarefree(n):
        raise DomainError(f"{n} is not squarefree")
    d = delta_int(q, -n)
    divisible = d % q == 0
    if q != 2:
        return PureRootVerdict(q, n, not divisible, d, divisible)
    ctx = VarContext(["x"])
    x = Poly.variable(ctx, 0)
    g = singular_fiber_univariate(2, x**2 - n)
    return PureRootVerdict(q, n, g.degree() == 0, d, divisible, g)


class PointCheck(NamedTuple):
    on_variety: bool
    singular: bool


def point_singularity_check(pres: RingPresentation, point: Sequence) -> PointCheck:
    point = [Fraction(v) for v in point]
    if len(point) != pres.ctx.arity:
        raise DomainError(f"point has {len(point)} coordinates, expected {pres.ctx.arity}")
    on = all(poly_eval(f, point) == 0 for f in pres.relations)
    if not on:
        return PointCheck(False, False)
    gens = classical_jacobian_generators(pres).generators
    return PointCheck(True, all(poly_eval(g, point) == 0 for g in gens))
