"""Symbolic-power membership through derivative tests.

Two prime shapes are supported, both with decidable membership:

* ``Principal(p)`` -- the ideal (p) of Z[x_1..x_n];
* ``MaximalPoint(p, a)`` -- the maximal ideal (p, x_1 - a_1, ..., x_n - a_n).

For both, the r-th symbolic power equals the ordinary r-th power, which gives
a derivative-free oracle (:func:`power_member_oracle`) to check the mixed
p-derivation / partial-derivative test (:func:`dsgj_member`) against.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .arith import check_prime
from .deriv import standard_delta
from .errors import DomainError
from .poly import Poly, iterated_partial, poly_eval, substitute


@dataclass(frozen=True)
class Principal:
    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))

    def check_arity(self, n: int):
        pass

    def __str__(self):
        return f"({self.p})"


@dataclass(frozen=True)
class MaximalPoint:
    p: int
    residues: tuple

    def __post_init__(self):
        p = check_prime(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residues", tuple(int(a) % p for a in self.residues))

    def check_arity(self, n: int):
        if len(self.residues) != n:
            raise DomainError(f"prime has {len(self.residues)} residues but the ring has {n} variables")

    def __str__(self):
        return f"({self.p}, point {','.join(map(str, self.residues))})"


PrimeSpec = Principal | MaximalPoint


@dataclass(frozen=True)
class MembershipWitness:
    member: bool
    index: tuple | None = None  # failing multi-index when not a member

    def __bool__(self):
        return self.member


def ideal_member(q: PrimeSpec, f: Poly) -> bool:
    q.check_arity(f.ctx.arity)
    if isinstance(q, Principal):
        return all(c % q.p == 0 for c in f.terms.values())
    return poly_eval(f, q.residues) % q.p == 0


def multi_indices(n: int, bound: int) -> Iterator[tuple]:
    """All n-tuples of nonnegative ints with sum < bound, in lexicographic order."""
    for idx in product(range(bound), repeat=n):
        if sum(idx) < bound:
            yield idx


def translate(f: Poly, point: Sequence[int]) -> Poly:
    """f(x + a) for an integer point a."""
    ctx = f.ctx
    images = [Poly.variable(ctx, i) + int(a) for i, a in enumerate(point)]
    return substitute(f, images)


def dsgj_member(q: PrimeSpec, f: Poly, r: int, divided: bool = True) -> MembershipWitness:
    """Mixed test: delta_st^{a_0}(D^alpha f) in q for all a_0 + |alpha| < r.

    ``D^alpha`` is the divided-power operator prod (1/a_i!) d^{a_i}/dx_i^{a_i}
    by default. ``divided=False`` uses plain partials, which over Z lose
    information (for instance d^2/dx^2 (x^2) = 2 lies in (2, x)).
    The lexicographically first failing (a_0, alpha) is reported.
    """
    if r < 1:
        raise DomainError("r must be a positive integer")
    q.check_arity(f.ctx.arity)
    p = q.p
    n = f.ctx.arity
    chains: dict[tuple, list[Poly]] = {}
    for a0 in range(r):
        for alpha in multi_indices(n, r - a0):
            chain = chains.get(alpha)
            if chain is None:
                chain = chains[alpha] = [iterated_partial(f, alpha, divided=divided)]
            while len(chain) <= a0:
                chain.append(standard_delta(p, chain[-1]))
            if not ideal_member(q, chain[a0]):
                return MembershipWitness(False, (a0,) + alpha)
    return MembershipWitness(True)


def power_member_oracle(q: PrimeSpec, f: Poly, r: int) -> bool:
    """Membership in q^r, computed without derivatives."""
    if r < 1:
        raise DomainError("r must be a positive integer")
    q.check_arity(f.ctx.arity)
    p = q.p
    if isinstance(q, Principal):
        return all(c % p**r == 0 for c in f.terms.values())
    g = translate(f, q.residues)
    for mono, c in g.terms.items():
        d = sum(mono)
        if d < r and c % p ** (r - d):
            return False
    return True


def zn_member_rational(point: Sequence, f: Poly, r: int) -> MembershipWitness:
    """Classical test at a rational point: every partial of order < r vanishes there."""
    if r < 1:
        raise DomainError("r must be a positive integer")
    point = [Fraction(v) for v in point]
    if len(point) != f.ctx.arity:
        raise DomainError(f"point has {len(point)} coordinates, expected {f.ctx.arity}")
    for alpha in multi_indices(f.ctx.arity, r):
        if poly_eval(iterated_partial(f, alpha), point) != 0:
            return MembershipWitness(False, alpha)
    return MembershipWitness(True)


def zn_translation_oracle(point: Sequence, f: Poly, r: int) -> bool:
    """f(x + a) has no monomial of total degree < r.

    Works with rational coordinates by expanding binomially coefficient by
    coefficient, so the polynomial never leaves Z.
    """
    point = [Fraction(v) for v in point]
    if len(point) != f.ctx.arity:
        raise DomainError(f"point has {len(point)} coordinates, expected {f.ctx.arity}")
    from math import comb

    low: dict[tuple, Fraction] = {}
    for mono, c in f.terms.items():
        # (x_i + a_i)^e_i = sum_k comb(e_i, k) a_i^(e_i - k) x_i^k; keep total degree < r
        parts = [[(k, comb(e, k) * a ** (e - k)) for k in range(min(e, r - 1) + 1)] for e, a in zip(mono, point)]
        for choice in product(*parts):
            beta = tuple(k for k, _ in choice)
            if sum(beta) >= r:
                continue
            v = Fraction(c)
            for _, w in choice:
                v *= w
            low[beta] = low.get(beta, 0) + v
    return all(v == 0 for v in low.values())
