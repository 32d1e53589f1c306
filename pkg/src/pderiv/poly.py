"""Sparse multivariate polynomials with integer coefficients.

A :class:`Poly` is a mapping from exponent tuples to nonzero ints, tied to a
:class:`VarContext` that fixes the variable names and their order. Values
are treated as immutable; every operation returns a new polynomial in
canonical form (no stored zero coefficients).
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Iterable, Mapping, Sequence

from .arith import check_prime
from .errors import ContextError, DivisibilityError, DomainError

_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")

Monomial = tuple


class VarContext:
    """Ordered list of distinct variable names."""

    __slots__ = ("names",)

    def __init__(self, names: Iterable[str]):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",")]
        names = tuple(names)
        if not names:
            raise DomainError("a variable context needs at least one variable")
        for name in names:
            if not _NAME.match(name):
                raise DomainError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {','.join(names)}")
        self.names = names

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, var) -> int:
        if isinstance(var, str):
            try:
                return self.names.index(var)
            except ValueError:
                raise DomainError(f"unknown variable {var!r}") from None
        if not 0 <= var < len(self.names):
            raise DomainError(f"variable index {var} out of range")
        return var

    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarContext) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"VarContext({','.join(self.names)!r})"


def grlex_key(mono: Monomial):
    return (sum(mono), mono)


class Poly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VarContext, terms: Mapping[Monomial, int] | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            n = ctx.arity
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != n:
                    raise DomainError(f"monomial {mono} does not match arity {n}")
                if c:
                    clean[mono] = int(c)
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, ctx: VarContext, c: int) -> Poly:
        return cls._raw(ctx, {ctx.zero_monomial(): int(c)} if c else {})

    @classmethod
    def variable(cls, ctx: VarContext, var) -> Poly:
        i = ctx.index(var)
        mono = tuple(1 if k == i else 0 for k in range(ctx.arity))
        return cls._raw(ctx, {mono: 1})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(self.ctx.zero_monomial(), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = self.ctx.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def coeff(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextError(f"context mismatch: {self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Poly._raw(self.ctx, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial exponent must be a nonnegative integer")
        result = Poly.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .expr import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r}, vars={','.join(self.ctx.names)!r})"


# -- named operations --------------------------------------------------------


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_neg(f: Poly) -> Poly:
    return -f


def poly_sub(f: Poly, g: Poly) -> Poly:
    return f - g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_pow(f: Poly, k: int) -> Poly:
    return f**k


def map_coefficients(f: Poly, fn) -> Poly:
    return Poly(f.ctx, {m: fn(c) for m, c in f.terms.items()})


def content(f: Poly) -> int:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in f.terms.values():
        g = gcd(g, c)
    return g


def divide_exact(f: Poly, d: int) -> Poly:
    """Divide every coefficient by ``d``, raising DivisibilityError on a remainder."""
    out = {}
    for m, c in f.terms.items():
        q, r = divmod(c, d)
        if r:
            raise DivisibilityError(f"coefficient {c} of {f} is not divisible by {d}")
        out[m] = q
    return Poly._raw(f.ctx, out)


def partial_derivative(f: Poly, var) -> Poly:
    return divided_partial(f, var, 1)


def divided_partial(f: Poly, var, j: int) -> Poly:
    """(1/j!) d^j f / dx_var^j, which always has integer coefficients."""
    if j < 0:
        raise DomainError("derivative order must be nonnegative")
    i = f.ctx.index(var)
    if j == 0:
        return f
    out = {}
    for m, c in f.terms.items():
        k = m[i]
        if k >= j:
            out[m[:i] + (k - j,) + m[i + 1 :]] = c * comb(k, j)
    return Poly._raw(f.ctx, out)


def iterated_partial(f: Poly, orders: Sequence[int], divided: bool = False) -> Poly:
    """Apply d^{a_i}/dx_i^{a_i} for each variable (divided powers if requested)."""
    for i, a in enumerate(orders):
        if a:
            f = divided_partial(f, i, a)
            if not divided:
                f = f * factorial(a)
    return f


def frobenius_substitute(f: Poly, p: int) -> Poly:
    """f(x_1^p, ..., x_n^p)."""
    p = check_prime(p)
    return Poly._raw(f.ctx, {tuple(e * p for e in m): c for m, c in f.terms.items()})


def substitute(f: Poly, images: Sequence[Poly]) -> Poly:
    """Ring homomorphism x_i -> images[i] applied to f."""
    if len(images) != f.ctx.arity:
        raise DomainError("need one image per variable")
    target = images[0].ctx if images else f.ctx
    powers: list[dict[int, Poly]] = [{0: Poly.constant(target, 1)} for _ in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = images[i] ** e
        return cache[e]

    result = Poly(target)
    for m, c in f.terms.items():
        term = Poly.constant(target, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def poly_eval(f: Poly, point: Sequence) -> Fraction:
    """Exact value of f at a point with rational (or integer) coordinates."""
    if len(point) != f.ctx.arity:
        raise DomainError(f"point has {len(point)} coordinates, expected {f.ctx.arity}")
    pt = [Fraction(v) for v in point]
    total = Fraction(0)
    for m, c in f.terms.items():
        term = Fraction(c)
        for v, e in zip(pt, m):
            if e:
                term *= v**e
        total += term
    return total


def reduce_mod_int(f: Poly, p: int) -> Poly:
    """Coefficients reduced into {0, ..., p-1}; zeros dropped."""
    return Poly._raw(f.ctx, {m: c % p for m, c in f.terms.items() if c % p})


def _require_univariate(f: Poly):
    if f.ctx.arity != 1:
        raise DomainError(f"expected a univariate polynomial, got variables {','.join(f.ctx.names)}")


def to_dense(f: Poly) -> list[int]:
    """Coefficient list, lowest degree first, of a univariate polynomial."""
    _require_univariate(f)
    out = [0] * (f.degree() + 1)
    for (e,), c in f.terms.items():
        out[e] = c
    return out


def from_dense(ctx: VarContext, coeffs: Sequence[int]) -> Poly:
    return Poly(ctx, {(e,): c for e, c in enumerate(coeffs) if c})


def univariate_reduce(f: Poly, g: Poly) -> Poly:
    """Remainder of f on division by the monic univariate g."""
    _require_univariate(f)
    _require_univariate(g)
    if f.ctx != g.ctx:
        raise ContextError("context mismatch")
    d = g.degree()
    if d < 1 or g.coeff((d,)) != 1:
        raise DomainError(f"divisor {g} must be monic of degree >= 1")
    a = to_dense(f)
    b = to_dense(g)
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for t in range(d + 1):
                a[k - d + t] -= c * b[t]
    return from_dense(f.ctx, a[:d])


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], -1, p)
        a = a[:]
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv % p
            shift = len(a) - 1 - db
            for t in range(db + 1):
                a[shift + t] = (a[shift + t] - c * b[t]) % p
            _strip(a)
        a, b = b, a
    return a


def univariate_gcd_mod_p(fs: Sequence[Poly], p: int) -> Poly:
    """Monic gcd in F_p[x] of the reductions of ``fs``; 0 if all reduce to zero."""
    p = check_prime(p)
    if not fs:
        raise DomainError("need at least one polynomial")
    ctx = fs[0].ctx
    g: list[int] = []
    for f in fs:
        _require_univariate(f)
        if f.ctx != ctx:
            raise ContextError("context mismatch")
        g = _gcd_mod_p(g, _strip([c % p for c in to_dense(f)]), p)
    if not g:
        return Poly(ctx)
    inv = pow(g[-1], -1, p)
    return from_dense(ctx, [c * inv % p for c in g])
