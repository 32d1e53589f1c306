# p-derivations of polynomials and Frobenius lifts
# ================================================

from pderiv import FrobeniusLift, PDerivation, VarContext, parse_poly, standard_delta
from pderiv.deriv import chain_rule_rhs, iterate_delta, lift_apply
from pderiv.poly import poly_eval

ctx = VarContext("x")
f = parse_poly("x^3 + 5*x", ctx)

# The standard 2-derivation: (f(x^2) - f(x)^2) / 2.
print(standard_delta(2, f))

# Any Frobenius lift gives a p-derivation. Here x -> x^3 + 3*(x + 1).
lift = FrobeniusLift(3, ctx, [parse_poly("x^3 + 3*x + 3", ctx)])
delta = PDerivation(lift)
print(delta(f))
print(lift_apply(delta, f) == lift(f))

# Iterating: delta_2(delta_2(2)) = delta_2(-1) = -1.
print(iterate_delta(2, parse_poly("2", ctx), 2))

# Chain rule: delta_p(f(n)) in terms of delta_st,p(f), derivatives of f and delta_p(n).
n = 2
print(chain_rule_rhs(2, f, n), poly_eval(f, [n]))
