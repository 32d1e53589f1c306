# Symbolic powers and derivatives by p
# ====================================
#
# Partial derivatives alone cannot see that 2 is not in (2)^(2) = (4) in Z[x];
# the 2-derivation can.

from pderiv import MaximalPoint, Principal, VarContext, dsgj_member, parse_poly, power_member_oracle
from pderiv.symbpow import zn_member_rational

x = VarContext("x")
two = parse_poly("2", x)
print(dsgj_member(Principal(2), two, 2), power_member_oracle(Principal(2), two, 2))

f = parse_poly("x^2 + 2*x + 4", x)
q = MaximalPoint(2, (0,))
for r in (1, 2, 3):
    print(r, dsgj_member(q, f, r), power_member_oracle(q, f, r))

# Over Q the classical test at a point only needs partials.
xy = VarContext("x,y")
g = parse_poly("(x-1)^3*(y-1)", xy)
print(zn_member_rational((1, 1), g, 4), zn_member_rational((1, 1), g, 5))
