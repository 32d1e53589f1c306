# Finding singularities, classically and over the integers
# ========================================================

from pderiv import (
    RingPresentation,
    VarContext,
    arithmetic_singular_generators,
    classical_jacobian_generators,
    parse_poly,
    point_singularity_check,
    ring_of_integers_pure_root,
    singular_fiber_univariate,
)

xyz = VarContext("x,y,z")
cone = RingPresentation(xyz, [parse_poly("z^2 - x^2 - y^2", xyz)])
umbrella = RingPresentation(xyz, [parse_poly("x^2 - y^2*z", xyz)])

print(classical_jacobian_generators(cone).generator_strings())
print(point_singularity_check(cone, (0, 0, 0)), point_singularity_check(cone, (1, 0, 1)))
print(classical_jacobian_generators(umbrella).generator_strings())
print(point_singularity_check(umbrella, (0, 0, 7)))

# Over Z, the prime 2 gets a "derivative" column of its own.
x = VarContext("x")
f = parse_poly("x^2 - 5", x)
print(arithmetic_singular_generators(2, RingPresentation(x, [f])).generator_strings())
print(singular_fiber_univariate(2, f))  # nonconstant: Z[sqrt 5] has a singular prime over 2

# Is Z[n^(1/q)] the full ring of integers?
for q, n in [(3, 2), (3, 10), (2, 5), (2, 3), (5, 7)]:
    print(q, n, ring_of_integers_pure_root(q, n).describe())
