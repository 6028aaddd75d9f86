"""Weight sets of higher order Verma modules.

The running example: over sl2 x sl2 with lambda = (0, 0), killing the
product f1 f2 of both lowering operators leaves the module spanned by
the two coordinate axes of monomials -- a module whose weight hull has a
hole strictly inside it.
"""

from hovm import (
    HighestWeight,
    HoleSet,
    HovmSpec,
    parse_gcm,
    spec_from_sets,
    weight_member,
    weight_set,
    weight_set_minkowski,
)

g = parse_gcm("A1^2")
lam = HighestWeight(g, [0, 0])
spec = HovmSpec(lam, HoleSet({1, 2}, [{1, 2}]))

print("V00 = M((0,0), {{1,2}}) over sl2 x sl2")
print("depth (1,1) is a weight:", weight_member(spec, (1, 1)))
print("depth (0,3) is a weight:", weight_member(spec, (0, 3)))

ws = weight_set(spec, 4)
print("\nweights up to height 4 (the two axes):")
for c in sorted(ws):
    print("  lambda -", c)

print("\nMinkowski form agrees:", weight_set_minkowski(spec, 4) == ws)

# a rank-4 example over sl5 with a non-integral direction
g5 = parse_gcm("A4")
lam5 = HighestWeight(g5, [1, 0, 0, -1])
spec5 = spec_from_sets(lam5, [{2}, {1, 3}])
print("\nsl5, lambda = w1 - w4, holes {2} and {1,3}")
print("minimal transversals:", sorted(map(sorted, spec5.min_transversals())))
print("weights up to height 3:", len(weight_set(spec5, 3)))
