"""BGG-type resolutions and the resulting character formulas.

Two constructive settings: pairwise orthogonal holes give a Koszul-shaped
complex; an edgeless integrable node set gives the Taylor complex of the
corresponding monomial ideal.  A conjectural dihedral shape for two
disjoint holes is generated with a supporting-evidence report only.
"""

from hovm import HighestWeight, HoleSet, parse_gcm
from hovm.resolutions import (
    dihedral_candidate,
    euler_char,
    koszul_resolution,
    taylor_resolution,
    verify_complex,
    wcf_terms,
)

g = parse_gcm("A1^3")
lam = HighestWeight(g, [0, 0, 0])
hs = HoleSet({1, 2, 3}, [{1, 2}, {1, 3}, {2, 3}])

res = taylor_resolution(lam, hs)
print("Taylor resolution of M(0, three pairwise holes) over sl2^3")
for t in sorted(res.levels):
    print("  level %d:" % t, [(sorted(J), w) for J, w in res.levels[t]])
print("d o d = 0:", verify_complex(res))

ch = euler_char(res, 6)
print("Euler character is 0/1 valued:", ch.is_zero_one())

print("\nWeyl character formula terms (sign, weight, length):")
for term in wcf_terms(lam, hs, "taylor"):
    print(" ", term)

# the conjectural dihedral complex for two non-orthogonal disjoint holes
g5 = parse_gcm("A4")
lam5 = HighestWeight(g5, [0, 0, 0, 0])
levels, char, report = dihedral_candidate(lam5, {1}, {2, 4}, 6)
print("\ndihedral candidate over sl5 for holes {1}, {2,4}:")
print("  order m =", report["order"], "levels =", len(levels))
print("  report:", report)

# orthogonal holes reduce the dihedral shape to the Koszul square
lam3 = HighestWeight(g, [0, 1, 0])
k = koszul_resolution(lam3, HoleSet({1, 2, 3}, [{1}, {3}]))
_, char2, report2 = dihedral_candidate(lam3, {1}, {3}, 6)
print("\northogonal pair: dihedral Euler char equals Koszul:",
      char2 == euler_char(k, 6))
