"""Category O^H block combinatorics over sl2^n.

The block of lambda is indexed by subsets K of the nonzero-integral node
set K*.  Fixing a hole set H cuts out the simples lying in O^H, their
universal highest weight covers, a BGG-type reciprocity table, and the
truncated Kazhdan-Lusztig change-of-basis matrices.
"""

from hovm import HighestWeight, HoleSet, parse_gcm
from hovm.cat_o import (
    build_block,
    kl_bases,
    reciprocity_table,
    simples_in_block,
    universal_cover,
)

g = parse_gcm("A1^2")
lam = HighestWeight(g, [0, 0])
block = build_block(lam)
print("block of lambda = (0,0): K* =", sorted(block.k_star))

bh = simples_in_block(block, HoleSet({1, 2}, [{1, 2}]))
print("simples in O^H for H = {{1,2}}:",
      sorted(sorted(K) for K in bh.simple_index))

for K in sorted(bh.simple_index, key=sorted):
    cover = universal_cover(bh, K)
    print("  cover of L(w_%s . lam): holes %s at weight %s"
          % (sorted(K), cover.holes.to_json(), cover.lam.evals))

table = reciprocity_table(bh)
print("\nreciprocity table (lhs = rhs everywhere):",
      all(v["equal"] for v in table.values()))
e = table[(frozenset({2}), frozenset())]
print("P^H(s2 . lam) filtration subquotient holes:", e["standard_holes"])

bases = kl_bases(bh)
print("\ntruncated KL index:", [sorted(K) for K in bases["index"]])
top = frozenset({1, 2})
print("C_{12} in the T basis:",
      {tuple(sorted(k)): v for k, v in bases["C_in_T"][top].items()})
