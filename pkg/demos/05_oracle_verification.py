"""The brute-force oracle and the randomized verification suites.

Over sl2^n every highest weight module is a polynomial ring modulo a
monomial ideal, so weight sets, characters, and Jordan-Hoelder data can
be recomputed from scratch by coordinatewise arithmetic.  The verify
suites draw seeded random instances and compare every library code path
against that ground truth.
"""

from hovm import HighestWeight, HoleSet, parse_gcm
from hovm.oracle import oracle_holes, oracle_jh, oracle_module, oracle_weights
from hovm.verify import run_suite

g = parse_gcm("A1^2")
lam = HighestWeight(g, [0, 0])
mod = oracle_module(lam, HoleSet({1, 2}, [{1, 2}]), 6)
print("generators of the monomial ideal:", mod.generators)
print("weights up to height 3:",
      sorted(c for c in oracle_weights(mod) if sum(c) <= 3))
print("holes recovered from the generators:", oracle_holes(mod).to_json())
print("Jordan-Hoelder factors (depth, mult):", sorted(oracle_jh(mod)))

print("\nrandomized suites (seed 0, 40 trials each):")
for suite in ["weights", "chars", "resolutions", "reciprocity", "kl"]:
    print(" ", suite, "->", run_suite(suite, seed=0, trials=40))
