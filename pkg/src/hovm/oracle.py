"""Exact brute-force ground truth over sl2^n.

Every highest weight module over sl2^n is M(lambda, H) and is isomorphic
as an n^- module to C[f_1..f_n] modulo the monomial ideal generated by
the exponent vectors lambda_H of the minimal holes.  Weights are the
monomials outside the ideal; everything here is plain coordinatewise
arithmetic.
"""

import itertools

from .characters import FormalCharacter
from .holes import HoleSet
from .weights import depth_vectors, eval_at, integrability, lambda_H


def _require_sl2n(gcm):
    if any(gcm.a[i][j] != 0 for i in range(gcm.n) for j in range(gcm.n) if i != j):
        raise ValueError("the oracle only models sl2^n")


class MonomialModule:
    __slots__ = ("gcm", "lam", "generators", "cutoff")

    def __init__(self, gcm, lam, generators, cutoff):
        self.gcm = gcm
        self.lam = lam
        self.generators = tuple(sorted(generators))
        self.cutoff = cutoff


def oracle_module(lam, holeset, N):
    """Monomial model of M(lambda, H): one generator lambda_H per minimal hole."""
    _require_sl2n(lam.gcm)
    gens = [lambda_H(lam, h) for h in holeset.min_holes]
    return MonomialModule(lam.gcm, lam, gens, N)


def _in_ideal(c, generators):
    return any(all(a >= b for a, b in zip(c, g)) for g in generators)


def oracle_weights(mod):
    return {
        c
        for c in depth_vectors(mod.gcm.n, mod.cutoff)
        if not _in_ideal(c, mod.generators)
    }


def oracle_char(mod):
    return FormalCharacter(mod.cutoff, {c: 1 for c in oracle_weights(mod)})


def oracle_holes(mod):
    """Recover the hole set from the generators; rejects non-hole input.

    A generator must be supported on integrable nodes with each entry the
    full exponent <lambda,alpha_h^vee>+1 there.
    """
    lam = mod.lam
    J = integrability(lam)
    holes = []
    for g in mod.generators:
        H = frozenset(i for i in lam.gcm.nodes if g[i - 1] > 0)
        if not H <= J:
            raise ValueError("generator supported outside the integrable nodes")
        if any(g[h - 1] != lam.evals[h - 1] + 1 for h in H):
            raise ValueError("generator exponent is not a hole exponent")
        holes.append(H)
    minimal = [h for h in holes if not any(set(t) < set(h) for t in holes)]
    return HoleSet(J, minimal)


def oracle_simple_char(lam, N):
    """ch L(lambda) over sl2^n: a product of strings and rays per coordinate."""
    _require_sl2n(lam.gcm)
    ranges = []
    for ev in lam.evals:
        if isinstance(ev, int) and ev >= 0:
            ranges.append(range(ev + 1))
        else:
            ranges.append(range(N + 1))
    coeffs = {}
    for c in itertools.product(*ranges):
        if sum(c) <= N:
            coeffs[c] = 1
    return FormalCharacter(N, coeffs)


def oracle_jh(mod):
    """Jordan-Hoelder data by triangular peeling of maximal weights.

    Repeatedly pick the lexicographically smallest coordinatewise-minimal
    depth vector with a positive remaining coefficient, record the simple
    with that highest weight, and subtract its character.  Exact as long as
    the cutoff separates the block (all sl2^n weight spaces are lines).
    """
    lam = mod.lam
    N = mod.cutoff
    remaining = dict.fromkeys(sorted(oracle_weights(mod)), 1)
    factors = []
    while remaining:
        minimal = [
            c
            for c in remaining
            if not any(
                all(a <= b for a, b in zip(d, c)) and d != c for d in remaining
            )
        ]
        top = min(minimal)
        mult = remaining[top]
        assert mult > 0
        mu = lam_below(lam, top)
        factors.append((top, mult))
        simple = oracle_simple_char(mu, N - sum(top))
        for c_rel in simple.coeffs:
            c = tuple(a + b for a, b in zip(top, c_rel))
            if sum(c) > N:
                continue
            remaining[c] = remaining.get(c, 0) - mult
            if remaining[c] == 0:
                del remaining[c]
            elif remaining[c] < 0:
                raise AssertionError("negative multiplicity while peeling")
    return factors


def lam_below(lam, c):
    """The highest weight lambda - sum c_i alpha_i as an evaluation vector."""
    from .weights import HighestWeight

    evals = [eval_at(lam, c, j) for j in lam.gcm.nodes]
    return HighestWeight(lam.gcm, evals)
