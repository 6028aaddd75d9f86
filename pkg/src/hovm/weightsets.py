"""Weight-set formulas for higher order Verma modules M(lambda, H).

Membership-first: every weight set is produced by enumerating depth
vectors up to a height cutoff and testing membership through the
hitting-set union of parabolic Verma weight sets.  The Minkowski-sum,
admissible-set and category-O reformulations are kept as independent
code paths so they can be cross-checked against each other.
"""

import itertools

from . import holes as holes_mod
from . import rootdata
from .characters import parabolic_verma_char, simple_finite_char
from .holes import HoleSet, minimalize, transversals
from .weights import (
    HighestWeight,
    add_vectors,
    depth_vectors,
    dominant_conjugate_J,
    height,
    integrability,
    lambda_H,
)


class HovmSpec:
    """A higher order Verma module M(lambda, H) given by its minimal holes."""

    __slots__ = ("gcm", "lam", "holes", "_transversals")

    def __init__(self, lam, holeset):
        self.gcm = lam.gcm
        self.lam = lam
        J = integrability(lam)
        if not holeset.context <= J:
            raise ValueError("hole context leaves the integrable nodes")
        graph = rootdata.DynkinGraph(self.gcm)
        for h in holeset.min_holes:
            if not graph.is_independent(h):
                raise ValueError("hole is not independent")
        self.holes = holeset
        self._transversals = None

    def is_zero(self):
        return self.holes.is_zero()

    def min_transversals(self):
        if self._transversals is None:
            self._transversals = transversals(self.holes)
        return self._transversals


def spec_from_sets(lam, sets):
    graph = rootdata.DynkinGraph(lam.gcm)
    return HovmSpec(lam, minimalize(graph, integrability(lam), sets))


def pvm_member(lam, J, c):
    """Is lambda - sum c_i alpha_i a weight of the parabolic Verma M(lambda,J)?

    Integrable slice test: reflect c linearly into the W_J-dominant chamber;
    membership holds iff no J-coordinate went negative, i.e. the dominant
    conjugate stays under nu = lambda - c_{J^c} in the Z>=0 Pi_J order.
    """
    J = frozenset(J)
    if not J <= integrability(lam):
        raise ValueError("J is not contained in the integrable nodes")
    if any(x < 0 for x in c):
        return False
    d = dominant_conjugate_J(lam, c, J)
    return all(d[j - 1] >= 0 for j in J)


def weight_member(spec, c):
    """Transversal-union membership: some minimal hitting set J admits the weight."""
    if any(x < 0 for x in c):
        return False
    if spec.is_zero():
        return False
    if not spec.holes.min_holes:
        return True
    return any(pvm_member(spec.lam, J, c) for J in spec.min_transversals())


def weight_set(spec, N):
    return {c for c in depth_vectors(spec.gcm.n, N) if weight_member(spec, c)}


def pvm_weight_set(lam, J, N):
    return {c for c in depth_vectors(lam.gcm.n, N) if pvm_member(lam, J, c)}


def _minkowski_sum(A, B, N):
    out = set()
    for a in A:
        for b in B:
            c = add_vectors(a, b)
            if height(c) <= N:
                out.add(c)
    return out


def weight_set_minkowski(spec, N):
    """Minkowski form: wt L_{J_lambda}^max(lambda) + wt of the 0-frame module.

    The second summand is the uniform module M(H) on the zero weight of the
    full algebra, whose generators are the plain products of f_h over each
    hole.
    """
    if spec.is_zero():
        return set()
    lam = spec.lam
    J = integrability(lam)
    finite_part = simple_finite_char(lam, J, N).support()
    zero = HighestWeight(spec.gcm, [0] * spec.gcm.n)
    frame_holes = HoleSet(frozenset(spec.gcm.nodes), spec.holes.min_holes)
    frame = HovmSpec(zero, frame_holes)
    frame_part = weight_set(frame, N)
    return _minkowski_sum(finite_part, frame_part, N)


def _root_monoid(gcm, generators, N):
    """All Z>=0-combinations of the generators of height <= N."""
    out = {tuple([0] * gcm.n)}
    frontier = set(out)
    while frontier:
        new = set()
        for v in frontier:
            for g in generators:
                w = add_vectors(v, g)
                if height(w) <= N and w not in out:
                    new.add(w)
        out |= new
        frontier = new
    return out


def minkowski_family_check(lam, J, J2, N):
    """wt M(lambda,J) = wt L_{J2}^max(lambda) - Z>=0(Delta+ \\ Delta_J+),
    verified up to height N, for any J <= J2 inside the integrable nodes."""
    J, J2 = frozenset(J), frozenset(J2)
    if not (J <= J2 <= integrability(lam)):
        raise ValueError("need J <= J2 <= J_lambda")
    lhs = pvm_weight_set(lam, J, N)
    roots = rootdata.positive_roots(lam.gcm).positive_roots
    outside = [
        r for r in roots if any(r[i - 1] != 0 for i in lam.gcm.nodes if i not in J)
    ]
    rhs = _minkowski_sum(
        simple_finite_char(lam, J2, N).support(),
        _root_monoid(lam.gcm, outside, N),
        N,
    )
    return lhs == rhs


def psi_k(spec, k, N):
    """Weight set as the union over admissible families of order k.

    Infinity is passed as math.inf (equivalently any k >= max hole size).
    """
    if spec.is_zero():
        return set()
    if not spec.holes.min_holes:
        return weight_set(spec, N)
    graph = rootdata.DynkinGraph(spec.gcm)
    out = set()
    for fam in holes_mod.admissible_sets(spec.holes, k):
        sub = HovmSpec(spec.lam, minimalize(graph, spec.holes.context, fam))
        out |= weight_set(sub, N)
    return out


def psi_separating_weight(lam, holeset1, holeset2):
    """A depth vector on which the weight sets of the two hole antichains
    differ: lambda_H for a minimal H in the symmetric difference of closures."""
    graph = rootdata.DynkinGraph(lam.gcm)
    J = integrability(lam)
    diff = []
    for H in rootdata.independent_sets(graph, J, include_empty=False):
        m1 = holes_mod.closure_member(graph, holeset1, H)
        m2 = holes_mod.closure_member(graph, holeset2, H)
        if m1 != m2:
            diff.append(H)
    if not diff:
        raise ValueError("the hole antichains generate the same closure")
    minimal = [h for h in diff if not any(t < h for t in diff)]
    H = min(minimal, key=lambda h: sorted(h))
    return lambda_H(lam, H)


def altwts_check(spec, N):
    """Alternate union over K <= J_lambda with L(w_{J_lambda\\K}.lambda) in O^H.

    The qualifying K are exactly those with J_{w_{J_lambda\\K}.lambda} n
    J_lambda = K, so the category test reduces to K hitting every minimal
    hole.  Returns True iff the union matches the transversal-union weight set.
    """
    if spec.is_zero():
        return weight_set(spec, N) == set()
    lam = spec.lam
    J = sorted(integrability(lam))
    alt = set()
    for size in range(len(J) + 1):
        for K in itertools.combinations(J, size):
            K = frozenset(K)
            if all(K & h for h in spec.holes.min_holes):
                alt |= pvm_weight_set(lam, K, N)
    return alt == weight_set(spec, N)


def inclusion_exclusion_char(spec, N):
    """Multiplicity-free character over sl2^n by inclusion-exclusion on the
    minimal transversals: ch M(lambda,H) = sum over nonempty S of
    (-1)^{|S|-1} ch M(lambda, union of S)."""
    gcm = spec.gcm
    if any(gcm.a[i][j] != 0 for i in range(gcm.n) for j in range(gcm.n) if i != j):
        raise ValueError("inclusion-exclusion characters require sl2^n")
    from .characters import FormalCharacter

    if spec.is_zero():
        return FormalCharacter(N, {})
    if not spec.holes.min_holes:
        return parabolic_verma_char(spec.lam, frozenset(), N)
    ts = spec.min_transversals()
    total = FormalCharacter(N, {})
    for size in range(1, len(ts) + 1):
        for S in itertools.combinations(ts, size):
            union = frozenset().union(*S)
            term = parabolic_verma_char(spec.lam, union, N)
            total = total + term if size % 2 == 1 else total - term
    return total
