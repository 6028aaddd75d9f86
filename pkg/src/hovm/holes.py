"""Hole-set calculus: antichains of independent node subsets.

A HoleSet stores only the inclusion-minimal holes; the module it encodes
is determined by the upper closure of that antichain inside
Indep(J_lambda).  The full closure is never materialized outside of
bounded tests.
"""

import itertools
import math

from . import rootdata
from .weights import integrability


class ZeroFlag:
    """Marker for the zero module (a hole-set computation degenerated)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZeroFlag"


ZERO = ZeroFlag()


class ZeroModuleError(ValueError):
    pass


class CapExceeded(RuntimeError):
    def __init__(self, cap, produced):
        super().__init__("enumeration cap %d exceeded" % cap)
        self.cap = cap
        self.produced = produced


def _canonical(sets):
    return tuple(sorted({frozenset(s) for s in sets}, key=lambda h: sorted(h)))


class HoleSet:
    """Antichain of independent subsets of the context node set."""

    __slots__ = ("context", "min_holes")

    def __init__(self, context, min_holes):
        self.context = frozenset(context)
        holes = _canonical(min_holes)
        for h1, h2 in itertools.combinations(holes, 2):
            if h1 <= h2 or h2 <= h1:
                raise ValueError("not an antichain")
        if any(not h <= self.context for h in holes):
            raise ValueError("hole leaves the context")
        self.min_holes = holes

    def __eq__(self, other):
        return (
            isinstance(other, HoleSet)
            and self.context == other.context
            and self.min_holes == other.min_holes
        )

    def __hash__(self):
        return hash((self.context, self.min_holes))

    def __repr__(self):
        return "HoleSet(%s)" % [sorted(h) for h in self.min_holes]

    def __len__(self):
        return len(self.min_holes)

    def support(self):
        return frozenset().union(*self.min_holes) if self.min_holes else frozenset()

    def is_zero(self):
        return frozenset() in self.min_holes

    def to_json(self):
        return [sorted(h) for h in self.min_holes]


def minimalize(graph, context, sets):
    """Antichain of the inclusion-minimal members of `sets`."""
    context = frozenset(context)
    sets = [frozenset(s) for s in sets]
    for s in sets:
        if not s <= context:
            raise ValueError("hole leaves the context")
        if not graph.is_independent(s):
            raise ValueError("hole is not independent")
    minimal = [s for s in sets if not any(t < s for t in sets)]
    return HoleSet(context, minimal)


def closure_member(graph, holeset, H):
    """Is H in the upper closure of the antichain inside Indep(context)?"""
    H = frozenset(H)
    if not H <= holeset.context or not graph.is_independent(H):
        return False
    return any(m <= H for m in holeset.min_holes)


def transversals(holeset, cap=10**4):
    """All inclusion-minimal hitting sets of the minimal holes.

    Branch-and-bound over the support, one hole at a time, pruning any
    partial set dominated by an already-complete smaller one.
    """
    if holeset.is_zero():
        raise ZeroModuleError("the empty hole makes the module zero")
    holes = sorted(holeset.min_holes, key=lambda h: (len(h), sorted(h)))
    partial = [frozenset()]
    for hole in holes:
        nxt = set()
        for p in partial:
            if p & hole:
                nxt.add(p)
            else:
                for v in sorted(hole):
                    nxt.add(p | {v})
            if len(nxt) > cap:
                raise CapExceeded(cap, len(nxt))
        # domination pruning keeps the frontier an antichain
        partial = [p for p in nxt if not any(q < p for q in nxt)]
    return sorted(partial, key=lambda p: (len(p), sorted(p)))


def admissible_sets(holeset, k, cap=10**4):
    """All admissible families of order k: one subset H'_t of each minimal
    hole H_t with |H'_t| = min(k, |H_t|), collected as a set of distinct sets.

    k may be math.inf; deterministic order, capped enumeration.
    """
    if not (k == math.inf or (isinstance(k, int) and k >= 1)):
        raise ValueError("order k must be a positive integer or infinity")
    holes = list(holeset.min_holes)
    choices = []
    for h in holes:
        size = len(h) if k == math.inf else min(k, len(h))
        choices.append([frozenset(c) for c in itertools.combinations(sorted(h), size)])
    families, seen = [], set()
    count = 0
    for picks in itertools.product(*choices):
        count += 1
        if count > cap:
            raise CapExceeded(cap, len(families))
        fam = frozenset(picks)
        if fam not in seen:
            seen.add(fam)
            families.append(fam)
    return families


def h_prime(graph, lam, min_holes):
    """H'_lambda = minimalize({J_lambda n H}); ZERO if some trace is empty.

    The input holes live over the full node set I (general O^H data), so
    intersections are re-checked for independence inside J_lambda.
    """
    J = integrability(lam)
    traces = []
    for h in min_holes:
        t = frozenset(h) & J
        if not t:
            return ZERO
        traces.append(t)
    return minimalize(graph, J, traces)


def order_k_truncations(graph, holeset, k, j_lambda):
    """Hole antichains of the kth order upper and lower approximations.

    Upper (M_k): minimal holes of size <= k.  Lower (L_k): those same
    holes together with every independent (k+1)-subset of J_lambda not
    containing one of them; k = 0 degenerates to (Verma, simple module).
    """
    j_lambda = frozenset(j_lambda)
    if k == 0:
        singles = [frozenset({j}) for j in sorted(j_lambda)]
        return HoleSet(j_lambda, []), HoleSet(j_lambda, singles)
    small = [h for h in holeset.min_holes if len(h) <= k]
    upper = HoleSet(j_lambda, small)
    lower_sets = list(small)
    for combo in itertools.combinations(sorted(j_lambda), k + 1):
        s = frozenset(combo)
        if graph.is_independent(s) and not any(h <= s for h in small):
            lower_sets.append(s)
    return upper, HoleSet(j_lambda, lower_sets)


def upper_closure(graph, holeset, include_context=None):
    """Materialized upper closure inside Indep(context); bounded use only."""
    context = holeset.context if include_context is None else include_context
    members = []
    for h in rootdata.independent_sets(graph, context, include_empty=True):
        if any(m <= h for m in holeset.min_holes):
            members.append(h)
    return members
