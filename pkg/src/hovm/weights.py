"""Highest weights via Cartan evaluations, depth vectors and the dot action.

A highest weight lambda is stored as the vector of pairings
<lambda, alpha_i^vee>; each entry is either an integer or the generic
non-integral marker NONINT.  A weight mu = lambda - sum_i c_i alpha_i
below lambda is encoded by its depth vector c (nonnegative integers).
"""

import itertools


class _NonIntegral:
    """Generic non-integer evaluation: absorbs integer shifts, never in Z>=0.

    Two NonIntegral values are never compared; the formulas in scope only
    ever test membership of a single evaluation in Z>=0.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NONINT"

    def __add__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented


NONINT = _NonIntegral()


def is_nonneg_int(ev):
    return isinstance(ev, int) and ev >= 0


class HighestWeight:
    __slots__ = ("gcm", "evals")

    def __init__(self, gcm, evals):
        evals = tuple(NONINT if e == "x" or e is NONINT else int(e) for e in evals)
        if len(evals) != gcm.n:
            raise ValueError("evaluation vector has wrong length")
        self.gcm = gcm
        self.evals = evals

    def __eq__(self, other):
        return (
            isinstance(other, HighestWeight)
            and self.gcm == other.gcm
            and self.evals == other.evals
        )

    def __hash__(self):
        return hash((self.gcm, self.evals))

    def __repr__(self):
        return "HighestWeight(%r)" % (self.evals,)


def integrability(lam):
    """J_lambda = {i : <lambda, alpha_i^vee> in Z>=0}."""
    return frozenset(
        i for i in lam.gcm.nodes if is_nonneg_int(lam.evals[i - 1])
    )


def eval_at(lam, c, j):
    """<mu, alpha_j^vee> for mu = lambda - sum c_i alpha_i."""
    e = lam.evals[j - 1]
    if e is NONINT:
        return NONINT
    return e - sum(lam.gcm.a[j - 1][i] * c[i] for i in range(lam.gcm.n))


def dot_reflect(lam, c, j):
    """s_j . mu for mu of depth c: adds <mu,alpha_j^vee>+1 to coordinate j."""
    e = eval_at(lam, c, j)
    if e is NONINT:
        raise ValueError("dot reflection at a non-integral evaluation")
    out = list(c)
    out[j - 1] += e + 1
    return tuple(out)


def lambda_H(lam, H, graph=None):
    """Depth vector of lambda_H: c_h = <lambda,alpha_h^vee>+1 on the hole H.

    Equals (prod_{h in H} s_h) . lambda since H is independent.
    """
    J = integrability(lam)
    if not set(H) <= J:
        raise ValueError("hole is not contained in the integrable nodes")
    if graph is not None and not graph.is_independent(H):
        raise ValueError("hole is not independent")
    c = [0] * lam.gcm.n
    for h in H:
        c[h - 1] = lam.evals[h - 1] + 1
    return tuple(c)


def dominant_conjugate_J(lam, c, J):
    """W_J-dominant representative of mu = lambda - sum c_i alpha_i.

    Linear (not dot) reflections are applied at nodes of J with negative
    evaluation until none remain.  The result is an integer displacement
    vector d with mu'' = lambda - sum d_i alpha_i; entries of d on J may
    be negative (the orbit can leave the cone below lambda), entries off
    J are untouched.  Callers consume only the J-coordinates.
    """
    d = list(c)
    for j in J:
        if eval_at(lam, d, j) is NONINT:
            raise ValueError("non-integral evaluation on J")
    guard = 0
    while True:
        j = next((j for j in sorted(J) if eval_at(lam, d, j) < 0), None)
        if j is None:
            return tuple(d)
        d[j - 1] += eval_at(lam, d, j)
        guard += 1
        assert guard < 10**7, "reflection loop did not terminate; J not finite type?"


def depth_vectors(n, max_height):
    """All c in Z>=0^n with sum(c) <= max_height, in lexicographic order."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + [v], remaining - v, slots - 1)

    yield from rec([], max_height, n)


def height(c):
    return sum(c)


def add_vectors(u, v):
    return tuple(a + b for a, b in zip(u, v))
