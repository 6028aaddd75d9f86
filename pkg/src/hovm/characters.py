"""Truncated formal characters over finite-type algebras.

A FormalCharacter is exact on all heights <= its cutoff: a sparse map
depth-vector -> integer multiplicity with zero values dropped.  The one
computational engine is the Kostant partition function; Verma, parabolic
Verma and finite-dimensional simple characters are alternating sums of
its shifts over a parabolic Weyl group.
"""

import threading

from . import rootdata, weyl
from .weights import (
    HighestWeight,
    NONINT,
    depth_vectors,
    dot_reflect,
    eval_at,
    height,
    integrability,
)

_kp_lock = threading.Lock()
_kp_memo = {}


class FormalCharacter:
    __slots__ = ("cutoff", "coeffs")

    def __init__(self, cutoff, coeffs):
        self.cutoff = cutoff
        self.coeffs = {c: m for c, m in coeffs.items() if m != 0}
        assert all(height(c) <= cutoff for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FormalCharacter)
            and self.cutoff == other.cutoff
            and self.coeffs == other.coeffs
        )

    def coeff(self, c):
        return self.coeffs.get(tuple(c), 0)

    def support(self):
        return set(self.coeffs)

    def _merge(self, other, flip):
        cutoff = min(self.cutoff, other.cutoff)
        out = {c: m for c, m in self.coeffs.items() if height(c) <= cutoff}
        for c, m in other.coeffs.items():
            if height(c) <= cutoff:
                out[c] = out.get(c, 0) + flip * m
        return FormalCharacter(cutoff, out)

    def __add__(self, other):
        return self._merge(other, 1)

    def __sub__(self, other):
        return self._merge(other, -1)

    def shift_by(self, d):
        """Multiply by e^{-sum d_i alpha_i}: translate keys, drop past cutoff."""
        out = {}
        for c, m in self.coeffs.items():
            c2 = tuple(a + b for a, b in zip(c, d))
            if height(c2) <= self.cutoff:
                out[c2] = m
        return FormalCharacter(self.cutoff, out)

    def is_zero_one(self):
        return all(m in (0, 1) for m in self.coeffs.values())

    def to_json(self):
        return {
            "cutoff": self.cutoff,
            "terms": [
                {"depth": list(c), "mult": self.coeffs[c]}
                for c in sorted(self.coeffs)
            ],
        }


def kostant_partition(gcm, beta):
    """Number of multisets of positive roots summing to beta."""
    roots = rootdata.positive_roots(gcm).positive_roots
    return _kp(gcm, roots, tuple(beta), 0)


def _kp(gcm, roots, beta, idx):
    if all(b == 0 for b in beta):
        return 1
    if any(b < 0 for b in beta) or idx == len(roots):
        return 0
    key = (gcm, beta, idx)
    with _kp_lock:
        hit = _kp_memo.get(key)
    if hit is not None:
        return hit
    r = roots[idx]
    total, rest = 0, beta
    while all(b >= 0 for b in rest):
        total += _kp(gcm, roots, rest, idx + 1)
        rest = tuple(b - x for b, x in zip(rest, r))
    with _kp_lock:
        _kp_memo[key] = total
    return total


def _dot_orbit_terms(lam, J):
    """(sign, depth of w.lambda) for every w in W_J, via BFS with dot action.

    Requires integer evaluations on J (e.g. J inside the integrability).
    """
    gcm = lam.gcm
    J = tuple(sorted(J))
    for j in J:
        if lam.evals[j - 1] is NONINT:
            raise ValueError("non-integral evaluation inside J")
    start = tuple([0] * gcm.n)
    ident = weyl.identity_matrix(gcm.n)
    seen = {ident: (0, start)}
    frontier = [(ident, start)]
    while frontier:
        nxt = []
        for w, c in frontier:
            for j in J:
                w2 = weyl.compose(weyl.simple_reflection(gcm, j), w)
                if w2 not in seen:
                    c2 = dot_reflect(lam, c, j)
                    seen[w2] = (seen[w][0] + 1, c2)
                    nxt.append((w2, c2))
        frontier = nxt
    return [((-1) ** l, c) for l, c in sorted(seen.values())]


def verma_char(lam, N):
    """ch M(lambda): coefficient at depth c is the Kostant partition of c."""
    gcm = lam.gcm
    coeffs = {}
    for c in depth_vectors(gcm.n, N):
        coeffs[c] = kostant_partition(gcm, c)
    return FormalCharacter(N, coeffs)


def parabolic_verma_char(lam, J, N):
    """ch M(lambda, J) via the alternating sum over W_J of shifted partitions."""
    gcm = lam.gcm
    if not frozenset(J) <= integrability(lam):
        raise ValueError("J is not contained in the integrable nodes")
    terms = _dot_orbit_terms(lam, J)
    coeffs = {}
    for c in depth_vectors(gcm.n, N):
        total = 0
        for sign, d in terms:
            shifted = tuple(a - b for a, b in zip(c, d))
            if all(x >= 0 for x in shifted):
                total += sign * kostant_partition(gcm, shifted)
        if total:
            coeffs[c] = total
    return FormalCharacter(N, coeffs)


def _restrict_weight(lam, J):
    """lambda restricted to the sub-GCM on J; returns (sub_gcm, sub_lam, nodes)."""
    nodes = sorted(J)
    sub = rootdata.GCM(
        [[lam.gcm.a[i - 1][j - 1] for j in nodes] for i in nodes]
    )
    sub_lam = HighestWeight(sub, [lam.evals[i - 1] for i in nodes])
    return sub, sub_lam, nodes


def simple_finite_char(lam, J, N):
    """ch of the maximal integrable module L_J^max(lambda) over the Levi on J.

    Requires integer evaluations >= 0 on J; the result is supported on the
    simple roots of J, embedded back into full-rank depth vectors.
    """
    for j in J:
        ev = lam.evals[j - 1]
        if not (isinstance(ev, int) and ev >= 0):
            raise ValueError("lambda is not J-dominant integral")
    if not J:
        zero = tuple([0] * lam.gcm.n)
        return FormalCharacter(N, {zero: 1})
    sub, sub_lam, nodes = _restrict_weight(lam, J)
    inner = parabolic_verma_char(sub_lam, sub.nodes, N)
    coeffs = {}
    for c_sub, m in inner.coeffs.items():
        c = [0] * lam.gcm.n
        for pos, i in enumerate(nodes):
            c[i - 1] = c_sub[pos]
        coeffs[tuple(c)] = m
    return FormalCharacter(N, coeffs)


def freudenthal_char(lam, J, N):
    """Test oracle: ch L_J^max(lambda) by Freudenthal's recursion on the Levi."""
    from fractions import Fraction

    for j in J:
        ev = lam.evals[j - 1]
        if not (isinstance(ev, int) and ev >= 0):
            raise ValueError("lambda is not J-dominant integral")
    if not J:
        zero = tuple([0] * lam.gcm.n)
        return FormalCharacter(N, {zero: 1})
    sub, sub_lam, nodes = _restrict_weight(lam, J)
    roots = rootdata.positive_roots(sub).positive_roots
    n = sub.n
    # symmetrizer d: d_i a_ij symmetric, solved along the Dynkin graph
    d = [None] * n
    graph = rootdata.DynkinGraph(sub)
    for comp in graph.components():
        seed = min(comp)
        d[seed - 1] = Fraction(1)
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in graph.neighbours(i):
                if d[j - 1] is None:
                    d[j - 1] = d[i - 1] * sub.a[i - 1][j - 1] / sub.a[j - 1][i - 1]
                    frontier.append(j)

    def bil(u, v):
        # (sum u_i alpha_i, sum v_j alpha_j), with (alpha_i, alpha_j) = d_i a_ij
        return sum(
            u[i] * v[j] * d[i] * sub.a[i][j] for i in range(n) for j in range(n)
        )

    def mu_eval(c2, i):
        return sub_lam.evals[i] - sum(sub.a[i][k] * c2[k] for k in range(n))

    mults = {tuple([0] * n): 1}
    for ht in range(1, N + 1):
        for c in depth_vectors(n, ht):
            if sum(c) != ht:
                continue
            acc = Fraction(0)
            for r in roots:
                t = 1
                while True:
                    c2 = tuple(x - t * y for x, y in zip(c, r))
                    if any(x < 0 for x in c2):
                        break
                    m = mults.get(c2, 0)
                    if m:
                        # (mu + t alpha, alpha) for mu + t alpha = lambda - c2
                        val = sum(r[i] * d[i] * mu_eval(c2, i) for i in range(n))
                        acc += 2 * m * val
                    t += 1
            # |lambda+rho|^2 - |mu+rho|^2 = (2(lambda+rho) - c, c)
            denom = 2 * sum(c[i] * d[i] * (sub_lam.evals[i] + 1) for i in range(n))
            denom -= bil(c, c)
            if denom == 0 or acc == 0:
                continue
            val = acc / denom
            assert val.denominator == 1 and val >= 0
            mults[tuple(c)] = int(val)
    coeffs = {}
    for c_sub, m in mults.items():
        c = [0] * lam.gcm.n
        for pos, i in enumerate(nodes):
            c[i - 1] = c_sub[pos]
        coeffs[tuple(c)] = m
    return FormalCharacter(N, coeffs)
