"""Universal Witt structure polynomials and their symbolic verification.

The addition/multiplication/negation laws of length-``n`` Witt vectors are
integer polynomials S_i, M_i, N_i determined by the ghost identities

    w_i(S(X,Y)) = w_i(X) + w_i(Y),
    w_i(M(X,Y)) = w_i(X) * w_i(Y),
    w_i(N(X))   = -w_i(X),

with w_i(V) = sum_{j<=i} p^j V_j^{p^(i-j)}.  They are constructed here by
the recursive solve, every division by p^i checked exactly, and verified
afterwards by an independent re-expansion of the ghost identities.

Composite ring axioms (associativity, distributivity) are exact polynomial
identities as well.  Because the ghost map is injective on polynomial rings
over the integers, they follow formally from the ghost identities above;
for small parameters they are additionally checked by direct substitution.
"""

from __future__ import annotations

from .errors import BudgetExceeded, NonPrime
from .intpoly import IntPoly

DEFAULT_WORK_BUDGET = 4096

# p**n bound under which the composite laws are re-checked by brute
# substitution (the formal ghost argument covers all parameters).
DIRECT_LAW_LIMIT = 81

_cache = {}


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def ghost_poly(p, i, nvars, offset=0):
    """w_i as a polynomial in variables offset..offset+i."""
    w = IntPoly(nvars)
    for j in range(i + 1):
        w = w + IntPoly.var(nvars, offset + j, exp=p ** (i - j), coef=p**j)
    return w


class WittStructurePolys:
    """Container for the structure polynomials of W_n at the prime p.

    ``S`` and ``M`` live in 2n variables (X block first, then Y block),
    ``N`` in n variables.  ``verify_ghost_identities`` re-expands the
    defining identities from scratch and records the outcome.
    """

    def __init__(self, p, n, S, M, N):
        self.p = p
        self.n = n
        self.S = S
        self.M = M
        self.N = N
        self.ghost_verified = False

    def x_vars(self):
        return [IntPoly.var(2 * self.n, j) for j in range(self.n)]

    def y_vars(self):
        return [IntPoly.var(2 * self.n, self.n + j) for j in range(self.n)]

    def verify_ghost_identities(self):
        """Re-expand w_i over the final polynomials and compare.

        This is deliberately not the construction recursion: the powers are
        recomputed through the generic substitution machinery, so an error
        in the incremental solve would be caught here.
        """
        p, n = self.p, self.n
        cache_s, cache_m, cache_n = {}, {}, {}
        for i in range(n):
            w2 = ghost_poly(p, i, 2 * n)  # w_i on the X block of 2n vars
            lhs = w2.subst(self.S, cache_s)
            rhs = ghost_poly(p, i, 2 * n, 0) + ghost_poly(p, i, 2 * n, n)
            if lhs != rhs:
                return False
            lhs = w2.subst(self.M, cache_m)
            rhs = ghost_poly(p, i, 2 * n, 0) * ghost_poly(p, i, 2 * n, n)
            if lhs != rhs:
                return False
            w1 = ghost_poly(p, i, n)
            lhs = w1.subst(self.N, cache_n)
            if lhs != -ghost_poly(p, i, n):
                return False
        self.ghost_verified = True
        return True

    def verify_unit_laws(self):
        """Commutativity, neutral elements and additive inverse, symbolically."""
        p, n = self.p, self.n
        swap = list(range(n, 2 * n)) + list(range(n))
        for i in range(n):
            if self.S[i].remap(swap, 2 * n) != self.S[i]:
                return False
            if self.M[i].remap(swap, 2 * n) != self.M[i]:
                return False
        xs = self.x_vars()
        zero = [IntPoly(2 * n)] * n
        one = [IntPoly.const(2 * n, 1)] + [IntPoly(2 * n)] * (n - 1)
        cache = {}
        for i in range(n):
            if self.S[i].subst(xs + zero, cache) != xs[i].remap(
                list(range(2 * n)), 2 * n
            ):
                return False
        cache = {}
        for i in range(n):
            if self.M[i].subst(xs + one, cache) != xs[i]:
                return False
            if not self.M[i].subst(xs + zero, cache).is_zero():
                return False
        # x + (-x) = 0
        nx = [q.remap(list(range(n)), 2 * n) for q in self.N]
        cache = {}
        for i in range(n):
            if not self.S[i].subst(xs + nx, cache).is_zero():
                return False
        return True

    def composite_laws_direct(self):
        """Brute-force associativity and distributivity by substitution.

        Exponential in p^n; gated by DIRECT_LAW_LIMIT.  Returns True when
        the identities hold, raises BudgetExceeded when out of range.
        """
        p, n = self.p, self.n
        if p**n > DIRECT_LAW_LIMIT:
            raise BudgetExceeded(f"direct composite check infeasible for p={p}, n={n}")
        nv = 3 * n
        X = [IntPoly.var(nv, j) for j in range(n)]
        Y = [IntPoly.var(nv, n + j) for j in range(n)]
        Z = [IntPoly.var(nv, 2 * n + j) for j in range(n)]
        into_xy = list(range(2 * n))
        into_yz = list(range(n, 3 * n))
        into_xz = list(range(n)) + list(range(2 * n, 3 * n))
        S_xy = [q.remap(into_xy, nv) for q in self.S]
        S_yz = [q.remap(into_yz, nv) for q in self.S]
        M_xy = [q.remap(into_xy, nv) for q in self.M]
        M_yz = [q.remap(into_yz, nv) for q in self.M]
        M_xz = [q.remap(into_xz, nv) for q in self.M]

        def comp(polys, argsa, argsb):
            cache_a, cache_b = {}, {}
            return (
                [q.subst(argsa + argsb, cache_a) for q in polys],
                cache_b,
            )

        c1, c2, c3, c4 = {}, {}, {}, {}
        for i in range(n):
            if self.S[i].subst(S_xy + Z, c1) != self.S[i].subst(X + S_yz, c2):
                return False
            if self.M[i].subst(M_xy + Z, c3) != self.M[i].subst(X + M_yz, c4):
                return False
        c5, c6 = {}, {}
        for i in range(n):
            lhs = self.M[i].subst(X + S_yz, c5)
            rhs = self.S[i].subst(M_xy + M_xz, c6)
            if lhs != rhs:
                return False
        return True

    def composite_laws_via_ghost(self):
        """The formal derivation of the composite laws.

        Substituting polynomials into a verified polynomial identity is
        sound, so once the ghost identities hold, both composites of any
        associativity/distributivity instance have equal ghost vectors;
        injectivity of the ghost map over Z[vars] then forces equality.
        Returns a short machine-readable derivation record.
        """
        if not self.ghost_verified:
            if not self.verify_ghost_identities():
                return {"ok": False, "reason": "ghost identities failed"}
        return {
            "ok": True,
            "ghost_identities": "verified by independent re-expansion",
            "composite_laws": "forced by ghost injectivity over Z[vars]",
        }


def structure_polys(p, n, budget=DEFAULT_WORK_BUDGET):
    """Construct (and cache) the structure polynomials for (p, n).

    Raises NonPrime/BudgetExceeded on bad input; InexactDivision can only
    fire on an internal bug.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("length must be >= 1")
    if p**n * n > budget:
        raise BudgetExceeded(f"p^n*n = {p ** n * n} exceeds work budget {budget}")
    key = (p, n)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    nv2 = 2 * n
    S, M, N = [], [], []
    # Incrementally maintained powers: pow_s[j] = S_j ** p^(i-j) at level i.
    pow_s, pow_m, pow_n = [], [], []
    for i in range(n):
        for j in range(i):
            pow_s[j] = pow_s[j].pow(p)
            pow_m[j] = pow_m[j].pow(p)
            pow_n[j] = pow_n[j].pow(p)
        wx = ghost_poly(p, i, nv2, 0)
        wy = ghost_poly(p, i, nv2, n)
        acc = wx + wy
        for j in range(i):
            acc = acc - pow_s[j].scale(p**j)
        s_i = acc.exact_div_int(p**i)
        S.append(s_i)
        pow_s.append(s_i)

        acc = wx * wy
        for j in range(i):
            acc = acc - pow_m[j].scale(p**j)
        m_i = acc.exact_div_int(p**i)
        M.append(m_i)
        pow_m.append(m_i)

        wx1 = ghost_poly(p, i, n, 0)
        acc = -wx1
        for j in range(i):
            acc = acc - pow_n[j].scale(p**j)
        n_i = acc.exact_div_int(p**i)
        N.append(n_i)
        pow_n.append(n_i)

    sp = WittStructurePolys(p, n, S, M, N)
    if p != 2:
        # For odd p negation is componentwise; a free cross-check.
        for i in range(n):
            assert sp.N[i] == IntPoly.var(n, i, coef=-1), "negation law mismatch"
    _cache[key] = sp
    return sp


def eval_structure_poly(poly, ring, xcomps, ycomps=None):
    """Evaluate a structure polynomial at Witt components over a finite ring.

    Integer coefficients are mapped through Z -> ring; this is the reference
    evaluation path against which the lifted-ghost kernel is tested.
    """
    args = list(xcomps) + (list(ycomps) if ycomps is not None else [])
    total = ring.zero
    powcache = {}
    for key, c in poly.terms.items():
        val = ring.from_int(c)
        k = key
        v = 0
        while k:
            e = k & 0xFFFF
            if e:
                pw = powcache.get((v, e))
                if pw is None:
                    pw = ring.pow(args[v], e)
                    powcache[(v, e)] = pw
                val = ring.mul(val, pw)
            k >>= 16
            v += 1
        total = ring.add(total, val)
    return total
