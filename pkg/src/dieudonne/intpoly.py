"""Exact multivariate polynomials over the integers.

Monomials are packed into a single Python int, 16 bits per variable, so that
multiplying monomials is one integer addition.  Coefficients are arbitrary
precision.  This is all the symbolic machinery the Witt structure
polynomials need; no external CAS is involved, so every division can be
checked exactly.
"""

from __future__ import annotations

from .errors import InexactDivision

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1


def pack_exps(exps):
    key = 0
    for v, e in enumerate(exps):
        if e:
            key |= e << (EXP_BITS * v)
    return key


def unpack_exps(key, nvars):
    return tuple((key >> (EXP_BITS * v)) & EXP_MASK for v in range(nvars))


class IntPoly:
    """Polynomial in ``nvars`` variables with int coefficients.

    Instances are immutable in spirit; all operations return new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = dict(terms) if terms else {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {0: c} if c else None)

    @classmethod
    def var(cls, nvars, v, exp=1, coef=1):
        if not 0 <= v < nvars:
            raise ValueError("variable index out of range")
        return cls(nvars, {pack_exps([0] * v + [exp]): coef})

    # -- queries ---------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, IntPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def max_var_exp(self):
        best = 0
        for key in self.terms:
            k = key
            while k:
                best = max(best, k & EXP_MASK)
                k >>= EXP_BITS
        return best

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return IntPoly(self.nvars, out)

    def __neg__(self):
        return IntPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return IntPoly(self.nvars)
        return IntPoly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if len(self.terms) > len(other.terms):
            self, other = other, self
        # Guard against exponent overflow in the packed representation.
        if self.max_var_exp() + other.max_var_exp() > EXP_MASK:
            raise OverflowError("monomial exponent exceeds packed width")
        out = {}
        get = out.get
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return IntPoly(self.nvars, out)

    def pow(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly.const(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def exact_div_int(self, d):
        """Divide every coefficient by ``d``; raise if any division is inexact."""
        out = {}
        for k, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise InexactDivision(f"coefficient {c} not divisible by {d}")
            out[k] = q
        return IntPoly(self.nvars, out)

    # -- substitution ------------------------------------------------------------

    def remap(self, var_map, new_nvars):
        """Rename variable ``v`` to ``var_map[v]``; exponents are preserved."""
        out = {}
        for key, c in self.terms.items():
            nk = 0
            k = key
            v = 0
            while k:
                e = k & EXP_MASK
                if e:
                    nk |= e << (EXP_BITS * var_map[v])
                k >>= EXP_BITS
                v += 1
            out[nk] = out.get(nk, 0) + c
        return IntPoly(new_nvars, {k: c for k, c in out.items() if c})

    def subst(self, args, cache=None):
        """Evaluate at polynomial arguments ``args`` (one per variable).

        All arguments must share a variable space; powers of arguments are
        memoised in ``cache`` (keyed by (arg index, exponent)) so repeated
        substitutions into a family of polynomials stay affordable.
        """
        if len(args) != self.nvars:
            raise ValueError("argument count mismatch")
        if cache is None:
            cache = {}
        tgt = args[0].nvars if args else 0
        acc = IntPoly(tgt)
        for key, c in self.terms.items():
            prod = IntPoly.const(tgt, c)
            k = key
            v = 0
            while k:
                e = k & EXP_MASK
                if e:
                    pw = cache.get((v, e))
                    if pw is None:
                        pw = args[v].pow(e)
                        cache[(v, e)] = pw
                    prod = prod * pw
                k >>= EXP_BITS
                v += 1
            acc = acc + prod
        return acc

    def eval_int(self, point):
        """Evaluate at an integer point (used by sanity tests)."""
        total = 0
        for key, c in self.terms.items():
            val = c
            k = key
            v = 0
            while k:
                e = k & EXP_MASK
                if e:
                    val *= point[v] ** e
                k >>= EXP_BITS
                v += 1
            total += val
        return total

    # -- rendering ----------------------------------------------------------------

    def render(self, names):
        if not self.terms:
            return "0"
        items = sorted(
            (unpack_exps(k, self.nvars), c) for k, c in self.terms.items()
        )
        parts = []
        for exps, c in items:
            factors = []
            if c != 1 or not any(exps):
                factors.append(str(c))
            for v, e in enumerate(exps):
                if e == 1:
                    factors.append(names[v])
                elif e > 1:
                    factors.append(f"{names[v]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        names = [f"v{i}" for i in range(self.nvars)]
        return f"IntPoly({self.render(names)})"
