"""Univariate polynomials over GF(2^n), factorization, and extensions.

Polynomials are little-endian lists of int coefficients (index = degree),
always kept trimmed (no trailing zeros); the zero polynomial is [].  The
factorization stack is squarefree decomposition, distinct-degree splitting,
and char-2 Cantor-Zassenhaus with the trace map, seeded deterministically
from the input so repeated runs factor identically.

ExtField wraps the quotient GF(2^n)[y]/(p) for irreducible p, which is how
algebraic points over extensions are handled without re-embedding them into
a canonical GF(2^(n*deg p)).
"""

from __future__ import annotations

import random

from .gf2e import FieldCtx, FieldError

Poly = list  # list[int], little-endian coefficients


# ----------------------------------------------------------------------
# Basic arithmetic
# ----------------------------------------------------------------------

def ptrim(f: Poly) -> Poly:
    while f and f[-1] == 0:
        f.pop()
    return f


def pdeg(f: Poly) -> int:
    return len(f) - 1


def padd(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return ptrim(out)


def pscale(ctx: FieldCtx, f: Poly, c: int) -> Poly:
    if c == 0:
        return []
    if c == 1:
        return list(f)
    mul = ctx.mul
    return [mul(a, c) for a in f]


def pmul(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    mul = ctx.mul
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] ^= mul(a, b)
    return ptrim(out)


def pmul_many(ctx: FieldCtx, fs) -> Poly:
    out = [1]
    for f in fs:
        out = pmul(ctx, out, f)
    return out


def pdivmod(ctx: FieldCtx, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = pdeg(g)
    if pdeg(f) < dg:
        return [], ptrim(f)
    inv_lead = ctx.inv(g[-1])
    quot = [0] * (pdeg(f) - dg + 1)
    mul = ctx.mul
    while len(f) - 1 >= dg and f:
        k = len(f) - 1 - dg
        c = mul(f[-1], inv_lead)
        quot[k] = c
        for i, b in enumerate(g):
            if b:
                f[i + k] ^= mul(c, b)
        ptrim(f)
    return ptrim(quot), f


def pmod(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    return pdivmod(ctx, f, g)[1]


def pmonic(ctx: FieldCtx, f: Poly) -> Poly:
    if not f or f[-1] == 1:
        return list(f)
    return pscale(ctx, f, ctx.inv(f[-1]))


def pgcd(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    f, g = list(f), list(g)
    while g:
        f, g = g, pmod(ctx, f, g)
    return pmonic(ctx, f)


def pgcd_many(ctx: FieldCtx, fs) -> Poly:
    out: Poly = []
    for f in fs:
        out = pgcd(ctx, out, f) if out else pmonic(ctx, list(f))
        if out == [1]:
            break
    return out


def pderiv(f: Poly) -> Poly:
    # Characteristic 2: even-degree terms vanish.
    return ptrim([f[i] if i % 2 == 1 else 0 for i in range(1, len(f))])


def peval(ctx: FieldCtx, f: Poly, x: int) -> int:
    acc = 0
    mul = ctx.mul
    for c in reversed(f):
        acc = mul(acc, x) ^ c
    return acc


def ppow_mod(ctx: FieldCtx, f: Poly, k: int, m: Poly) -> Poly:
    r = [1]
    f = pmod(ctx, f, m)
    while k:
        if k & 1:
            r = pmod(ctx, pmul(ctx, r, f), m)
        f = pmod(ctx, pmul(ctx, f, f), m)
        k >>= 1
    return r


def psqr_free_part_sqrt(ctx: FieldCtx, f: Poly) -> Poly:
    """Given f with f' = 0 (only even exponents), return g with g^2 = f."""
    return ptrim([ctx.sqrt(f[i]) for i in range(0, len(f), 2)])


# ----------------------------------------------------------------------
# Factorization
# ----------------------------------------------------------------------

def squarefree_decomposition(ctx: FieldCtx, f: Poly) -> list[tuple[Poly, int]]:
    """Return [(g_i, m_i)] with f = lc * prod g_i^(m_i), g_i monic squarefree
    and pairwise coprime, m_i strictly increasing is not guaranteed but the
    list is sorted by multiplicity."""
    f = pmonic(ctx, f)
    if pdeg(f) <= 0:
        return []
    out: dict[int, Poly] = {}

    def accumulate(g: Poly, mult: int) -> None:
        if pdeg(g) > 0:
            out[mult] = pmul(ctx, out[mult], g) if mult in out else g

    def recurse(f: Poly, outer: int) -> None:
        df = pderiv(f)
        if not df:
            recurse(psqr_free_part_sqrt(ctx, f), outer * 2)
            return
        c = pgcd(ctx, f, df)
        w = pdivmod(ctx, f, c)[0]
        i = 1
        while pdeg(w) > 0:
            y = pgcd(ctx, w, c)
            z = pdivmod(ctx, w, y)[0]
            accumulate(z, i * outer)
            w = y
            c = pdivmod(ctx, c, y)[0]
            i += 1
        if pdeg(c) > 0:
            recurse(psqr_free_part_sqrt(ctx, c), outer * 2)

    recurse(f, 1)
    return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])


def distinct_degree_split(ctx: FieldCtx, f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into products of irreducibles of equal degree.

    Returns [(product, degree)] with degrees increasing.
    """
    out = []
    x = [0, 1]
    h = list(x)
    d = 0
    while pdeg(f) > 0:
        d += 1
        if 2 * d > pdeg(f):
            out.append((f, pdeg(f)))
            break
        h = ppow_mod(ctx, h, ctx.order, f)
        g = pgcd(ctx, f, padd(h, x))
        if pdeg(g) > 0:
            out.append((g, d))
            f = pdivmod(ctx, f, g)[0]
            h = pmod(ctx, h, f)
    return out


def _trace_map(ctx: FieldCtx, h: Poly, absdeg: int, f: Poly) -> Poly:
    """h + h^2 + h^4 + ... + h^(2^(absdeg-1)) mod f (absolute trace to GF(2))."""
    acc = pmod(ctx, h, f)
    term = acc
    for _ in range(absdeg - 1):
        term = pmod(ctx, pmul(ctx, term, term), f)
        acc = padd(acc, term)
    return acc


def equal_degree_factor(ctx: FieldCtx, f: Poly, d: int) -> list[Poly]:
    """Cantor-Zassenhaus (char 2) on a squarefree product of degree-d irreducibles."""
    n_factors = pdeg(f) // d
    if n_factors == 1:
        return [pmonic(ctx, f)]
    # Int-only seed: stable across processes (no PYTHONHASHSEED dependence).
    seed = hash((0xEDF, ctx.n, ctx.modulus, d) + tuple(f))
    rng = random.Random(seed)
    absdeg = ctx.n * d
    work = [pmonic(ctx, f)]
    done: list[Poly] = []
    while work:
        g = work.pop()
        if pdeg(g) == d:
            done.append(g)
            continue
        while True:
            h = [rng.randrange(ctx.order) for _ in range(pdeg(g))]
            ptrim(h)
            if pdeg(h) < 1:
                continue
            t = _trace_map(ctx, h, absdeg, g)
            u = pgcd(ctx, g, t)
            if 0 < pdeg(u) < pdeg(g):
                work.append(u)
                work.append(pdivmod(ctx, g, u)[0])
                break
    done.sort()
    return done


def factor(ctx: FieldCtx, f: Poly) -> list[tuple[Poly, int]]:
    """Full factorization into monic irreducibles: [(g, multiplicity)].

    Sorted by (degree, coefficients) for deterministic output.  The leading
    coefficient of f is dropped (callers compare zero sets, not scalars).
    """
    out: list[tuple[Poly, int]] = []
    for g, mult in squarefree_decomposition(ctx, f):
        for h, d in distinct_degree_split(ctx, g):
            for irr in equal_degree_factor(ctx, h, d):
                out.append((irr, mult))
    out.sort(key=lambda t: (pdeg(t[0]), t[0]))
    return out


def roots(ctx: FieldCtx, f: Poly) -> list[tuple[int, int]]:
    """Rational roots with multiplicities, sorted by root value."""
    out = []
    for g, mult in factor(ctx, f):
        if pdeg(g) == 1:
            out.append((g[0], mult))  # monic x + c has root c (char 2)
    out.sort()
    return out


def is_irreducible(ctx: FieldCtx, f: Poly) -> bool:
    if pdeg(f) < 1:
        return False
    if pdeg(f) == 1:
        return True
    fac = factor(ctx, f)
    return len(fac) == 1 and fac[0][1] == 1


# ----------------------------------------------------------------------
# Extension fields GF(2^n)[y]/(p)
# ----------------------------------------------------------------------

class ExtField:
    """The field GF(2^n)[y]/(p) for p irreducible over the base context.

    Elements are tuples of base-field ints of length deg(p).  Only the
    operations needed by the singularity certifier live here.
    """

    def __init__(self, ctx: FieldCtx, minpoly: Poly):
        self.ctx = ctx
        self.minpoly = pmonic(ctx, minpoly)
        self.deg = pdeg(self.minpoly)
        if self.deg < 1:
            raise FieldError("extension by a constant polynomial")
        self.zero = (0,) * self.deg
        self.one = tuple([1] + [0] * (self.deg - 1))
        self.gen = tuple([0, 1] + [0] * (self.deg - 2)) if self.deg > 1 else \
            (self.minpoly[0],)

    def embed(self, c: int) -> tuple:
        return tuple([c] + [0] * (self.deg - 1))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x ^ y for x, y in zip(a, b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        prod = pmul(self.ctx, list(a), list(b))
        rem = pmod(self.ctx, prod, self.minpoly)
        return tuple(rem + [0] * (self.deg - len(rem)))

    def inv(self, a: tuple) -> tuple:
        if not any(a):
            raise ZeroDivisionError("inverse of zero in extension field")
        # Extended Euclid in base[y].
        r0, r1 = self.minpoly, ptrim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = pdivmod(self.ctx, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, padd(s0, pmul(self.ctx, q, s1))
        c = self.ctx.inv(r0[-1])  # r0 is a nonzero constant gcd times lc
        if pdeg(r0) != 0:
            raise FieldError("minpoly not irreducible: inversion failed")
        s0 = pscale(self.ctx, s0, c)
        s0 = pmod(self.ctx, s0, self.minpoly)
        return tuple(s0 + [0] * (self.deg - len(s0)))

    def is_zero(self, a: tuple) -> bool:
        return not any(a)


def ext_poly_trim(f: list) -> list:
    while f and not any(f[-1]):
        f.pop()
    return f


def ext_poly_mod(ext: ExtField, f: list, g: list) -> list:
    f = list(f)
    dg = len(g) - 1
    inv_lead = ext.inv(g[-1])
    while len(f) - 1 >= dg and f:
        c = ext.mul(f[-1], inv_lead)
        k = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[i + k] = ext.add(f[i + k], ext.mul(c, b))
        ext_poly_trim(f)
    return f


def ext_poly_gcd(ext: ExtField, f: list, g: list) -> list:
    f, g = ext_poly_trim(list(f)), ext_poly_trim(list(g))
    while g:
        f, g = g, ext_poly_mod(ext, f, g)
    if f:
        inv_lead = ext.inv(f[-1])
        f = [ext.mul(c, inv_lead) for c in f]
    return f


# ----------------------------------------------------------------------
# Bivariate elimination (for the singularity certifier)
#
# A bivariate polynomial in (y, z) is represented as a list indexed by
# z-degree whose entries are univariate Polys in y.
# ----------------------------------------------------------------------

BiPoly = list  # list[Poly], index = z-degree


def bi_trim(f: BiPoly) -> BiPoly:
    while f and not f[-1]:
        f.pop()
    return f


def bi_is_zero(f: BiPoly) -> bool:
    return not f


def bi_degz(f: BiPoly) -> int:
    return len(f) - 1


def bi_content(ctx: FieldCtx, f: BiPoly) -> Poly:
    return pgcd_many(ctx, (c for c in f if c))


def bi_primitive(ctx: FieldCtx, f: BiPoly) -> tuple[BiPoly, Poly]:
    """Split off the y-content: f = content * primitive."""
    cont = bi_content(ctx, f)
    if not cont or cont == [1]:
        return [list(c) for c in f], [1]
    prim = [pdivmod(ctx, c, cont)[0] if c else [] for c in f]
    return prim, cont


def bi_scale(ctx: FieldCtx, f: BiPoly, c: Poly) -> BiPoly:
    return bi_trim([pmul(ctx, coeff, c) for coeff in f])


def bi_pseudo_rem(ctx: FieldCtx, f: BiPoly, g: BiPoly) -> BiPoly:
    """Pseudo-remainder of f by g in (k[y])[z]; stays in the ideal (f, g)."""
    f = [list(c) for c in f]
    dg = bi_degz(g)
    lead = g[-1]
    while not bi_is_zero(f) and bi_degz(f) >= dg:
        k = bi_degz(f) - dg
        top = f[-1]
        f = bi_scale(ctx, f, lead)
        if bi_is_zero(f):
            break
        for i in range(dg + 1):
            if g[i]:
                f[i + k] = padd(f[i + k], pmul(ctx, top, g[i]))
        bi_trim(f)
    return f


def bi_eliminate_z(ctx: FieldCtx, f: BiPoly, g: BiPoly):
    """Eliminate z from the pair (f, g) by a content-stripped pseudo-PRS.

    Returns (candidates, shared) where candidates is a univariate Poly in y
    whose roots contain every y0 admitting a common (y0, z0) zero of f and g
    over the algebraic closure, and shared is a BiPoly of positive z-degree
    when the pair has a common factor there (in which case candidates is not
    a complete bound and the caller must treat the pair as degenerate).
    """
    collected: Poly = [1]

    def mix(c: Poly) -> None:
        nonlocal collected
        if c and pdeg(c) > 0:
            collected = pmul(ctx, collected, c)

    a, ca = bi_primitive(ctx, bi_trim([list(c) for c in f]))
    b, cb = bi_primitive(ctx, bi_trim([list(c) for c in g]))
    mix(ca)
    mix(cb)
    if bi_is_zero(a) or bi_is_zero(b):
        return None, None  # a zero member: caller filters these out first
    if bi_degz(a) < bi_degz(b):
        a, b = b, a
    while True:
        if bi_degz(b) == 0:
            # b is a nonzero y-polynomial: it bounds y directly.
            mix(b[0])
            return collected if pdeg(collected) >= 0 else [1], None
        r = bi_pseudo_rem(ctx, a, b)
        if bi_is_zero(r):
            return collected, b  # common factor of positive z-degree
        r, cr = bi_primitive(ctx, r)
        mix(cr)
        a, b = b, r
        if bi_degz(a) < bi_degz(b):
            a, b = b, a
