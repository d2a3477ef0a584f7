"""Plane curves over GF(2^n) as sparse homogeneous trivariate polynomials.

Provides the two curve families under study (a degree q+1 family built from
a product over F_q of linear forms, and a quartic family), plus smoothness
certification by elimination, tangent lines, intersection multiplicities
with lines, and rational point enumeration.

Monomial maps are dicts {(a, b, c): coefficient} with a + b + c equal to
the degree.  Curves are compared projectively (up to a nonzero scalar) by
normalizing the coefficient of the graded-lex greatest monomial to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import polyring as pr
from .gf2e import FieldCtx, FieldError, elem_to_json, elem_from_json
from .projgeom import ProjLine, ProjMap, ProjPoint


class CurveError(ValueError):
    """Base class for curve-level errors."""


class BadLambda(CurveError):
    """The family parameter is 0 or 1, which the constructors exclude."""


class SmallQ(CurveError):
    """The designated subfield is too small for the family (q >= 4)."""


class NotOnCurve(CurveError):
    """A point expected on the curve is not."""


class SingularPoint(CurveError):
    """All partial derivatives vanish at the point."""


class LineInCurve(CurveError):
    """The line is a component of the curve."""


class PointNotOnLine(CurveError):
    """The base point of a restriction is off the line."""


Monomials = dict  # {(a, b, c): int}


def _monomial_key(exp):
    return exp  # lex on (a, b, c); grading is constant on homogeneous input


class PlaneCurve:
    """A homogeneous trivariate polynomial with genus metadata.

    The genus field is (d-1)(d-2)/2, valid once smoothness is certified.
    lam records the family parameter used at construction (None for ad-hoc
    curves); family is "star", "doublestar", or None and enables fast
    structure-aware stabilizer checks.
    """

    def __init__(self, ctx: FieldCtx, monomials: Monomials, lam: int | None = None,
                 family: str | None = None, star_q: int | None = None):
        monomials = {exp: c for exp, c in monomials.items() if c}
        if not monomials:
            raise CurveError("zero polynomial does not define a curve")
        degrees = {sum(exp) for exp in monomials}
        if len(degrees) != 1:
            raise CurveError(f"non-homogeneous monomial set: degrees {sorted(degrees)}")
        self.ctx = ctx
        self.degree = degrees.pop()
        self.monomials = monomials
        self.lam = lam
        self.family = family
        self.star_q = star_q
        self.genus = (self.degree - 1) * (self.degree - 2) // 2

    # -- canonical form -------------------------------------------------

    def leading_monomial(self):
        return max(self.monomials, key=_monomial_key)

    def normalized(self) -> Monomials:
        lead = self.monomials[self.leading_monomial()]
        if lead == 1:
            return dict(self.monomials)
        inv = self.ctx.inv(lead)
        return {exp: self.ctx.mul(inv, c) for exp, c in self.monomials.items()}

    def __eq__(self, other) -> bool:
        return (isinstance(other, PlaneCurve) and self.ctx == other.ctx
                and self.degree == other.degree
                and self.normalized() == other.normalized())

    def __hash__(self):
        return hash((self.ctx, self.degree, frozenset(self.normalized().items())))

    def __repr__(self) -> str:
        return (f"PlaneCurve(degree={self.degree}, genus={self.genus}, "
                f"{len(self.monomials)} monomials)")

    # -- evaluation -------------------------------------------------------

    def evaluate(self, coords) -> int:
        ctx = self.ctx
        x, y, z = coords
        d = self.degree
        px = _powers(ctx, x, d)
        py = _powers(ctx, y, d)
        pz = _powers(ctx, z, d)
        mul = ctx.mul
        acc = 0
        for (a, b, c), coef in self.monomials.items():
            acc ^= mul(coef, mul(px[a], mul(py[b], pz[c])))
        return acc

    def contains(self, p: ProjPoint) -> bool:
        return self.evaluate(p.coords) == 0

    def partial(self, var: int) -> Monomials:
        """Formal partial derivative (char 2: even exponents drop out)."""
        out: Monomials = {}
        for exp, coef in self.monomials.items():
            if exp[var] % 2 == 1:
                nexp = list(exp)
                nexp[var] -= 1
                out[tuple(nexp)] = out.get(tuple(nexp), 0) ^ coef
        return {e: c for e, c in out.items() if c}

    def gradient_at(self, coords) -> tuple[int, int, int]:
        vals = []
        for var in range(3):
            part = self.partial(var)
            vals.append(_eval_monomials(self.ctx, part, coords))
        return tuple(vals)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        mono = [{"exp": list(exp), "coef": elem_to_json(c)}
                for exp, c in sorted(self.monomials.items(),
                                     key=lambda t: _monomial_key(t[0]), reverse=True)]
        return {"field": self.ctx.to_json(), "degree": self.degree,
                "monomials": mono}

    @staticmethod
    def from_json(obj: dict) -> "PlaneCurve":
        ctx = FieldCtx.from_json(obj["field"])
        mono = {tuple(m["exp"]): elem_from_json(m["coef"], ctx)
                for m in obj["monomials"]}
        curve = PlaneCurve(ctx, mono)
        if curve.degree != obj["degree"]:
            raise CurveError("degree field disagrees with monomials")
        return curve


def _powers(ctx: FieldCtx, x: int, d: int) -> list[int]:
    out = [1] * (d + 1)
    for i in range(1, d + 1):
        out[i] = ctx.mul(out[i - 1], x)
    return out


def _eval_monomials(ctx: FieldCtx, monomials: Monomials, coords) -> int:
    if not monomials:
        return 0
    d = max(sum(e) for e in monomials)
    px = _powers(ctx, coords[0], d)
    py = _powers(ctx, coords[1], d)
    pz = _powers(ctx, coords[2], d)
    mul = ctx.mul
    acc = 0
    for (a, b, c), coef in monomials.items():
        acc ^= mul(coef, mul(px[a], mul(py[b], pz[c])))
    return acc


# ----------------------------------------------------------------------
# Sparse trivariate helpers
# ----------------------------------------------------------------------

def poly_mul(ctx: FieldCtx, f: Monomials, g: Monomials) -> Monomials:
    out: Monomials = {}
    mul = ctx.mul
    for (a1, b1, c1), x in f.items():
        for (a2, b2, c2), y in g.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = out.get(key, 0) ^ mul(x, y)
    return {e: c for e, c in out.items() if c}


def poly_add(f: Monomials, g: Monomials) -> Monomials:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) ^ c
    return {e: c for e, c in out.items() if c}


def linear_form(coeffs) -> Monomials:
    out: Monomials = {}
    for var, c in enumerate(coeffs):
        if c:
            exp = [0, 0, 0]
            exp[var] = 1
            out[tuple(exp)] = c
    return out


def poly_pow_linear(ctx: FieldCtx, coeffs, k: int) -> Monomials:
    """(aX + bY + cZ)^k, exploiting (l)^(2^j) having at most 3 terms."""
    if k == 0:
        return {(0, 0, 0): 1}
    sq = linear_form(coeffs)
    out = None
    while k:
        if k & 1:
            out = sq if out is None else poly_mul(ctx, out, sq)
        k >>= 1
        if k:
            sq = {tuple(2 * e for e in exp): ctx.mul(c, c) for exp, c in sq.items()}
    return out


def substitute(curve: PlaneCurve, m: ProjMap) -> PlaneCurve:
    """The curve with polynomial F(m * (X,Y,Z)) (composition with m)."""
    ctx = curve.ctx
    rows = [m.matrix[0:3], m.matrix[3:6], m.matrix[6:9]]
    power_cache: dict[tuple[int, int], Monomials] = {}

    def row_power(i: int, k: int) -> Monomials:
        key = (i, k)
        if key not in power_cache:
            power_cache[key] = poly_pow_linear(ctx, rows[i], k)
        return power_cache[key]

    total: Monomials = {}
    for (a, b, c), coef in curve.monomials.items():
        term = {(0, 0, 0): coef}
        for i, k in ((0, a), (1, b), (2, c)):
            if k:
                term = poly_mul(ctx, term, row_power(i, k))
        total = poly_add(total, term)
    return PlaneCurve(ctx, total, lam=curve.lam)


def transform_curve(curve: PlaneCurve, m: ProjMap) -> PlaneCurve:
    """Image of the curve under m: P on C iff m(P) on transform_curve(C, m).

    The image is a generic curve (no family tag): its defining polynomial is
    not in family shape in the original coordinates.
    """
    return substitute(curve, m.inverse())


def stabilizes(curve: PlaneCurve, m: ProjMap) -> bool:
    """Exact test that m maps the curve to itself (up to scalar)."""
    if curve.family == "star" and curve.lam not in (None, 0):
        fast = _star_stabilizes(curve, m)
        if fast is not None:
            return fast
    image = substitute(curve, m)
    return image == curve


def _star_stabilizes(curve: PlaneCurve, m: ProjMap) -> bool | None:
    """Factor-multiset test for the product-of-lines family.

    Valid because the family polynomial is Z * prod(linear forms) plus a
    Y-power term: any stabilizer fixes the line Y=0, under which the product
    part must map to a scalar multiple of itself, forcing a permutation of
    the linear factors.  Returns None when the middle row is not a Y-scaling
    (then the generic substitution test applies).
    """
    ctx = curve.ctx
    q = curve.star_q
    mat = m.matrix
    if mat[3] != 0 or mat[5] != 0 or mat[4] == 0:
        return None
    beta = mat[4]
    factors = _star_factor_set(ctx, q)
    scalar = 1
    seen = []
    for u in factors:
        v = (
            ctx.mul(u[0], mat[0]) ^ ctx.mul(u[1], mat[3]) ^ ctx.mul(u[2], mat[6]),
            ctx.mul(u[0], mat[1]) ^ ctx.mul(u[1], mat[4]) ^ ctx.mul(u[2], mat[7]),
            ctx.mul(u[0], mat[2]) ^ ctx.mul(u[1], mat[5]) ^ ctx.mul(u[2], mat[8]),
        )
        lead = next((c for c in v if c), 0)
        if lead == 0:
            return False
        scalar = ctx.mul(scalar, lead)
        inv = ctx.inv(lead)
        seen.append(tuple(ctx.mul(inv, c) for c in v))
    if sorted(seen) != sorted(factors):
        return False
    return scalar == ctx.pow(beta, q + 1)


def _star_factor_set(ctx: FieldCtx, q: int):
    """Normalized linear factors of the product part: Z and X + aY + a^2 Z."""
    e = q.bit_length() - 1
    out = [(0, 0, 1)]
    for alpha in ctx.subfield_elements(e):
        out.append((1, alpha, ctx.mul(alpha, alpha)))
    return out


# ----------------------------------------------------------------------
# Family constructors
# ----------------------------------------------------------------------

def build_star(ctx: FieldCtx, lam: int, allow_special_lambda: bool = False) -> PlaneCurve:
    """The degree q+1 family: Z * prod_{a in F_q} (X + aY + a^2 Z) + lam * Y^(q+1).

    q = 2^e comes from the context's designated subfield; genus q(q-1)/2.
    """
    q = ctx.q
    if q < 4:
        raise SmallQ(f"family needs q >= 4, got q={q}")
    if lam in (0, 1) and not allow_special_lambda:
        raise BadLambda(f"lambda={lam} is excluded")
    prod: Monomials = {(0, 0, 1): 1}
    for alpha in ctx.subfield_elements(ctx.e):
        factor = linear_form((1, alpha, ctx.mul(alpha, alpha)))
        prod = poly_mul(ctx, prod, factor)
    total = poly_add(prod, {(0, q + 1, 0): lam})
    return PlaneCurve(ctx, total, lam=lam, family="star", star_q=q)


def build_doublestar(ctx: FieldCtx, lam: int, allow_special_lambda: bool = False) -> PlaneCurve:
    """The quartic family: U^2 + U*V + V^2 + lam*Z^4 with U = X^2+XZ, V = Y^2+YZ."""
    if lam in (0, 1) and not allow_special_lambda:
        raise BadLambda(f"lambda={lam} is excluded")
    u = {(2, 0, 0): 1, (1, 0, 1): 1}
    v = {(0, 2, 0): 1, (0, 1, 1): 1}
    total = poly_add(poly_mul(ctx, u, u), poly_mul(ctx, u, v))
    total = poly_add(total, poly_mul(ctx, v, v))
    total = poly_add(total, {(0, 0, 4): lam})
    return PlaneCurve(ctx, total, lam=lam, family="doublestar")


# ----------------------------------------------------------------------
# Tangency, restriction to lines, intersection multiplicity
# ----------------------------------------------------------------------

def tangent_line(curve: PlaneCurve, p: ProjPoint) -> ProjLine:
    if not curve.contains(p):
        raise NotOnCurve(f"{p} is not on the curve")
    grad = curve.gradient_at(p.coords)
    if not any(grad):
        raise SingularPoint(f"all partials vanish at {p}")
    return ProjLine.make(curve.ctx, *grad)


def line_basis(line: ProjLine) -> tuple[tuple, tuple]:
    """Two independent points spanning the line, deterministically."""
    a, b, c = line.coeffs
    ctx = line.ctx
    if a == 0 and b == 0:
        return (1, 0, 0), (0, 1, 0)
    if a == 0:
        # bY + cZ = 0: points (1,0,0) and (0, c/b... ) -- take (0, c, b)*inv
        return (1, 0, 0), (0, c, b)
    # a != 0: kernel basis (b, a, 0), (c, 0, a)
    return (b, a, 0), (c, 0, a)


def restrict_to_line(curve: PlaneCurve, line: ProjLine,
                     base: ProjPoint | None = None):
    """Restrict the curve to a parametrized line.

    Returns (coeffs, A, B) where the restriction is the binary form
    sum_j coeffs[j] * s^(d-j) * t^j under the parametrization s*A + t*B.
    If base is given it becomes A (parameter (1:0)).
    """
    ctx = curve.ctx
    v1, v2 = line_basis(line)
    if base is not None:
        if not base.on_line(line):
            raise PointNotOnLine(f"{base} not on {line}")
        A = base.coords
        nb = ProjPoint.make(ctx, *v1)
        B = v2 if nb == base else v1
    else:
        A, B = v1, v2
    d = curve.degree
    coeffs = [0] * (d + 1)
    mul = ctx.mul
    cache: dict[tuple, list[int]] = {}

    def pow_lin(u: int, v: int, k: int) -> list[int]:
        key = (u, v, k)
        if key not in cache:
            out = [1]
            for _ in range(k):
                nxt = [0] * (len(out) + 1)
                for i, cc in enumerate(out):
                    if cc:
                        nxt[i] ^= mul(cc, u)
                        nxt[i + 1] ^= mul(cc, v)
                out = nxt
            cache[key] = out
        return cache[key]

    for (a, b, c), coef in curve.monomials.items():
        pa = pow_lin(A[0], B[0], a)
        pb = pow_lin(A[1], B[1], b)
        pc = pow_lin(A[2], B[2], c)
        # Convolve the three binary forms and add coef times the result.
        conv = [0] * (a + b + c + 1)
        tmp = [0] * (a + b + 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    if y:
                        tmp[i + j] ^= mul(x, y)
        for i, x in enumerate(tmp):
            if x:
                for j, y in enumerate(pc):
                    if y:
                        conv[i + j] ^= mul(x, y)
        for j, x in enumerate(conv):
            if x:
                coeffs[j] ^= mul(coef, x)
    return coeffs, A, B


def intersection_mult(curve: PlaneCurve, line: ProjLine, p: ProjPoint) -> int:
    """Order of vanishing of the curve along the line at p.

    0 iff p is not on (curve intersect line); the line must not be a
    component of the curve.
    """
    if not p.on_line(line):
        raise PointNotOnLine(f"{p} not on {line}")
    coeffs, _, _ = restrict_to_line(curve, line, base=p)
    if not any(coeffs):
        raise LineInCurve(f"{line} is a component of the curve")
    for j, c in enumerate(coeffs):
        if c:
            return j
    raise AssertionError("unreachable")


def line_intersections(curve: PlaneCurve, line: ProjLine):
    """Full intersection divisor of the curve with the line.

    Returns (rational, residual) where rational is a list of
    (ProjPoint, multiplicity) for ambient-rational intersection points and
    residual is a list of (irreducible_degree, multiplicity) for conjugate
    clusters defined over proper extensions.  Multiplicities satisfy
    sum(mult) + sum(deg*mult over residual) = degree of the curve (Bezout).
    """
    ctx = curve.ctx
    coeffs, A, B = restrict_to_line(curve, line)
    if not any(coeffs):
        raise LineInCurve(f"{line} is a component of the curve")
    d = curve.degree
    # G(s, t) = sum coeffs[j] s^(d-j) t^j; roots with t != 0 come from the
    # univariate g(u) = G(1, u); the parameter (0:1) (point B) absorbs the
    # degree drop.
    g = list(coeffs)
    pr.ptrim(g)
    rational = []
    residual = []
    mult_at_B = d - pr.pdeg(g)
    if mult_at_B:
        rational.append((ProjPoint.make(ctx, *B), mult_at_B))
    for factor_poly, mult in pr.factor(ctx, g):
        deg = pr.pdeg(factor_poly)
        if deg == 1:
            u = factor_poly[0]
            pt = ProjPoint.make(
                ctx,
                A[0] ^ ctx.mul(u, B[0]),
                A[1] ^ ctx.mul(u, B[1]),
                A[2] ^ ctx.mul(u, B[2]),
            )
            rational.append((pt, mult))
        else:
            residual.append((deg, mult))
    rational.sort(key=lambda t: t[0].coords)
    return rational, residual


# ----------------------------------------------------------------------
# Rational points
# ----------------------------------------------------------------------

def rational_points(curve: PlaneCurve, d: int) -> list[ProjPoint]:
    """All points of the curve rational over GF(2^d), by chart enumeration."""
    ctx = curve.ctx
    sub = ctx.subfield_elements(d)
    out = []
    for y in sub:
        for z in sub:
            if curve.evaluate((1, y, z)) == 0:
                out.append(ProjPoint(ctx, (1, y, z)))
    for z in sub:
        if curve.evaluate((0, 1, z)) == 0:
            out.append(ProjPoint(ctx, (0, 1, z)))
    if curve.evaluate((0, 0, 1)) == 0:
        out.append(ProjPoint(ctx, (0, 0, 1)))
    out.sort(key=lambda p: p.coords)
    return out


def count_points(curve: PlaneCurve, d: int) -> int:
    return len(rational_points(curve, d))


def extend_curve(curve: PlaneCurve, big: FieldCtx) -> PlaneCurve:
    """Base-change the curve along the canonical embedding into a bigger field.

    The big context keeps its own designated subfield; family metadata is
    preserved (the defining shape is unchanged by a subfield embedding).
    """
    from .gf2e import subfield_embedding
    emb = subfield_embedding(curve.ctx, big)
    mono = {exp: emb[c] for exp, c in curve.monomials.items()}
    lam = emb[curve.lam] if curve.lam is not None else None
    return PlaneCurve(big, mono, lam=lam, family=curve.family, star_q=curve.star_q)


# ----------------------------------------------------------------------
# Smoothness certification
# ----------------------------------------------------------------------

@dataclass
class SmoothnessReport:
    smooth: bool
    certification: str  # "resultant-exact" or "bounded-scan"
    witness: dict | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"smooth": self.smooth, "certification": self.certification,
                "witness": self.witness, "notes": self.notes}


EXACT_SMOOTHNESS_DEGREE_CAP = 12


def is_smooth(curve: PlaneCurve, exact: bool | None = None) -> SmoothnessReport:
    """Certify that F, F_X, F_Y, F_Z have no common projective zero.

    The exact path eliminates one variable per affine chart with
    pseudo-resultant sequences, then verifies every candidate over the
    extension field defined by its minimal polynomial, so emptiness is
    certified over the algebraic closure.  Above the degree cap (unless
    forced) a rational-point scan over the ambient field is used instead and
    the report is marked "bounded-scan".
    """
    if exact is None:
        exact = curve.degree <= EXACT_SMOOTHNESS_DEGREE_CAP
    if not exact:
        return _smoothness_scan(curve)

    system_full = [curve.monomials] + [curve.partial(v) for v in range(3)]

    # Chart decomposition by first nonzero coordinate: X=1 (bivariate in
    # Y,Z), then X=0,Y=1 (univariate in Z), then the single point (0:0:1).
    witness = _chart_bivariate(curve.ctx, system_full, chart=0)
    if witness is not None:
        return SmoothnessReport(False, "resultant-exact", witness)
    witness = _chart_univariate(curve.ctx, system_full)
    if witness is not None:
        return SmoothnessReport(False, "resultant-exact", witness)
    if all(_eval_monomials(curve.ctx, s, (0, 0, 1)) == 0 for s in system_full):
        return SmoothnessReport(False, "resultant-exact",
                                {"chart": "point", "point": ["0x0", "0x0", "0x1"]})
    return SmoothnessReport(True, "resultant-exact")


def _smoothness_scan(curve: PlaneCurve) -> SmoothnessReport:
    ctx = curve.ctx
    system = [curve.monomials] + [curve.partial(v) for v in range(3)]
    sub = range(ctx.order)
    for y in sub:
        for z in sub:
            if all(_eval_monomials(ctx, s, (1, y, z)) == 0 for s in system):
                return SmoothnessReport(
                    False, "bounded-scan",
                    {"chart": "X", "point": [hex(1), hex(y), hex(z)]})
    for z in sub:
        if all(_eval_monomials(ctx, s, (0, 1, z)) == 0 for s in system):
            return SmoothnessReport(False, "bounded-scan",
                                    {"chart": "Y", "point": [hex(0), hex(1), hex(z)]})
    if all(_eval_monomials(ctx, s, (0, 0, 1)) == 0 for s in system):
        return SmoothnessReport(False, "bounded-scan",
                                {"chart": "point", "point": ["0x0", "0x0", "0x1"]})
    return SmoothnessReport(
        True, "bounded-scan", None,
        [f"no singular point rational over GF(2^{ctx.n}); "
         "extension points not excluded at this degree"])


def _dehom_bivariate(monomials: Monomials, chart: int):
    """Substitute coordinate `chart` = 1; remaining exponents become (y, z)."""
    out: dict[tuple[int, int], int] = {}
    for (a, b, c), coef in monomials.items():
        exps = [a, b, c]
        exps.pop(chart)
        key = tuple(exps)
        out[key] = out.get(key, 0) ^ coef
    return {k: v for k, v in out.items() if v}


def _to_bipoly(biv: dict) -> pr.BiPoly:
    """dict {(deg_y, deg_z): coef} -> list over z-degree of y-polys."""
    if not biv:
        return []
    dz = max(k[1] for k in biv)
    dy = max(k[0] for k in biv)
    out = [[0] * (dy + 1) for _ in range(dz + 1)]
    for (iy, iz), coef in biv.items():
        out[iz][iy] = coef
    return pr.bi_trim([pr.ptrim(p) for p in out])


def _bi_swap(f: pr.BiPoly) -> pr.BiPoly:
    """Swap the roles of y and z."""
    if not f:
        return []
    dy = max(pr.pdeg(p) for p in f)
    out = [[0] * len(f) for _ in range(dy + 1)]
    for iz, p in enumerate(f):
        for iy, coef in enumerate(p):
            out[iy][iz] = coef
    return pr.bi_trim([pr.ptrim(p) for p in out])


def _specialize_bipoly(ctx: FieldCtx, f: pr.BiPoly, ext: pr.ExtField) -> list:
    """Evaluate the y variable at the extension generator; z-poly over ext."""
    gen = ext.gen
    out = []
    for p in f:
        acc = ext.zero
        for coef in reversed(p):
            acc = ext.add(ext.mul(acc, gen), ext.embed(coef))
        out.append(acc)
    return pr.ext_poly_trim(out)


def _chart_bivariate(ctx: FieldCtx, system_full, chart: int):
    system = [_to_bipoly(_dehom_bivariate(s, chart)) for s in system_full]
    system = [f for f in system if not pr.bi_is_zero(f)]
    if not system:
        return {"chart": _chart_name(chart), "kind": "identically-zero-system"}
    if any(pr.bi_degz(f) == 0 and pr.pdeg(f[0]) == 0 for f in system):
        return None  # a nonzero constant: empty chart
    for direction in ("z", "y"):
        polys = system if direction == "z" else [_bi_swap(f) for f in system]
        result = _eliminate_and_verify(ctx, polys, chart, direction)
        if result is not _INCONCLUSIVE:
            return result
    # Both directions degenerate: the members share factors pairwise. A
    # common factor of the whole system means a singular curve inside it.
    shared = _bivariate_gcd_all(ctx, system)
    if shared is not None and (pr.bi_degz(shared) > 0
                               or pr.pdeg(shared[0]) > 0):
        return {"chart": _chart_name(chart), "kind": "common-curve-factor",
                "z_degree": pr.bi_degz(shared)}
    raise CurveError("degenerate elimination: pairwise shared factors "
                     "without a common system factor")


_INCONCLUSIVE = object()


def _eliminate_and_verify(ctx: FieldCtx, polys, chart: int, direction: str):
    """Candidate y-locus from pairwise elimination, then exact verification.

    Returns None (chart clean), a witness dict, or _INCONCLUSIVE when every
    pair is degenerate in this direction.
    """
    univars = [f[0] for f in polys if pr.bi_degz(f) == 0]
    multis = [f for f in polys if pr.bi_degz(f) > 0]
    cand: pr.Poly = []
    for u in univars:
        cand = pr.pgcd(ctx, cand, u) if cand else pr.pmonic(ctx, list(u))
    if not multis:
        # System is univariate in y: common zeros have the other variable free.
        if cand and pr.pdeg(cand) > 0:
            g, _m = pr.factor(ctx, cand)[0]
            return {"chart": _chart_name(chart), "direction": direction,
                    "kind": "free-variable",
                    "minpoly": [elem_to_json(c) for c in g]}
        return None
    usable = bool(univars)
    for i in range(len(multis)):
        for j in range(i + 1, len(multis)):
            c, sharedf = pr.bi_eliminate_z(ctx, multis[i], multis[j])
            if sharedf is not None:
                continue
            usable = True
            cand = pr.pgcd(ctx, cand, c) if cand else pr.pmonic(ctx, c)
            if cand == [1]:
                return None
    if not usable:
        return _INCONCLUSIVE
    if not cand:
        # No univariate members and every usable pair gave a constant.
        return None
    if pr.pdeg(cand) == 0:
        return None
    for minpoly, _mult in pr.factor(ctx, cand):
        hit = _verify_candidate(ctx, polys, minpoly)
        if hit is not None:
            hit.update({"chart": _chart_name(chart), "direction": direction})
            return hit
    return None


def _verify_candidate(ctx: FieldCtx, polys, minpoly: pr.Poly):
    """Check whether y = (root of minpoly) really extends to a common zero."""
    ext = pr.ExtField(ctx, minpoly)
    specialized = [_specialize_bipoly(ctx, f, ext) for f in polys]
    nonzero = [s for s in specialized if s]
    if not nonzero:
        return {"kind": "free-variable",
                "minpoly": [elem_to_json(c) for c in minpoly]}
    if any(len(s) == 1 for s in nonzero):
        return None  # a nonzero constant kills the chart at this candidate
    g = nonzero[0]
    for other in nonzero[1:]:
        g = pr.ext_poly_gcd(ext, g, other)
        if len(g) <= 1:
            return None
    return {"kind": "common-zero",
            "minpoly": [elem_to_json(c) for c in minpoly],
            "z_gcd_degree": len(g) - 1}


def _chart_name(chart: int) -> str:
    return "XYZ"[chart]


def _chart_univariate(ctx: FieldCtx, system_full):
    """The X=0, Y=1 sub-chart: a univariate system in Z."""
    polys = []
    for s in system_full:
        p = [0] * (max((e[2] for e in s), default=0) + 1)
        for (a, b, c), coef in s.items():
            if a == 0:
                p[c] ^= coef
        polys.append(pr.ptrim(p))
    nonzero = [p for p in polys if p]
    if not nonzero:
        return {"chart": "Y", "kind": "identically-zero-system"}
    if any(pr.pdeg(p) == 0 for p in nonzero):
        return None
    g = pr.pgcd_many(ctx, nonzero)
    if pr.pdeg(g) > 0:
        minpoly, _ = pr.factor(ctx, g)[0]
        if pr.pdeg(minpoly) == 1:
            return {"chart": "Y", "kind": "rational-point",
                    "point": [hex(0), hex(1), hex(minpoly[0])]}
        return {"chart": "Y", "kind": "common-zero",
                "minpoly": [elem_to_json(c) for c in minpoly]}
    return None


def _bivariate_gcd_all(ctx: FieldCtx, system):
    """Gcd of all system members in k[y][z], via contents and the prs."""
    gcd_cont: pr.Poly = []
    prims = []
    for f in system:
        prim, cont = pr.bi_primitive(ctx, f)
        gcd_cont = pr.pgcd(ctx, gcd_cont, cont) if gcd_cont else cont
        prims.append(prim)
    g = prims[0]
    for other in prims[1:]:
        g = _bi_gcd_pair(ctx, g, other)
        if pr.bi_degz(g) == 0 and pr.pdeg(g[0]) == 0:
            break
    if pr.bi_degz(g) == 0 and pr.pdeg(g[0]) == 0:
        if pr.pdeg(gcd_cont) > 0:
            return [gcd_cont]
        return None
    return g


def _bi_gcd_pair(ctx: FieldCtx, a: pr.BiPoly, b: pr.BiPoly) -> pr.BiPoly:
    """Primitive gcd of two bivariate polys by pseudo-remainders."""
    a, _ = pr.bi_primitive(ctx, a)
    b, _ = pr.bi_primitive(ctx, b)
    if pr.bi_degz(a) < pr.bi_degz(b):
        a, b = b, a
    while not pr.bi_is_zero(b) and pr.bi_degz(b) > 0:
        r = pr.bi_pseudo_rem(ctx, a, b)
        r, _ = pr.bi_primitive(ctx, r)
        a, b = b, r
        if pr.bi_degz(a) < pr.bi_degz(b):
            a, b = b, a
    if pr.bi_is_zero(b):
        return a
    # b is a nonzero y-poly (primitive => constant): gcd is trivial.
    return [[1]]
