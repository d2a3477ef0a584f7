"""p-rank of curves two ways, plus Hurwitz-bound and order-identity checks.

The quotient formula (Deuring-Shafarevich) turns the ramification profile
of a Galois 2-group cover into the p-rank; the Hasse-Witt matrix gives an
independent computation from the defining polynomial alone: the p-rank is
the rank of the g-fold Frobenius-twisted product of the g x g coefficient
matrix.  The literature disagrees on the indexing convention for that
matrix, so the convention used here is validated once per process against
two genus-1 fixtures whose ordinarity is pinned down by point counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import curves as cv
from .curves import CurveError, PlaneCurve
from .gf2e import FieldCtx, default_ctx


class NonIntegerResult(CurveError):
    """The quotient formula did not produce an integer p-rank."""


class NegativePrank(CurveError):
    """The quotient formula produced a negative value (impossible cover)."""


class GenusTooSmall(CurveError):
    """Hurwitz bound arithmetic needs genus >= 2."""


class SingularCurve(CurveError):
    """Hasse-Witt needs a smooth curve."""


@dataclass
class PrankReport:
    genus: int
    prank: int
    method: str  # "deuring_shafarevich" or "hasse_witt"
    ordinary: bool

    def to_json(self) -> dict:
        return {"genus": self.genus, "prank": self.prank,
                "method": self.method, "ordinary": self.ordinary}


# ----------------------------------------------------------------------
# Deuring-Shafarevich
# ----------------------------------------------------------------------

def deuring_shafarevich(group_order: int,
                        quotient_prank_minus_one: int,
                        branches) -> int:
    """p-rank from (prank - 1)/|G| = (quotient term) + sum_b (1 - 1/e_b).

    `branches` lists the common ramification index of the fiber over each
    branch point of the quotient; the cover must be Galois with a 2-group.
    """
    if group_order < 1 or group_order & (group_order - 1):
        raise CurveError(f"group order {group_order} is not a power of 2")
    for e in branches:
        if e < 1 or group_order % e:
            raise CurveError(f"ramification index {e} does not divide {group_order}")
    total = Fraction(quotient_prank_minus_one)
    for e in branches:
        total += 1 - Fraction(1, e)
    gamma = group_order * total + 1
    if gamma.denominator != 1:
        raise NonIntegerResult(f"formula gives non-integer {gamma}")
    gamma = int(gamma)
    if gamma < 0:
        raise NegativePrank(f"formula gives negative p-rank {gamma}")
    return gamma


def prank_from_profile(profile) -> PrankReport:
    """Deuring-Shafarevich on a Galois-point ramification profile.

    The quotient of the projection is the projective line (term -1); the
    group is the full Galois group, of order equal to the projection degree.
    """
    branches = profile.branch_ram_indices()
    gamma = deuring_shafarevich(profile.proj_degree, -1, branches)
    return PrankReport(profile.genus, gamma, "deuring_shafarevich",
                       gamma == profile.genus)


# ----------------------------------------------------------------------
# Hasse-Witt
# ----------------------------------------------------------------------

def _hw_basis(d: int) -> list[tuple]:
    out = [(a, b, d - 3 - a - b)
           for a in range(d - 2) for b in range(d - 2 - a)]
    out.sort(reverse=True)
    return out


def hasse_witt_matrix(curve: PlaneCurve, convention: str = "standard"):
    """The g x g Hasse-Witt matrix of a smooth plane curve, p = 2.

    Rows and columns are indexed by monomials of degree d-3; the (i, j)
    entry is the coefficient of X^(2a_j - a_i + 1) Y^(...) Z^(...) in the
    defining polynomial (F^(p-1) = F for p = 2).  "transposed" swaps the
    roles of i and j; both give the same twisted-product rank.
    """
    if curve.degree < 3:
        raise SingularCurve("Hasse-Witt needs degree >= 3")
    basis = _hw_basis(curve.degree)
    mono = curve.monomials
    m = []
    for row in basis:
        r = []
        for col in basis:
            if convention == "standard":
                exp = tuple(2 * c - rr + 1 for rr, c in zip(row, col))
            else:
                exp = tuple(2 * rr - c + 1 for rr, c in zip(row, col))
            r.append(mono.get(exp, 0) if min(exp) >= 0 else 0)
        m.append(r)
    return m


def _mat_mul(ctx: FieldCtx, a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(n):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(n):
                    if brow[j]:
                        orow[j] ^= ctx.mul(x, brow[j])
    return out


def _mat_frob(ctx: FieldCtx, a, k: int):
    return [[ctx.frob(x, k) for x in row] for row in a]


def _mat_rank(ctx: FieldCtx, a) -> int:
    rows = [list(r) for r in a]
    n = len(rows)
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rank < n and col < width:
        pivot = next((r for r in range(rank, n) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(inv, x) for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x ^ ctx.mul(f, y) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


_VALIDATED_CONVENTION: dict[tuple, str] = {}


def supersingular_genus1_fixture(ctx: FieldCtx) -> PlaneCurve:
    """Y^2 Z + Y Z^2 = X^3: the supersingular cubic over GF(2)."""
    return PlaneCurve(ctx, {(3, 0, 0): 1, (0, 2, 1): 1, (0, 1, 2): 1})


def ordinary_genus1_fixture(ctx: FieldCtx) -> PlaneCurve:
    """Y^2 Z + X Y Z = X^3 + Z^3: an ordinary cubic over GF(2)."""
    return PlaneCurve(ctx, {(3, 0, 0): 1, (0, 2, 1): 1, (1, 1, 1): 1,
                            (0, 0, 3): 1})


def elliptic_ordinarity_by_counting(curve: PlaneCurve) -> bool:
    """Point-count oracle for genus-1 plane cubics defined over GF(2).

    Ordinary iff the trace of Frobenius over GF(2) is odd; the count over
    GF(4) cross-checks the trace through the zeta function.
    """
    if curve.degree != 3:
        raise CurveError("point-count oracle is for plane cubics")
    n1 = cv.count_points(curve, 1)
    a = 3 - n1
    if a * a > 8:
        raise CurveError(f"impossible Frobenius trace {a}")
    n2_expected = 9 - a * a  # q^2 + 1 - (a^2 - 2q) with q = 2
    if curve.ctx.n % 2 == 0:
        n2 = cv.count_points(curve, 2)
        if n2 != n2_expected:
            raise CurveError(
                f"zeta consistency failed: N2 = {n2}, expected {n2_expected}")
    return a % 2 == 1


def validated_hw_convention() -> str:
    """The entry convention that reproduces both genus-1 fixtures.

    Validates "standard" (falling back to "transposed") against the
    supersingular and ordinary cubics, whose p-ranks are pinned down
    independently by point counting.  Cached per process.
    """
    key = ("hw",)
    if key in _VALIDATED_CONVENTION:
        return _VALIDATED_CONVENTION[key]
    ctx = default_ctx(2, 1)
    fixtures = []
    for build in (supersingular_genus1_fixture, ordinary_genus1_fixture):
        curve = build(ctx)
        expect = 1 if elliptic_ordinarity_by_counting(curve) else 0
        fixtures.append((curve, expect))
    chosen = None
    for convention in ("standard", "transposed"):
        if all(_hw_prank_raw(c, convention) == e for c, e in fixtures):
            chosen = convention
            break
    if chosen is None:
        raise CurveError("no Hasse-Witt convention matches the genus-1 fixtures")
    _VALIDATED_CONVENTION[key] = chosen
    return chosen


def _hw_prank_raw(curve: PlaneCurve, convention: str) -> int:
    ctx = curve.ctx
    m = hasse_witt_matrix(curve, convention)
    g = curve.genus
    if g == 0:
        return 0
    acc = m
    for k in range(1, g):
        acc = _mat_mul(ctx, _mat_frob(ctx, m, k), acc)
    return _mat_rank(ctx, acc)


def hasse_witt_prank(curve: PlaneCurve, convention: str | None = None) -> PrankReport:
    """p-rank as the stable rank of the twisted Hasse-Witt product."""
    if convention is None:
        convention = validated_hw_convention()
    gamma = _hw_prank_raw(curve, convention)
    return PrankReport(curve.genus, gamma, "hasse_witt", gamma == curve.genus)


# ----------------------------------------------------------------------
# Hurwitz bound and the order identity
# ----------------------------------------------------------------------

def hurwitz_check(order: int, genus: int) -> dict:
    """Compare a group order against the classical bound 84(g-1)."""
    if genus < 2:
        raise GenusTooSmall(f"genus {genus} < 2 has no Hurwitz bound")
    bound = 84 * (genus - 1)
    return {"order": order, "genus": genus, "bound": bound,
            "exceeds": order > bound}


def order_identity_check(q: int) -> bool:
    """With g = q(q-1)/2: verify 8g+1 = (2q-1)^2 and g(3 + (2q-1)) = q^3 - q."""
    if q < 4 or q & (q - 1):
        raise CurveError(f"q must be a power of 2, at least 4; got {q}")
    g = q * (q - 1) // 2
    root = 2 * q - 1
    if root * root != 8 * g + 1:
        return False
    return g * (3 + root) == q ** 3 - q
