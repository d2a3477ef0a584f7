"""The projective plane over GF(2^n): points, lines, and projectivities.

Points and lines are normalized homogeneous triples (first nonzero
coordinate scaled to 1), projectivities are 3x3 matrices normalized by
their first nonzero entry in row-major order.  Normalized representatives
are canonical, so equality and hashing are structural; this is what makes
group closure by hashing possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gf2e import FieldCtx, elem_to_json, elem_from_json


class GeometryError(ValueError):
    """Base class for projective-geometry errors."""


class SamePoint(GeometryError):
    """Two coincident points where distinct ones are required."""


class DegenerateFrame(GeometryError):
    """Four points with three collinear cannot be a frame."""


class SingularMatrix(GeometryError):
    """A 3x3 matrix with zero determinant is not a projectivity."""


def normalize_triple(ctx: FieldCtx, v: tuple[int, int, int]) -> tuple[int, int, int]:
    for c in v:
        if c:
            if c == 1:
                return tuple(v)
            inv = ctx.inv(c)
            return tuple(ctx.mul(inv, x) for x in v)
    raise GeometryError("zero triple has no projective class")


@dataclass(frozen=True)
class ProjPoint:
    ctx: FieldCtx
    coords: tuple[int, int, int]

    @staticmethod
    def make(ctx: FieldCtx, x: int, y: int, z: int) -> "ProjPoint":
        return ProjPoint(ctx, normalize_triple(ctx, (x, y, z)))

    def on_line(self, line: "ProjLine") -> bool:
        ctx = self.ctx
        acc = 0
        for a, b in zip(self.coords, line.coeffs):
            acc ^= ctx.mul(a, b)
        return acc == 0

    def in_subfield(self, d: int) -> bool:
        return all(self.ctx.in_subfield(c, d) for c in self.coords)

    def to_json(self) -> list[str]:
        return [elem_to_json(c) for c in self.coords]

    @staticmethod
    def from_json(ctx: FieldCtx, obj: list[str]) -> "ProjPoint":
        return ProjPoint.make(ctx, *(elem_from_json(s, ctx) for s in obj))

    def __repr__(self) -> str:
        return "(" + ":".join(hex(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjLine:
    """The line aX + bY + cZ = 0, with (a, b, c) normalized like a point."""

    ctx: FieldCtx
    coeffs: tuple[int, int, int]

    @staticmethod
    def make(ctx: FieldCtx, a: int, b: int, c: int) -> "ProjLine":
        return ProjLine(ctx, normalize_triple(ctx, (a, b, c)))

    def contains(self, p: ProjPoint) -> bool:
        return p.on_line(self)

    def points(self, d: int) -> list[ProjPoint]:
        """All points of the line rational over GF(2^d)."""
        return [p for p in _plane_points(self.ctx, d) if p.on_line(self)]

    def to_json(self) -> list[str]:
        return [elem_to_json(c) for c in self.coeffs]

    @staticmethod
    def from_json(ctx: FieldCtx, obj: list[str]) -> "ProjLine":
        return ProjLine.make(ctx, *(elem_from_json(s, ctx) for s in obj))

    def __repr__(self) -> str:
        return "[" + ":".join(hex(c) for c in self.coeffs) + "]"


def line_through(p: ProjPoint, r: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (cross product)."""
    if p == r:
        raise SamePoint(f"{p} and {r} coincide")
    ctx = p.ctx
    (x1, y1, z1), (x2, y2, z2) = p.coords, r.coords
    mul = ctx.mul
    a = mul(y1, z2) ^ mul(z1, y2)
    b = mul(z1, x2) ^ mul(x1, z2)
    c = mul(x1, y2) ^ mul(y1, x2)
    return ProjLine.make(ctx, a, b, c)


def intersect_lines(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise SamePoint(f"{l1} and {l2} coincide")
    ctx = l1.ctx
    (a1, b1, c1), (a2, b2, c2) = l1.coeffs, l2.coeffs
    mul = ctx.mul
    x = mul(b1, c2) ^ mul(c1, b2)
    y = mul(c1, a2) ^ mul(a1, c2)
    z = mul(a1, b2) ^ mul(b1, a2)
    return ProjPoint.make(ctx, x, y, z)


def _plane_points(ctx: FieldCtx, d: int) -> list[ProjPoint]:
    """All points of P^2 with coordinates in GF(2^d), canonical order."""
    sub = ctx.subfield_elements(d)
    pts = [ProjPoint(ctx, (1, y, z)) for y in sub for z in sub]
    pts += [ProjPoint(ctx, (0, 1, z)) for z in sub]
    pts.append(ProjPoint(ctx, (0, 0, 1)))
    return pts


def plane_points(ctx: FieldCtx, d: int) -> list[ProjPoint]:
    return _plane_points(ctx, d)


# ----------------------------------------------------------------------
# Projectivities
# ----------------------------------------------------------------------

Matrix = tuple  # 9-tuple of ints, row-major


def _mat_normalize(ctx: FieldCtx, m: Matrix) -> Matrix:
    for c in m:
        if c:
            if c == 1:
                return tuple(m)
            inv = ctx.inv(c)
            return tuple(ctx.mul(inv, x) for x in m)
    raise SingularMatrix("zero matrix")


def _mat_det(ctx: FieldCtx, m: Matrix) -> int:
    a, b, c, d, e, f, g, h, i = m
    mul = ctx.mul
    return (mul(a, mul(e, i) ^ mul(f, h))
            ^ mul(b, mul(d, i) ^ mul(f, g))
            ^ mul(c, mul(d, h) ^ mul(e, g)))


@dataclass(frozen=True)
class ProjMap:
    """An element of PGL(3) in canonical (first-nonzero = 1) form."""

    ctx: FieldCtx
    matrix: Matrix

    @staticmethod
    def make(ctx: FieldCtx, m) -> "ProjMap":
        m = tuple(m)
        if len(m) != 9:
            raise GeometryError("projectivity needs 9 entries")
        if _mat_det(ctx, m) == 0:
            raise SingularMatrix("matrix is singular")
        return ProjMap(ctx, _mat_normalize(ctx, m))

    @staticmethod
    def identity(ctx: FieldCtx) -> "ProjMap":
        return ProjMap(ctx, (1, 0, 0, 0, 1, 0, 0, 0, 1))

    def apply(self, p: ProjPoint) -> ProjPoint:
        ctx = self.ctx
        m = self.matrix
        x, y, z = p.coords
        mul = ctx.mul
        return ProjPoint.make(
            ctx,
            mul(m[0], x) ^ mul(m[1], y) ^ mul(m[2], z),
            mul(m[3], x) ^ mul(m[4], y) ^ mul(m[5], z),
            mul(m[6], x) ^ mul(m[7], y) ^ mul(m[8], z),
        )

    def apply_line(self, line: ProjLine) -> ProjLine:
        """Image of a line: coefficients transform by the inverse matrix."""
        inv = self.inverse()
        ctx = self.ctx
        m = inv.matrix
        a, b, c = line.coeffs
        mul = ctx.mul
        return ProjLine.make(
            ctx,
            mul(a, m[0]) ^ mul(b, m[3]) ^ mul(c, m[6]),
            mul(a, m[1]) ^ mul(b, m[4]) ^ mul(c, m[7]),
            mul(a, m[2]) ^ mul(b, m[5]) ^ mul(c, m[8]),
        )

    def compose(self, other: "ProjMap") -> "ProjMap":
        """self after other (matrix product self * other)."""
        ctx = self.ctx
        a, b = self.matrix, other.matrix
        mul = ctx.mul
        out = []
        for i in range(3):
            for j in range(3):
                acc = 0
                for k in range(3):
                    acc ^= mul(a[3 * i + k], b[3 * k + j])
                out.append(acc)
        return ProjMap(ctx, _mat_normalize(ctx, tuple(out)))

    def inverse(self) -> "ProjMap":
        ctx = self.ctx
        a, b, c, d, e, f, g, h, i = self.matrix
        mul = ctx.mul
        cof = (
            mul(e, i) ^ mul(f, h), mul(c, h) ^ mul(b, i), mul(b, f) ^ mul(c, e),
            mul(f, g) ^ mul(d, i), mul(a, i) ^ mul(c, g), mul(c, d) ^ mul(a, f),
            mul(d, h) ^ mul(e, g), mul(b, g) ^ mul(a, h), mul(a, e) ^ mul(b, d),
        )
        # Adjugate works projectively; determinant scaling is absorbed.
        return ProjMap(self.ctx, _mat_normalize(ctx, cof))

    def order(self, cap: int = 1 << 20) -> int:
        ident = ProjMap.identity(self.ctx)
        acc = self
        k = 1
        while acc != ident:
            acc = acc.compose(self)
            k += 1
            if k > cap:
                raise GeometryError("order cap exceeded")
        return k

    def fixes_point(self, p: ProjPoint) -> bool:
        return self.apply(p) == p

    def is_perspectivity_with_center(self, p: ProjPoint) -> bool:
        """True iff every line through p is invariant.

        Equivalent to matrix = s*I + p*w^T for some scalar s and covector w
        (columns of m - s*I all proportional to p).
        """
        ctx = self.ctx
        m = self.matrix
        x = p.coords
        mul = ctx.mul
        # Column j determines w_j via any row i != j with x_i != 0; columns
        # with no such row leave w_j open until s is known.
        w: list[int | None] = [None, None, None]
        s_cands = []
        for j in range(3):
            i = next((i for i in range(3) if i != j and x[i]), None)
            if i is None:
                continue
            w[j] = ctx.div(m[3 * i + j], x[i])
            s_cands.append(m[4 * j] ^ mul(x[j], w[j]))
        if not s_cands or any(s != s_cands[0] for s in s_cands):
            return False
        s = s_cands[0]
        for j in range(3):
            if w[j] is None:
                # Here x = e_j up to scaling, so x[j] != 0.
                w[j] = ctx.div(m[4 * j] ^ s, x[j])
        for i in range(3):
            for j in range(3):
                expect = (s if i == j else 0) ^ mul(x[i], w[j])
                if m[3 * i + j] != expect:
                    return False
        return True

    def entries_in_subfield(self, d: int) -> bool:
        return all(self.ctx.in_subfield(c, d) for c in self.matrix)

    def to_json(self) -> list[str]:
        return [elem_to_json(c) for c in self.matrix]

    @staticmethod
    def from_json(ctx: FieldCtx, obj: list[str]) -> "ProjMap":
        return ProjMap.make(ctx, [elem_from_json(s, ctx) for s in obj])

    def __repr__(self) -> str:
        rows = [self.matrix[0:3], self.matrix[3:6], self.matrix[6:9]]
        return "ProjMap" + str(tuple(rows))


# ----------------------------------------------------------------------
# Fixed loci
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FixedLocus:
    """Fixed points of a projectivity over the ambient field.

    is_all_plane: identity map.  lines_pointwise: lines fixed point by
    point.  points: isolated fixed points not on those lines.  When the
    characteristic polynomial has roots only in an extension the flag
    has_extension_fixed_points is set; those points are not listed.
    """

    is_all_plane: bool
    lines_pointwise: tuple
    points: tuple
    has_extension_fixed_points: bool

    def is_line(self, line: ProjLine) -> bool:
        return (not self.is_all_plane and len(self.lines_pointwise) == 1
                and not self.points and self.lines_pointwise[0] == line)


def fixed_locus(m: ProjMap) -> FixedLocus:
    """Classify {Q : m(Q) = Q} by the eigenstructure of the matrix."""
    from . import polyring as pr

    ctx = m.ctx
    ident = ProjMap.identity(ctx)
    if m == ident:
        return FixedLocus(True, (), (), False)

    charpoly = _char_poly(ctx, m.matrix)
    lines = []
    points = []
    extension = False
    for g, _mult in pr.factor(ctx, charpoly):
        if pr.pdeg(g) > 1:
            extension = True
            continue
        s = g[0]  # eigenvalue (monic linear factor x + s)
        basis = _eigenspace(ctx, m.matrix, s)
        if len(basis) == 1:
            points.append(ProjPoint.make(ctx, *basis[0]))
        elif len(basis) == 2:
            p1 = ProjPoint.make(ctx, *basis[0])
            p2 = ProjPoint.make(ctx, *basis[1])
            lines.append(line_through(p1, p2))
        elif len(basis) == 3:
            return FixedLocus(True, (), (), False)
    points = [p for p in points
              if not any(p.on_line(ln) for ln in lines)]
    return FixedLocus(False, tuple(lines), tuple(sorted(points, key=lambda p: p.coords)),
                      extension)


def _char_poly(ctx: FieldCtx, m: Matrix):
    """det(x*I + m) as a cubic over the field (char 2 drops signs)."""
    a, b, c, d, e, f, g, h, i = m
    mul = ctx.mul
    tr = a ^ e ^ i
    # Sum of principal 2x2 minors.
    m2 = (mul(a, e) ^ mul(b, d)) ^ (mul(a, i) ^ mul(c, g)) ^ (mul(e, i) ^ mul(f, h))
    det = _mat_det(ctx, m)
    return [det, m2, tr, 1]


def _eigenspace(ctx: FieldCtx, m: Matrix, s: int) -> list[tuple]:
    """Basis of ker(m + s*I) by Gaussian elimination over the field."""
    rows = [
        [m[0] ^ s, m[1], m[2]],
        [m[3], m[4] ^ s, m[5]],
        [m[6], m[7], m[8] ^ s],
    ]
    pivots = []
    r = 0
    for col in range(3):
        pivot = None
        for k in range(r, 3):
            if rows[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ctx.inv(rows[r][col])
        rows[r] = [ctx.mul(inv, x) for x in rows[r]]
        for k in range(3):
            if k != r and rows[k][col]:
                factor = rows[k][col]
                rows[k] = [rk ^ ctx.mul(factor, rr) for rk, rr in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(3) if c not in pivots]
    basis = []
    for fc in free:
        v = [0, 0, 0]
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = rows[ri][fc]  # char 2: negation is identity
        basis.append(tuple(v))
    return basis


# ----------------------------------------------------------------------
# Perspectivities and frames
# ----------------------------------------------------------------------

def perspectivities_with_center(p: ProjPoint, d: int) -> list[ProjMap]:
    """The full center-p perspectivity subgroup over GF(2^d).

    These are exactly the classes I + p*v^T with v^T p != 1 (so the matrix
    is invertible); the count is 2^(2d) * (2^d - 1).
    """
    ctx = p.ctx
    sub = ctx.subfield_elements(d)
    if not all(ctx.in_subfield(c, d) for c in p.coords):
        raise GeometryError(f"center {p} is not rational over GF(2^{d})")
    x = p.coords
    out = []
    mul = ctx.mul
    for v in product(sub, repeat=3):
        dot = mul(v[0], x[0]) ^ mul(v[1], x[1]) ^ mul(v[2], x[2])
        if dot == 1:
            continue
        m = [
            1 ^ mul(x[0], v[0]), mul(x[0], v[1]), mul(x[0], v[2]),
            mul(x[1], v[0]), 1 ^ mul(x[1], v[1]), mul(x[1], v[2]),
            mul(x[2], v[0]), mul(x[2], v[1]), 1 ^ mul(x[2], v[2]),
        ]
        out.append(ProjMap(ctx, _mat_normalize(ctx, tuple(m))))
    return out


def frame_map(targets: list[ProjPoint]) -> ProjMap:
    """The unique projectivity sending the standard frame to the targets.

    Standard frame: (1:0:0), (0:1:0), (0:0:1), (1:1:1) in this order.
    """
    if len(targets) != 4:
        raise GeometryError("a frame needs exactly 4 points")
    ctx = targets[0].ctx
    cols = [t.coords for t in targets[:3]]
    # Solve cols * c = t4 for the column scalings.
    t4 = targets[3].coords
    mat = [[cols[j][i] for j in range(3)] for i in range(3)]
    c = _solve3(ctx, mat, list(t4))
    if c is None or any(ci == 0 for ci in c):
        raise DegenerateFrame("three of the four target points are collinear")
    m = tuple(ctx.mul(cols[j][i], c[j]) for i in range(3) for j in range(3))
    if _mat_det(ctx, m) == 0:
        raise DegenerateFrame("target points do not span the plane")
    return ProjMap(ctx, _mat_normalize(ctx, m))


def _solve3(ctx: FieldCtx, mat: list[list[int]], rhs: list[int]):
    rows = [mat[i] + [rhs[i]] for i in range(3)]
    r = 0
    pivots = []
    for col in range(3):
        pivot = None
        for k in range(r, 3):
            if rows[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ctx.inv(rows[r][col])
        rows[r] = [ctx.mul(inv, x) for x in rows[r]]
        for k in range(3):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [a ^ ctx.mul(f, b) for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    if r < 3:
        return None
    sol = [0, 0, 0]
    for ri, pc in enumerate(pivots):
        sol[pc] = rows[ri][3]
    return sol


def pgl3_size(q: int) -> int:
    return q ** 3 * (q ** 3 - 1) * (q ** 2 - 1)


def pgl3_elements(ctx: FieldCtx, d: int):
    """Iterate canonical representatives of PGL(3, GF(2^d)).

    Yields each class exactly once: matrices whose first nonzero entry in
    row-major order is 1, with nonzero determinant.
    """
    sub = ctx.subfield_elements(d)
    # First nonzero entry at position k: entries before k are 0, entry k is 1.
    for k in range(9):
        head = (0,) * k + (1,)
        for tail in product(sub, repeat=8 - k):
            m = head + tail
            if _mat_det(ctx, m):
                yield ProjMap(ctx, m)
