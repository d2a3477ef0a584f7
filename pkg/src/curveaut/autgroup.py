"""Automorphism groups of the curve families: closure, oracle, line action.

The group is generated from Galois-point generators by breadth-first
closure over canonical matrix forms; an independent oracle filters all of
PGL(3) over a small field.  For the product-of-lines family the restriction
to the Galois-point line and its constructive inverse (the lift) realize
the isomorphism with PGL(2, F_q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from . import curves as cv
from .curves import CurveError, PlaneCurve
from .gf2e import FieldCtx
from .projgeom import ProjMap, ProjLine, ProjPoint, pgl3_size, pgl3_elements


class CapExceeded(CurveError):
    """Closure grew past the configured cap."""


class BadGenerator(CurveError):
    """A closure generator does not stabilize the curve."""


class TooLarge(CurveError):
    """Brute-force enumeration would exceed the guard."""


class LineNotStable(CurveError):
    """An element moves the line it was to be restricted to."""


class NoLift(CurveError):
    """The constructive lift failed; would contradict surjectivity."""


@dataclass
class AutGroup:
    """A finite subgroup of PGL(3) with curve-stabilization metadata.

    verified: "all-elements", "generators+sample", or "generators",
    recording how much of the set went through the exact stabilization test.
    """

    ctx: FieldCtx
    elements: tuple
    generators: tuple
    verified: str
    certification: str

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset:
        return frozenset(m.matrix for m in self.elements)

    def sorted_elements(self) -> list[ProjMap]:
        return sorted(self.elements, key=lambda m: m.matrix)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "verified": self.verified,
            "certification": self.certification,
            "generators": [g.to_json() for g in self.generators],
            "elements": [m.to_json() for m in self.sorted_elements()],
        }


# ----------------------------------------------------------------------
# Closure
# ----------------------------------------------------------------------

def closure(gens, curve: PlaneCurve | None = None, cap: int = 600000,
            verify: str = "auto", use_numpy: bool | None = None) -> AutGroup:
    """Breadth-first closure of the generators under composition.

    Generators must stabilize the curve (checked exactly); element-level
    re-verification is "all" for groups the exact test can afford, else a
    deterministic sample (products of verified stabilizers stabilize, so
    this is a safety assertion, not the proof of membership).
    """
    gens = list(dict.fromkeys(gens))
    if not gens:
        raise BadGenerator("no generators")
    ctx = gens[0].ctx
    if curve is not None:
        for g in gens:
            if not cv.stabilizes(curve, g):
                raise BadGenerator(f"generator {g} moves the curve")
    if use_numpy is None:
        use_numpy = ctx.n <= 7 and len(gens) >= 24
    if use_numpy:
        mats = _closure_numpy(ctx, [g.matrix for g in gens], cap)
        elements = tuple(ProjMap(ctx, m) for m in mats)
    else:
        elements = tuple(_closure_pure(ctx, gens, cap))

    verified = _verify_elements(curve, elements, verify)
    return AutGroup(ctx, elements, tuple(gens), verified,
                    certification="closure")


def _closure_pure(ctx, gens, cap):
    ident = ProjMap.identity(ctx)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod_ = m.compose(g)
                if prod_.matrix not in seen:
                    seen[prod_.matrix] = prod_
                    nxt.append(prod_)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeded cap {cap}")
        frontier = nxt
    return seen.values()


def _closure_numpy(ctx, gen_mats, cap):
    import numpy as np

    n = ctx.n
    exp, log = ctx.np_tables()
    inv_table = ctx.np_inv_table()

    def scalar_mul(col, s):
        if s == 0:
            return np.zeros_like(col)
        out = np.zeros_like(col)
        mask = col != 0
        out[mask] = exp[log[col[mask]] + log[s]]
        return out

    def normalize(mats):
        first = np.argmax(mats != 0, axis=1)
        piv = mats[np.arange(len(mats)), first]
        pivinv = inv_table[piv]
        out = np.zeros_like(mats)
        mask = mats != 0
        logm = np.zeros_like(mats)
        logm[mask] = log[mats[mask]]
        logm += log[pivinv][:, None]
        out[mask] = exp[logm[mask]]
        return out

    def encode(mats):
        keys = np.zeros(len(mats), dtype=np.int64)
        for i in range(9):
            keys = (keys << n) | mats[:, i]
        return keys

    def decode(keys):
        out = np.zeros((len(keys), 9), dtype=np.int64)
        mask = (1 << n) - 1
        for i in range(8, -1, -1):
            out[:, i] = keys & mask
            keys = keys >> n
        return out

    gens = np.asarray(gen_mats, dtype=np.int64)
    ident = np.array([[1, 0, 0, 0, 1, 0, 0, 0, 1]], dtype=np.int64)
    seen_keys = encode(ident)
    all_keys = [seen_keys]
    frontier = ident
    total = 1
    while len(frontier):
        prods = []
        for g in gens:
            out = np.zeros((len(frontier), 9), dtype=np.int64)
            for i in range(3):
                for j in range(3):
                    acc = out[:, 3 * i + j]
                    for k in range(3):
                        acc ^= scalar_mul(frontier[:, 3 * i + k], int(g[3 * k + j]))
                    out[:, 3 * i + j] = acc
            prods.append(normalize(out))
        keys = encode(np.concatenate(prods))
        keys = np.unique(keys)
        seen_sorted = np.sort(np.concatenate(all_keys))
        fresh = keys[~_np_member(keys, seen_sorted)]
        if not len(fresh):
            break
        total += len(fresh)
        if total > cap:
            raise CapExceeded(f"closure exceeded cap {cap}")
        all_keys.append(fresh)
        frontier = decode(fresh)
    final = np.sort(np.concatenate(all_keys))
    return [tuple(int(x) for x in row) for row in decode(final)]


def _np_member(values, sorted_ref):
    import numpy as np
    idx = np.searchsorted(sorted_ref, values)
    idx = np.clip(idx, 0, len(sorted_ref) - 1)
    return sorted_ref[idx] == values


def _verify_elements(curve, elements, verify):
    if curve is None:
        return "generators"
    if verify == "none":
        return "generators"
    if verify == "auto":
        verify = "all" if len(elements) <= 6000 else "sample"
    if verify == "all":
        for m in elements:
            if not cv.stabilizes(curve, m):
                raise CurveError(f"closure produced a non-stabilizer {m}")
        return "all-elements"
    # Deterministic sample: stride through the sorted elements.
    elems = sorted(elements, key=lambda m: m.matrix)
    stride = max(1, len(elems) // 64)
    for m in elems[::stride]:
        if not cv.stabilizes(curve, m):
            raise CurveError(f"closure produced a non-stabilizer {m}")
    return "generators+sample"


# ----------------------------------------------------------------------
# Brute-force oracle
# ----------------------------------------------------------------------

BRUTE_FORCE_GUARD = 10 ** 8


def brute_force_stabilizer(curve: PlaneCurve, field_degree: int,
                           guard: int = BRUTE_FORCE_GUARD) -> AutGroup:
    """All elements of PGL(3, GF(2^field_degree)) stabilizing the curve.

    Two stages: a vectorized evaluation filter (sound: every true stabilizer
    satisfies the proportionality relations it tests), then the exact
    polynomial substitution test on the survivors.
    """
    ctx = curve.ctx
    q = 1 << field_degree
    size = pgl3_size(q)
    if size > guard:
        raise TooLarge(f"|PGL(3,{q})| = {size} exceeds guard {guard}")
    try:
        import numpy as np
        survivors = _brute_filter_numpy(curve, field_degree)
    except ImportError:
        survivors = pgl3_elements(ctx, field_degree)
    elems = tuple(sorted((m for m in survivors if cv.stabilizes(curve, m)),
                         key=lambda m: m.matrix))
    return AutGroup(ctx, elems, (), "all-elements",
                    certification=f"exhaustive-PGL(3,GF(2^{field_degree}))")


def frame_candidate_stabilizer(curve: PlaneCurve, frame_points) -> AutGroup:
    """Filter the 24 frame-permutation projectivities of a 4-point frame.

    Complete for any group known to act faithfully on the frame points: a
    projectivity is determined by its frame images, so each permutation has
    exactly one candidate realization.
    """
    from .projgeom import frame_map
    if len(frame_points) != 4:
        raise CurveError("frame mode needs exactly 4 points")
    base_inv = frame_map(list(frame_points)).inverse()
    elems = []
    for perm in permutations(range(4)):
        m = frame_map([frame_points[i] for i in perm]).compose(base_inv)
        if cv.stabilizes(curve, m):
            elems.append(m)
    elems = tuple(sorted(elems, key=lambda m: m.matrix))
    return AutGroup(curve.ctx, elems, (), "all-elements",
                    certification="frame-exhaustive")


def _brute_filter_numpy(curve: PlaneCurve, field_degree: int):
    """Vectorized candidate filter over PGL(3, GF(2^field_degree)).

    Enumerates canonical representatives in chunks and keeps matrices m with
    F(m t_i) * F(t_p) == F(m t_p) * F(t_i) for a fixed panel of test points
    t (pivot p has F(t_p) != 0); exact filtering happens in the caller.
    """
    import numpy as np

    ctx = curve.ctx
    exp, log = ctx.np_tables()
    sub = np.asarray(ctx.subfield_elements(field_degree), dtype=np.int64)
    s = len(sub)

    from .projgeom import plane_points
    pts = plane_points(ctx, ctx.n)
    values = [curve.evaluate(p.coords) for p in pts]
    pivot = next(i for i, v in enumerate(values) if v)
    panel = [pivot] + [i for i in range(len(pts)) if i != pivot][:11]
    tcoords = np.asarray([pts[i].coords for i in panel], dtype=np.int64)
    tvals = np.asarray([values[i] for i in panel], dtype=np.int64)

    group = ctx.order - 1

    def vmul(a, b):
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        mask = (a != 0) & (b != 0)
        out[mask] = exp[(log[a] + log[b])[mask]]
        return out

    deg = curve.degree
    mono = list(curve.monomials.items())

    def eval_curve(coords):
        # coords: (..., 3) -> values (...,)
        powers = []
        for v in range(3):
            col = coords[..., v]
            pw = [np.ones_like(col)]
            for _ in range(deg):
                pw.append(vmul(pw[-1], col))
            powers.append(pw)
        acc = np.zeros(coords.shape[:-1], dtype=np.int64)
        for (a, b, c), coef in mono:
            term = vmul(powers[0][a], vmul(powers[1][b], powers[2][c]))
            acc ^= vmul(term, np.int64(coef))
        return acc

    survivors = []
    chunk = 1 << 16
    total = s ** 9
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.zeros((len(idx), 9), dtype=np.int64)
        rem = idx.copy()
        for pos in range(8, -1, -1):
            digits[:, pos] = rem % s
            rem //= s
        mats = sub[digits]
        # Canonical representatives: first nonzero entry equals 1.
        first = np.argmax(mats != 0, axis=1)
        nonzero_any = (mats != 0).any(axis=1)
        lead = mats[np.arange(len(mats)), first]
        keep = nonzero_any & (lead == 1)
        mats = mats[keep]
        if not len(mats):
            continue
        det = _np_det(vmul, mats)
        mats = mats[det != 0]
        if not len(mats):
            continue
        # Apply to the panel: imgs[b, t, i] = sum_k m[b,i,k] * t[t,k]
        m3 = mats.reshape(-1, 3, 3)
        imgs = np.zeros((len(mats), len(panel), 3), dtype=np.int64)
        for i in range(3):
            acc = imgs[:, :, i]
            for k in range(3):
                acc ^= vmul(m3[:, None, i, k], tcoords[None, :, k])
            imgs[:, :, i] = acc
        fvals = eval_curve(imgs)  # (B, T)
        lhs = vmul(fvals[:, 1:], tvals[0])
        rhs = vmul(fvals[:, :1], tvals[None, 1:])
        ok = (lhs == rhs).all(axis=1)
        for row in mats[ok]:
            survivors.append(ProjMap(ctx, tuple(int(x) for x in row)))
    return survivors


def _np_det(vmul, mats):
    a, b, c = mats[:, 0], mats[:, 1], mats[:, 2]
    d, e, f = mats[:, 3], mats[:, 4], mats[:, 5]
    g, h, i = mats[:, 6], mats[:, 7], mats[:, 8]
    return (vmul(a, vmul(e, i) ^ vmul(f, h))
            ^ vmul(b, vmul(d, i) ^ vmul(f, g))
            ^ vmul(c, vmul(d, h) ^ vmul(e, g)))


# ----------------------------------------------------------------------
# The product-of-lines family: explicit structure, restriction, lift
# ----------------------------------------------------------------------

def star_gp1_element(ctx: FieldCtx, alpha: int) -> ProjMap:
    """(X:Y:Z) -> (X + aY + a^2 Z : Y : Z), the elation of G_{P_1} at a."""
    return ProjMap.make(ctx, (1, alpha, ctx.mul(alpha, alpha),
                              0, 1, 0,
                              0, 0, 1))


def star_gp2_element(ctx: FieldCtx, alpha: int) -> ProjMap:
    """(X:Y:Z) -> (X : Y : a^2 X + aY + Z), the elation of G_{P_2} at a."""
    return ProjMap.make(ctx, (1, 0, 0,
                              0, 1, 0,
                              ctx.mul(alpha, alpha), alpha, 1))


def star_h_element(ctx: FieldCtx, u: int) -> ProjMap:
    """diag(1, u, u^2): the two-point stabilizer H(C) at parameter u."""
    return ProjMap.make(ctx, (1, 0, 0, 0, u, 0, 0, 0, ctx.mul(u, u)))


def star_swap(ctx: FieldCtx) -> ProjMap:
    """(X:Y:Z) -> (Z:Y:X), exchanging the two distinguished Galois points."""
    return ProjMap.make(ctx, (0, 0, 1, 0, 1, 0, 1, 0, 0))


@dataclass
class StarStructure:
    """Explicit generators and Galois points of the product-of-lines family."""

    curve: PlaneCurve
    q: int
    gp1: tuple
    gp2: tuple
    galois_points: tuple  # (1:0:0) first, then (b:0:1) by b

    @staticmethod
    def build(curve: PlaneCurve) -> "StarStructure":
        if curve.family != "star":
            raise CurveError("not a product-of-lines family curve")
        ctx = curve.ctx
        q = curve.star_q
        e = q.bit_length() - 1
        sub = ctx.subfield_elements(e)
        gp1 = tuple(star_gp1_element(ctx, a) for a in sub)
        gp2 = tuple(star_gp2_element(ctx, a) for a in sub)
        pts = (ProjPoint.make(ctx, 1, 0, 0),) + tuple(
            ProjPoint.make(ctx, b, 0, 1) for b in sub)
        return StarStructure(curve, q, gp1, gp2, pts)

    @property
    def ctx(self) -> FieldCtx:
        return self.curve.ctx

    def closure_generators(self) -> list[ProjMap]:
        return list(self.gp1) + list(self.gp2)

    def galois_group_at(self, p: ProjPoint) -> list[ProjMap]:
        """G_P for a Galois point, by conjugating G_{P_2} along G_{P_1}."""
        ctx = self.ctx
        if p == self.galois_points[0]:
            return list(self.gp1)
        beta = p.coords[0]
        if p.coords != (beta, 0, 1):
            raise CurveError(f"{p} is not one of the family's Galois points")
        if beta == 0:
            return list(self.gp2)
        t = star_gp1_element(ctx, ctx.sqrt(beta))  # sends (0:0:1) to (b:0:1)
        tinv = t.inverse()
        return [t.compose(g).compose(tinv) for g in self.gp2]


# -- restriction to the Galois-point line ------------------------------------

Mat2 = tuple  # (m00, m01, m10, m11) acting on (X : Z) column vectors


def mat2_normalize(ctx: FieldCtx, m: Mat2) -> Mat2:
    for c in m:
        if c:
            inv = ctx.inv(c)
            return tuple(ctx.mul(inv, x) for x in m)
    raise CurveError("zero 2x2 matrix")


def mat2_apply(ctx: FieldCtx, m: Mat2, v: tuple) -> tuple:
    x, z = v
    out = (ctx.mul(m[0], x) ^ ctx.mul(m[1], z),
           ctx.mul(m[2], x) ^ ctx.mul(m[3], z))
    for c in out:
        if c:
            inv = ctx.inv(c)
            return (ctx.mul(inv, out[0]), ctx.mul(inv, out[1]))
    raise CurveError("singular 2x2 matrix")


def mat2_compose(ctx: FieldCtx, a: Mat2, b: Mat2) -> Mat2:
    return mat2_normalize(ctx, (
        ctx.mul(a[0], b[0]) ^ ctx.mul(a[1], b[2]),
        ctx.mul(a[0], b[1]) ^ ctx.mul(a[1], b[3]),
        ctx.mul(a[2], b[0]) ^ ctx.mul(a[3], b[2]),
        ctx.mul(a[2], b[1]) ^ ctx.mul(a[3], b[3]),
    ))


def mat2_inverse(ctx: FieldCtx, m: Mat2) -> Mat2:
    det = ctx.mul(m[0], m[3]) ^ ctx.mul(m[1], m[2])
    if det == 0:
        raise CurveError("singular 2x2 matrix")
    return mat2_normalize(ctx, (m[3], m[1], m[2], m[0]))


def star_restrict(m: ProjMap) -> Mat2:
    """Action of a line-Y-stabilizing projectivity on (X : Z) coordinates."""
    mat = m.matrix
    if mat[3] != 0 or mat[5] != 0:
        raise LineNotStable(f"{m} does not stabilize the line Y=0")
    return mat2_normalize(m.ctx, (mat[0], mat[2], mat[6], mat[8]))


def _restrict_matrix(m: ProjMap, line: ProjLine) -> Mat2:
    if line.coeffs == (0, 1, 0):
        return star_restrict(m)
    if line.coeffs == (0, 0, 1):
        mat = m.matrix
        if mat[6] != 0 or mat[7] != 0:
            raise LineNotStable(f"{m} does not stabilize the line Z=0")
        return mat2_normalize(m.ctx, (mat[0], mat[1], mat[3], mat[4]))
    raise CurveError("restriction is implemented for the lines Y=0 and Z=0")


def pgl2_elements(ctx: FieldCtx, d: int) -> list[Mat2]:
    """Canonical representatives of PGL(2, GF(2^d)); order q^3 - q."""
    sub = ctx.subfield_elements(d)
    out = []
    for k in range(4):
        head = (0,) * k + (1,)
        for tail in product(sub, repeat=3 - k):
            m = head + tail
            if ctx.mul(m[0], m[3]) ^ ctx.mul(m[1], m[2]):
                out.append(m)
    return out


@dataclass(frozen=True)
class LineAction:
    """Restriction of a group element to a line with marked rational points."""

    source: ProjMap
    mat2: Mat2
    permutation: tuple  # indices into the rational point list

    def to_json(self) -> dict:
        from .gf2e import elem_to_json
        return {"source": self.source.to_json(),
                "mat2": [elem_to_json(c) for c in self.mat2],
                "permutation": list(self.permutation)}


@dataclass
class RestrictionReport:
    actions: list
    injective: bool
    image_order: int
    image_is_pgl2: bool
    subfield_degree: int

    def to_json(self) -> dict:
        return {"injective": self.injective, "image_order": self.image_order,
                "image_is_pgl2": self.image_is_pgl2,
                "subfield_degree": self.subfield_degree}


def _line_coords(line: ProjLine, p: ProjPoint) -> tuple:
    """Two-coordinate form of a point on Y=0 (as X:Z) or Z=0 (as X:Y).

    Normalized projective points yield normalized pairs (first nonzero
    coordinate 1), matching mat2_apply's output convention.
    """
    x, y, z = p.coords
    if line.coeffs == (0, 1, 0):
        if y != 0:
            raise CurveError(f"{p} is not on the line Y=0")
        return (x, z)
    if line.coeffs == (0, 0, 1):
        if z != 0:
            raise CurveError(f"{p} is not on the line Z=0")
        return (x, y)
    raise CurveError("restriction is implemented for the lines Y=0 and Z=0")


def restrict_to_line(group, line: ProjLine, rational_set,
                     subfield_degree: int) -> RestrictionReport:
    """Restrict every element to the line and report the induced 2x2 classes.

    Raises LineNotStable when some element moves the line.  The report says
    whether the restriction map is injective and whether its image has the
    full order of PGL(2) over the designated subfield.
    """
    elements = group.elements if isinstance(group, AutGroup) else group
    ctx = line.ctx
    coords = [_line_coords(line, p) for p in rational_set]
    index = {c: i for i, c in enumerate(coords)}
    actions = []
    images = set()
    for m in elements:
        m2 = _restrict_matrix(m, line)
        if not all(ctx.in_subfield(c, subfield_degree) for c in m2):
            raise CurveError(f"restricted matrix {m2} is not F_q-rational")
        perm = tuple(index[mat2_apply(ctx, m2, c)] for c in coords)
        actions.append(LineAction(m, m2, perm))
        images.add(m2)
    q = 1 << subfield_degree
    report = RestrictionReport(
        actions=actions,
        injective=len(images) == len(list(elements)),
        image_order=len(images),
        image_is_pgl2=len(images) == q ** 3 - q,
        subfield_degree=subfield_degree,
    )
    return report


def lift_from_line(tau: Mat2, star: StarStructure,
                   verify: bool = True) -> ProjMap:
    """The unique curve automorphism restricting to tau on the line Y=0.

    Constructive: move tau into the two-point stabilizer with restricted
    Galois-group elements, lift the diagonal part through sqrt, and undo the
    moves.  Verified by restriction (and optionally by substitution).
    """
    ctx = star.ctx
    tau = mat2_normalize(ctx, tau)
    pts = star.galois_points
    line = ProjLine.make(ctx, 0, 1, 0)
    coords = [_line_coords(line, p) for p in pts]
    p1 = coords[0]   # (1:0:0) -> (1:0)
    p2 = coords[1]   # (0:0:1) -> (0:1)

    image_p1 = mat2_apply(ctx, tau, p1)
    gamma1 = None
    if image_p1 != p1:
        # Choose the first Galois point distinct from P_1 and tau(P_1).
        k = next(i for i, c in enumerate(coords)
                 if c != p1 and c != image_p1)
        for g in star.galois_group_at(pts[k]):
            r = star_restrict(g)
            if mat2_apply(ctx, r, image_p1) == p1:
                gamma1 = g
                break
        if gamma1 is None:
            raise NoLift(f"no element of G_{{{pts[k]}}} moves {image_p1} to P1")
        delta = mat2_compose(ctx, star_restrict(gamma1), tau)
    else:
        delta = tau

    image_p2 = mat2_apply(ctx, delta, p2)
    gamma2 = None
    for g in star.gp1:
        r = star_restrict(g)
        if mat2_apply(ctx, r, image_p2) == p2:
            gamma2 = g
            break
    if gamma2 is None:
        raise NoLift(f"no element of G_P1 moves {image_p2} to P2")

    h = mat2_compose(ctx, star_restrict(gamma2), delta)
    if h[1] != 0 or h[2] != 0:
        raise NoLift(f"reduced matrix {h} is not diagonal")
    t = ctx.div(h[3], h[0])
    lift_h = star_h_element(ctx, ctx.sqrt(t))

    out = lift_h
    out = gamma2.inverse().compose(out)
    if gamma1 is not None:
        out = gamma1.inverse().compose(out)
    if star_restrict(out) != tau:
        raise NoLift(f"lift restricts to {star_restrict(out)} != {tau}")
    if verify and not cv.stabilizes(star.curve, out):
        raise NoLift("lift does not stabilize the curve")
    return out


# ----------------------------------------------------------------------
# Identification
# ----------------------------------------------------------------------

@dataclass
class IdentifyReport:
    kind: str
    ok: bool
    order: int
    details: dict
    mismatches: list

    def to_json(self) -> dict:
        return {"kind": self.kind, "ok": self.ok, "order": self.order,
                "details": self.details, "mismatches": self.mismatches}


def identify_star(group: AutGroup, q: int, galois_points) -> IdentifyReport:
    """Check the PGL(2, F_q) identification for the product-of-lines family.

    Order q^3 - q, bijective restriction to the Galois-point line, and sharp
    3-transitivity on the q+1 Galois points.
    """
    ctx = group.ctx
    mismatches = []
    details = {}
    expected = q ** 3 - q
    details["expected_order"] = expected
    if group.order != expected:
        mismatches.append(f"order {group.order} != {expected}")

    e = q.bit_length() - 1
    line = ProjLine.make(ctx, 0, 1, 0)
    try:
        report = restrict_to_line(group, line, galois_points, e)
        details["restriction"] = report.to_json()
        if not report.injective:
            mismatches.append("restriction to the line is not injective")
        if not report.image_is_pgl2:
            mismatches.append(
                f"restriction image order {report.image_order} != {expected}")
    except (LineNotStable, CurveError) as err:
        mismatches.append(f"restriction failed: {err}")

    triple = tuple(galois_points[:3])
    seen = {}
    for m in group.elements:
        img = tuple(m.apply(p) for p in triple)
        if img in seen:
            mismatches.append(f"two elements share the triple image {img}")
            break
        seen[img] = m
    n_pts = len(galois_points)
    expected_triples = n_pts * (n_pts - 1) * (n_pts - 2)
    details["ordered_triples"] = expected_triples
    pt_set = set(galois_points)
    if any(p not in pt_set for img in seen for p in img):
        mismatches.append("triple image leaves the Galois point set")
    if len(seen) != group.order:
        mismatches.append("triple action is not free")
    if group.order == expected_triples and len(seen) == expected_triples:
        details["sharply_3_transitive"] = True
    else:
        details["sharply_3_transitive"] = False
        mismatches.append(
            f"triple action not sharply transitive: {len(seen)} images, "
            f"{expected_triples} ordered triples")
    return IdentifyReport("star", not mismatches, group.order, details,
                          mismatches)


S4_ORDER_CENSUS = {1: 1, 2: 9, 3: 8, 4: 6}


def identify_doublestar(group: AutGroup, quadrangle) -> IdentifyReport:
    """Check the S_4 identification for the quartic family.

    Order 24, faithful permutation action on the four quadrangle points, and
    the S_4 element-order census {1:1, 2:9, 3:8, 4:6}.
    """
    mismatches = []
    details = {"expected_order": 24}
    if group.order != 24:
        mismatches.append(f"order {group.order} != 24")
    perms = set()
    for m in group.elements:
        images = []
        for p in quadrangle:
            img = m.apply(p)
            if img not in quadrangle:
                mismatches.append(f"{m} moves {p} off the quadrangle")
                break
            images.append(quadrangle.index(img))
        else:
            perms.add(tuple(images))
    details["distinct_permutations"] = len(perms)
    if len(perms) != group.order:
        mismatches.append("action on the quadrangle is not faithful")
    if len(perms) != 24:
        mismatches.append(f"permutation image has {len(perms)} < 24 elements")
    census: dict[int, int] = {}
    for m in group.elements:
        census[m.order()] = census.get(m.order(), 0) + 1
    details["order_census"] = census
    if census != S4_ORDER_CENSUS:
        mismatches.append(f"order census {census} != {S4_ORDER_CENSUS}")
    return IdentifyReport("doublestar", not mismatches, group.order, details,
                          mismatches)


def two_point_stabilizer(group: AutGroup, p1: ProjPoint, p2: ProjPoint):
    return [m for m in group.elements
            if m.fixes_point(p1) and m.fixes_point(p2)]
