"""Projections from a point: ramification profiles, Galois groups, scans.

The projection of a plane curve from a point P maps each curve point to the
line joining it to P (to the tangent line at P itself when P is on the
curve).  Ramification indices are intersection multiplicities of the curve
with lines through P, with the center's own contribution reduced by one.
P is a Galois point exactly when the group of curve-stabilizing
perspectivities with center P has order equal to the projection degree;
for smooth plane curves of degree >= 4 every automorphism is linear, so
this criterion is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import curves as cv
from . import polyring as pr
from .curves import CurveError, PlaneCurve
from .gf2e import FieldCtx
from .projgeom import (ProjLine, ProjMap, ProjPoint, line_through,
                       perspectivities_with_center, plane_points)


class SingularCurve(CurveError):
    """A projection operation hit a singular point."""


@dataclass(frozen=True)
class FiberEntry:
    """One cluster of fiber points on a branch line.

    Rational points carry the point; conjugate clusters over an extension of
    the working field carry point=None and the residue degree of the cluster
    (the number of conjugate points it represents).
    """

    ram_index: int
    point: ProjPoint | None = None
    residue_degree: int = 1

    def weight(self) -> int:
        return self.ram_index * self.residue_degree

    def to_json(self) -> dict:
        return {
            "ram_index": self.ram_index,
            "point": self.point.to_json() if self.point else None,
            "residue_degree": self.residue_degree,
        }


@dataclass(frozen=True)
class Branch:
    line: ProjLine
    fiber: tuple

    def indices(self) -> list[int]:
        return [f.ram_index for f in self.fiber]

    def to_json(self) -> dict:
        return {"line": self.line.to_json(),
                "fiber": [f.to_json() for f in self.fiber]}


@dataclass
class RamProfile:
    """Ramified branches of the projection from a center point.

    Branches where every ramification index is 1 are omitted.  For each
    branch the fiber weights sum to the projection degree.
    """

    center: ProjPoint
    on_curve: bool
    proj_degree: int
    branches: list
    search_degree: int
    genus: int
    notes: list = field(default_factory=list)

    def has_unresolved_fibers(self) -> bool:
        return any(f.residue_degree > 1 for b in self.branches for f in b.fiber)

    def branch_ram_indices(self) -> list[int]:
        """The common ramification index per branch (Galois covers only)."""
        out = []
        for b in self.branches:
            idx = {f.ram_index for f in b.fiber}
            if len(idx) != 1:
                raise CurveError(
                    f"branch {b.line} has mixed ramification {sorted(idx)}; "
                    "not a Galois-cover profile")
            out.append(idx.pop())
        return out

    def riemann_hurwitz_checksum(self) -> dict:
        """Wild-different budget: 2g-2+2*deg minus the tame ramification sum.

        The different exponent of a point is at least e-1, strictly larger
        exactly at wild points (even e in characteristic 2), so the defect
        must be nonnegative and must be positive when any index is even.
        """
        tame = sum((f.ram_index - 1) * f.residue_degree
                   for b in self.branches for f in b.fiber)
        budget = 2 * self.genus - 2 + 2 * self.proj_degree
        defect = budget - tame
        wild_points = sum(f.residue_degree for b in self.branches
                          for f in b.fiber if f.ram_index % 2 == 0)
        ok = defect >= 0 and (wild_points == 0 or defect >= wild_points)
        return {"different_budget": budget, "tame_sum": tame,
                "wild_defect": defect, "wild_points": wild_points, "ok": ok}

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "on_curve": self.on_curve,
            "proj_degree": self.proj_degree,
            "search_degree": self.search_degree,
            "branches": [b.to_json() for b in self.branches],
            "riemann_hurwitz": self.riemann_hurwitz_checksum(),
            "notes": self.notes,
        }


def projection_degree(curve: PlaneCurve, p: ProjPoint) -> int:
    return curve.degree - 1 if curve.contains(p) else curve.degree


def lines_through(ctx: FieldCtx, p: ProjPoint, d: int) -> list[ProjLine]:
    """The pencil of lines through p with coefficients in GF(2^d)."""
    x, y, z = p.coords
    # Coefficient triples orthogonal to p form a 2-dim space; pick a basis
    # by the position of the first nonzero coordinate of p.
    if x:
        u, v = (y, x, 0), (z, 0, x)
    elif y:
        u, v = (1, 0, 0), (0, z, y)
    else:
        u, v = (1, 0, 0), (0, 1, 0)
    sub = ctx.subfield_elements(d)
    mul = ctx.mul
    out = [ProjLine.make(ctx, u[0] ^ mul(t, v[0]), u[1] ^ mul(t, v[1]),
                         u[2] ^ mul(t, v[2])) for t in sub]
    out.append(ProjLine.make(ctx, *v))
    return out


def ramification_profile(curve: PlaneCurve, p: ProjPoint,
                         search_degree: int) -> RamProfile:
    """Ramification data of the projection from p, over GF(2^search_degree).

    Lines through p are enumerated over the search field; the restriction to
    each line is fully factored, so clusters of conjugate fiber points over
    extensions of the search field are still recorded with their exact
    multiplicities (as residue-degree entries).
    """
    ctx = curve.ctx
    if ctx.n % search_degree != 0:
        raise CurveError(f"search degree {search_degree} not inside GF(2^{ctx.n})")
    on_curve = curve.contains(p)
    deg = projection_degree(curve, p)
    if on_curve:
        cv.tangent_line(curve, p)  # raises SingularPoint at a bad center
    branches = []
    notes = []
    for line in lines_through(ctx, p, search_degree):
        entries = _fiber_entries(curve, line, p, on_curve)
        weight = sum(f.weight() for f in entries)
        if weight != deg:
            raise SingularCurve(
                f"fiber over {line} has weight {weight} != degree {deg}; "
                "the curve is singular along this line")
        if any(f.ram_index > 1 for f in entries):
            branches.append(Branch(line, tuple(entries)))
    profile = RamProfile(p, on_curve, deg, branches, search_degree,
                         curve.genus, notes)
    if profile.has_unresolved_fibers():
        notes.append("some fiber clusters are irrational over the search field")
    return profile


def _fiber_entries(curve, line, p, on_curve):
    """Fiber of the projection over one line through the center.

    The center appears in its own fiber with index one less than its contact
    order with the line, so it drops out entirely on non-tangent lines.
    """
    try:
        rational, residual = cv.line_intersections(curve, line)
    except cv.LineInCurve:
        raise SingularCurve(f"{line} is a component of the curve")
    entries = []
    for pt, mult in rational:
        if on_curve and pt == p:
            if mult - 1 >= 1:
                entries.append(FiberEntry(mult - 1, pt))
            continue
        entries.append(FiberEntry(mult, pt))
    for deg, mult in residual:
        entries.append(FiberEntry(mult, None, deg))
    return entries


# ----------------------------------------------------------------------
# Galois groups at a point
# ----------------------------------------------------------------------

@dataclass
class PointGaloisGroup:
    center: ProjPoint
    elements: tuple
    order: int

    def to_json(self) -> dict:
        return {"center": self.center.to_json(), "order": self.order,
                "elements": [m.to_json() for m in self.elements]}


def point_galois_group(curve: PlaneCurve, p: ProjPoint,
                       field_degree: int | None = None,
                       within=None) -> PointGaloisGroup:
    """Curve-stabilizing perspectivities with center p.

    With `within` (a certified full automorphism list) the group is the
    exact Galois group at p; otherwise candidates are all perspectivities
    with center p over GF(2^field_degree), which is exact whenever the group
    is rational over that field.
    """
    if within is not None:
        elems = [m for m in within if m.is_perspectivity_with_center(p)]
    else:
        if field_degree is None:
            raise CurveError("need field_degree when no ambient group is given")
        cands = perspectivities_with_center(p, field_degree)
        elems = [m for m in cands if cv.stabilizes(curve, m)]
    elems.sort(key=lambda m: m.matrix)
    return PointGaloisGroup(p, tuple(elems), len(elems))


def is_galois_point(curve: PlaneCurve, p: ProjPoint,
                    field_degree: int | None = None,
                    within=None, confirm_stability: bool = True) -> bool:
    """Group-order criterion: |G_P| equals the projection degree.

    Without a certified ambient group the search runs over
    GF(2^field_degree) and, when the doubled degree still divides the
    ambient degree, once more over GF(2^(2*field_degree)) to confirm
    stability of the group order.
    """
    target = projection_degree(curve, p)
    group = point_galois_group(curve, p, field_degree, within)
    if within is None and confirm_stability and field_degree is not None:
        if curve.ctx.n % (2 * field_degree) == 0:
            bigger = point_galois_group(curve, p, 2 * field_degree)
            if bigger.order != group.order:
                return bigger.order == target
    return group.order == target


def galois_scan(curve: PlaneCurve, where: str, field_degree: int,
                within=None, threads: int = 1) -> list[ProjPoint]:
    """All Galois points rational over GF(2^field_degree), on or off the curve."""
    if where not in ("on_curve", "off_curve"):
        raise CurveError(f"where must be on_curve/off_curve, got {where!r}")
    if where == "on_curve":
        candidates = cv.rational_points(curve, field_degree)
    else:
        on = set(cv.rational_points(curve, field_degree))
        candidates = [p for p in plane_points(curve.ctx, field_degree)
                      if p not in on]

    def check(p: ProjPoint) -> bool:
        return is_galois_point(curve, p, field_degree, within,
                               confirm_stability=False)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(check, candidates))
    else:
        flags = [check(p) for p in candidates]
    out = [p for p, ok in zip(candidates, flags) if ok]
    out.sort(key=lambda p: p.coords)
    return out


def is_tangent_line(curve: PlaneCurve, line: ProjLine) -> bool:
    """True iff the line meets the curve with multiplicity >= 2 somewhere."""
    rational, residual = cv.line_intersections(curve, line)
    return (any(m >= 2 for _, m in rational)
            or any(m >= 2 for _, m in residual))


def tangent_quadrangle(curve: PlaneCurve, pencil_points, field_degree: int):
    """The complete quadrangles whose six sides are tangents through the pencil.

    Searches for sets of four points, no three collinear and none on the
    line carrying the pencil points, such that the line joining any two is
    tangent to the curve and passes through one of the pencil points.
    Candidate points are the pairwise intersections of tangent lines from
    distinct pencils over GF(2^field_degree).  Returns a list of sorted
    4-tuples (expected to be a single quadrangle for the quartic family).
    """
    from itertools import combinations
    from .projgeom import intersect_lines

    carrier = line_through(pencil_points[0], pencil_points[1])
    if any(not p.on_line(carrier) for p in pencil_points):
        raise CurveError("pencil points are not collinear")
    pencils = []
    for p in pencil_points:
        tangents = [ln for ln in lines_through(curve.ctx, p, field_degree)
                    if ln != carrier and is_tangent_line(curve, ln)]
        pencils.append(tangents)
    tangent_set = {ln for pencil in pencils for ln in pencil} | (
        {carrier} if is_tangent_line(curve, carrier) else set())

    candidates = set()
    for i in range(len(pencils)):
        for j in range(i + 1, len(pencils)):
            for l1 in pencils[i]:
                for l2 in pencils[j]:
                    if l1 == l2:
                        continue
                    pt = intersect_lines(l1, l2)
                    if not pt.on_line(carrier):
                        candidates.add(pt)
    candidates = sorted(candidates, key=lambda p: p.coords)

    def related(a: ProjPoint, b: ProjPoint) -> bool:
        ln = line_through(a, b)
        return ln in tangent_set and any(p.on_line(ln) for p in pencil_points)

    quadrangles = []
    for quad in combinations(candidates, 4):
        if any(line_through(a, b).contains(c)
               for a, b, c in combinations(quad, 3)):
            continue  # three collinear: not a quadrangle
        if all(related(a, b) for a, b in combinations(quad, 2)):
            quadrangles.append(tuple(sorted(quad, key=lambda p: p.coords)))
    return quadrangles


def transitivity_check(curve: PlaneCurve, points: list[ProjPoint],
                       groups: list[PointGaloisGroup] | None = None,
                       field_degree: int | None = None) -> bool:
    """For all distinct i, j, k: some element of G_{P_i} maps P_j to P_k."""
    if groups is None:
        groups = [point_galois_group(curve, p, field_degree) for p in points]
    n = len(points)
    for i in range(n):
        maps = groups[i].elements
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) != 3:
                    continue
                if not any(m.apply(points[j]) == points[k] for m in maps):
                    return False
    return True
