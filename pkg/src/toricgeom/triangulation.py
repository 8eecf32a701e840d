"""Fine regular star triangulations of small lattice point configurations.

The origin is adjoined as the star apex (it gets the last index).  Star
triangulations are realized by triangulating the boundary of the hull and
coning over the origin; in rank 2 the full fine-triangulation enumerator
runs on the configuration directly and star candidates are filtered out,
in rank 3 each hull facet is triangulated independently in its own plane
and the choices are combined.  Regularity is decided last, via an exact LP
whose witness heights are kept on the triangulation as a certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedInputError, ValidationError
from .lattice import Vec, solve_rational, vec
from .polyhedral import Polyhedron, convex_hull, lp_feasible_point
from .toric_variety import NormalToricVariety, normal_toric_variety


@dataclass(frozen=True)
class PointConfiguration:
    """Distinct candidate ray points; the origin itself must not be listed."""

    ambient_rank: int
    points: tuple[Vec, ...]

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if any(len(p) != self.ambient_rank for p in pts):
            raise ValidationError("point length does not match ambient rank")
        if len(set(pts)) != len(pts):
            raise ValidationError("configuration points must be distinct")
        if any(not any(p) for p in pts):
            raise ValidationError("the origin is adjoined automatically; do not list it")

    @classmethod
    def from_points(cls, points) -> "PointConfiguration":
        points = [vec(p) for p in points]
        if not points:
            raise ValidationError("empty point configuration")
        return cls(len(points[0]), tuple(points))

    @property
    def origin_index(self) -> int:
        return len(self.points)

    def points_with_origin(self) -> tuple[Vec, ...]:
        return self.points + ((0,) * self.ambient_rank,)


@dataclass(frozen=True)
class Triangulation:
    """Simplices index into points + adjoined origin; heights certify
    regularity (re-checkable by plain arithmetic)."""

    configuration: PointConfiguration
    simplices: tuple[tuple[int, ...], ...]
    heights: tuple[Fraction, ...]

    def boundary_simplices(self) -> tuple[tuple[int, ...], ...]:
        o = self.configuration.origin_index
        return tuple(tuple(i for i in s if i != o) for s in self.simplices)


# ---------------------------------------------------------------------------
# exact 2D primitives


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _in_closed_triangle(p, a, b, c) -> bool:
    d1 = _cross(a, b, p)
    d2 = _cross(b, c, p)
    d3 = _cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def _hull_cycle(pts) -> list[int]:
    """Counterclockwise cycle of all point indices on the hull boundary."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def chain(indices):
        out = []
        for i in indices:
            while len(out) >= 2 and _cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 1:
        return hull
    # insert collinear boundary points along each hull edge
    cycle = []
    for k in range(len(hull)):
        a, b = hull[k], hull[(k + 1) % len(hull)]
        pa, pb = pts[a], pts[b]
        on_edge = []
        for i in range(len(pts)):
            if i in (a, b):
                continue
            p = pts[i]
            if _cross(pa, pb, p) == 0 and all(
                    min(x, y) <= z <= max(x, y) for x, y, z in zip(pa, pb, p)):
                on_edge.append(i)
        on_edge.sort(key=lambda i: (abs(pts[i][0] - pa[0]), abs(pts[i][1] - pa[1])))
        cycle.append(a)
        cycle.extend(on_edge)
    return cycle


def _polygon_area2(pts, cycle) -> Fraction:
    total = Fraction(0)
    for k in range(len(cycle)):
        a = pts[cycle[k]]
        b = pts[cycle[(k + 1) % len(cycle)]]
        total += Fraction(a[0]) * b[1] - Fraction(a[1]) * b[0]
    return abs(total)


def _fine_triangulations_2d(pts) -> list[frozenset[tuple[int, int, int]]]:
    """All triangulations of conv(pts) using every point as a vertex.

    Candidate triangles are the empty ones (no third configuration point in
    the closed triangle); an advancing front over directed edges enumerates
    exact covers, and a final area identity guards against overlaps.
    """
    npts = len(pts)
    if npts < 3:
        return []
    cycle = _hull_cycle(pts)
    hull_area2 = _polygon_area2(pts, cycle)
    if hull_area2 == 0:
        return []

    candidates = []
    for i, j, k in itertools.combinations(range(npts), 3):
        if _cross(pts[i], pts[j], pts[k]) == 0:
            continue
        if any(q not in (i, j, k) and _in_closed_triangle(pts[q], pts[i], pts[j], pts[k])
               for q in range(npts)):
            continue
        candidates.append((i, j, k))

    by_edge: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for tri in candidates:
        i, j, k = tri
        if _cross(pts[i], pts[j], pts[k]) > 0:
            ccw = (i, j, k)
        else:
            ccw = (i, k, j)
        a, b, c = ccw
        for e in ((a, b), (b, c), (c, a)):
            by_edge.setdefault(e, []).append(ccw)

    start_front = frozenset((cycle[k], cycle[(k + 1) % len(cycle)])
                            for k in range(len(cycle)))
    results: list[frozenset] = []

    def dfs(front: frozenset, chosen: frozenset):
        if not front:
            used = {i for tri in chosen for i in tri}
            if len(used) != npts:
                return
            area2 = sum(abs(_cross(pts[a], pts[b], pts[c])) for a, b, c in chosen)
            if area2 == hull_area2:
                results.append(chosen)
            return
        edge = min(front)
        for ccw in by_edge.get(edge, ()):
            a, b, c = ccw
            edges = ((a, b), (b, c), (c, a))
            new_front = set(front)
            ok = True
            for d in edges:
                if d in new_front:
                    new_front.discard(d)
                else:
                    rev = (d[1], d[0])
                    if rev in new_front:
                        ok = False  # the region left of d is already filled
                        break
                    new_front.add(rev)
            if not ok:
                continue
            dfs(frozenset(new_front), chosen | {frozenset(ccw)})

    dfs(start_front, frozenset())
    normalized = {frozenset(tuple(sorted(t)) for t in tri_set) for tri_set in results}
    return sorted(normalized, key=lambda s: sorted(s))


# ---------------------------------------------------------------------------
# star candidates by rank


def _star_candidates_rank1(config: PointConfiguration):
    pts = config.points
    if len(pts) != 2 or (pts[0][0] > 0) == (pts[1][0] > 0):
        return []
    o = config.origin_index
    return [tuple(sorted((tuple(sorted((i, o))) for i in range(2))))]


def _star_candidates_rank2(config: PointConfiguration):
    pts = config.points_with_origin()
    o = config.origin_index
    out = []
    for tri_set in _fine_triangulations_2d(pts):
        tris = sorted(tuple(sorted(t)) for t in tri_set)
        if all(o in t for t in tris):
            out.append(tuple(tris))
    return out


def _facet_plane_coords(points, facet_indices):
    """Exact 2D coordinates of coplanar 3D points, via two edge vectors."""
    base = points[facet_indices[0]]
    basis = []
    for i in facet_indices[1:]:
        v = tuple(x - y for x, y in zip(points[i], base))
        trial = basis + [v]
        if _rank3(trial) == len(trial):
            basis.append(v)
        if len(basis) == 2:
            break
    if len(basis) < 2:
        return None
    rows = [[basis[0][c], basis[1][c]] for c in range(3)]
    coords = []
    for i in facet_indices:
        rhs = [points[i][c] - base[c] for c in range(3)]
        sol = solve_rational(rows, rhs)
        if sol is None:
            raise ValidationError("facet points are not coplanar")
        coords.append((sol[0], sol[1]))
    return coords


def _rank3(vectors) -> int:
    from .lattice import rational_rank
    return rational_rank(vectors)


def _star_candidates_rank3(config: PointConfiguration):
    pts = config.points
    hull = convex_hull(list(pts) + [(0, 0, 0)])
    ineqs = hull.inequalities
    on_boundary = [any(sum(a * x for a, x in zip(normal, p)) == offset
                       for normal, offset in ineqs) for p in pts]
    if not all(on_boundary):
        return []  # an interior non-origin point can never be used by a star
    facet_triangulations = []
    for normal, offset in ineqs:
        facet_pts = [i for i, p in enumerate(pts)
                     if sum(a * x for a, x in zip(normal, p)) == offset]
        coords = _facet_plane_coords(pts, facet_pts)
        if coords is None:
            raise ValidationError("degenerate hull facet")
        local = _fine_triangulations_2d(coords)
        if not local:
            return []
        lifted = []
        for tri_set in local:
            lifted.append(sorted(tuple(sorted(facet_pts[i] for i in t)) for t in tri_set))
        facet_triangulations.append(lifted)
    o = config.origin_index
    out = []
    for combo in itertools.product(*facet_triangulations):
        tets = sorted(tuple(sorted(t + (o,))) for facet in combo for t in facet)
        out.append(tuple(tets))
    return out


# ---------------------------------------------------------------------------
# regularity


def regularity_system(points_full, simplices):
    """Strict constraints over one height per point certifying regularity:
    for every simplex S and point q outside S, the affine interpolation of
    the heights over S must undercut the height of q."""
    nv = len(points_full)
    rank = len(points_full[0])
    stricts = []
    for s in simplices:
        verts = [points_full[i] for i in s]
        rows = [[Fraction(verts[j][c]) for j in range(len(s))] for c in range(rank)]
        rows.append([Fraction(1)] * len(s))
        for q in range(nv):
            if q in s:
                continue
            rhs = [Fraction(x) for x in points_full[q]] + [Fraction(1)]
            bary = solve_rational(rows, rhs)
            if bary is None:
                raise ValidationError("simplex is degenerate")
            coeffs = [Fraction(0)] * nv
            for j, idx in enumerate(s):
                coeffs[idx] += bary[j]
            coeffs[q] -= 1
            stricts.append((coeffs, Fraction(0)))  # interp(q) - w_q < 0
    return stricts


def verify_regularity_certificate(points_full, simplices, heights) -> bool:
    """Plain-arithmetic recheck of LP witness heights."""
    for coeffs, rhs in regularity_system(points_full, simplices):
        if sum(c * h for c, h in zip(coeffs, heights)) >= rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# public surface


def frst_enumerate(config: PointConfiguration) -> tuple[Triangulation, ...]:
    """All fine regular star triangulations, deterministically ordered."""
    if config.ambient_rank > 3 or config.ambient_rank < 1:
        raise UnsupportedInputError("star triangulations are supported in ranks 1..3")
    hull = convex_hull(list(config.points))
    origin = (0,) * config.ambient_rank
    strictly_inside = (not hull.is_empty) and all(
        sum(a * x for a, x in zip(normal, origin)) < offset
        for normal, offset in hull.inequalities)
    if not strictly_inside:
        raise UnsupportedInputError("the origin must be interior to the hull")

    if config.ambient_rank == 1:
        candidates = _star_candidates_rank1(config)
    elif config.ambient_rank == 2:
        candidates = _star_candidates_rank2(config)
    else:
        candidates = _star_candidates_rank3(config)

    pts_full = config.points_with_origin()
    out = []
    for simplices in sorted(set(candidates)):
        witness = lp_feasible_point(regularity_system(pts_full, simplices), [])
        if witness is None:
            continue
        out.append(Triangulation(config, tuple(simplices), tuple(witness)))
    return tuple(out)


def varieties_from_star_triangulations(config: PointConfiguration
                                       ) -> tuple[NormalToricVariety, ...]:
    """One variety per FRST: the used points become rays (input order) and
    the origin-coned simplices, with the origin dropped, the maximal cones."""
    out = []
    for tri in frst_enumerate(config):
        cones = tri.boundary_simplices()
        out.append(normal_toric_variety(config.points, cones,
                                        ambient_rank=config.ambient_rank))
    return tuple(out)
