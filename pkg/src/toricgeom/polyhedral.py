"""Rational cones and polyhedra with exact arithmetic.

Cones carry both a generator description and an inequality description and
complete the missing one lazily via an incremental double description sweep.
Polyhedra are handled through their homogenization cone one rank up, so
unbounded, lower-dimensional and empty cases fall out of the cone machinery
instead of being special-cased.

The lazy V/H completion is idempotent: recomputation always yields the same
canonical data, so concurrent reads are safe.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import UnsupportedInputError, ValidationError
from .lattice import (IntMatrix, Vec, dot, kernel_basis, primitivize,
                      rational_rank, solve_rational, vec, vneg)

# ---------------------------------------------------------------------------
# double description


def _halfspace_cut(lin, rays, normal):
    """Intersect the cone span(lin) + cone(rays) with {<normal, .> >= 0}."""
    split = next((l for l in lin if dot(normal, l) != 0), None)
    if split is not None:
        l0 = split if dot(normal, split) > 0 else vneg(split)
        a0 = dot(normal, l0)
        new_lin = []
        for l in lin:
            if l is split:
                continue
            al = dot(normal, l)
            new_lin.append(primitivize(tuple(a0 * x - al * y for x, y in zip(l, l0))))
        new_rays = []
        for r in rays:
            ar = dot(normal, r)
            new_rays.append(primitivize(tuple(a0 * x - ar * y for x, y in zip(r, l0))))
        new_rays.append(l0)
        return new_lin, _dedupe(new_rays)
    pos = [r for r in rays if dot(normal, r) > 0]
    zero = [r for r in rays if dot(normal, r) == 0]
    neg = [r for r in rays if dot(normal, r) < 0]
    combos = []
    for rp in pos:
        ap = dot(normal, rp)
        for rn in neg:
            an = dot(normal, rn)
            combos.append(primitivize(tuple(ap * x - an * y for x, y in zip(rn, rp))))
    return lin, _dedupe(pos + zero + combos)


def _dedupe(vectors):
    seen = set()
    out = []
    for v in vectors:
        if any(v) and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _dual_description(normals, n):
    """Canonical generators of {y : <v, y> >= 0 for all v in normals}.

    Returns (lineality basis, extreme rays modulo lineality).  The lineality
    basis comes from the saturated integer kernel of the normal matrix, so it
    is canonical; the rays are pruned to extreme ones by the active-set rank
    test and sorted.
    """
    normals = sorted(_dedupe(vec(v) for v in normals))
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays = []
    for v in normals:
        lin, rays = _halfspace_cut(lin, rays, v)
    if normals:
        km = kernel_basis(IntMatrix.from_rows(normals))
        lin = [km.col(j) for j in range(km.cols)]
    ldim = len(lin)
    keep = []
    for r in sorted(set(rays)):
        active = [v for v in normals if dot(v, r) == 0]
        if rational_rank(active) == n - ldim - 1:
            keep.append(r)
    return [tuple(l) for l in lin], keep


def _generator_list(lin, rays):
    return tuple(sorted(set(rays) | set(lin) | {vneg(l) for l in lin}))


class Cone:
    """A rational polyhedral cone in a fixed-rank lattice.

    ``rays`` is the canonical generator list: for pointed cones these are the
    extreme rays (primitive, lex-sorted); non-pointed cones additionally carry
    a +/- pair for each lineality basis vector.  ``facets`` is the canonical
    inequality system <a, x> >= 0 in the same sense on the dual side (a
    lower-dimensional cone gets +/- pairs encoding its span equations).
    """

    __slots__ = ("ambient_rank", "_in_gens", "_in_normals", "_rays", "_facets")

    def __init__(self, ambient_rank: int, generators=None, normals=None):
        if generators is None and normals is None:
            raise ValidationError("a cone needs generators or inequality normals")
        self.ambient_rank = ambient_rank
        for group in (generators, normals):
            if group is not None:
                for v in group:
                    if len(v) != ambient_rank:
                        raise ValidationError("vector length does not match ambient rank")
        self._in_gens = None if generators is None else tuple(
            sorted(_dedupe(primitivize(vec(g)) for g in generators)))
        self._in_normals = None if normals is None else tuple(
            sorted(_dedupe(primitivize(vec(a)) for a in normals)))
        self._rays = None
        self._facets = None

    # -- lazy completion ----------------------------------------------------

    @property
    def facets(self) -> tuple[Vec, ...]:
        if self._facets is None:
            source = self._in_gens if self._in_gens is not None else self.rays
            lin, rays = _dual_description(source, self.ambient_rank)
            self._facets = _generator_list(lin, rays)
        return self._facets

    @property
    def rays(self) -> tuple[Vec, ...]:
        if self._rays is None:
            source = self._in_normals if self._in_normals is not None else self.facets
            lin, rays = _dual_description(source, self.ambient_rank)
            self._rays = _generator_list(lin, rays)
        return self._rays

    # -- basic queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        return rational_rank(self.rays)

    @property
    def lineality_dim(self) -> int:
        return self.ambient_rank - rational_rank(self.facets)

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    def contains(self, x) -> bool:
        if len(x) != self.ambient_rank:
            raise ValidationError("point length does not match ambient rank")
        return all(dot(a, x) >= 0 for a in self.facets)

    def same_cone(self, other: "Cone") -> bool:
        if self.ambient_rank != other.ambient_rank:
            return False
        return (all(other.contains(r) for r in self.rays)
                and all(self.contains(r) for r in other.rays))

    def __repr__(self):
        return f"Cone(rank={self.ambient_rank}, rays={list(self.rays)})"


def positive_hull(generators, ambient_rank: int | None = None) -> Cone:
    """Smallest cone containing the given integer vectors."""
    generators = [vec(g) for g in generators]
    if not generators and ambient_rank is None:
        raise ValidationError("positive_hull needs generators or an ambient rank")
    if generators:
        ambient_rank = len(generators[0])
        if any(len(g) != ambient_rank for g in generators):
            raise ValidationError("generators of mixed dimension")
    return Cone(ambient_rank, generators=generators)


def dual_cone(c: Cone) -> Cone:
    """{m : <m, v> >= 0 for every v in c}; involutive on closed cones."""
    return Cone(c.ambient_rank, generators=c.facets)


def cone_dim(c: Cone) -> int:
    return c.dim


def intersect_cones(a: Cone, b: Cone) -> Cone:
    if a.ambient_rank != b.ambient_rank:
        raise ValidationError("cones live in different ranks")
    return Cone(a.ambient_rank, normals=a.facets + b.facets)


def meet_in_common_face(a: Cone, b: Cone) -> bool:
    """True when the intersection of the two cones is a face of each."""
    inter = intersect_cones(a, b)
    gens = inter.rays
    for c, other in ((a, b), (b, a)):
        active = [f for f in c.facets if all(dot(f, g) == 0 for g in gens)]
        face = [r for r in c.rays if all(dot(f, r) == 0 for f in active)]
        if any(not other.contains(r) for r in face):
            return False
    return True


# ---------------------------------------------------------------------------
# Hilbert bases


def _simplicial_pieces(rays, facets, n):
    """Split a pointed cone into simplicial subcones by pulling at rays[0]."""
    d = rational_rank(rays)
    if len(rays) == d:
        return [list(rays)]
    apex = rays[0]
    pieces = []
    for f in facets:
        if dot(f, apex) == 0:
            continue
        fr = [r for r in rays if dot(f, r) == 0]
        sub = Cone(n, generators=fr)
        for piece in _simplicial_pieces(sub.rays, sub.facets, n):
            pieces.append([apex] + piece)
    return pieces


def _parallelepiped_points(basis, n):
    """Lattice points of {sum t_i b_i : 0 <= t_i < 1} for independent b_i."""
    sums = [tuple(sum(b[i] for b in sub) for i in range(n))
            for k in range(len(basis) + 1)
            for sub in itertools.combinations(basis, k)]
    lo = [min(s[i] for s in sums) for i in range(n)]
    hi = [max(s[i] for s in sums) for i in range(n)]
    rows = [[b[i] for b in basis] for i in range(n)]
    out = []
    for p in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        t = solve_rational(rows, p)
        if t is not None and all(0 <= ti < 1 for ti in t):
            out.append(p)
    return out


def hilbert_basis(c: Cone) -> tuple[Vec, ...]:
    """Minimal generating set of the semigroup c ∩ Z^n, lex-sorted.

    The cone is split into simplicial pieces; the half-open fundamental
    parallelepiped of each piece is enumerated; the union with the extreme
    rays is then reduced to the irreducible elements.
    """
    if not c.is_pointed:
        raise UnsupportedInputError("Hilbert basis requires a pointed cone")
    n = c.ambient_rank
    if c.dim == 0:
        return ()
    gens = set(c.rays)
    for piece in _simplicial_pieces(c.rays, c.facets, n):
        for p in _parallelepiped_points(piece, n):
            if any(p):
                gens.add(tuple(p))
    # sum of all facet normals is strictly positive on the pointed cone
    w = tuple(sum(f[i] for f in c.facets) for i in range(n))
    ordered = sorted(gens, key=lambda g: (dot(w, g), g))
    facets = c.facets
    basis: list[Vec] = []
    memo: dict[Vec, bool] = {}

    def representable(x) -> bool:
        if not any(x):
            return True
        if x in memo:
            return memo[x]
        res = False
        wx = dot(w, x)
        for h in basis:
            if dot(w, h) > wx:
                break  # basis is w-ascending, nothing later can be a summand
            rest = tuple(a - b for a, b in zip(x, h))
            if all(dot(f, rest) >= 0 for f in facets) and representable(rest):
                res = True
                break
        memo[x] = res
        return res

    for g in ordered:
        if not representable(g):
            basis.append(g)
            memo.clear()
    return tuple(sorted(basis))


# ---------------------------------------------------------------------------
# polyhedra via homogenization


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ValidationError(f"expected an exact rational, got {type(x).__name__}")


def _lift_point(p) -> Vec:
    coords = [_to_fraction(x) for x in p]
    den = 1
    for x in coords:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitivize((den,) + tuple(x.numerator * (den // x.denominator) for x in coords))


class Polyhedron:
    """A rational polyhedron, stored as its homogenization cone.

    The cone lives in rank + 1 with the homogenizing coordinate first; points
    of the polyhedron correspond to cone rays with positive first coordinate.
    """

    __slots__ = ("ambient_rank", "cone")

    def __init__(self, ambient_rank: int, cone: Cone):
        self.ambient_rank = ambient_rank
        self.cone = cone

    @classmethod
    def from_generators(cls, points, rays=()) -> "Polyhedron":
        points = list(points)
        rays = list(rays)
        if not points and not rays:
            raise ValidationError("a polyhedron needs at least one generator")
        n = len(points[0]) if points else len(rays[0])
        if any(len(p) != n for p in points) or any(len(r) != n for r in rays):
            raise ValidationError("generators of mixed dimension")
        lifted = [_lift_point(p) for p in points]
        lifted += [(0,) + vec(r) for r in rays]
        return cls(n, Cone(n + 1, generators=lifted))

    @classmethod
    def from_inequalities(cls, inequalities, ambient_rank: int) -> "Polyhedron":
        """Inequalities are (normal, offset) pairs meaning <normal, x> <= offset."""
        normals = [(1,) + (0,) * ambient_rank]
        for a, b in inequalities:
            if len(a) != ambient_rank:
                raise ValidationError("inequality normal has wrong length")
            row = [_to_fraction(b)] + [-_to_fraction(x) for x in a]
            den = 1
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
            normals.append(primitivize(tuple(x.numerator * (den // x.denominator) for x in row)))
        return cls(ambient_rank, Cone(ambient_rank + 1, normals=normals))

    # -- derived data --------------------------------------------------------

    @property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for g in self.cone.rays:
            if g[0] > 0:
                out.append(tuple(Fraction(x, g[0]) for x in g[1:]))
        return tuple(sorted(out))

    @property
    def rays(self) -> tuple[Vec, ...]:
        """Recession directions (a +/- pair marks a lineality direction)."""
        return tuple(sorted(g[1:] for g in self.cone.rays if g[0] == 0))

    @property
    def inequalities(self) -> tuple[tuple[Vec, int], ...]:
        out = []
        for f in self.cone.facets:
            normal = vneg(f[1:])
            if any(normal):
                out.append((normal, f[0]))
        return tuple(sorted(out, key=_inequality_sort_key))

    @property
    def is_empty(self) -> bool:
        return all(g[0] == 0 for g in self.cone.rays)

    @property
    def is_bounded(self) -> bool:
        return not self.is_empty and all(g[0] > 0 for g in self.cone.rays)

    def contains(self, x) -> bool:
        if len(x) != self.ambient_rank:
            raise ValidationError("point length does not match ambient rank")
        if self.is_empty:
            return False
        return all(dot(a, x) <= b for a, b in self.inequalities)

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        if self.ambient_rank != other.ambient_rank:
            return False
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return self.inequalities == other.inequalities

    def __hash__(self):
        return hash((self.ambient_rank, self.is_empty, self.inequalities))

    def __repr__(self):
        if self.is_empty:
            return f"Polyhedron(rank={self.ambient_rank}, empty)"
        return (f"Polyhedron(rank={self.ambient_rank}, vertices={list(self.vertices)}, "
                f"rays={list(self.rays)})")


def _inequality_sort_key(ineq):
    a, b = ineq
    lead = next((i for i, x in enumerate(a) if x != 0), len(a))
    return (lead, a, b)


def convex_hull(points) -> Polyhedron:
    points = list(points)
    if not points:
        raise ValidationError("convex_hull of an empty point list")
    return Polyhedron.from_generators(points)


def lattice_points(p: Polyhedron) -> tuple[Vec, ...]:
    """All integer points of a bounded polyhedron, lex-sorted."""
    if p.is_empty:
        return ()
    if not p.is_bounded:
        raise UnsupportedInputError("lattice point enumeration needs a bounded polyhedron")
    verts = p.vertices
    lo = [floor(min(v[i] for v in verts)) for i in range(p.ambient_rank)]
    hi = [ceil(max(v[i] for v in verts)) for i in range(p.ambient_rank)]
    out = []
    for q in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if p.contains(q):
            out.append(q)
    return tuple(out)


def polyhedron_membership(p: Polyhedron, x) -> bool:
    return p.contains(x)


def _term_string(coeff: int, name: str) -> str:
    if coeff == 1:
        return name
    if coeff == -1:
        return f"-{name}"
    return f"{coeff}*{name}"


def format_inequality(a, b) -> str:
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        name = f"x{i + 1}"
        if not parts:
            parts.append(_term_string(c, name))
        elif c > 0:
            parts.append(f"+ {_term_string(c, name)}")
        else:
            parts.append(f"- {_term_string(-c, name)}")
    lhs = " ".join(parts) if parts else "0"
    return f"{lhs} <= {b}"


def print_constraints(p: Polyhedron) -> str:
    """Canonical inequality listing, one `<= ` line per irredundant facet."""
    if p.is_empty:
        return "0 <= -1"
    return "\n".join(format_inequality(a, b) for a, b in p.inequalities)


def polyhedron_to_json(p: Polyhedron) -> dict:
    return {"inequalities": [{"normal": list(a), "offset": b}
                             for a, b in p.inequalities]}


def cone_to_json(c: Cone) -> dict:
    return {"rays": [list(r) for r in c.rays]}


# ---------------------------------------------------------------------------
# exact linear programming


def _simplex_max(cost, table, basis, allowed):
    """Maximize over {A y = b, y >= 0} in place with Bland's rule.

    `table` holds rows [a_1 ... a_N | b] with b >= 0 and `basis[i]` the basic
    column of row i.  Returns the optimal value (the system stays feasible,
    and unboundedness cannot occur for the systems built below, which always
    bound the objective).
    """
    m = len(table)
    ncols = len(table[0]) - 1
    while True:
        reduced = list(cost)
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                row = table[i]
                for j in range(ncols):
                    if row[j] != 0:
                        reduced[j] -= cb * row[j]
        enter = next((j for j in range(ncols) if allowed[j] and reduced[j] > 0), None)
        if enter is None:
            return sum(cost[basis[i]] * table[i][-1] for i in range(m))
        leave = None
        best = None
        for i in range(m):
            coeff = table[i][enter]
            if coeff > 0:
                ratio = table[i][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("unbounded linear program")
        _pivot(table, leave, enter)
        basis[leave] = enter


def _pivot(table, row, col):
    pr = table[row]
    inv = pr[col]
    table[row] = [x / inv for x in pr]
    pr = table[row]
    for i, r in enumerate(table):
        if i != row and r[col] != 0:
            f = r[col]
            table[i] = [a - f * b for a, b in zip(r, pr)]


def lp_feasible_point(strict, weak):
    """A rational solution of all constraints, or None.

    `strict` entries are (coeffs, rhs) meaning <coeffs, x> < rhs and `weak`
    entries mean <coeffs, x> <= rhs.  Strict inequalities are handled by
    maximizing a shared gap variable; the system is feasible exactly when the
    optimal gap is positive.
    """
    strict = [([_to_fraction(c) for c in cs], _to_fraction(r)) for cs, r in strict]
    weak = [([_to_fraction(c) for c in cs], _to_fraction(r)) for cs, r in weak]
    sizes = {len(cs) for cs, _ in strict} | {len(cs) for cs, _ in weak}
    if len(sizes) > 1:
        raise ValidationError("constraints over differing variable counts")
    nv = sizes.pop() if sizes else 0

    # columns: x+ (nv) | x- (nv) | gap | slacks | artificials
    rows = []
    for cs, rhs in strict:
        rows.append((cs, Fraction(1), rhs))
    for cs, rhs in weak:
        rows.append((cs, Fraction(0), rhs))
    rows.append(([Fraction(0)] * nv, Fraction(1), Fraction(1)))  # gap <= 1
    m = len(rows)
    gap_col = 2 * nv
    nslack = m
    nart = m
    ncols = 2 * nv + 1 + nslack + nart
    table = []
    basis = []
    for i, (cs, gap, rhs) in enumerate(rows):
        row = [Fraction(0)] * (ncols + 1)
        sign = 1 if rhs >= 0 else -1
        for j, c in enumerate(cs):
            row[j] = sign * c
            row[nv + j] = -sign * c
        row[gap_col] = sign * gap
        row[gap_col + 1 + i] = sign * Fraction(1)  # slack
        row[gap_col + 1 + nslack + i] = Fraction(1)  # artificial
        row[-1] = abs(rhs)
        table.append(row)
        basis.append(gap_col + 1 + nslack + i)

    art_cols = set(range(gap_col + 1 + nslack, ncols))
    allowed = [True] * ncols
    cost1 = [Fraction(0)] * ncols
    for j in art_cols:
        cost1[j] = Fraction(-1)
    if _simplex_max(cost1, table, basis, allowed) < 0:
        return None
    for i in range(m):
        if basis[i] in art_cols:
            col = next((j for j in range(ncols)
                        if j not in art_cols and table[i][j] != 0), None)
            if col is not None:
                _pivot(table, i, col)
                basis[i] = col
    for j in art_cols:
        allowed[j] = False

    cost2 = [Fraction(0)] * ncols
    cost2[gap_col] = Fraction(1)
    value = _simplex_max(cost2, table, basis, allowed)
    if value <= 0:
        return None
    point = [Fraction(0)] * (2 * nv)
    for i in range(m):
        if basis[i] < 2 * nv:
            point[basis[i]] = table[i][-1]
    return tuple(point[j] - point[nv + j] for j in range(nv))


def lp_feasible(strict, weak) -> bool:
    """Exact feasibility of a mixed strict/weak rational inequality system."""
    return lp_feasible_point(strict, weak) is not None
