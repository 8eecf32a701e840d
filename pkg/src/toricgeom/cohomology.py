"""Line bundle cohomology on complete simplicial toric varieties.

Two independent routes are provided.  `cohomology_dim` is the exact oracle:
it enumerates characters m, forms the set C(m) of rays where the divisor
coefficient is violated, and adds the reduced cohomology of the subcomplex
of fan cones supported inside C(m).  `vanishing_sets` instead packages, for
each cohomology index, the finitely many shifted-cone polyhedra of classes
with nonvanishing cohomology; the two routes are cross-checked in the tests
rather than trusting either one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .errors import UnsupportedInputError, ValidationError
from .lattice import rational_rank, solve_rational, vneg
from .polyhedral import Polyhedron
from .toric_variety import NormalToricVariety, ToricDivisorClass

_MAX_BOX_GROWTH = 6


def _require_supported(v: NormalToricVariety):
    if not v.is_simplicial():
        raise UnsupportedInputError("cohomology needs a simplicial fan")
    if not v.is_complete():
        raise UnsupportedInputError("cohomology needs a complete fan")
    _, torsion = v.class_group()
    if torsion:
        raise UnsupportedInputError("torsion class groups are not supported")


def _fan_complex(v: NormalToricVariety) -> frozenset[frozenset[int]]:
    """All faces of the fan as ray-index sets (simplicial fans only)."""
    if "complex" not in v._cache:
        faces = {frozenset()}
        for c in v.fan.max_cones:
            for size in range(1, len(c) + 1):
                for sub in itertools.combinations(c, size):
                    faces.add(frozenset(sub))
        v._cache["complex"] = frozenset(faces)
    return v._cache["complex"]


def _reduced_cohomology(faces: list[frozenset[int]]) -> dict[int, int]:
    """Reduced (co)homology dimensions over Q of a simplicial complex.

    `faces` must contain the empty face; index k of the result is the
    dimension of H-tilde^k, with k = -1 corresponding to the augmentation.
    """
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for lst in by_dim.values():
        lst.sort()
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}

    def boundary_rank(d: int) -> int:
        # rank of the boundary map C_d -> C_{d-1}
        if d not in by_dim or (d - 1) not in by_dim:
            return 0
        rows = []
        target = index[d - 1]
        width = len(by_dim[d - 1])
        for f in by_dim[d]:
            row = [0] * width
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                row[target[sub]] = (-1) ** pos
            rows.append(row)
        return rational_rank(rows)

    ranks = {d: boundary_rank(d) for d in range(0, top + 1)}
    out = {}
    for d in range(-1, top + 1):
        dim_cd = len(by_dim.get(d, []))
        h = dim_cd - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def _gamma_dims(v: NormalToricVariety, support: frozenset[int]) -> dict[int, int]:
    """Reduced cohomology of the subcomplex of cones inside `support`."""
    cache = v._cache.setdefault("gamma", {})
    if support not in cache:
        faces = [f for f in _fan_complex(v) if f <= support]
        cache[support] = _reduced_cohomology(faces)
    return cache[support]


def _arrangement_box(v: NormalToricVariety, coeffs):
    """Integer box certain to contain all characters with contributions:
    the bounding box of all vertices of {<m, u_rho> = -a_rho}, padded by 1."""
    n = v.dim
    rays = v.fan.rays
    verts = []
    for combo in itertools.combinations(range(len(rays)), n):
        rows = [rays[i] for i in combo]
        if rational_rank(rows) != n:
            continue
        sol = solve_rational(rows, [-coeffs[i] for i in combo])
        if sol is not None:
            verts.append(sol)
    if not verts:
        raise ArithmeticError("degenerate hyperplane arrangement")
    lo = [floor(min(p[i] for p in verts)) - 1 for i in range(n)]
    hi = [ceil(max(p[i] for p in verts)) + 1 for i in range(n)]
    return lo, hi


def _h_vector(v: NormalToricVariety, d: ToricDivisorClass) -> tuple[int, ...]:
    cache = v._cache.setdefault("hvec", {})
    if d.vector in cache:
        return cache[d.vector]
    n = v.dim
    rays = v.fan.rays
    coeffs = v.representative_coefficients(d)
    lo, hi = _arrangement_box(v, coeffs)
    for _ in range(_MAX_BOX_GROWTH):
        h = [0] * (n + 1)
        shell_clean = True
        for m in itertools.product(*(range(l, u + 1) for l, u in zip(lo, hi))):
            support = frozenset(
                i for i, u in enumerate(rays)
                if sum(mi * ui for mi, ui in zip(m, u)) < -coeffs[i])
            dims = _gamma_dims(v, support)
            if not dims:
                continue
            on_shell = any(mi == l or mi == u for mi, l, u in zip(m, lo, hi))
            if on_shell:
                shell_clean = False
            for k, mu in dims.items():
                if 0 <= k + 1 <= n:
                    h[k + 1] += mu
        if shell_clean:
            result = tuple(h)
            cache[d.vector] = result
            return result
        lo = [l - 2 for l in lo]
        hi = [u + 2 for u in hi]
    raise ArithmeticError("character enumeration box failed to stabilize")


def cohomology_dim(v: NormalToricVariety, d: ToricDivisorClass, i: int) -> int:
    """dim H^i(X, O(D)) by direct character enumeration."""
    _require_supported(v)
    if d.variety is not v:
        raise ValidationError("divisor class on a different variety")
    if not (0 <= i <= v.dim):
        raise ValidationError(f"cohomology index must lie in 0..{v.dim}")
    return _h_vector(v, d)[i]


@dataclass(frozen=True)
class ContributionSet:
    """A ray subset contributing multiplicity mu to cohomology index i."""

    rays: frozenset[int]
    index: int
    multiplicity: int


def contribution_sets(v: NormalToricVariety) -> tuple[ContributionSet, ...]:
    """All unions of Stanley-Reisner generator supports (including the empty
    union), with every index where the associated subcomplex has reduced
    cohomology, and its dimension as multiplicity."""
    _require_supported(v)
    key = "contributions"
    if key in v._cache:
        return v._cache[key]
    supports = []
    for g in v.stanley_reisner_ideal().gens:
        (mono,) = g.terms
        supports.append(frozenset(i for i, e in enumerate(mono) if e))
    unions = {frozenset()}
    for size in range(1, len(supports) + 1):
        for combo in itertools.combinations(supports, size):
            unions.add(frozenset().union(*combo))
    out = []
    n = v.dim
    for support in sorted(unions, key=lambda s: (len(s), sorted(s))):
        for k, mu in sorted(_gamma_dims(v, support).items()):
            if 0 <= k + 1 <= n:
                out.append(ContributionSet(support, k + 1, mu))
    result = tuple(out)
    v._cache[key] = result
    return result


@dataclass(frozen=True)
class ShiftedCone:
    """apex + cone(generators) inside the free class group."""

    apex: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    polyhedron: Polyhedron


@dataclass(frozen=True)
class VanishingSet:
    """h^index vanishes exactly at the classes outside all listed polyhedra."""

    variety: NormalToricVariety
    index: int
    regions: tuple[ShiftedCone, ...]

    @property
    def polyhedra(self) -> tuple[Polyhedron, ...]:
        return tuple(r.polyhedron for r in self.regions)


def vanishing_sets(v: NormalToricVariety) -> tuple[VanishingSet, ...]:
    """One vanishing set per cohomology index 0..dim."""
    _require_supported(v)
    key = "vanishing"
    if key in v._cache:
        return v._cache[key]
    degs = v.degree_columns()
    free, _ = v.class_group()
    grouped: dict[int, list[ShiftedCone]] = {i: [] for i in range(v.dim + 1)}
    for cs in contribution_sets(v):
        apex = tuple(-sum(degs[i][j] for i in cs.rays) for j in range(free))
        gens = [degs[i] for i in range(len(degs)) if i not in cs.rays]
        gens += [vneg(degs[i]) for i in cs.rays]
        poly = Polyhedron.from_generators([apex], gens)
        region = ShiftedCone(apex, tuple(sorted(set(gens))), poly)
        if all(r.polyhedron != poly for r in grouped[cs.index]):
            grouped[cs.index].append(region)
    result = tuple(VanishingSet(v, i, tuple(grouped[i])) for i in range(v.dim + 1))
    v._cache[key] = result
    return result


def in_vanishing_set(vs: VanishingSet, d: ToricDivisorClass) -> bool:
    """True when h^index(d) = 0, i.e. d lies in none of the polyhedra."""
    free, _ = vs.variety.class_group()
    if len(d.vector) != free:
        raise ValidationError("class rank does not match the vanishing set")
    return not any(r.polyhedron.contains(d.vector) for r in vs.regions)
