"""Fans and normal toric varieties.

A variety owns its fan, its Cox variable names and a class-group grading.
The grading is the cokernel of the ray/character pairing; the named
constructors post-compose the raw grading with a fixed unimodular change of
basis so printed degrees land in the conventional (H, -E_i) style bases.
All derived data (ideals, predicates, gradings) is cached compute-once.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedInputError, ValidationError
from .lattice import (IntMatrix, Vec, cokernel_grading, dot, kernel_basis,
                      primitivize, rational_rank, smith_normal_form,
                      solve_integer, vec, vneg)
from .polyhedral import (Cone, dual_cone, hilbert_basis, lp_feasible,
                         meet_in_common_face, positive_hull)
from .polyring import (Grading, MultiPoly, PolyIdeal, PolyRing, saturate)


class Fan:
    """Rays plus maximal cones given as ray-index tuples (0-based, sorted)."""

    def __init__(self, ambient_rank: int, rays, max_cones, validate: bool = True):
        rays = [vec(r) for r in rays]
        for r in rays:
            if len(r) != ambient_rank:
                raise ValidationError("ray length does not match ambient rank")
            if not any(r):
                raise ValidationError("zero vector cannot be a ray")
        prim = [primitivize(r) for r in rays]
        if prim != rays:
            warnings.warn("non-primitive rays were primitivized", stacklevel=3)
        if len(set(prim)) != len(prim):
            raise ValidationError("duplicate rays")
        self.ambient_rank = ambient_rank
        self.rays: tuple[Vec, ...] = tuple(prim)
        cones = sorted({tuple(sorted(set(int(i) for i in c))) for c in max_cones})
        if not cones:
            cones = [()]
        for c in cones:
            if any(i < 0 or i >= len(prim) for i in c):
                raise ValidationError("cone refers to a nonexistent ray")
        self.max_cones: tuple[tuple[int, ...], ...] = tuple(cones)
        self._cone_objs: dict[int, Cone] = {}
        if validate:
            self._validate()

    def cone(self, idx: int) -> Cone:
        if idx not in self._cone_objs:
            members = [self.rays[i] for i in self.max_cones[idx]]
            self._cone_objs[idx] = Cone(self.ambient_rank, generators=members)
        return self._cone_objs[idx]

    def _validate(self):
        ncones = len(self.max_cones)
        used = set()
        for c in self.max_cones:
            used.update(c)
        if used != set(range(len(self.rays))):
            raise ValidationError("every ray must appear in some maximal cone")
        for i, c in enumerate(self.max_cones):
            cone = self.cone(i)
            if not cone.is_pointed:
                raise ValidationError(f"cone {c} is not pointed")
            if set(cone.rays) != {self.rays[j] for j in c}:
                raise ValidationError(f"cone {c} lists a non-extremal ray")
        for i in range(ncones):
            for j in range(i + 1, ncones):
                si, sj = set(self.max_cones[i]), set(self.max_cones[j])
                if si <= sj or sj <= si:
                    raise ValidationError("maximal cones must be inclusion-incomparable")
                if not meet_in_common_face(self.cone(i), self.cone(j)):
                    raise ValidationError(
                        f"cones {self.max_cones[i]} and {self.max_cones[j]} "
                        "do not intersect in a common face")

    def __repr__(self):
        return (f"Fan(rank={self.ambient_rank}, rays={list(self.rays)}, "
                f"max_cones={[list(c) for c in self.max_cones]})")


class NormalToricVariety:
    """A normal toric variety over a fan, with named Cox variables."""

    def __init__(self, fan: Fan, names=None, grading_data=None):
        self.fan = fan
        nrays = len(fan.rays)
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(nrays))
        names = tuple(names)
        if len(names) != nrays or len(set(names)) != nrays:
            raise ValidationError("need one distinct variable name per ray")
        self.names = names
        if grading_data is not None:
            free_rank, torsion, proj = grading_data
            pairing = IntMatrix.from_rows(fan.rays, cols=fan.ambient_rank)
            prod = proj @ pairing
            if any(x != 0 for x in prod.entries):
                raise ValidationError("grading projection does not kill the pairing")
        self._grading_data = grading_data
        self._cache: dict = {}

    # -- bookkeeping ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.fan.ambient_rank

    @property
    def rays(self) -> tuple[Vec, ...]:
        return self.fan.rays

    @property
    def is_affine(self) -> bool:
        return len(self.fan.max_cones) == 1

    def cox_ring(self) -> PolyRing:
        if "ring" not in self._cache:
            self._cache["ring"] = PolyRing(self.names)
        return self._cache["ring"]

    def pairing_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.fan.rays, cols=self.fan.ambient_rank)

    def _grading(self):
        if self._grading_data is None:
            self._grading_data = cokernel_grading(self.pairing_matrix())
        return self._grading_data

    def class_group(self) -> tuple[int, tuple[int, ...]]:
        """Free rank and torsion invariant factors of the divisor class group."""
        free, torsion, _ = self._grading()
        return free, tuple(torsion)

    def degree_columns(self) -> tuple[Vec, ...]:
        """Degree of each Cox variable in the free part of the class group."""
        _, _, proj = self._grading()
        return tuple(proj.col(j) for j in range(len(self.fan.rays)))

    def grading(self) -> Grading:
        free, _, _ = self._grading()
        return Grading(free, self.degree_columns())

    def divisor_class(self, vector) -> "ToricDivisorClass":
        free, _, _ = self._grading()
        v = vec(vector)
        if len(v) != free:
            raise ValidationError("class vector length does not match Picard rank")
        return ToricDivisorClass(self, v)

    def divisor_class_of_coefficients(self, coeffs) -> "ToricDivisorClass":
        """Class of sum a_rho V(x_rho) for torus-invariant coefficients."""
        coeffs = vec(coeffs)
        if len(coeffs) != len(self.fan.rays):
            raise ValidationError("one coefficient per ray required")
        degs = self.degree_columns()
        free, _, _ = self._grading()
        out = [0] * free
        for a, d in zip(coeffs, degs):
            for i in range(free):
                out[i] += a * d[i]
        return ToricDivisorClass(self, tuple(out))

    def representative_coefficients(self, cls: "ToricDivisorClass") -> Vec:
        """Torus-invariant divisor coefficients realizing a class."""
        _, torsion, proj = self._grading()
        if torsion:
            raise UnsupportedInputError("torsion class group is not supported here")
        sol = solve_integer(proj, cls.vector)
        if sol is None:
            raise ValidationError("class does not lift to an integral divisor")
        return sol

    def canonical_divisor_class(self) -> "ToricDivisorClass":
        return self.divisor_class_of_coefficients([-1] * len(self.fan.rays))

    # -- predicates -----------------------------------------------------------

    def is_simplicial(self) -> bool:
        if "simplicial" not in self._cache:
            self._cache["simplicial"] = all(
                len(c) == rational_rank([self.fan.rays[i] for i in c])
                for c in self.fan.max_cones)
        return self._cache["simplicial"]

    def is_smooth(self) -> bool:
        if "smooth" not in self._cache:
            self._cache["smooth"] = self.is_simplicial() and all(
                _cone_multiplicity([self.fan.rays[i] for i in c]) == 1
                for c in self.fan.max_cones)
        return self._cache["smooth"]

    def is_complete(self) -> bool:
        if "complete" not in self._cache:
            self._cache["complete"] = self._complete()
        return self._cache["complete"]

    def _complete(self) -> bool:
        n = self.fan.ambient_rank
        if n == 0:
            return True
        cones = [self.fan.cone(i) for i in range(len(self.fan.max_cones))]
        if any(c.dim != n for c in cones):
            return False
        # every (n-1)-face must be shared by exactly two maximal cones
        counts: dict = {}
        for c in cones:
            for f in c.facets:
                key = tuple(sorted(r for r in c.rays if dot(f, r) == 0))
                counts[key] = counts.get(key, 0) + 1
        if any(v != 2 for v in counts.values()):
            return False
        for p in _probe_points(n):
            if not any(c.contains(p) for c in cones):
                return False
        return True

    def is_projective(self) -> bool:
        if "projective" not in self._cache:
            self._cache["projective"] = self._projective()
        return self._cache["projective"]

    def _projective(self) -> bool:
        # quasi-projectivity is out of scope: incomplete fans report False
        if not self.is_complete():
            return False
        n = self.fan.ambient_rank
        if n == 0:
            return True
        rays = self.fan.rays
        cones = self.fan.max_cones
        nw = len(rays)
        nvars = nw + n * len(cones)

        def m_col(ci, coord):
            return nw + n * ci + coord

        weak, strict = [], []
        for ci, cone in enumerate(cones):
            for ri in range(nw):
                row = [Fraction(0)] * nvars
                for coord in range(n):
                    row[m_col(ci, coord)] = Fraction(rays[ri][coord])
                if ri in cone:
                    rowneg = [-x for x in row]
                    row[ri] += 1
                    rowneg[ri] -= 1
                    weak.append((row, Fraction(0)))       # <m, u> + w <= 0
                    weak.append((rowneg, Fraction(0)))    # and >= 0
                else:
                    neg = [-x for x in row]
                    neg[ri] -= 1
                    strict.append((neg, Fraction(0)))     # <m, u> + w > 0
        return lp_feasible(strict, weak)

    # -- canonical ideals -------------------------------------------------------

    def _fan_face_test(self):
        """Callable deciding whether a ray-index set spans a cone of the fan."""
        fan = self.fan
        simplicial = [len(c) == rational_rank([fan.rays[i] for i in c])
                      for c in fan.max_cones]

        def is_face(subset: frozenset) -> bool:
            if not subset:
                return True
            for ci, c in enumerate(fan.max_cones):
                if not subset <= set(c):
                    continue
                if simplicial[ci]:
                    return True
                cone = fan.cone(ci)
                span = {fan.rays[i] for i in subset}
                active = [f for f in cone.facets
                          if all(dot(f, r) == 0 for r in span)]
                face = {r for r in cone.rays
                        if all(dot(f, r) == 0 for f in active)}
                if face == span:
                    return True
            return False

        return is_face

    def stanley_reisner_ideal(self) -> PolyIdeal:
        """Squarefree monomials of the minimal non-faces of the fan."""
        if "sr" in self._cache:
            return self._cache["sr"]
        ring = self.cox_ring()
        nrays = len(self.fan.rays)
        is_face = self._fan_face_test()
        non_faces: list[tuple[int, ...]] = []
        for size in range(2, nrays + 1):
            for subset in _sorted_subsets(nrays, size):
                fs = frozenset(subset)
                if any(set(nf) <= fs for nf in non_faces):
                    continue
                if not is_face(fs):
                    non_faces.append(subset)
        gens = []
        for nf in sorted(non_faces, key=lambda s: (len(s), s)):
            exp = [0] * nrays
            for i in nf:
                exp[i] = 1
            gens.append(ring.monomial(exp))
        ideal = PolyIdeal(ring, gens)
        self._cache["sr"] = ideal
        return ideal

    def irrelevant_ideal(self) -> PolyIdeal:
        if "irrelevant" in self._cache:
            return self._cache["irrelevant"]
        ring = self.cox_ring()
        nrays = len(self.fan.rays)
        gens = []
        for c in self.fan.max_cones:
            exp = [1] * nrays
            for i in c:
                exp[i] = 0
            gens.append(ring.monomial(exp))
        ideal = PolyIdeal(ring, gens)
        self._cache["irrelevant"] = ideal
        return ideal

    def ideal_of_linear_relations(self) -> PolyIdeal:
        if "linear" in self._cache:
            return self._cache["linear"]
        ring = self.cox_ring()
        gens = []
        for j in range(self.fan.ambient_rank):
            terms = {}
            for i, r in enumerate(self.fan.rays):
                if r[j] != 0:
                    exp = [0] * len(self.fan.rays)
                    exp[i] = 1
                    terms[tuple(exp)] = Fraction(r[j])
            if terms:
                gens.append(MultiPoly(ring, terms))
        ideal = PolyIdeal(ring, gens)
        self._cache["linear"] = ideal
        return ideal

    def toric_ideal(self) -> PolyIdeal:
        """Defining binomial ideal of an affine variety in dual-Hilbert-basis
        coordinates: the lattice ideal of the relations among the Hilbert
        basis of the dual cone, saturated at the product of the variables.

        Variables are assigned to the extreme generators of the dual cone
        first (lex order), then to the remaining Hilbert basis elements.
        """
        if "toric" in self._cache:
            return self._cache["toric"]
        if not self.is_affine:
            raise UnsupportedInputError("toric ideal needs an affine variety")
        sigma = self.fan.cone(0)
        dual = dual_cone(sigma)
        hb = hilbert_basis(dual)
        extremes = [r for r in dual.rays if r in set(hb)]
        rest = [h for h in hb if h not in set(extremes)]
        ordered = extremes + rest
        ring = PolyRing(tuple(f"x{i + 1}" for i in range(len(ordered))))
        if not ordered:
            ideal = PolyIdeal(ring, ())
            self._cache["toric"] = ideal
            return ideal
        matrix = IntMatrix.from_rows(
            [[h[j] for h in ordered] for j in range(self.fan.ambient_rank)])
        kernel = kernel_basis(matrix)
        gens = []
        for j in range(kernel.cols):
            v = kernel.col(j)
            plus = tuple(max(x, 0) for x in v)
            minus = tuple(max(-x, 0) for x in v)
            gens.append(ring.monomial(plus) - ring.monomial(minus))
        ideal = PolyIdeal(ring, gens)
        if gens:
            product = ring.monomial([1] * len(ordered))
            ideal = saturate(ideal, product)
        self._cache["toric"] = ideal
        return ideal

    def to_json(self) -> dict:
        return {
            "rank": self.fan.ambient_rank,
            "rays": [list(r) for r in self.fan.rays],
            "max_cones": [[i + 1 for i in c] for c in self.fan.max_cones],
            "names": list(self.names),
        }

    def __repr__(self):
        return (f"NormalToricVariety(dim={self.dim}, rays={len(self.fan.rays)}, "
                f"max_cones={len(self.fan.max_cones)})")


@dataclass(frozen=True)
class ToricDivisorClass:
    """A divisor class in the free part of the class group."""

    variety: NormalToricVariety
    vector: Vec

    def __add__(self, other: "ToricDivisorClass") -> "ToricDivisorClass":
        self._check(other)
        return ToricDivisorClass(self.variety,
                                 tuple(a + b for a, b in zip(self.vector, other.vector)))

    def __sub__(self, other: "ToricDivisorClass") -> "ToricDivisorClass":
        self._check(other)
        return ToricDivisorClass(self.variety,
                                 tuple(a - b for a, b in zip(self.vector, other.vector)))

    def __neg__(self) -> "ToricDivisorClass":
        return ToricDivisorClass(self.variety, vneg(self.vector))

    def __rmul__(self, c: int) -> "ToricDivisorClass":
        return ToricDivisorClass(self.variety, tuple(c * x for x in self.vector))

    def _check(self, other):
        if self.variety is not other.variety:
            raise ValidationError("divisor classes on different varieties")

    def __eq__(self, other):
        return (isinstance(other, ToricDivisorClass)
                and self.variety is other.variety and self.vector == other.vector)

    def __hash__(self):
        return hash((id(self.variety), self.vector))


def _cone_multiplicity(ray_vecs) -> int:
    """Index of the sublattice spanned by the rays of a simplicial cone."""
    cols = IntMatrix.from_rows([[r[i] for r in ray_vecs]
                                for i in range(len(ray_vecs[0]))]) \
        if ray_vecs else IntMatrix.from_rows([], cols=0)
    snf = smith_normal_form(cols)
    mult = 1
    for d in snf.diagonal():
        if d != 0:
            mult *= d
    return mult


def _sorted_subsets(n, size):
    return itertools.combinations(range(n), size)


def _probe_points(n, count=100):
    """Deterministic rational probe points (LCG-driven, platform independent)."""
    state = 0x5EED5EED
    pts = []
    for _ in range(count):
        coords = []
        for _ in range(n):
            state = (state * 6364136223846793005 + 1442695040888963407) % 2 ** 64
            num = (state >> 16) % 201 - 100
            state = (state * 6364136223846793005 + 1442695040888963407) % 2 ** 64
            den = (state >> 16) % 7 + 1
            coords.append(Fraction(num, den))
        pts.append(tuple(coords))
    return pts


# ---------------------------------------------------------------------------
# constructors


def affine_normal_toric_variety(c: Cone) -> NormalToricVariety:
    """Affine variety of a pointed cone; its fan has the cone as single
    maximal cone (faces are implicit)."""
    if not c.is_pointed:
        raise UnsupportedInputError("affine toric varieties need a pointed cone")
    rays = c.rays
    fan = Fan(c.ambient_rank, rays, [tuple(range(len(rays)))], validate=False)
    return NormalToricVariety(fan)


def normal_toric_variety(rays, max_cones, ambient_rank: int | None = None,
                         names=None) -> NormalToricVariety:
    rays = [vec(r) for r in rays]
    if ambient_rank is None:
        if not rays:
            raise ValidationError("ambient rank required for a fan with no rays")
        ambient_rank = len(rays[0])
    fan = Fan(ambient_rank, rays, max_cones)
    return NormalToricVariety(fan, names=names)


def projective_space(n: int) -> NormalToricVariety:
    if n < 1:
        raise ValidationError("projective space needs n >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append((-1,) * n)
    cones = [tuple(sorted(set(range(n + 1)) - {i})) for i in range(n + 1)]
    fan = Fan(n, rays, cones, validate=False)
    proj = IntMatrix.from_rows([[1] * (n + 1)])
    return NormalToricVariety(fan, grading_data=(1, (), proj))


def hirzebruch_surface(r: int) -> NormalToricVariety:
    rays = [(1, 0), (0, 1), (-1, r), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    fan = Fan(2, rays, cones, validate=False)
    proj = IntMatrix.from_rows([[1, 0, 1, r], [0, 1, 0, 1]])
    return NormalToricVariety(fan, grading_data=(2, (), proj))


_DEL_PEZZO = {
    1: {
        "rays": [(1, 0), (0, 1), (-1, -1), (1, 1)],
        "cones": [(0, 3), (1, 3), (1, 2), (0, 2)],
        "names": ("x1", "x2", "x3", "e1"),
        # degrees in the (H, -E1) basis
        "proj": [[1, 1, 1, 0], [1, 1, 0, -1]],
    },
    2: {
        "rays": [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0)],
        "cones": [(0, 3), (1, 3), (1, 4), (2, 4), (0, 2)],
        "names": ("x1", "x2", "x3", "e1", "e2"),
        "proj": [[1, 1, 1, 0, 0], [1, 1, 0, -1, 0], [0, 1, 1, 0, -1]],
    },
    3: {
        "rays": [(1, 0), (0, 1), (-1, -1), (1, 1), (-1, 0), (0, -1)],
        "cones": [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)],
        "names": ("x1", "x2", "x3", "e1", "e2", "e3"),
        "proj": [[1, 1, 1, 0, 0, 0], [1, 1, 0, -1, 0, 0],
                 [0, 1, 1, 0, -1, 0], [1, 0, 1, 0, 0, -1]],
    },
}


def del_pezzo_surface(k: int) -> NormalToricVariety:
    if k not in _DEL_PEZZO:
        raise ValidationError("del Pezzo surfaces are supported for k in {1, 2, 3}")
    data = _DEL_PEZZO[k]
    fan = Fan(2, data["rays"], data["cones"], validate=False)
    proj = IntMatrix.from_rows(data["proj"])
    return NormalToricVariety(fan, names=data["names"],
                              grading_data=(proj.rows, (), proj))


def cyclic_quotient_singularity(n: int, q: int) -> NormalToricVariety:
    from math import gcd
    if not (0 < q < n) or gcd(n, q) != 1:
        raise ValidationError("cyclic quotient singularity needs 0 < q < n coprime")
    return affine_normal_toric_variety(positive_hull([(1, 0), (-q, n)]))


def torus(rank: int) -> NormalToricVariety:
    return NormalToricVariety(Fan(rank, [], [()], validate=False))


def product(a: NormalToricVariety, b: NormalToricVariety) -> NormalToricVariety:
    """Fan product; variable names are concatenated, or renumbered to
    x1..xm when the factors' names collide."""
    na, nb = a.fan.ambient_rank, b.fan.ambient_rank
    rays = [r + (0,) * nb for r in a.fan.rays]
    rays += [(0,) * na + r for r in b.fan.rays]
    offset = len(a.fan.rays)
    cones = [tuple(ca) + tuple(i + offset for i in cb)
             for ca in a.fan.max_cones for cb in b.fan.max_cones]
    names = a.names + b.names
    if len(set(names)) != len(names):
        names = tuple(f"x{i + 1}" for i in range(len(rays)))
    fan = Fan(na + nb, rays, cones, validate=False)
    fa, ta, pa = a._grading()
    fb, tb, pb = b._grading()
    rows = [tuple(pa.data[i]) + (0,) * len(b.fan.rays) for i in range(fa)]
    rows += [(0,) * len(a.fan.rays) + tuple(pb.data[i]) for i in range(fb)]
    proj = IntMatrix.from_rows(rows) if rows else IntMatrix.from_rows([], cols=len(rays))
    return NormalToricVariety(fan, names=names,
                              grading_data=(fa + fb, tuple(ta) + tuple(tb), proj))


# functional aliases mirroring the method surface


def is_smooth(v: NormalToricVariety) -> bool:
    return v.is_smooth()


def is_simplicial(v: NormalToricVariety) -> bool:
    return v.is_simplicial()


def is_complete(v: NormalToricVariety) -> bool:
    return v.is_complete()


def is_projective(v: NormalToricVariety) -> bool:
    return v.is_projective()


def stanley_reisner_ideal(v: NormalToricVariety) -> PolyIdeal:
    return v.stanley_reisner_ideal()


def irrelevant_ideal(v: NormalToricVariety) -> PolyIdeal:
    return v.irrelevant_ideal()


def ideal_of_linear_relations(v: NormalToricVariety) -> PolyIdeal:
    return v.ideal_of_linear_relations()


def toric_ideal(v: NormalToricVariety) -> PolyIdeal:
    return v.toric_ideal()


def canonical_divisor_class(v: NormalToricVariety) -> ToricDivisorClass:
    return v.canonical_divisor_class()
