"""Chow rings and intersection numbers of simplicial toric varieties.

The Chow ring is presented as Cox variables modulo linear relations plus the
Stanley-Reisner ideal; completeness is not required for the presentation,
only for the degree map.  Top-degree evaluation anchors the normalization at
a maximal cone sigma of minimal multiplicity, where the product of the
cone's variables has degree 1/mult(sigma).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import UnsupportedInputError, ValidationError
from .lattice import rational_rank
from .polyring import (DEGREVLEX, MultiPoly, PolyIdeal, PolyRing, _format_term,
                       _key_degrevlex, _mono_divides, monomial_key)
from .toric_variety import NormalToricVariety, _cone_multiplicity


class ChowRing:
    """Quotient presentation of the Chow ring of a simplicial toric variety."""

    def __init__(self, variety: NormalToricVariety):
        if not variety.is_simplicial():
            raise UnsupportedInputError("Chow rings require a simplicial fan")
        self.variety = variety
        self.ring = variety.cox_ring()
        gens = (variety.ideal_of_linear_relations().gens
                + variety.stanley_reisner_ideal().gens)
        self.ideal = PolyIdeal(self.ring, gens)

    def gens(self) -> tuple[MultiPoly, ...]:
        return self.ring.gens()

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return self.ideal.normal_form(f)

    def __repr__(self):
        return (f"ChowRing({self.ring!r} / {self.ideal!r})")


def chow_ring(v: NormalToricVariety) -> ChowRing:
    if "chow" not in v._cache:
        v._cache["chow"] = ChowRing(v)
    return v._cache["chow"]


class RationalEquivalenceClass:
    """A Chow class, stored through its normal-form representative."""

    __slots__ = ("variety", "representative")

    def __init__(self, variety: NormalToricVariety, representative: MultiPoly):
        self.variety = variety
        self.representative = representative

    @property
    def is_trivial(self) -> bool:
        return self.representative.is_zero

    @property
    def grade(self) -> int | None:
        """Common total degree of the representative, None for the zero class."""
        if self.is_trivial:
            return None
        return self.representative.total_degree()

    def _check(self, other):
        if self.variety is not other.variety:
            raise ValidationError("classes on different varieties")

    def __add__(self, other):
        self._check(other)
        return rational_equivalence_class(
            self.variety, self.representative + other.representative)

    def __sub__(self, other):
        self._check(other)
        return rational_equivalence_class(
            self.variety, self.representative - other.representative)

    def __mul__(self, other):
        if isinstance(other, RationalEquivalenceClass):
            return multiply(self, other)
        return RationalEquivalenceClass(self.variety, self.representative * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, RationalEquivalenceClass)
                and self.variety is other.variety
                and self.representative == other.representative)

    def __hash__(self):
        return hash((id(self.variety), self.representative))

    def cycle_string(self) -> str:
        """Transcript-style rendering, e.g. ``-1V(x2,x3)`` for -[V(x2) . V(x3)]."""
        if self.is_trivial:
            return "0"
        parts = []
        names = self.representative.ring.names
        for mono in sorted(self.representative.terms, key=_key_degrevlex, reverse=True):
            coeff = self.representative.terms[mono]
            vs = []
            for name, e in zip(names, mono):
                vs.extend([name] * e)
            head = "" if coeff == 1 else str(coeff)
            parts.append(f"{head}V({','.join(vs)})" if vs else str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return f"RationalEquivalenceClass({self.cycle_string()})"


def rational_equivalence_class(v: NormalToricVariety, f) -> RationalEquivalenceClass:
    ring = v.cox_ring()
    if isinstance(f, str):
        f = ring.parse(f)
    if f.ring != ring:
        raise ValidationError("polynomial does not live in the Cox ring")
    if not f.is_homogeneous():
        raise ValidationError("cycle polynomial must be homogeneous in total degree")
    return RationalEquivalenceClass(v, chow_ring(v).normal_form(f))


def multiply(a: RationalEquivalenceClass, b: RationalEquivalenceClass) -> RationalEquivalenceClass:
    if a.variety is not b.variety:
        raise ValidationError("classes on different varieties")
    rep = chow_ring(a.variety).normal_form(a.representative * b.representative)
    return RationalEquivalenceClass(a.variety, rep)


def _top_monomial_basis(cr: ChowRing) -> tuple:
    """Standard monomials of total degree dim(X) in the Chow quotient."""
    n = cr.variety.dim
    nvars = cr.ring.nvars
    key = monomial_key(DEGREVLEX)
    leads = [g.leading(key)[0] for g in cr.ideal.groebner()]
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        mono = tuple(e)
        if not any(_mono_divides(l, mono) for l in leads):
            out.append(mono)
    return tuple(out)


def degree(a: RationalEquivalenceClass, anchor_cone: int | None = None) -> Fraction:
    """The rational lambda with a ~ lambda . [point], for complete simplicial
    varieties and classes of top grade."""
    v = a.variety
    if not v.is_complete() or not v.is_simplicial():
        raise UnsupportedInputError("degree needs a complete simplicial variety")
    if a.is_trivial:
        return Fraction(0)
    n = v.dim
    if a.grade != n:
        raise UnsupportedInputError(f"degree needs a class of top grade {n}")
    cr = chow_ring(v)
    basis = _top_monomial_basis(cr)
    if len(basis) != 1:
        raise ArithmeticError("top graded component is not one-dimensional")
    m0 = basis[0]

    if anchor_cone is None:
        mults = [(_cone_multiplicity([v.fan.rays[i] for i in c]), ci)
                 for ci, c in enumerate(v.fan.max_cones)]
        anchor_cone = min(mults)[1]
    cone = v.fan.max_cones[anchor_cone]
    mult = _cone_multiplicity([v.fan.rays[i] for i in cone])
    exp = [0] * cr.ring.nvars
    for i in cone:
        exp[i] = 1
    z = cr.normal_form(cr.ring.monomial(exp))
    if set(z.terms) != {m0}:
        raise ArithmeticError("anchor monomial did not reduce to the point class")
    c = z.terms[m0]
    rep = a.representative
    if set(rep.terms) != {m0}:
        raise ArithmeticError("top-grade class did not reduce to the point class")
    alpha = rep.terms[m0]
    return alpha / (c * mult)


def intersection_form(v: NormalToricVariety) -> dict[str, Fraction]:
    """Degrees of all monomials of top degree in the ray variables, keyed by
    the monomial's text form (surfaces and threefolds)."""
    n = v.dim
    if n not in (2, 3):
        raise UnsupportedInputError("intersection form is provided for surfaces and threefolds")
    if not v.is_complete() or not v.is_simplicial():
        raise UnsupportedInputError("intersection form needs a complete simplicial variety")
    ring = v.cox_ring()
    out: dict[str, Fraction] = {}
    for combo in itertools.combinations_with_replacement(range(ring.nvars), n):
        e = [0] * ring.nvars
        for i in combo:
            e[i] += 1
        mono = ring.monomial(e)
        cls = rational_equivalence_class(v, mono)
        out[_format_term(ring.names, tuple(e), Fraction(1))] = degree(cls)
    return out
