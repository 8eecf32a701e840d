"""Multivariate polynomials over Q, ideals, Groebner bases, multigradings.

Coefficients are always exact rationals.  The default term order is
degrevlex with the variables in constructor order, i.e. x1 > x2 > ...; a
monomial beats another of the same total degree when the *last* nonzero
entry of the exponent difference is negative.  Reduced Groebner bases are
cached per (ideal, order) and are unique, so ideal equality is decided by
mutual normal-form reduction.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedInputError, ValidationError
from .lattice import Vec, vec

Monomial = tuple[int, ...]

DEGREVLEX = "degrevlex"
LEX = "lex"


def elimination_order(block: int):
    """Block order eliminating the first `block` variables."""
    return ("elim", block)


def _key_degrevlex(e: Monomial):
    return (sum(e), tuple(-x for x in reversed(e)))


def monomial_key(order):
    if order == DEGREVLEX:
        return _key_degrevlex
    if order == LEX:
        return lambda e: e
    if isinstance(order, tuple) and len(order) == 2 and order[0] == "elim":
        k = order[1]
        return lambda e: (_key_degrevlex(e[:k]), _key_degrevlex(e[k:]))
    raise ValidationError(f"unknown term order {order!r}")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    """A polynomial ring over Q given by an ordered variable name tuple."""

    __slots__ = ("names",)

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValidationError("duplicate variable names")
        self.names = names

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing{self.names}"

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c) -> "MultiPoly":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def gen(self, i: int) -> "MultiPoly":
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["MultiPoly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exponents, coeff=1) -> "MultiPoly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        e = vec(exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValidationError("bad exponent vector")
        return MultiPoly(self, {e: coeff})

    def parse(self, text: str) -> "MultiPoly":
        return parse_poly(self, text)


class MultiPoly:
    """Immutable multivariate polynomial with Fraction coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if self.is_zero:
            return 0
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading(self, key) -> tuple[Monomial, Fraction]:
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, key) -> "MultiPoly":
        if self.is_zero:
            return self
        _, c = self.leading(key)
        return MultiPoly(self.ring, {m: v / c for m, v in self.terms.items()})

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValidationError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.ring, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)})"


# ---------------------------------------------------------------------------
# text form (matches the transcript syntax: `-x1*x2 + x3^2`)

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)"
                    r"|(?P<op>[-+*^()]))")


def parse_poly(ring: PolyRing, text: str) -> MultiPoly:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip():
                raise ValidationError(f"cannot tokenize polynomial near {text[pos:]!r}")
            break
        tokens.append(m)
        pos = m.end()
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else None

    def factor() -> MultiPoly:
        nonlocal idx
        tok = peek()
        if tok is None:
            raise ValidationError("unexpected end of polynomial")
        if tok.group("num"):
            idx += 1
            return ring.constant(Fraction(tok.group("num")))
        if tok.group("name"):
            name = tok.group("name")
            if name not in ring.names:
                raise ValidationError(f"unknown variable {name!r}")
            idx += 1
            base = ring.gen(ring.names.index(name))
            nxt = peek()
            if nxt is not None and nxt.group("op") == "^":
                idx += 1
                exp_tok = peek()
                if exp_tok is None or not exp_tok.group("num") or "/" in exp_tok.group("num"):
                    raise ValidationError("exponent must be a nonnegative integer")
                idx += 1
                return base ** int(exp_tok.group("num"))
            return base
        raise ValidationError(f"unexpected token {tok.group(0).strip()!r}")

    def term() -> MultiPoly:
        nonlocal idx
        out = factor()
        while True:
            tok = peek()
            if tok is not None and tok.group("op") == "*":
                idx += 1
                out = out * factor()
            else:
                return out

    def expr() -> MultiPoly:
        nonlocal idx
        sign = 1
        tok = peek()
        if tok is not None and tok.group("op") in ("+", "-"):
            sign = -1 if tok.group("op") == "-" else 1
            idx += 1
        out = term() * sign
        while True:
            tok = peek()
            if tok is None:
                return out
            if tok.group("op") not in ("+", "-"):
                raise ValidationError(f"unexpected token {tok.group(0).strip()!r}")
            sign = -1 if tok.group("op") == "-" else 1
            idx += 1
            out = out + term() * sign

    result = expr()
    if idx != len(tokens):
        raise ValidationError("trailing characters in polynomial")
    return result


def _format_term(names, mono: Monomial, coeff: Fraction) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    return f"{coeff}*{body}"


def format_poly(p: MultiPoly) -> str:
    """Terms in descending degrevlex order, transcript style."""
    if p.is_zero:
        return "0"
    key = _key_degrevlex
    parts = []
    for m in sorted(p.terms, key=key, reverse=True):
        s = _format_term(p.ring.names, m, p.terms[m])
        if not parts:
            parts.append(s)
        elif s.startswith("-"):
            parts.append(f"- {s[1:]}")
        else:
            parts.append(f"+ {s}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# division and Buchberger


def reduce_poly(f: MultiPoly, basis, order=DEGREVLEX) -> MultiPoly:
    """Full normal form of f modulo the list `basis`."""
    key = monomial_key(order)
    leads = [(g.leading(key), g) for g in basis if not g.is_zero]
    work = dict(f.terms)
    remainder: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for (lm, lc), g in leads:
            if _mono_divides(lm, m):
                shift = _mono_div(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    t = _mono_mul(gm, shift)
                    if t == m:
                        continue
                    val = work.get(t, Fraction(0)) - factor * gc
                    if val == 0:
                        work.pop(t, None)
                    else:
                        work[t] = val
                break
        else:
            remainder[m] = c
    return MultiPoly(f.ring, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly, key) -> MultiPoly:
    fm, fc = f.leading(key)
    gm, gc = g.leading(key)
    l = _mono_lcm(fm, gm)
    ring = f.ring
    a = ring.monomial(_mono_div(l, fm), Fraction(1) / fc)
    b = ring.monomial(_mono_div(l, gm), Fraction(1) / gc)
    return a * f - b * g


def groebner_basis(generators, order=DEGREVLEX) -> tuple[MultiPoly, ...]:
    """Reduced Groebner basis via Buchberger with the sugar strategy.

    Both classical pair criteria are applied: coprime leading monomials are
    skipped, and a pair is dropped when a third basis element divides its lcm
    and both sub-pairs were already treated.
    """
    key = monomial_key(order)
    basis = [g.monic(key) for g in generators if not g.is_zero]
    if not basis:
        return ()
    sugar = [g.total_degree() for g in basis]
    leads = [g.leading(key)[0] for g in basis]

    def pair_data(i, j):
        l = _mono_lcm(leads[i], leads[j])
        s = sum(l) + max(sugar[i] - sum(leads[i]), sugar[j] - sum(leads[j]))
        return (s, key(l), i, j)

    pairs = {(i, j): pair_data(i, j)
             for i, j in itertools.combinations(range(len(basis)), 2)}
    done: set[tuple[int, int]] = set()
    while pairs:
        (i, j) = min(pairs, key=lambda p: pairs[p])
        del pairs[(i, j)]
        done.add((i, j))
        li, lj = leads[i], leads[j]
        l = _mono_lcm(li, lj)
        if l == _mono_mul(li, lj):
            continue  # coprime criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _mono_divides(leads[k], l):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], key)
        h = reduce_poly(s, basis, order)
        if h.is_zero:
            continue
        h = h.monic(key)
        new = len(basis)
        basis.append(h)
        sugar.append(max(sum(l) + max(sugar[i] - sum(li), sugar[j] - sum(lj)),
                         h.total_degree()))
        leads.append(h.leading(key)[0])
        for k in range(new):
            pairs[(k, new)] = pair_data(k, new)

    # minimize, then tail-reduce
    minimal = []
    for i, g in enumerate(basis):
        lm = leads[i]
        if any(j != i and _mono_divides(leads[j], lm)
               and (leads[j] != lm or j < i) for j in range(len(basis))):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        h = reduce_poly(g, others, order)
        if not h.is_zero:
            reduced.append(h.monic(key))
    return tuple(sorted(reduced, key=lambda g: key(g.leading(key)[0])))


class PolyIdeal:
    """An ideal with cached reduced Groebner bases per term order."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise ValidationError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._gb = {}

    def groebner(self, order=DEGREVLEX) -> tuple[MultiPoly, ...]:
        if order not in self._gb:
            self._gb[order] = groebner_basis(self.gens, order)
        return self._gb[order]

    def normal_form(self, f: MultiPoly, order=DEGREVLEX) -> MultiPoly:
        if f.ring != self.ring:
            raise ValidationError("polynomial from a different ring")
        return reduce_poly(f, self.groebner(order), order)

    def contains(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero

    @property
    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.gens)

    def __repr__(self):
        return "ideal(" + ", ".join(format_poly(g) for g in self.gens) + ")"


def normal_form(f: MultiPoly, ideal: PolyIdeal, order=DEGREVLEX) -> MultiPoly:
    return ideal.normal_form(f, order)


def ideal_equal(a: PolyIdeal, b: PolyIdeal) -> bool:
    if a.ring != b.ring:
        raise ValidationError("ideals in different rings")
    return (all(b.contains(g) for g in a.gens)
            and all(a.contains(g) for g in b.gens))


def saturate(ideal: PolyIdeal, f: MultiPoly) -> PolyIdeal:
    """I : f^infinity, by adjoining t*f - 1 and eliminating t."""
    if f.is_zero:
        raise ValidationError("cannot saturate at zero")
    ring = ideal.ring
    tname = "t_"
    while tname in ring.names:
        tname += "_"
    ext = PolyRing((tname,) + ring.names)

    def lift(p: MultiPoly) -> MultiPoly:
        return MultiPoly(ext, {(0,) + m: c for m, c in p.terms.items()})

    gens = [lift(g) for g in ideal.gens]
    gens.append(ext.gen(0) * lift(f) - 1)
    gb = groebner_basis(gens, elimination_order(1))
    down = []
    for g in gb:
        if all(m[0] == 0 for m in g.terms):
            down.append(MultiPoly(ring, {m[1:]: c for m, c in g.terms.items()}))
    return PolyIdeal(ring, tuple(down))


# ---------------------------------------------------------------------------
# multigradings


@dataclass(frozen=True)
class Grading:
    """Degree group rank and one integer degree vector per variable."""

    rank: int
    degrees: tuple[Vec, ...]

    def __post_init__(self):
        if any(len(d) != self.rank for d in self.degrees):
            raise ValidationError("degree vector of wrong rank")

    def degree(self, mono: Monomial) -> Vec:
        out = [0] * self.rank
        for e, d in zip(mono, self.degrees):
            if e:
                for i in range(self.rank):
                    out[i] += e * d[i]
        return tuple(out)

    def poly_degree(self, p: MultiPoly) -> Vec | None:
        """The common degree of all terms, or None for 0 / inhomogeneous."""
        degs = {self.degree(m) for m in p.terms}
        if len(degs) != 1:
            return None
        return degs.pop()


def _positive_combination_feasible(degrees, target):
    from .polyhedral import lp_feasible  # local: avoids import at module load

    n = len(degrees)
    rank = len(target)
    weak = []
    for i in range(rank):
        row = [Fraction(d[i]) for d in degrees]
        weak.append((row, Fraction(target[i])))
        weak.append(([-x for x in row], -Fraction(target[i])))
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(-1)
        weak.append((row, Fraction(0)))
    return lp_feasible([], weak)


def graded_component_basis(ring: PolyRing, grading: Grading, degree,
                           modulo: PolyIdeal | None = None) -> tuple[MultiPoly, ...]:
    """Monomial basis of the degree-`degree` component of ring / modulo.

    Raises when the component is infinite dimensional (the degrees admit a
    nontrivial nonnegative relation reaching zero).
    """
    target = vec(degree)
    if len(target) != grading.rank:
        raise ValidationError("degree vector of wrong rank")
    degs = grading.degrees
    n = ring.nvars
    if n and _nonzero_relation(degs, grading.rank):
        raise UnsupportedInputError("infinite dimensional graded component")

    monos: list[Monomial] = []

    def search(i: int, exp: list[int], rem: Vec):
        if i == n:
            if not any(rem):
                monos.append(tuple(exp))
            return
        e = 0
        while _positive_combination_feasible(
                degs[i:], tuple(r - e * d for r, d in zip(rem, degs[i]))):
            exp.append(e)
            search(i + 1, exp, tuple(r - e * d for r, d in zip(rem, degs[i])))
            exp.pop()
            e += 1

    if n == 0:
        if not any(target):
            monos.append(())
    else:
        search(0, [], target)

    if modulo is not None:
        key = monomial_key(DEGREVLEX)
        leads = [g.leading(key)[0] for g in modulo.groebner()]
        monos = [m for m in monos if not any(_mono_divides(l, m) for l in leads)]
    monos.sort(key=_key_degrevlex)
    return tuple(ring.monomial(m) for m in monos)


def _nonzero_relation(degrees, rank):
    """True when some nonzero nonnegative combination of the degrees is 0."""
    from .polyhedral import lp_feasible

    n = len(degrees)
    weak = []
    for i in range(rank):
        row = [Fraction(d[i]) for d in degrees]
        weak.append((row, Fraction(0)))
        weak.append(([-x for x in row], Fraction(0)))
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(-1)
        weak.append((row, Fraction(0)))
    total = ([Fraction(-1)] * n, Fraction(-1))  # sum lambda >= 1
    return lp_feasible([], weak + [total])
