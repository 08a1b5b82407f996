"""Ideals with Groebner-based membership and finite-field point scans.

Plain Buchberger under grevlex with the normal selection strategy
(smallest lcm first) and full inter-reduction.  Instances here are tiny,
so determinism is worth more than speed; a hard cap on the basis size
turns runaway computations into a clean error.
"""
from __future__ import annotations

import heapq
import itertools

from .poly import Polynomial, RationalPoint, RingError, grevlex_key

DEFAULT_BASIS_CAP = 10_000


class ResourceCapError(RuntimeError):
    pass


class Ideal:
    """Finitely generated ideal; zero generators are dropped."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring, generators):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingError("generator in a different ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    def groebner(self, cap=DEFAULT_BASIS_CAP):
        return buchberger(self, cap=cap)

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


class GroebnerBasis:
    __slots__ = ("ideal", "basis")

    def __init__(self, ideal, basis):
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "basis", tuple(basis))

    def __setattr__(self, *a):
        raise AttributeError("GroebnerBasis is immutable")

    @property
    def ring(self):
        return self.ideal.ring

    def __repr__(self):
        return "GroebnerBasis(%s)" % ", ".join(str(g) for g in self.basis)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis):
    """Remainder of f on full reduction by the basis (a list of polynomials)."""
    if not basis:
        return f
    ring = f.ring
    leads = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        lm = work.leading_monomial()
        lc = work.terms[lm]
        for glm, glc, g in leads:
            if _divides(glm, lm):
                quot_exp = tuple(x - y for x, y in zip(lm, glm))
                factor = ring.monomial(quot_exp, lc / glc)
                work = work - factor * g
                break
        else:
            head = ring.monomial(lm, lc)
            remainder = remainder + head
            work = work - head
    return remainder


def _s_polynomial(f, g):
    ring = f.ring
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = _lcm(lf, lg)
    mf = ring.monomial(tuple(a - b for a, b in zip(lcm, lf)),
                       f.leading_coefficient().inverse())
    mg = ring.monomial(tuple(a - b for a, b in zip(lcm, lg)),
                       g.leading_coefficient().inverse())
    return mf * f - mg * g


def buchberger(ideal, cap=DEFAULT_BASIS_CAP):
    """Reduced Groebner basis under grevlex, normal selection strategy
    (smallest lcm first, via a heap keyed at pair creation)."""
    seen = set()
    basis = []
    for g in ideal.generators:
        g = g.scale(g.leading_coefficient().inverse())
        if not g.is_zero() and g not in seen:
            seen.add(g)
            basis.append(g)
    heap = []

    def push_pairs(new):
        lm_new = basis[new].leading_monomial()
        for k in range(new):
            lcm = _lcm(basis[k].leading_monomial(), lm_new)
            heapq.heappush(heap, (grevlex_key(lcm), k, new))

    for n in range(len(basis)):
        push_pairs(n)
    while heap:
        _, i, j = heapq.heappop(heap)
        f, g = basis[i], basis[j]
        lf, lg = f.leading_monomial(), g.leading_monomial()
        # Buchberger's first criterion: disjoint leading supports
        if _lcm(lf, lg) == tuple(a + b for a, b in zip(lf, lg)):
            continue
        s = normal_form(_s_polynomial(f, g), basis)
        if s.is_zero():
            continue
        s = s.scale(s.leading_coefficient().inverse())
        basis.append(s)
        if len(basis) > cap:
            raise ResourceCapError("Groebner basis exceeded %d elements" % cap)
        push_pairs(len(basis) - 1)
    return GroebnerBasis(ideal, _interreduce(basis))


def _interreduce(basis):
    # remove redundant leading monomials, then fully reduce each element
    basis = sorted((g for g in basis if not g.is_zero()),
                   key=lambda g: grevlex_key(g.leading_monomial()))
    kept = []
    for g in basis:
        lm = g.leading_monomial()
        if any(_divides(h.leading_monomial(), lm) for h in kept):
            continue
        kept.append(g)
    reduced = []
    for i, g in enumerate(kept):
        rest = kept[:i] + kept[i + 1:]
        r = normal_form(g, rest) if rest else g
        if not r.is_zero():
            reduced.append(r.scale(r.leading_coefficient().inverse()))
    reduced.sort(key=lambda g: grevlex_key(g.leading_monomial()))
    return reduced


def membership(f, gb):
    """True iff the normal form of f modulo the basis is zero."""
    if f.ring != gb.ring:
        raise RingError("ring mismatch")
    return normal_form(f, list(gb.basis)).is_zero()


def ideal_equal(I, J, cap=DEFAULT_BASIS_CAP):
    """Equality of ideals via identical reduced Groebner bases."""
    if I.ring != J.ring:
        raise RingError("ring mismatch")
    gi = buchberger(I, cap=cap)
    gj = buchberger(J, cap=cap)
    return list(gi.basis) == list(gj.basis)


def rational_zero_set(ideal):
    """All rational points of the (finite) coefficient field where every
    generator vanishes, by exhaustive scan."""
    ring = ideal.ring
    if ring.field.p == 0:
        raise RingError("point scan needs a finite coefficient field")
    elements = ring.field.elements()
    points = set()
    for coords in itertools.product(elements, repeat=ring.nvars):
        point = RationalPoint(ring, coords)
        if all(g.evaluate(point).is_zero() for g in ideal.generators):
            points.add(point)
    return points
