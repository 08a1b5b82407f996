"""Rees algebras given by weighted generators: differential saturation,
singular loci, point invariants (ord, simplicity, e0, tau), and monoidal
transforms at coordinate-subspace centers.

An algebra with generators {g_i W^{n_i}} always denotes the subalgebra
spanned by those elements together with every down-shifted copy g_i W^{n'}
for 1 <= n' <= n_i, so the degree filtration is decreasing.
"""
from __future__ import annotations

from fractions import Fraction

from .fields import FieldDescriptor
from .groebner import Ideal, rational_zero_set
from .hasse import diff_closure_list, hasse_derivative, _multiindices
from .poly import (INFINITE_ORDER, Polynomial, RingContext, RingError,
                   grevlex_key)


class ReesError(ValueError):
    pass


class ReesGenerator:
    """A weighted generator g W^n, n >= 1, g != 0."""

    __slots__ = ("poly", "weight")

    def __init__(self, poly, weight):
        if poly.is_zero():
            raise ReesError("generator polynomial must be nonzero")
        if weight < 1:
            raise ReesError("generator weight must be >= 1")
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "weight", int(weight))

    def __setattr__(self, *a):
        raise AttributeError("ReesGenerator is immutable")

    def __eq__(self, other):
        return (isinstance(other, ReesGenerator)
                and self.poly == other.poly and self.weight == other.weight)

    def __hash__(self):
        return hash((self.poly, self.weight))

    def __repr__(self):
        return "ReesGenerator(%s, w=%d)" % (self.poly, self.weight)


class ReesAlgebra:
    __slots__ = ("ring", "generators", "saturated_active")

    def __init__(self, ring, generators, saturated_active=None):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, ReesGenerator):
                g = ReesGenerator(*g)
            if g.poly.ring != ring:
                raise RingError("generator in a different ring")
            if g in seen:
                continue
            seen.add(g)
            gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "saturated_active",
                           frozenset(saturated_active) if saturated_active is not None
                           else None)

    def __setattr__(self, *a):
        raise AttributeError("ReesAlgebra is immutable")

    @classmethod
    def from_pairs(cls, ring, pairs, saturated_active=None):
        """Build from (polynomial, weight) pairs, silently dropping zeros."""
        gens = [ReesGenerator(p, w) for p, w in pairs if not p.is_zero()]
        return cls(ring, gens, saturated_active)

    @property
    def max_weight(self):
        return max((g.weight for g in self.generators), default=0)

    def is_empty(self):
        return not self.generators

    def __eq__(self, other):
        return (isinstance(other, ReesAlgebra)
                and self.ring == other.ring
                and set(self.generators) == set(other.generators))

    def __hash__(self):
        return hash((self.ring, frozenset(self.generators)))

    def __repr__(self):
        return "ReesAlgebra[%s]" % ", ".join(
            "%s w %d" % (g.poly, g.weight) for g in self.generators)


class BlowupChart:
    """One coordinate chart of a monoidal transform: x_l -> x_j * x_l for
    l in the center, at the chart of x_j (which becomes the exceptional
    variable)."""

    __slots__ = ("ring", "exceptional", "center", "substitution", "parent")

    def __init__(self, ring, exceptional, center, substitution, parent=None):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "exceptional", exceptional)
        object.__setattr__(self, "center", tuple(center))
        object.__setattr__(self, "substitution", dict(substitution))
        object.__setattr__(self, "parent", parent)

    def __setattr__(self, *a):
        raise AttributeError("BlowupChart is immutable")

    def depth(self):
        d, chart = 0, self
        while chart is not None:
            d += 1
            chart = chart.parent
        return d

    def __repr__(self):
        subs = ", ".join("%s->%s" % (k, v) for k, v in self.substitution.items())
        return "BlowupChart(exceptional=%s, %s)" % (self.exceptional, subs)


# -- saturation and singular locus ------------------------------------

def diff_saturate(G, active=None):
    """Smallest differential extension w.r.t. the active variable set
    (all variables when None).  Idempotent and extensive."""
    key = frozenset(active) if active is not None else frozenset(G.ring.variables)
    if G.saturated_active is not None and G.saturated_active == key:
        return G
    pairs = []
    for g in G.generators:
        pairs.extend(diff_closure_list(g.poly, g.weight, active))
    return ReesAlgebra.from_pairs(G.ring, pairs, saturated_active=key)


def singular_ideal(G):
    """Ideal cutting out Sing(G) pointwise: all Delta^alpha(g_i) with
    |alpha| <= n_i - 1, over all generators and all variables."""
    gens = []
    for g in G.generators:
        for size in range(g.weight):
            for alpha in _multiindices(range(G.ring.nvars), G.ring.nvars, size):
                d = hasse_derivative(g.poly, alpha)
                if not d.is_zero():
                    gens.append(d)
    return Ideal(G.ring, gens)


def rational_singular_points(G):
    return rational_zero_set(singular_ideal(G))


def is_singular_at(G, at):
    """Pointwise singularity test: every generator has order >= weight at the
    point (equivalent to membership in the zero set of the singular ideal)."""
    return all(g.poly.order_at(at) >= g.weight for g in G.generators)


# -- point invariants -------------------------------------------------

def generator_orders(G, at):
    return [(g.poly.order_at(at), g.weight) for g in G.generators]


def component_order(G, k, at):
    """nu_at(I_k) for the generated algebra: minimum over generator multisets
    of total weight >= k of the summed point orders, via an unbounded
    knapsack DP."""
    if k < 1:
        raise ReesError("component index must be >= 1")
    orders = generator_orders(G, at)
    if not orders:
        return INFINITE_ORDER
    dp = [0] + [INFINITE_ORDER] * k
    for j in range(1, k + 1):
        best = INFINITE_ORDER
        for order, weight in orders:
            cand = dp[max(0, j - weight)] + order
            if cand < best:
                best = cand
        dp[j] = best
    return dp[k]


def ord_at_point(G, at):
    """ord_at(G) = min over generators of (point order)/(weight), exact."""
    if G.is_empty():
        raise ReesError("ord of the empty algebra is undefined")
    best = None
    for order, weight in generator_orders(G, at):
        if order == INFINITE_ORDER:
            continue
        value = Fraction(order, weight)
        if best is None or value < best:
            best = value
    if best is None:
        return INFINITE_ORDER
    return best


def is_simple(G, at):
    """True iff ord at the point is exactly 1; the point must be singular."""
    if not is_singular_at(G, at):
        raise ReesError("point is not in the singular locus")
    return ord_at_point(G, at) == 1


def e0_invariant(G, at):
    """Smallest e >= 0 with nu(I_{p^e}) = p^e at a simple point of an
    absolutely saturated algebra; 0 by convention in characteristic 0."""
    field = G.ring.field
    if field.p == 0:
        return 0
    if not is_simple(G, at):
        raise ReesError("e0 is defined at simple points only")
    p = field.p
    e = 0
    while p**e <= G.max_weight:
        if component_order(G, p**e, at) == p**e:
            return e
        e += 1
    raise ReesError("no Frobenius level attains its weight; algebra not simple?")


def _rank(rows, field):
    """Rank of a list of coefficient vectors by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def tau_estimate(G, at):
    """Dimension of the span of linear forms extracted from additive-diagonal
    initial forms sum_i c_i x_i^{p^e} of generators with nu = weight = p^e
    (weight-1 linear parts in characteristic 0).

    A lower bound for the full Frobenius-flag invariant; exact on diagonal
    instances.
    """
    ring = G.ring
    field = ring.field
    if not is_simple(G, at):
        raise ReesError("tau is defined at simple points only")
    rows = []
    levels = [1]
    if field.p > 0:
        q = field.p
        while q <= G.max_weight:
            levels.append(q)
            q *= field.p
    for g in G.generators:
        shifted = g.poly.recenter(at)
        order = shifted.order_at_origin()
        if order != g.weight or g.weight not in levels:
            continue
        q = g.weight
        init = shifted.initial_form()
        vector = [field.zero()] * ring.nvars
        diagonal = True
        for exps, coeff in init.terms.items():
            nonzero = [(i, e) for i, e in enumerate(exps) if e]
            if len(nonzero) != 1 or nonzero[0][1] != q:
                diagonal = False
                break
            i = nonzero[0][0]
            root = coeff
            if field.p > 0:
                e = 0
                qq = q
                while qq > 1:
                    qq //= field.p
                    e += 1
                for _ in range(e):
                    root = root.pth_root()
            vector[i] = vector[i] + root
        if diagonal and any(not c.is_zero() for c in vector):
            rows.append(vector)
    if not rows:
        return 0
    return _rank(rows, field)


# -- transforms -------------------------------------------------------

def _exact_divide(f, var, n):
    """f / var^n; every term must carry var-exponent >= n."""
    i = f.ring.var_index(var)
    terms = {}
    for e, c in f.terms.items():
        if e[i] < n:
            raise ReesError("exact division by %s^%d failed" % (var, n))
        terms[e[:i] + (e[i] - n,) + e[i + 1:]] = c
    return Polynomial(f.ring, terms)


def _chart_substitution(G, center, chart_var):
    center = list(center)
    if chart_var not in center:
        raise ReesError("chart variable must lie in the center")
    for v in center:
        G.ring.var_index(v)
    chart = G.ring.var(chart_var)
    return {v: chart * G.ring.var(v) for v in center if v != chart_var}


def weighted_transform(G, center, chart_var, parent_chart=None):
    """Weighted (strict-level) transform at a coordinate-subspace center, in
    the chart of chart_var: substitute x_l -> chart * x_l for the other
    center variables, then divide each generator exactly by chart^weight.

    The center must be permissible: every generator has order >= its weight
    along the center subspace.
    """
    mapping = _chart_substitution(G, center, chart_var)
    for g in G.generators:
        if g.poly.order_along(center) < g.weight:
            raise ReesError(
                "center is not permissible: %s has order < %d along it"
                % (g.poly, g.weight))
    pairs = []
    for g in G.generators:
        moved = g.poly.substitute(mapping) if mapping else g.poly
        pairs.append((_exact_divide(moved, chart_var, g.weight), g.weight))
    chart = BlowupChart(G.ring, chart_var, center, mapping, parent_chart)
    return ReesAlgebra.from_pairs(G.ring, pairs), chart


def total_transform(G, center, chart_var):
    """Substitution only, no exceptional division."""
    mapping = _chart_substitution(G, center, chart_var)
    pairs = [(g.poly.substitute(mapping) if mapping else g.poly, g.weight)
             for g in G.generators]
    return ReesAlgebra.from_pairs(G.ring, pairs)


# -- degree parts -----------------------------------------------------

def degree_ideal(G, k):
    """Ideal generated by products of generators over minimal multisets with
    total weight >= k (minimal: dropping any factor falls below k)."""
    if k < 1:
        raise ReesError("degree must be >= 1")
    gens = []
    seen_gens = set()
    for g in G.generators:
        key = (g.poly, g.weight)
        if key not in seen_gens:
            seen_gens.add(key)
            gens.append(g)
    products = set()
    visited = set()

    def rec(start, weight_sum, product, min_member_weight):
        if weight_sum >= k:
            # minimal iff removing the lightest member drops below k
            if weight_sum - min_member_weight < k:
                products.add(product)
            return
        state = (start, weight_sum, min_member_weight, product)
        if state in visited:
            return
        visited.add(state)
        for i in range(start, len(gens)):
            g = gens[i]
            rec(i, weight_sum + g.weight, product * g.poly,
                min(min_member_weight, g.weight))

    rec(0, 0, G.ring.one(), INFINITE_ORDER)
    return Ideal(G.ring, _drop_divisible_monomials(products))


def _drop_divisible_monomials(products):
    """Discard monomial products strictly divisible by another monomial
    product (sound for monomials; other polynomials are kept untouched)."""
    monomials = []
    rest = []
    for p in products:
        (monomials if len(p.terms) == 1 else rest).append(p)
    monomials.sort(key=lambda p: grevlex_key(p.leading_monomial()))
    kept = []
    for p in monomials:
        e = p.leading_monomial()
        if any(all(x <= y for x, y in zip(q.leading_monomial(), e))
               for q in kept):
            continue
        kept.append(p)
    rest.sort(key=lambda p: grevlex_key(p.leading_monomial()))
    return kept + rest


# -- file format ------------------------------------------------------

def parse_algebra(text):
    """Parse the algebra file format:

        ring: F2[Y,Z]
        gen: Z^2+Y^5 w 2
    """
    ring = None
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring:"):
            body = line[len("ring:"):].strip()
            if "[" not in body or not body.endswith("]"):
                raise ReesError("bad ring header %r" % line)
            fieldspec, varlist = body[:-1].split("[", 1)
            field = FieldDescriptor.parse(fieldspec.strip())
            variables = [v.strip() for v in varlist.split(",")]
            ring = RingContext(field, variables)
        elif line.startswith("gen:"):
            if ring is None:
                raise ReesError("gen line before ring header")
            body = line[len("gen:"):].strip()
            polytext, sep, weighttext = body.rpartition(" w ")
            if not sep:
                raise ReesError("bad generator line %r" % line)
            pairs.append((ring.parse(polytext.strip()), int(weighttext)))
        else:
            raise ReesError("unrecognized line %r" % line)
    if ring is None:
        raise ReesError("missing ring header")
    return ReesAlgebra.from_pairs(ring, pairs)


def format_algebra(G, provenance=None):
    """Emit the algebra file format; provenance maps generator index to a
    comment string."""
    field = G.ring.field
    lines = ["ring: %s[%s]" % (field.spec(), ",".join(G.ring.variables))]
    for i, g in enumerate(G.generators):
        line = "gen: %s w %d" % (g.poly, g.weight)
        if provenance and i in provenance:
            line += "  # %s" % provenance[i]
        lines.append(line)
    return "\n".join(lines) + "\n"


def normalize_generators(G):
    """Scale each generator by the inverse of its leading coefficient, for
    readable output; drops exact duplicates created by the scaling."""
    pairs = []
    for g in G.generators:
        lead = g.poly.leading_coefficient()
        pairs.append((g.poly.scale(lead.inverse()), g.weight))
    return ReesAlgebra.from_pairs(G.ring, pairs,
                                  saturated_active=G.saturated_active)
