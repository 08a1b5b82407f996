"""Elimination of the distinguished variable: multiplication matrices in
S[Z]/<f>, division-free characteristic polynomials, the elimination algebra
of char-poly coefficients with its weight law, and the slope test that
compares one-variable monomial algebras up to integral closure.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, RingContext, RingError, univ_divmod
from .rees import ReesAlgebra, ReesError, diff_saturate

CHARPOLY_DEGREE_CAP = 12


class MultiplicationMatrix:
    """Matrix of multiplication by `element` on the basis 1, Z, ..., Z^{c-1}
    of S[Z]/<modulus>; entries live in the full ring but are Z-free."""

    __slots__ = ("modulus", "element", "matrix", "z_var")

    def __init__(self, modulus, element, matrix, z_var):
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "element", element)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in matrix))
        object.__setattr__(self, "z_var", z_var)

    def __setattr__(self, *a):
        raise AttributeError("MultiplicationMatrix is immutable")

    @property
    def size(self):
        return len(self.matrix)


class EliminationResult:
    __slots__ = ("base_ring", "algebra", "provenance")

    def __init__(self, base_ring, algebra, provenance):
        object.__setattr__(self, "base_ring", base_ring)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "provenance", tuple(provenance))

    def __setattr__(self, *a):
        raise AttributeError("EliminationResult is immutable")

    def is_zero_algebra(self):
        return self.algebra.is_empty()


def mult_matrix(g, f, z_var):
    """Multiplication-by-g endomorphism of S[Z]/<f>, f monic of degree c."""
    if g.ring != f.ring:
        raise RingError("ring mismatch")
    if not f.is_monic_in(z_var):
        raise RingError("modulus is not monic in %r" % z_var)
    c = f.degree_in(z_var)
    if c < 1:
        raise RingError("modulus must have positive degree in %r" % z_var)
    ring = f.ring
    z = ring.var(z_var)
    _, g = univ_divmod(g, f, z_var)
    matrix = [[ring.zero()] * c for _ in range(c)]
    col = g
    for j in range(c):
        coeffs = col.coefficients_in(z_var)
        for i in range(min(len(coeffs), c)):
            matrix[i][j] = coeffs[i]
        _, col = univ_divmod(col * z, f, z_var)
    return MultiplicationMatrix(f, g, matrix, z_var)


def _det(entries, size):
    """Division-free determinant by expansion along rows, memoized on the
    surviving column set."""
    full = frozenset(range(size))
    cache = {}

    def minor(cols):
        if not cols:
            return None  # 0x0 determinant == 1, handled by caller
        if cols in cache:
            return cache[cols]
        row = size - len(cols)
        total = None
        for pos, j in enumerate(sorted(cols)):
            a = entries[row][j]
            if a.is_zero():
                continue
            sub_cols = cols - {j}
            if sub_cols:
                sub = minor(frozenset(sub_cols))
                if sub is None:
                    continue
                term = a * sub
            else:
                term = a
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        cache[cols] = total
        return total

    out = minor(full)
    return out


def char_poly(M):
    """Coefficients (h_1, ..., h_c) of det(V*Id - M) = V^c + h_1 V^{c-1} + ...,
    by division-free cofactor expansion; valid in any characteristic."""
    c = M.size
    if c > CHARPOLY_DEGREE_CAP:
        raise RingError("characteristic polynomial degree cap exceeded (%d > %d)"
                        % (c, CHARPOLY_DEGREE_CAP))
    ring = M.matrix[0][0].ring
    vname = "_V"
    while vname in ring.variables:
        vname += "_"
    ext = RingContext(ring.field, ring.variables + (vname,))
    v = ext.var(vname)
    entries = []
    for i in range(c):
        row = []
        for j in range(c):
            e = -M.matrix[i][j].lift(ext)
            if i == j:
                e = e + v
            row.append(e)
        entries.append(row)
    det = _det(entries, c)
    if det is None:
        det = ext.zero()
    # split det = sum h_j * V^{c-j}
    vi = ext.var_index(vname)
    buckets = [dict() for _ in range(c + 1)]
    for e, coeff in det.terms.items():
        deg = e[vi]
        rest = e[:vi] + (0,) + e[vi + 1:]
        buckets[deg][rest] = coeff
    coeffs = []
    for j in range(1, c + 1):
        h = Polynomial(ext, buckets[c - j]).project_out(vname)
        coeffs.append(h)
    return coeffs


def cayley_hamilton_residue(g, f, z_var):
    """psi_g(g) reduced mod f; zero iff Cayley-Hamilton holds (it must)."""
    M = mult_matrix(g, f, z_var)
    coeffs = char_poly(M)
    ring = f.ring
    c = M.size
    acc = g**c
    for j, h in enumerate(coeffs, start=1):
        acc = acc + h.lift(ring) * g**(c - j)
    return univ_divmod(acc, f, z_var)[1]


def eliminate(G, f_gen, z_var, check_transversal=True):
    """Elimination algebra over the ring without z_var.

    Relative diff-saturation in z_var first; then every saturated generator
    (g, n) is reduced mod f and contributes the coefficients h_j of the
    characteristic polynomial of multiplication-by-g, at weight j*n.
    Generators reducing to zero contribute nothing.
    """
    ring = G.ring
    f = f_gen.poly
    c = f_gen.weight
    if f.ring != ring:
        raise RingError("ring mismatch")
    if not f.is_monic_in(z_var):
        raise ReesError("distinguished generator is not monic in %r" % z_var)
    if f.degree_in(z_var) != c:
        raise ReesError("Z-degree of the distinguished generator (%d) differs "
                        "from its weight (%d)" % (f.degree_in(z_var), c))
    if check_transversal and f.order_at_origin() != c:
        raise ReesError("transversality failure: order %s != weight %d"
                        % (f.order_at_origin(), c))
    if f_gen not in G.generators:
        G = ReesAlgebra(ring, G.generators + (f_gen,))
    sat = diff_saturate(G, {z_var})
    base = ring.drop_variable(z_var)
    pairs = []
    provenance = []
    seen = set()
    for g in sat.generators:
        _, reduced = univ_divmod(g.poly, f, z_var)
        if reduced.is_zero():
            continue
        coeffs = char_poly(mult_matrix(reduced, f, z_var))
        for j, h in enumerate(coeffs, start=1):
            if h.is_zero():
                continue
            hb = h.project_out(z_var)
            weight = j * g.weight
            key = (hb, weight)
            if key in seen:
                continue
            seen.add(key)
            pairs.append((hb, weight))
            provenance.append((str(g.poly), g.weight, j))
    algebra = ReesAlgebra.from_pairs(base, pairs)
    return EliminationResult(base, algebra, provenance)


def format_elimination(result):
    """Algebra file format with per-generator provenance comments."""
    from .rees import format_algebra
    comments = {i: "from: %s w %d coeff %d" % prov
                for i, prov in enumerate(result.provenance)}
    return format_algebra(result.algebra, provenance=comments)


def slope_equivalent(A, B):
    """Equality up to integral closure for one-variable monomial algebras:
    compare the minimal (monomial degree)/(weight) slopes exactly.

    Anything non-monomial or multivariate is rejected, never guessed at.
    """
    def min_slope(G):
        if G.ring.nvars != 1:
            raise ReesError("slope test needs a one-variable ring")
        if G.is_empty():
            return None
        slopes = []
        for g in G.generators:
            if len(g.poly.terms) != 1:
                raise ReesError("slope test needs monomial generators, got %s"
                                % g.poly)
            (exps,) = g.poly.terms
            slopes.append(Fraction(exps[0], g.weight))
        return min(slopes)

    if A.ring != B.ring:
        raise RingError("ring mismatch")
    return min_slope(A) == min_slope(B)
