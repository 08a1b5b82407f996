"""Sparse multivariate polynomials over an exact field, plus the univariate
toolkit (division, gcd, radical) used by the ramification oracle.

Terms are kept in a dict keyed by exponent tuples; zero coefficients are
never stored, so equal polynomials have identical term maps.  The only
monomial order is grevlex over the ring's declared variable order.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .fields import FieldDescriptor, FieldElement, FieldError

INFINITE_ORDER = math.inf


class RingError(ValueError):
    pass


class RingContext:
    """A polynomial ring: a coefficient field and an ordered variable list."""

    __slots__ = ("field", "variables", "_index")

    def __init__(self, field, variables):
        variables = tuple(variables)
        if not variables:
            raise RingError("ring needs at least one variable")
        if len(set(variables)) != len(variables) or any(not v for v in variables):
            raise RingError("variable names must be distinct and nonempty")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})

    def __setattr__(self, *a):
        raise AttributeError("RingContext is immutable")

    @property
    def nvars(self):
        return len(self.variables)

    def var_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingError("unknown variable %r" % name) from None

    def coeff(self, value):
        return self.field.element(value)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        c = self.coeff(value)
        if c.is_zero():
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        exps = [0] * self.nvars
        exps[self.var_index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def monomial(self, exps, coeff=1):
        c = self.coeff(coeff)
        if c.is_zero():
            return self.zero()
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingError("exponent vector length mismatch")
        return Polynomial(self, {exps: c})

    def point(self, coords):
        return RationalPoint(self, coords)

    def origin(self):
        return RationalPoint(self, [0] * self.nvars)

    def drop_variable(self, name):
        """Ring with one variable removed (used by elimination)."""
        rest = [v for v in self.variables if v != name]
        self.var_index(name)
        return RingContext(self.field, rest)

    def parse(self, text):
        return parse_polynomial(self, text)

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and self.field == other.field
                and self.variables == other.variables)

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return "RingContext(%s[%s])" % (self.field.spec(), ",".join(self.variables))


def grevlex_key(exps):
    """Sort key: bigger key means bigger monomial in grevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class RationalPoint:
    """A point with coordinates in the coefficient field."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        coords = tuple(ring.coeff(c) for c in coords)
        if len(coords) != ring.nvars:
            raise RingError("coordinate count mismatch")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("RationalPoint is immutable")

    def __getitem__(self, name):
        return self.coords[self.ring.var_index(name)]

    def drop(self, name):
        """Projection forgetting one coordinate."""
        i = self.ring.var_index(name)
        return RationalPoint(self.ring.drop_variable(name),
                             self.coords[:i] + self.coords[i + 1:])

    def is_origin(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, RationalPoint)
                and self.ring == other.ring and self.coords == other.coords)

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __repr__(self):
        return "RationalPoint(%s)" % (", ".join(
            "%s=%s" % (v, c) for v, c in zip(self.ring.variables, self.coords)))


class Polynomial:
    """Sparse polynomial; term map from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, self.ring.field.zero())

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise RingError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = self.ring.coeff(c)
        if c.is_zero():
            return self.ring.zero()
        return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- queries ------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        i = self.ring.var_index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def order_at_origin(self):
        """Minimum total degree of the support; +inf for the zero polynomial."""
        if not self.terms:
            return INFINITE_ORDER
        return min(sum(e) for e in self.terms)

    def order_along(self, center_vars):
        """Minimum exponent sum over the center variables; +inf for zero."""
        idx = [self.ring.var_index(v) for v in center_vars]
        if not idx:
            raise RingError("center must be nonempty")
        if not self.terms:
            return INFINITE_ORDER
        return min(sum(e[i] for i in idx) for e in self.terms)

    def initial_form(self):
        """Sum of terms of minimal total degree."""
        if not self.terms:
            raise RingError("zero polynomial has no initial form")
        d = self.order_at_origin()
        return Polynomial(self.ring,
                          {e: c for e, c in self.terms.items() if sum(e) == d})

    def order_at(self, point):
        """Order at a rational point (translate to origin, then at origin)."""
        return self.recenter(point).order_at_origin()

    def leading_monomial(self):
        """Greatest exponent tuple under grevlex."""
        if not self.terms:
            raise RingError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    # -- substitution -------------------------------------------------

    def substitute(self, mapping):
        """Simultaneous substitution variable -> polynomial (same ring)."""
        ring = self.ring
        images = {}
        for name, image in mapping.items():
            i = ring.var_index(name)
            if isinstance(image, Polynomial):
                if image.ring != ring:
                    raise RingError("substitution image in a different ring")
            else:
                image = ring.constant(image)
            images[i] = image
        result = ring.zero()
        power_cache = {}
        for exps, coeff in self.terms.items():
            part = ring.constant(coeff)
            plain = [0] * ring.nvars
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if i in images:
                    key = (i, e)
                    if key not in power_cache:
                        power_cache[key] = images[i]**e
                    part = part * power_cache[key]
                else:
                    plain[i] = e
            result = result + part * ring.monomial(plain)
        return result

    def evaluate(self, point):
        if point.ring != self.ring:
            raise RingError("ring mismatch")
        total = self.ring.field.zero()
        for exps, coeff in self.terms.items():
            v = coeff
            for c, e in zip(point.coords, exps):
                if e:
                    v = v * c**e
            total = total + v
        return total

    def recenter(self, point):
        """f(x + P): shifts the point to the origin."""
        if point.ring != self.ring:
            raise RingError("ring mismatch")
        mapping = {}
        for name, c in zip(self.ring.variables, point.coords):
            if not c.is_zero():
                mapping[name] = self.ring.var(name) + self.ring.constant(c)
        if not mapping:
            return self
        return self.substitute(mapping)

    def project_out(self, var):
        """Image in the ring without var; requires no dependence on var."""
        i = self.ring.var_index(var)
        target = self.ring.drop_variable(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] != 0:
                raise RingError("polynomial depends on %r" % var)
            terms[e[:i] + e[i + 1:]] = c
        return Polynomial(target, terms)

    def lift(self, ring):
        """Image in a bigger ring containing all of this ring's variables."""
        pos = [ring.var_index(v) for v in self.ring.variables]
        terms = {}
        for e, c in self.terms.items():
            exps = [0] * ring.nvars
            for p, x in zip(pos, e):
                exps[p] = x
            terms[tuple(exps)] = ring.coeff(c)
        return Polynomial(ring, terms)

    # -- univariate toolkit -------------------------------------------

    def coefficients_in(self, var):
        """List of coefficient polynomials [c_0, ..., c_d] viewing self in var."""
        i = self.ring.var_index(var)
        d = self.degree_in(var)
        if d < 0:
            return []
        buckets = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            buckets[e[i]][rest] = c
        return [Polynomial(self.ring, b) for b in buckets]

    def is_monic_in(self, var):
        coeffs = self.coefficients_in(var)
        return bool(coeffs) and coeffs[-1] == self.ring.one()

    def __repr__(self):
        return "Polynomial(%s)" % format_polynomial(self)

    def __str__(self):
        return format_polynomial(self)


def univ_divmod(f, g, var):
    """Division of f by g, monic in var: f = q*g + r with deg_var(r) < deg_var(g)."""
    if f.ring != g.ring:
        raise RingError("ring mismatch")
    ring = f.ring
    if not g.is_monic_in(var):
        raise RingError("divisor is not monic in %r" % var)
    i = ring.var_index(var)
    dg = g.degree_in(var)
    q = ring.zero()
    r = f
    while r.degree_in(var) >= dg:
        dr = r.degree_in(var)
        lead_terms = {e[:i] + (dr - dg,) + e[i + 1:]: c
                      for e, c in r.terms.items() if e[i] == dr}
        step = Polynomial(ring, lead_terms)
        q = q + step
        r = r - step * g
    return q, r


def univ_gcd(f, g, var):
    """Monic gcd of two polynomials univariate in var over their field."""
    a, b = f, g
    while not b.is_zero():
        lead = b.coefficients_in(var)[-1]
        if not lead.is_constant():
            raise RingError("gcd requires univariate input")
        b_monic = b.scale(lead.constant_value().inverse())
        _, r = univ_divmod(a, b_monic, var)
        a, b = b_monic, r
    if a.is_zero():
        return a
    lead = a.coefficients_in(var)
    if lead:
        c = lead[-1]
        if not c.is_constant():
            raise RingError("gcd requires univariate input")
        a = a.scale(c.constant_value().inverse())
    return a


def formal_derivative(f, var):
    """d/d(var), the ordinary (not Hasse) derivative."""
    i = f.ring.var_index(var)
    terms = {}
    for e, c in f.terms.items():
        if e[i] == 0:
            continue
        coef = c * f.ring.field.element(e[i])
        if coef.is_zero():
            continue
        terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = coef
    return Polynomial(f.ring, terms)


def _only_variable(f):
    used = set()
    for e in f.terms:
        for i, x in enumerate(e):
            if x:
                used.add(i)
    if len(used) > 1:
        raise RingError("polynomial is not univariate")
    if used:
        return f.ring.variables[used.pop()]
    return f.ring.variables[0]


def univ_radical(f):
    """Product of the distinct monic irreducible factors of a univariate f
    over a finite field, peeling p-th powers via coefficient p-th roots.

    The degree of the result is the number of distinct roots of f in the
    algebraic closure.
    """
    ring = f.ring
    if ring.field.p == 0:
        raise RingError("radical implemented over finite fields only")
    if f.is_zero():
        raise RingError("radical of the zero polynomial")
    var = _only_variable(f)
    coeffs = f.coefficients_in(var)
    for c in coeffs:
        if not c.is_constant():
            raise RingError("polynomial is not univariate")
    if f.degree_in(var) == 0:
        return ring.one()
    lead = coeffs[-1].constant_value()
    f = f.scale(lead.inverse())
    deriv = formal_derivative(f, var)
    if deriv.is_zero():
        # f = h(var^p); take p-th roots of coefficients and recurse
        p = ring.field.p
        i = ring.var_index(var)
        terms = {}
        for e, c in f.terms.items():
            exps = list(e)
            exps[i] //= p
            terms[tuple(exps)] = c.pth_root()
        return univ_radical(Polynomial(ring, terms))
    g = univ_gcd(f, deriv, var)
    sqfree, rem = univ_divmod(f, g, var)
    assert rem.is_zero()
    if g.degree_in(var) == 0:
        return sqfree
    # distinct factors of f = distinct factors of (f/g) joined with those of g
    rad_g = univ_radical(g)
    prod = sqfree * rad_g
    return univ_divmod(prod, univ_gcd(sqfree, rad_g, var), var)[0]


# -- text format ------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-|\(|\))")


def parse_polynomial(ring, text):
    """Parse `Z^2 + Y^5`, `-3*X*Z1^2` style syntax in the given ring."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise RingError("bad polynomial syntax near %r" % text[pos:])
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise RingError("empty polynomial text")

    it = iter(tokens)
    current = [next(it, None)]

    def peek():
        return current[0]

    def advance():
        tok = current[0]
        current[0] = next(it, None)
        return tok

    def parse_factor():
        tok = peek()
        if tok == "(":
            advance()
            inner = parse_sum()
            if advance() != ")":
                raise RingError("unbalanced parentheses")
            return inner
        if tok is None:
            raise RingError("unexpected end of polynomial")
        advance()
        if tok.replace("/", "").isdigit():
            base = ring.constant(Fraction(tok)) if "/" in tok \
                else ring.constant(int(tok))
        elif tok in ring.variables:
            base = ring.var(tok)
        elif tok == "t" and ring.field.k > 1:
            base = ring.constant(ring.field.generator())
        else:
            raise RingError("undeclared name %r" % tok)
        if peek() == "^":
            advance()
            exp = advance()
            if exp is None or not exp.isdigit():
                raise RingError("bad exponent")
            base = base**int(exp)
        return base

    def parse_term():
        sign = 1
        while peek() in ("+", "-"):
            if advance() == "-":
                sign = -sign
        f = parse_factor()
        while peek() == "*" or (peek() is not None and peek() not in "+-)"):
            if peek() == "*":
                advance()
            f = f * parse_factor()
        return f if sign == 1 else -f

    def parse_sum():
        total = parse_term()
        while peek() in ("+", "-"):
            total = total + parse_term()
        return total

    result = parse_sum()
    if peek() is not None:
        raise RingError("trailing tokens in polynomial text")
    return result


def _format_coeff(c):
    s = str(c)
    if "+" in s or "-" in s[1:]:
        return "(%s)" % s
    return s


def format_polynomial(f):
    if f.is_zero():
        return "0"
    one = f.ring.field.one()
    parts = []
    for exps in sorted(f.terms, key=grevlex_key, reverse=True):
        c = f.terms[exps]
        factors = []
        for v, e in zip(f.ring.variables, exps):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append("%s^%d" % (v, e))
        if not factors:
            body = _format_coeff(c)
        elif c == one:
            body = "*".join(factors)
        elif c == -one and f.ring.field.p != 2:
            body = "-" + "*".join(factors)
        else:
            body = _format_coeff(c) + "*" + "*".join(factors)
        parts.append(body)
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out
