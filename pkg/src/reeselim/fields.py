"""Exact coefficient fields: Q and finite fields F_{p^k} with k <= 4.

Characteristic 0 elements are arbitrary-precision rationals; prime-field
elements are residues in [0, p); extension-field elements are coefficient
tuples of degree < k polynomials over F_p reduced modulo a monic
irreducible modulus.  Everything is immutable and exact.
"""
from __future__ import annotations

from fractions import Fraction

# monic irreducible moduli, low-to-high coefficient order, used when the
# caller does not supply one
BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),        # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),     # t^3 + t + 1
    (2, 4): (1, 1, 0, 0, 1),  # t^4 + t + 1
    (3, 2): (1, 0, 1),        # t^2 + 1
    (3, 3): (1, 2, 0, 1),     # t^3 + 2t + 1
    (5, 2): (3, 0, 1),        # t^2 + 3
    (7, 2): (1, 0, 1),        # t^2 + 1
}


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _polymod(num, mod, p):
    """Remainder of num by monic mod, coefficients over F_p (lists, low-to-high)."""
    num = [c % p for c in num]
    dm = len(mod) - 1
    while len(_trim(num)) - 1 >= dm:
        num = _trim(num)
        shift = len(num) - 1 - dm
        lead = num[-1]
        for i, c in enumerate(mod):
            num[shift + i] = (num[shift + i] - lead * c) % p
    num = _trim(num)
    return num


def _polymul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def _poly_divides(d, f, p):
    """True if monic d divides f over F_p."""
    return not _polymod(f, d, p)


class FieldError(ValueError):
    pass


class FieldDescriptor:
    """Q (characteristic 0) or F_{p^k} with a monic irreducible modulus for k > 1."""

    __slots__ = ("p", "k", "modulus")

    def __init__(self, characteristic, extension_degree=1, modulus=None):
        p, k = characteristic, extension_degree
        if p == 0:
            if k != 1:
                raise FieldError("characteristic 0 requires extension degree 1")
            if modulus is not None:
                raise FieldError("characteristic 0 admits no modulus")
        else:
            if not _is_prime(p) or p >= 2**31:
                raise FieldError("characteristic must be 0 or a prime < 2^31")
            if not 1 <= k <= 4:
                raise FieldError("extension degree must be in 1..4")
            if k == 1:
                if modulus is not None:
                    raise FieldError("prime field takes no modulus")
            else:
                if modulus is None:
                    modulus = BUILTIN_MODULI.get((p, k))
                    if modulus is None:
                        raise FieldError(
                            "no built-in modulus for F_%d^%d; supply one" % (p, k))
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != k + 1 or modulus[-1] != 1:
                    raise FieldError("modulus must be monic of degree %d" % k)
                self._check_irreducible(modulus, p, k)
        self.p = p
        self.k = k
        self.modulus = tuple(modulus) if modulus is not None else None

    @staticmethod
    def _check_irreducible(modulus, p, k):
        # trial division against every monic polynomial of degree <= k/2
        for deg in range(1, k // 2 + 1):
            for code in range(p**deg):
                cand = [(code // p**i) % p for i in range(deg)] + [1]
                if _poly_divides(cand, list(modulus), p):
                    raise FieldError("modulus is reducible over F_%d" % p)

    # -- constructors -------------------------------------------------

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def element(self, value):
        """Coerce an int, Fraction, coefficient tuple, or FieldElement."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if self.p == 0:
            return FieldElement(self, Fraction(value))
        if self.k == 1:
            if isinstance(value, (tuple, list)):
                if len(value) > 1 and any(c % self.p for c in value[1:]):
                    raise FieldError("tuple value too long for prime field")
                value = value[0] if value else 0
            return FieldElement(self, int(value) % self.p)
        if isinstance(value, (tuple, list)):
            coeffs = _polymod(list(value), list(self.modulus), self.p)
        else:
            coeffs = [int(value) % self.p]
        coeffs = coeffs + [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs[:self.k]))

    def generator(self):
        """The class of t in F_p[t]/<modulus> (k > 1 only)."""
        if self.k == 1:
            raise FieldError("prime field has no extension generator")
        return self.element((0, 1))

    def elements(self):
        """All p^k elements, residues ascending / lexicographic coefficient order."""
        if self.p == 0:
            raise FieldError("cannot enumerate an infinite field")
        out = []
        for code in range(self.order):
            if self.k == 1:
                out.append(self.element(code))
            else:
                coeffs = tuple((code // self.p**i) % self.p for i in range(self.k))
                out.append(FieldElement(self, coeffs))
        return out

    @property
    def order(self):
        if self.p == 0:
            raise FieldError("characteristic-0 field is infinite")
        return self.p**self.k

    # -- spec strings -------------------------------------------------

    @staticmethod
    def parse(spec):
        """Parse "Q", "F5", or "F4:t^2+t+1"."""
        spec = spec.strip()
        if spec == "Q":
            return FieldDescriptor(0)
        if not spec.startswith("F"):
            raise FieldError("bad field spec %r" % spec)
        body, _, modtext = spec[1:].partition(":")
        try:
            q = int(body)
        except ValueError:
            raise FieldError("bad field spec %r" % spec) from None
        # factor q = p^k
        for p in range(2, q + 1):
            if _is_prime(p) and q % p == 0:
                k = 0
                n = q
                while n % p == 0:
                    n //= p
                    k += 1
                if n != 1:
                    raise FieldError("%d is not a prime power" % q)
                break
        else:
            raise FieldError("%d is not a prime power" % q)
        modulus = _parse_modulus(modtext, p, k) if modtext else None
        return FieldDescriptor(p, k, modulus)

    def spec(self):
        if self.p == 0:
            return "Q"
        if self.k == 1:
            return "F%d" % self.p
        return "F%d:%s" % (self.order, _format_modulus(self.modulus))

    # -- plumbing -----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldDescriptor)
                and self.p == other.p and self.k == other.k
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return "FieldDescriptor(%s)" % self.spec()


def _parse_modulus(text, p, k):
    """Parse "t^2+t+1" into a coefficient tuple over F_p."""
    coeffs = [0] * (k + 1)
    text = text.replace(" ", "").replace("-", "+-")
    for term in filter(None, text.split("+")):
        coef = 1
        if term.startswith("-"):
            coef = -1
            term = term[1:]
        if "t" in term:
            head, _, tail = term.partition("t")
            if head.endswith("*"):
                head = head[:-1]
            if head:
                coef *= int(head)
            exp = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coef *= int(term)
            exp = 0
        if exp > k:
            raise FieldError("modulus degree exceeds extension degree")
        coeffs[exp] = (coeffs[exp] + coef) % p
    return tuple(coeffs)


def _format_modulus(modulus):
    parts = []
    for exp in range(len(modulus) - 1, -1, -1):
        c = modulus[exp]
        if c == 0:
            continue
        if exp == 0:
            parts.append(str(c))
        else:
            var = "t" if exp == 1 else "t^%d" % exp
            parts.append(var if c == 1 else "%d*%s" % (c, var))
    return "+".join(parts) if parts else "0"


class FieldElement:
    """Immutable exact element of a FieldDescriptor."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "val", val)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field descriptor mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def is_zero(self):
        if self.field.p == 0 or self.field.k == 1:
            return self.val == 0
        return all(c == 0 for c in self.val)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if f.p == 0:
            return FieldElement(f, self.val + other.val)
        if f.k == 1:
            return FieldElement(f, (self.val + other.val) % f.p)
        return FieldElement(f, tuple((a + b) % f.p
                                     for a, b in zip(self.val, other.val)))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.p == 0:
            return FieldElement(f, -self.val)
        if f.k == 1:
            return FieldElement(f, (-self.val) % f.p)
        return FieldElement(f, tuple((-c) % f.p for c in self.val))

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
        f = self.field
        if f.p == 0:
            return FieldElement(f, self.val * other.val)
        if f.k == 1:
            return FieldElement(f, (self.val * other.val) % f.p)
        prod = _polymul(list(self.val), list(other.val), f.p)
        return f.element(tuple(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in field")
        f = self.field
        if f.p == 0:
            return FieldElement(f, 1 / self.val)
        if f.k == 1:
            return FieldElement(f, pow(self.val, f.p - 2, f.p))
        return self**(f.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse()**(-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pth_root(self):
        """The unique b with b^p = self; Frobenius is bijective on F_{p^k}."""
        f = self.field
        if f.p == 0:
            raise FieldError("p-th root needs positive characteristic")
        return self**(f.p**(f.k - 1)) if f.k > 1 else self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field, self.val))

    def __repr__(self):
        return "FieldElement(%s, %s)" % (self.field.spec(), self)

    def __str__(self):
        f = self.field
        if f.p == 0 or f.k == 1:
            return str(self.val)
        parts = []
        for exp in range(f.k - 1, -1, -1):
            c = self.val[exp]
            if c == 0:
                continue
            if exp == 0:
                parts.append(str(c))
            else:
                var = "t" if exp == 1 else "t^%d" % exp
                parts.append(var if c == 1 else "%d*%s" % (c, var))
        return "+".join(parts) if parts else "0"


def field_arith(a, b, op):
    """Binary field operation by name: add, sub, mul, div."""
    try:
        fn = {"add": a.__add__, "sub": a.__sub__,
              "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise FieldError("unknown op %r" % op) from None
    out = fn(b)
    if out is NotImplemented:
        raise FieldError("incompatible operands")
    return out


def pth_root(a):
    return a.pth_root()


def enumerate_elements(descriptor):
    return descriptor.elements()
