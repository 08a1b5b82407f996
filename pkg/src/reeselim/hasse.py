"""Hasse (divided-power) differential operators via the Taylor shift.

Delta^alpha extracts the T^alpha coefficient of f(x + T); termwise this is
Delta^alpha(x^beta) = prod_i C(beta_i, alpha_i) * x^(beta - alpha) with the
binomials computed as exact integers and then reduced into the field, so
the operators are correct in every characteristic.
"""
from __future__ import annotations

from math import comb

from .poly import Polynomial, RingError


def normalize_multiindex(ring, alpha, active=None):
    """Accept a full exponent tuple or a {variable: exponent} dict."""
    if isinstance(alpha, dict):
        exps = [0] * ring.nvars
        for name, e in alpha.items():
            exps[ring.var_index(name)] = e
        alpha = tuple(exps)
    else:
        alpha = tuple(alpha)
        if len(alpha) != ring.nvars:
            raise RingError("multi-index length mismatch")
    if any(a < 0 for a in alpha):
        raise RingError("multi-index entries must be non-negative")
    if active is not None:
        active_idx = {ring.var_index(v) for v in active}
        for i, a in enumerate(alpha):
            if a and i not in active_idx:
                raise RingError("multi-index touches an inactive variable")
    return alpha


def hasse_derivative(f, alpha):
    """Delta^alpha(f): the coefficient of T^alpha in f(x + T)."""
    ring = f.ring
    alpha = normalize_multiindex(ring, alpha)
    field = ring.field
    terms = {}
    for exps, coeff in f.terms.items():
        if any(a > b for a, b in zip(alpha, exps)):
            continue
        binom = 1
        for b, a in zip(exps, alpha):
            binom *= comb(b, a)
        c = coeff * field.element(binom)
        if c.is_zero():
            continue
        e = tuple(b - a for b, a in zip(exps, alpha))
        s = terms.get(e)
        s = c if s is None else s + c
        if s.is_zero():
            terms.pop(e, None)
        else:
            terms[e] = s
    return Polynomial(ring, terms)


def _multiindices(active_idx, nvars, total):
    """All alpha supported on active_idx with |alpha| == total."""
    active_idx = list(active_idx)

    def rec(pos, remaining):
        if pos == len(active_idx):
            if remaining == 0:
                yield ()
            return
        for e in range(remaining + 1):
            for tail in rec(pos + 1, remaining - e):
                yield (e,) + tail

    for combo in rec(0, total):
        exps = [0] * nvars
        for i, e in zip(active_idx, combo):
            exps[i] = e
        yield tuple(exps)


def diff_closure_list(f, n, active=None):
    """All (Delta^alpha(f), n' - |alpha|) for 1 <= n' <= n and |alpha| < n',
    alpha supported on the active variables (all variables when None).

    Realizes the generating set of the smallest differential extension, in
    both the relative (active = one variable) and absolute flavors.  Zero
    polynomials are dropped and duplicates removed.
    """
    if n < 1:
        raise RingError("weight must be >= 1")
    ring = f.ring
    if active is None:
        active_idx = range(ring.nvars)
    else:
        active_idx = sorted(ring.var_index(v) for v in active)
    out = []
    seen = set()
    cache = {}
    for size in range(n):
        for alpha in _multiindices(active_idx, ring.nvars, size):
            df = hasse_derivative(f, alpha)
            if df.is_zero():
                continue
            cache[alpha] = df
    for nprime in range(1, n + 1):
        for alpha, df in cache.items():
            if sum(alpha) >= nprime:
                continue
            weight = nprime - sum(alpha)
            key = (frozenset(df.terms.items()), weight)
            if key in seen:
                continue
            seen.add(key)
            out.append((df, weight))
    return out
