"""Hilbert series of graded quotients, computed exactly over the integers.

A series is stored as an integer numerator over (1 - t)^nvars and reported
in lowest terms h(t)/(1 - t)^pole_order with h(1) != 0.  The numerator of
a monomial ideal is computed by the usual pivot recursion
N(I) = N(I + (x)) + t * N(I : x), with the pairwise-coprime case
N = prod(1 - t^deg) as the base.  Integer polynomials are plain coefficient
lists, lowest degree first.
"""

from __future__ import annotations

import math
from functools import reduce

from .groebner import GroebnerBasis


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_shift(a, k):
    return [0] * k + list(a) if a else []


def one_minus_t_pow(d):
    p = [1] + [0] * d
    p[d] = -1
    return p


def divide_out_one_minus_t(p):
    """p / (1 - t) when (1 - t) divides p exactly; raises otherwise."""
    if not p:
        return []
    if sum(p) != 0:
        raise ValueError("not divisible by 1 - t")
    out = []
    acc = 0
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return poly_trim(out)


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(m, g)) for m in out):
            out.append(g)
    return out


def _lt_numerator(gens, memo):
    """Numerator of k[x]/I over (1 - t)^n for the monomial ideal I minimally
    generated by the exponent tuples gens."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if not any(gens[0]):
        return []
    key = frozenset(gens)
    cached = memo.get(key)
    if cached is not None:
        return cached
    counts = [0] * len(gens[0])
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    best = max(range(len(counts)), key=counts.__getitem__)
    if counts[best] <= 1:
        result = reduce(poly_mul, (one_minus_t_pow(sum(g)) for g in gens))
    else:
        pivot = tuple(1 if i == best else 0 for i in range(len(gens[0])))
        plus = _lt_numerator(gens + [pivot], memo)
        colon = _lt_numerator(
            [tuple(e - 1 if i == best and e else e for i, e in enumerate(g)) for g in gens],
            memo,
        )
        result = poly_add(plus, poly_shift(colon, 1))
    memo[key] = result
    return result


class HilbertSeries:
    """Hilbert series of a graded quotient S/I, S in nvars variables."""

    __slots__ = ("nvars", "numerator", "reduced", "pole_order")

    def __init__(self, nvars: int, numerator):
        numerator = poly_trim(list(numerator))
        reduced = numerator
        cancelled = 0
        while reduced and sum(reduced) == 0:
            reduced = divide_out_one_minus_t(reduced)
            cancelled += 1
        if cancelled > nvars:
            raise ValueError("numerator has too high a zero at t = 1")
        self.nvars = nvars
        self.numerator = numerator
        self.reduced = reduced
        self.pole_order = nvars - cancelled

    def function(self, k: int) -> int:
        """Value of the Hilbert function at degree k."""
        if k < 0:
            return 0
        d = self.pole_order
        h = self.reduced
        if d == 0:
            return h[k] if k < len(h) else 0
        total = 0
        for j, c in enumerate(h):
            if j > k:
                break
            if c:
                total += c * math.comb(k - j + d - 1, d - 1)
        return total

    @property
    def multiplicity(self) -> int:
        """h(1) for the reduced numerator h: the eventual constant value of
        the Hilbert function.  Defined here only at pole order one."""
        if self.pole_order != 1:
            raise ValueError("multiplicity needs pole order 1")
        return sum(self.reduced)

    @property
    def stability_degree(self) -> int:
        """deg(numerator): the least degree from which on the Hilbert
        function is constant.  Defined here only at pole order one."""
        if self.pole_order != 1:
            raise ValueError("stability degree needs pole order 1")
        return len(self.reduced) - 1

    def values(self, upto: int):
        return [self.function(k) for k in range(upto + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and other.pole_order == self.pole_order
            and other.reduced == self.reduced
        )

    def __hash__(self):
        return hash((self.pole_order, tuple(self.reduced)))

    def __repr__(self):
        h = " + ".join(
            f"{c}*t^{j}" if j else str(c) for j, c in enumerate(self.reduced) if c
        ).replace("+ -", "- ")
        return f"HilbertSeries(({h}) / (1-t)^{self.pole_order})"


def hilbert_series(gb: GroebnerBasis) -> HilbertSeries:
    """Hilbert series of S/I from a Groebner basis of I (the quotient has
    the same series as the quotient by the leading-term ideal)."""
    if gb._series is not None:
        return gb._series
    n = gb.ring.nvars
    gens = list(gb.leading_exponents)
    series = HilbertSeries(n, _lt_numerator(gens, {}) if gens else [1])
    gb._series = series
    return series


def quotient_numerator(gb: GroebnerBasis):
    """Reduced Hilbert numerator of S/I as an integer coefficient list
    (lowest degree first)."""
    return list(hilbert_series(gb).reduced)


def ci_milnor_series(n: int, d: int, a_degs) -> HilbertSeries:
    """Hilbert series of the Jacobian quotient of a degree-d hypersurface
    in P^n whose singular scheme is a complete intersection of codimension
    n cut out in degrees a_degs:

        [(1 - t^(d-1))^(n+1) + t^((n+1)(d-1) - sum(a)) * prod(1 - t^a)]
            / (1 - t)^(n+1)
    """
    a_degs = list(a_degs)
    if len(a_degs) != n:
        raise ValueError("need exactly n degrees for a codimension-n singular scheme")
    shift = (n + 1) * (d - 1) - sum(a_degs)
    if shift < 0:
        raise ValueError("degrees too large for the ambient hypersurface degree")
    first = reduce(poly_mul, [one_minus_t_pow(d - 1)] * (n + 1))
    second = poly_shift(reduce(poly_mul, (one_minus_t_pow(a) for a in a_degs), [1]), shift)
    return HilbertSeries(n + 1, poly_add(first, second))
