"""Homogeneous ideals and the operations built from Groebner bases:
membership, equality, quotient, intersection, saturation, Krull dimension,
regular-sequence tests and minimal generator degrees.

Intersections use the one-auxiliary-variable elimination trick
(u*I + (1-u)*J, block order eliminating u); the single-element quotient
(I : h) divides the intersection I ∩ (h) by h; saturation with respect to
the irrelevant maximal ideal iterates J -> intersection of the (J : x_i)
until the reduced basis stabilizes.  Two shortcuts that change nothing
semantically: a variable colon equal to J ends the iteration at once
(the intersection would be J), and pairwise intersections short-circuit
on containment, checked by normal forms, before any elimination run.
"""

from __future__ import annotations

import math

from .linalg import rank as matrix_rank
from .groebner import GroebnerBasis, reduced_groebner, _reduce_basis, _prep
from .orders import BlockElim
from .polynomials import Polynomial, Ring, monomial_basis, mono_mul


class Ideal:
    """Ideal of a polynomial ring, presented by generators, with a cached
    reduced Groebner basis per monomial order."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: Ring, gens):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._gb = {}

    def groebner(self, order=None) -> GroebnerBasis:
        order = order or self.ring.order
        gb = self._gb.get(order.name)
        if gb is None:
            if self.gens:
                gb = reduced_groebner(self.gens, order)
            else:
                gb = GroebnerBasis(self.ring, order, [])
            self._gb[order.name] = gb
        return gb

    def _attach_gb(self, gb: GroebnerBasis):
        self._gb[gb.order.name] = gb
        return self

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def subset_of(self, other: "Ideal") -> bool:
        gb = other.groebner()
        return all(gb.contains(g) for g in self.gens if not g.is_zero())

    def sum(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    def is_zero(self) -> bool:
        return self.groebner().is_zero_ideal()

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring == self.ring
            and other.groebner().elements == self.groebner().elements
        )

    def __hash__(self):
        return hash((self.ring, self.groebner().elements))

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        return f"Ideal({inner})"


def _lift_terms(terms: dict) -> dict:
    return {(0,) + e: c for e, c in terms.items()}


def _gb_from_known_basis(ring: Ring, order, term_dicts) -> GroebnerBasis:
    """Reduced basis from generators already known to be a Groebner basis:
    only minimalization and interreduction are needed."""
    preps = [_prep(t, order, ring.field) for t in term_dicts if t]
    elems = _reduce_basis(preps, order, ring.field)
    return GroebnerBasis(ring, order, [Polynomial(ring, t) for t in elems])


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """Ideal intersection via elimination of one fresh variable u placed
    in front: eliminate u from u*a + (1-u)*b."""
    ring = a.ring
    if b.ring != ring:
        raise ValueError("ideals from different rings")
    if a.is_zero() or b.is_zero():
        return Ideal(ring, ())
    field = ring.field
    aux = Ring(ring.nvars + 1, field, BlockElim(1))
    one_exp = (0,) * (ring.nvars + 1)
    u_exp = (1,) + (0,) * ring.nvars
    gens = []
    for g in a.groebner().elements:
        lifted = _lift_terms(g.terms)
        gens.append(Polynomial(aux, {mono_mul(u_exp, e): c for e, c in lifted.items()}))
    for g in b.groebner().elements:
        lifted = _lift_terms(g.terms)
        terms: dict = dict(lifted)
        for e, c in lifted.items():
            ue = mono_mul(u_exp, e)
            cur = terms.get(ue)
            nv = field.neg(c) if cur is None else field.sub(cur, c)
            if field.is_zero(nv):
                terms.pop(ue, None)
            else:
                terms[ue] = nv
        gens.append(Polynomial(aux, terms))
    gb = reduced_groebner(gens, aux.order)
    kept = []
    for g in gb.elements:
        lt = g.leading_monomial(aux.order)
        if lt[0] == 0:
            # block order: a u-free lead forces a u-free element
            kept.append({e[1:]: c for e, c in g.terms.items()})
    result = Ideal(ring, [Polynomial(ring, t) for t in kept])
    # the projection of a reduced elimination basis is a reduced basis
    # for the ring's own order
    result._attach_gb(_gb_from_known_basis(ring, ring.order, kept))
    return result


def exact_divide(f: Polynomial, h: Polynomial) -> Polynomial:
    """f / h when h divides f exactly; raises ValueError otherwise."""
    ring = f.ring
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ring.zero()
    field, order = ring.field, ring.order
    lt_h = h.leading_monomial(order)
    lc_h_inv = field.inv(h.terms[lt_h])
    work = dict(f.terms)
    result: dict = {}
    while work:
        e = max(work, key=order.sort_key)
        if not all(a <= b for a, b in zip(lt_h, e)):
            raise ValueError("division is not exact")
        q = tuple(b - a for a, b in zip(lt_h, e))
        c = field.mul(work[e], lc_h_inv)
        result[q] = c
        for te, tc in h.terms.items():
            key = mono_mul(te, q)
            cur = work.get(key, field.zero)
            nv = field.sub(cur, field.mul(c, tc))
            if field.is_zero(nv):
                work.pop(key, None)
            else:
                work[key] = nv
    return Polynomial(ring, result)


def quotient(a: Ideal, h: Polynomial) -> Ideal:
    """Ideal quotient (a : h) for a single polynomial h: intersect with (h),
    then divide each generator of the intersection by h exactly."""
    ring = a.ring
    if h.ring != ring:
        raise ValueError("polynomial from a different ring")
    if h.is_zero():
        raise ZeroDivisionError("quotient by the zero polynomial")
    if a.is_zero():
        return Ideal(ring, ())
    meet = intersect(a, Ideal(ring, (h,)))
    divided = [exact_divide(g, h).terms for g in meet.groebner().elements]
    result = Ideal(ring, [Polynomial(ring, t) for t in divided])
    # dividing a Groebner basis of h*K by h yields a Groebner basis of K
    result._attach_gb(_gb_from_known_basis(ring, ring.order, divided))
    return result


def _swap_exponents(terms: dict, i: int, j: int) -> dict:
    out = {}
    for e, c in terms.items():
        le = list(e)
        le[i], le[j] = le[j], le[i]
        out[tuple(le)] = c
    return out


def variable_power_saturation(a: Ideal, i: int) -> Ideal:
    """(a : x_i^infinity) for a homogeneous ideal a.

    In a degrevlex basis of a homogeneous ideal, the last variable divides
    an element as soon as it divides the leading term, so dividing every
    basis element by its full power of the last variable yields a basis of
    the saturation with respect to that variable.  Other variables are
    swapped into the last position first.
    """
    from .orders import DEGREVLEX

    ring = a.ring
    last = ring.nvars - 1
    for g in a.gens:
        if not g.is_homogeneous():
            raise ValueError("variable saturation needs a homogeneous ideal")
    if a.is_zero():
        return a
    if i == last:
        elems = [g.terms for g in a.groebner(DEGREVLEX).elements]
    else:
        swapped = [
            Polynomial(ring, _swap_exponents(g.terms, i, last)) for g in a.gens
        ]
        elems = [
            g.terms for g in reduced_groebner(swapped, DEGREVLEX).elements
        ]
    divided = []
    changed = False
    for t in elems:
        drop = min(e[last] for e in t)
        if drop:
            changed = True
            t = {e[:last] + (e[last] - drop,): c for e, c in t.items()}
        divided.append(t)
    if i == last:
        if not changed:
            return a
    else:
        divided = [_swap_exponents(t, i, last) for t in divided]
    result = Ideal(ring, [Polynomial(ring, t) for t in divided])
    if i == last:
        # still a degrevlex basis after division; only interreduce
        result._attach_gb(_gb_from_known_basis(ring, DEGREVLEX, divided))
    return result


def saturate_irrelevant(a: Ideal) -> Ideal:
    """Saturation of a homogeneous ideal with respect to (x0, ..., xn),
    as the intersection of the full variable saturations (a : x_i^inf)."""
    ring = a.ring
    if a.is_zero():
        return a
    parts = [variable_power_saturation(a, i) for i in range(ring.nvars)]
    acc = parts[-1]
    for q in parts[:-1]:
        if acc.subset_of(q):
            continue
        if q.subset_of(acc):
            acc = q
        else:
            acc = intersect(acc, q)
    return acc


def krull_dimension_of_quotient(a: Ideal) -> int:
    """Krull dimension of S/a, read off the Hilbert series pole order.
    Rejects the unit ideal (empty quotient)."""
    from .hilbert import hilbert_series

    gb = a.groebner()
    if gb.is_unit_ideal():
        raise ValueError("the quotient by the unit ideal is the zero ring")
    return hilbert_series(gb).pole_order


def is_regular_sequence(fs, ring: Ring) -> bool:
    """True iff the homogeneous positive-degree forms fs are a regular
    sequence on S, i.e. dim S/(fs) = nvars - len(fs)."""
    fs = list(fs)
    if len(fs) > ring.nvars:
        return False
    for f in fs:
        if f.ring != ring:
            raise ValueError("form from a different ring")
        if not f.is_homogeneous():
            raise ValueError("regular-sequence test needs homogeneous forms")
        if f.is_zero() or f.degree == 0:
            return False
    if not fs:
        return True
    return krull_dimension_of_quotient(Ideal(ring, fs)) == ring.nvars - len(fs)


def minimal_generator_degrees(a: Ideal):
    """Degrees (with multiplicity, sorted) of a minimal homogeneous
    generating set, by graded Nakayama: the count in degree k is
    dim I_k - dim (m*I)_k."""
    from .hilbert import hilbert_series

    ring = a.ring
    gb = a.groebner()
    if gb.is_zero_ideal():
        return []
    for g in gb.elements:
        if not g.is_homogeneous():
            raise ValueError("minimal generator degrees need a homogeneous ideal")
    series = hilbert_series(gb)
    n = ring.nvars
    gb_degs = sorted(g.degree for g in gb.elements)
    lo, hi = gb_degs[0], gb_degs[-1]
    out = []
    for k in range(lo, hi + 1):
        dim_ik = math.comb(n - 1 + k, n - 1) - series.function(k)
        if dim_ik == 0:
            continue
        index = {m: i for i, m in enumerate(monomial_basis(ring, k))}
        rows = []
        for g in gb.elements:
            shift = k - g.degree
            if shift < 1:
                continue
            for m in monomial_basis(ring, shift):
                row = [ring.field.zero] * len(index)
                for e, c in g.terms.items():
                    row[index[mono_mul(e, m)]] = c
                rows.append(row)
        dim_m_ik = matrix_rank(rows, ring.field) if rows else 0
        out.extend([k] * (dim_ik - dim_m_ik))
    return out
