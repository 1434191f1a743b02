"""Buchberger's algorithm and reduced Groebner bases.

Classic Buchberger with the normal (smallest-lcm) pair selection and the
Gebauer-Moeller installation of the product and chain criteria; no
signature-based machinery.  Polynomials travel through the engine as raw
term dicts with monic basis elements, so the inner reduction loop touches
only tuples and field elements.  GF(p) gets a dedicated reduction loop with
inline modular arithmetic; the rationals share the generic loop.

The reduced basis (monic, mutually reduced, sorted by ascending leading
term) is a canonical representative of the ideal: two ideals are equal iff
their reduced bases coincide, which is the equality oracle used everywhere
else in the package.
"""

from __future__ import annotations

import heapq
from operator import add as _add, le as _le

from .fields import PrimeField
from .polynomials import Polynomial, mono_divides, mono_lcm


def _normal_form_gf(work: dict, preps, heap_key, p: int) -> dict:
    """Full reduction of a term dict modulo monic reducers, mod p."""
    result: dict = {}
    heap = [(heap_key(e), e) for e in work]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        e = pop(heap)[1]
        c = work.pop(e, None)
        if c is None:
            continue
        for lt, tail in preps:
            if all(map(_le, lt, e)):
                shift = tuple(map(int.__sub__, e, lt))
                for te, tc in tail:
                    key = tuple(map(_add, te, shift))
                    cur = work.get(key)
                    if cur is None:
                        nv = -c * tc % p
                        if nv:
                            work[key] = nv
                            push(heap, (heap_key(key), key))
                    else:
                        nv = (cur - c * tc) % p
                        if nv:
                            work[key] = nv
                        else:
                            del work[key]
                break
        else:
            result[e] = c
    return result


def _normal_form_generic(work: dict, preps, heap_key, field) -> dict:
    result: dict = {}
    heap = [(heap_key(e), e) for e in work]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    mul, sub, neg, is_zero = field.mul, field.sub, field.neg, field.is_zero
    while heap:
        e = pop(heap)[1]
        c = work.pop(e, None)
        if c is None:
            continue
        for lt, tail in preps:
            if all(map(_le, lt, e)):
                shift = tuple(map(int.__sub__, e, lt))
                for te, tc in tail:
                    key = tuple(map(_add, te, shift))
                    cur = work.get(key)
                    if cur is None:
                        nv = neg(mul(c, tc))
                        if not is_zero(nv):
                            work[key] = nv
                            push(heap, (heap_key(key), key))
                    else:
                        nv = sub(cur, mul(c, tc))
                        if is_zero(nv):
                            del work[key]
                        else:
                            work[key] = nv
                break
        else:
            result[e] = c
    return result


def _normal_form(terms: dict, preps, order, field) -> dict:
    if not preps or not terms:
        return dict(terms)
    if isinstance(field, PrimeField):
        return _normal_form_gf(dict(terms), preps, order.heap_key, field.p)
    return _normal_form_generic(dict(terms), preps, order.heap_key, field)


def _make_monic(terms: dict, order, field):
    """(leading exponent, monic dict); input must be nonzero."""
    lt = max(terms, key=order.sort_key)
    lc = terms[lt]
    if lc == field.one:
        return lt, dict(terms)
    inv = field.inv(lc)
    mul = field.mul
    return lt, {e: mul(inv, c) for e, c in terms.items()}


def _prep(terms: dict, order, field):
    """(lt, tail items) with the element monic; tail excludes the lead."""
    lt, monic = _make_monic(terms, order, field)
    del monic[lt]
    return lt, tuple(monic.items())


def _spoly(prep_f, prep_g, field):
    """S-polynomial of two monic prepped elements, as a term dict."""
    ltf, tailf = prep_f
    ltg, tailg = prep_g
    w = mono_lcm(ltf, ltg)
    sf = tuple(map(int.__sub__, w, ltf))
    sg = tuple(map(int.__sub__, w, ltg))
    sub, neg, is_zero = field.sub, field.neg, field.is_zero
    terms: dict = {}
    for e, c in tailf:
        terms[tuple(map(_add, e, sf))] = c
    for e, c in tailg:
        key = tuple(map(_add, e, sg))
        cur = terms.get(key)
        nv = neg(c) if cur is None else sub(cur, c)
        if is_zero(nv):
            terms.pop(key, None)
        else:
            terms[key] = nv
    return terms


def _buchberger(inputs, order, field):
    """Reduced Groebner basis of the input term dicts, as monic term dicts
    sorted by ascending leading term."""
    skey = order.sort_key
    G = []  # prepped elements (lt, tail)
    pairs = []  # (sort key of lcm, i, j, lcm)

    def update(h_prep):
        t = len(G)
        lt_t = h_prep[0]
        lts = [g[0] for g in G]
        # chain criterion on surviving old pairs
        kept = []
        for pr in pairs:
            _, i, j, w = pr
            if (
                mono_divides(lt_t, w)
                and mono_lcm(lts[i], lt_t) != w
                and mono_lcm(lts[j], lt_t) != w
            ):
                continue
            kept.append(pr)
        pairs[:] = kept
        # Gebauer-Moeller filtering of the new pairs
        cand = [[mono_lcm(lts[i], lt_t), i] for i in range(t)]
        chosen = []
        while cand:
            w, i = cand.pop()
            blocked = any(mono_divides(w2, w) for w2, _ in cand) or any(
                mono_divides(w2, w) for w2, _ in chosen
            )
            coprime = all(min(a, b) == 0 for a, b in zip(lts[i], lt_t))
            if coprime or not blocked:
                chosen.append((w, i))
        for w, i in chosen:
            if all(min(a, b) == 0 for a, b in zip(lts[i], lt_t)):
                continue  # product criterion
            pairs.append((skey(w), i, t, w))
        G.append(h_prep)

    for terms in inputs:
        if not terms:
            continue
        reduced = _normal_form(terms, G, order, field)
        if reduced:
            update(_prep(reduced, order, field))

    while pairs:
        best = min(pairs)
        pairs.remove(best)
        _, i, j, _ = best
        s = _spoly(G[i], G[j], field)
        if not s:
            continue
        h = _normal_form(s, G, order, field)
        if h:
            update(_prep(h, order, field))

    return _reduce_basis(G, order, field)


def _reduce_basis(G, order, field):
    # minimal: drop elements whose lead is divisible by another lead
    lts = [g[0] for g in G]
    keep = []
    for idx, lt in enumerate(lts):
        if any(
            mono_divides(lts[k], lt) and (k < idx or lts[k] != lt)
            for k in range(len(G))
            if k != idx
        ):
            continue
        keep.append(idx)
    minimal = [G[i] for i in keep]
    # interreduce tails until stable
    elems = [dict(((g[0], field.one),) + g[1]) for g in minimal]
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            others = [
                _prep(elems[k], order, field) for k in range(len(elems)) if k != i
            ]
            red = _normal_form(elems[i], others, order, field)
            _, red = _make_monic(red, order, field)
            if red != elems[i]:
                elems[i] = red
                changed = True
    elems.sort(key=lambda t: skey_of(t, order))
    return elems


def skey_of(terms: dict, order):
    return order.sort_key(max(terms, key=order.sort_key))


class GroebnerBasis:
    """Reduced Groebner basis of an ideal, the canonical ideal form.

    ``elements`` are monic, mutually reduced, sorted by ascending leading
    term; equality of reduced bases is equality of ideals.
    """

    __slots__ = ("ring", "order", "elements", "_preps", "_lts", "_series")

    def __init__(self, ring, order, elements):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self._preps = None
        self._lts = None
        self._series = None

    @property
    def preps(self):
        if self._preps is None:
            field = self.ring.field
            self._preps = [
                _prep(g.terms, self.order, field) for g in self.elements
            ]
        return self._preps

    @property
    def leading_exponents(self):
        if self._lts is None:
            self._lts = tuple(
                g.leading_monomial(self.order) for g in self.elements
            )
        return self._lts

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        nf = _normal_form(f.terms, self.preps, self.order, self.ring.field)
        return Polynomial(self.ring, nf)

    def normal_form_terms(self, terms: dict) -> dict:
        return _normal_form(terms, self.preps, self.order, self.ring.field)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f).terms

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and sum(self.leading_exponents[0]) == 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.order == self.order
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.elements)
        return f"GroebnerBasis[{inner}]"


def reduced_groebner(gens, order=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``gens`` is an iterable of polynomials from one ring; ``order``
    defaults to the ring's active order.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator (possibly zero)")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    order = order or ring.order
    dicts = [g.terms for g in gens if g.terms]
    elems = _buchberger(dicts, order, ring.field) if dicts else []
    return GroebnerBasis(ring, order, [Polynomial(ring, t) for t in elems])
