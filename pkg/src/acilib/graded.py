"""Graded pieces of quotient rings and ranks of multiplication maps.

A degree-k piece of S/I is coordinatized by its standard monomials (the
degree-k monomials outside the leading-term ideal); normal forms land in
their span, so a multiplication map becomes an exact-field matrix and
injectivity/surjectivity are rank conditions.  Dimensions come from the
Hilbert series rather than from enumeration whenever only the number is
needed.
"""

from __future__ import annotations

from .groebner import GroebnerBasis
from .hilbert import hilbert_series
from .linalg import rank as matrix_rank
from .polynomials import Polynomial, mono_divides, mono_mul, monomial_basis


def standard_monomials(gb: GroebnerBasis, k: int):
    """Degree-k monomials not divisible by any leading term: a basis of
    (S/I)_k, in descending order."""
    lts = gb.leading_exponents
    return [
        m
        for m in monomial_basis(gb.ring, k)
        if not any(mono_divides(l, m) for l in lts)
    ]


def quotient_dim(gb: GroebnerBasis, k: int) -> int:
    """dim (S/I)_k."""
    return hilbert_series(gb).function(k)


def subquotient_dim(gb_num: GroebnerBasis, gb_den: GroebnerBasis, k: int) -> int:
    """dim (A/B)_k for ideals B contained in A, as a difference of Hilbert
    functions of the two quotients."""
    return hilbert_series(gb_den).function(k) - hilbert_series(gb_num).function(k)


def mult_matrix(gb: GroebnerBasis, h: Polynomial, k: int):
    """Matrix of multiplication by h from (S/I)_k to (S/I)_{k + deg h},
    rows indexed by the source standard monomials, columns by the target
    ones."""
    ring = gb.ring
    field = ring.field
    src = standard_monomials(gb, k)
    tgt = standard_monomials(gb, k + h.degree)
    index = {m: i for i, m in enumerate(tgt)}
    rows = []
    for m in src:
        image = gb.normal_form_terms({mono_mul(e, m): c for e, c in h.terms.items()})
        row = [field.zero] * len(tgt)
        for e, c in image.items():
            row[index[e]] = c
        rows.append(row)
    return rows, src, tgt


def mult_rank(gb: GroebnerBasis, h: Polynomial, k: int) -> int:
    """Rank of multiplication by h on (S/I)_k."""
    rows, src, _ = mult_matrix(gb, h, k)
    if not src:
        return 0
    return matrix_rank(rows, gb.ring.field)


def mult_is_injective(gb: GroebnerBasis, h: Polynomial, k: int) -> bool:
    rows, src, _ = mult_matrix(gb, h, k)
    if not src:
        return True
    return matrix_rank(rows, gb.ring.field) == len(src)


def mult_is_surjective(gb: GroebnerBasis, h: Polynomial, k: int) -> bool:
    rows, src, tgt = mult_matrix(gb, h, k)
    if not tgt:
        return True
    if not src:
        return False
    return matrix_rank(rows, gb.ring.field) == len(tgt)


def first_kernel_degree(gb: GroebnerBasis, h: Polynomial, bound: int):
    """Least j <= bound where multiplication by h on (S/I)_j has a kernel,
    or None if it is injective through the whole range."""
    for j in range(bound + 1):
        rows, src, _ = mult_matrix(gb, h, j)
        if not src:
            continue
        if matrix_rank(rows, gb.ring.field) < len(src):
            return j
    return None
