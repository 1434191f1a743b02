"""Global monomial orders on exponent tuples.

Monomials are plain exponent tuples.  An order provides two key functions:
``sort_key`` (ascending: the leading monomial maximizes it) and ``heap_key``
(its negation, shaped for ``heapq`` min-heaps so the leading monomial pops
first).  Both orders here are global: 1 is the minimum, so polynomial
reduction terminates.
"""

from __future__ import annotations


class DegRevLex:
    """Degree reverse lexicographic order, x0 > x1 > ... > xn.

    Ties in total degree break on the *last* variable with differing
    exponent: the monomial with the smaller exponent there is larger.
    Key consequence used throughout: for a homogeneous polynomial, if the
    last variable divides the leading term it divides the whole polynomial.
    """

    name = "degrevlex"
    n_eliminated = 0

    @staticmethod
    def sort_key(e):
        return (sum(e), tuple(-c for c in reversed(e)))

    @staticmethod
    def heap_key(e):
        return (-sum(e), e[::-1])

    def __repr__(self):
        return "DegRevLex()"

    def __eq__(self, other):
        return type(other) is DegRevLex

    def __hash__(self):
        return hash("degrevlex")


class BlockElim:
    """Elimination order: degrevlex on the first ``k`` variables, then
    degrevlex on the rest.

    Any monomial involving one of the first k variables exceeds every
    monomial free of them, so a Groebner basis in this order intersects
    down to the subring in the remaining variables: its elements with
    leading term free of the first block are themselves free of it and
    generate the elimination ideal.
    """

    __slots__ = ("k",)
    name_prefix = "elim"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("must eliminate at least one variable")
        self.k = k

    @property
    def name(self) -> str:
        return f"elim:{self.k}"

    @property
    def n_eliminated(self) -> int:
        return self.k

    def sort_key(self, e):
        a, b = e[: self.k], e[self.k :]
        return (
            (sum(a), tuple(-c for c in reversed(a))),
            (sum(b), tuple(-c for c in reversed(b))),
        )

    def heap_key(self, e):
        a, b = e[: self.k], e[self.k :]
        return ((-sum(a), a[::-1]), (-sum(b), b[::-1]))

    def __repr__(self):
        return f"BlockElim({self.k})"

    def __eq__(self, other):
        return type(other) is BlockElim and other.k == self.k

    def __hash__(self):
        return hash(("elim", self.k))


DEGREVLEX = DegRevLex()


def order_from_name(name: str):
    if name == "degrevlex":
        return DEGREVLEX
    if name.startswith("elim:"):
        return BlockElim(int(name[5:]))
    raise ValueError(f"unknown monomial order {name!r}")
