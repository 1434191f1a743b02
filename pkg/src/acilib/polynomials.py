"""Sparse multivariate polynomials over an exact field.

A monomial is an exponent tuple of length ``ring.nvars``; a polynomial is a
dict mapping exponent tuples to nonzero coefficients.  Variables are named
``x0, x1, ..., xn`` and nothing else: the parser rejects other identifiers.
The homogeneous-input operations downstream (Jacobian ideals, graded pieces)
rely on ``is_homogeneous``/``degree`` here.

Text format (``Ring.parse`` / ``str()``)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := [coefficient '*']? factor ('*' factor)* | coefficient
    factor     := variable ['^' positive-integer]
    variable   := 'x' digit+
    coefficient:= integer | integer '/' positive-integer   (rational mode only)

The optional leading sign and the ``a/b`` coefficient literals are the only
liberties taken beyond the strict grammar; the canonical printer needs both
to round-trip rational output.  In a prime field ``/`` is rejected
("coefficient not representable").  Printing is canonical: terms descend in
the ring's monomial order, GF(p) coefficients are residues in ``[0, p)``,
rational coefficients are reduced fractions.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .fields import PrimeField, QQ
from .orders import DEGREVLEX


class ParseError(ValueError):
    """Raised on malformed polynomial text; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True if a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a) -> int:
    return sum(a)


class Ring:
    """Polynomial ring K[x0..xn] with a coefficient field and an active
    monomial order (degrevlex unless stated otherwise)."""

    __slots__ = ("field", "nvars", "order", "_gens")

    def __init__(self, nvars: int, field, order=None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.field = field
        self.nvars = nvars
        self.order = order if order is not None else DEGREVLEX
        self._gens = None

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.nvars == self.nvars
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.nvars, self.order))

    def __repr__(self):
        return f"Ring(nvars={self.nvars}, field={self.field.name}, order={self.order.name})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(self.field.one)

    def const(self, c) -> "Polynomial":
        c = self.field.of_int(c) if isinstance(c, int) else c
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise ValueError(f"no variable x{i} in a {self.nvars}-variable ring")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        if self._gens is None:
            self._gens = tuple(self.gen(i) for i in range(self.nvars))
        return self._gens

    def linear_form(self, coeffs) -> "Polynomial":
        """sum_i coeffs[i] * x_i, coefficients ints or field elements."""
        if len(coeffs) != self.nvars:
            raise ValueError("coefficient count != nvars")
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.field.of_int(c) if isinstance(c, int) else c
            if not self.field.is_zero(c):
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def from_int_terms(self, int_terms: dict) -> "Polynomial":
        """Build a polynomial from {exponent: integer} data (exact embedding)."""
        of_int, is_zero = self.field.of_int, self.field.is_zero
        terms = {}
        for e, c in int_terms.items():
            fc = of_int(c)
            if not is_zero(fc):
                terms[e] = fc
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return _parse(self, text)


_TOKEN = re.compile(r"(\d+)|(x\d+)|([A-Za-z_]\w*)|(\^)|(\*)|(\+)|(-)|(/)|(\S)")


def _tokenize(text: str):
    toks = []
    for m in _TOKEN.finditer(text):
        pos = m.start()
        if m.group(1):
            toks.append(("int", int(m.group(1)), pos))
        elif m.group(2):
            toks.append(("var", int(m.group(2)[1:]), pos))
        elif m.group(3):
            raise ParseError(f"unknown identifier {m.group(3)!r}", pos)
        elif m.group(4):
            toks.append(("^", None, pos))
        elif m.group(5):
            toks.append(("*", None, pos))
        elif m.group(6):
            toks.append(("+", None, pos))
        elif m.group(7):
            toks.append(("-", None, pos))
        elif m.group(8):
            toks.append(("/", None, pos))
        else:
            raise ParseError(f"unexpected character {m.group(9)!r}", pos)
    return toks


def _parse(ring: Ring, text: str) -> "Polynomial":
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty input", 0)
    field = ring.field
    n = ring.nvars
    terms: dict = {}
    i = 0
    endpos = len(text)

    def peek(k=0):
        return toks[i + k] if i + k < len(toks) else (None, None, endpos)

    def parse_factor():
        nonlocal i
        kind, val, pos = peek()
        if kind != "var":
            raise ParseError("expected a variable", pos)
        if val >= n:
            raise ParseError(f"unknown variable x{val} in a {n}-variable ring", pos)
        i += 1
        exp = 1
        if peek()[0] == "^":
            i += 1
            kind, ev, pos = peek()
            if kind != "int" or ev < 1:
                raise ParseError("exponent must be a positive integer", pos)
            i += 1
            exp = ev
        e = [0] * n
        e[val] = exp
        return tuple(e)

    def parse_coefficient():
        nonlocal i
        kind, val, pos = peek()
        assert kind == "int"
        i += 1
        if peek()[0] == "/":
            slash_pos = peek()[2]
            if not isinstance(field, PrimeField):
                i += 1
                kind, den, pos = peek()
                if kind != "int" or den < 1:
                    raise ParseError("denominator must be a positive integer", pos)
                i += 1
                return Fraction(val, den)
            raise ParseError(
                "coefficient not representable: non-integer literal in a prime "
                "field without inverse notation",
                slash_pos,
            )
        return field.of_int(val)

    def parse_term(sign):
        nonlocal i
        coeff = field.one
        mono = (0,) * n
        kind, _, pos = peek()
        if kind == "int":
            coeff = parse_coefficient()
            if peek()[0] == "*":
                i += 1
                mono = mono_mul(mono, parse_factor())
            else:
                # bare constant term
                _accumulate(terms, mono, field.mul(coeff, sign) if sign != field.one else coeff, field)
                return
        elif kind == "var":
            mono = mono_mul(mono, parse_factor())
        else:
            raise ParseError("expected a term", pos)
        while peek()[0] == "*":
            i += 1
            mono = mono_mul(mono, parse_factor())
        c = coeff if sign == field.one else field.mul(coeff, sign)
        _accumulate(terms, mono, c, field)

    sign = field.one
    kind, _, _ = peek()
    if kind in ("+", "-"):
        if kind == "-":
            sign = field.neg(field.one)
        i += 1
    parse_term(sign)
    while i < len(toks):
        kind, _, pos = peek()
        if kind == "+":
            sign = field.one
        elif kind == "-":
            sign = field.neg(field.one)
        else:
            raise ParseError("expected '+' or '-'", pos)
        i += 1
        parse_term(sign)
    return Polynomial(ring, terms)


def _accumulate(terms, mono, c, field):
    cur = terms.get(mono)
    if cur is None:
        if not field.is_zero(c):
            terms[mono] = c
    else:
        s = field.add(cur, c)
        if field.is_zero(s):
            del terms[mono]
        else:
            terms[mono] = s


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(map(sum, self.terms))

    def is_homogeneous(self) -> bool:
        degs = set(map(sum, self.terms))
        return len(degs) <= 1

    def leading_monomial(self, order=None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        order = order or self.ring.order
        return max(self.terms, key=order.sort_key)

    def leading_coefficient(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, mono):
        return self.terms.get(mono, self.ring.field.zero)

    def constant(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(terms, e, c, field)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ring.field.of_int(other))
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        mul, add, is_zero = field.mul, field.add, field.is_zero
        terms: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                cur = terms.get(key)
                v = mul(ca, cb) if cur is None else add(cur, mul(ca, cb))
                terms[key] = v
        return Polynomial(self.ring, {e: c for e, c in terms.items() if not is_zero(c)})

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c):
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        mul = field.mul
        return Polynomial(self.ring, {e: mul(c, v) for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to x_i (exact, any characteristic)."""
        if not 0 <= i < self.ring.nvars:
            raise ValueError(f"no variable x{i}")
        field = self.ring.field
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            nc = field.mul(c, field.of_int(e[i]))
            if field.is_zero(nc):
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = nc
        return Polynomial(self.ring, terms)

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self.terms.items()))))
        return self._hash

    # -- printing ------------------------------------------------------------

    def __str__(self):
        return poly_to_string(self)

    def __repr__(self):
        return f"<{poly_to_string(self)}>"


def _mono_string(e) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def _coeff_string(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def poly_to_string(f: Polynomial) -> str:
    """Canonical text form: terms descending in the active order."""
    if not f.terms:
        return "0"
    order = f.ring.order
    rational = not isinstance(f.ring.field, PrimeField)
    out = []
    for e in sorted(f.terms, key=order.sort_key, reverse=True):
        c = f.terms[e]
        if rational and c < 0:
            sep, mag = " - ", -c
        else:
            sep, mag = " + ", c
        mono = _mono_string(e)
        if not mono:
            body = _coeff_string(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_string(mag)}*{mono}"
        out.append((sep, body))
    first_sep, first_body = out[0]
    text = ("-" if first_sep == " - " else "") + first_body
    for sep, body in out[1:]:
        text += sep + body
    return text


class LinearChange:
    """Invertible linear substitution x_i -> sum_j M[i][j] x_j."""

    __slots__ = ("ring", "matrix")

    def __init__(self, ring: Ring, matrix):
        n = ring.nvars
        field = ring.field
        rows = tuple(
            tuple(field.of_int(c) if isinstance(c, int) else c for c in row)
            for row in matrix
        )
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"need a {n}x{n} matrix")
        if _field_rank(rows, field) != n:
            raise ValueError("linear change must be invertible")
        self.ring = ring
        self.matrix = rows

    @classmethod
    def random(cls, ring: Ring, rng) -> "LinearChange":
        field = ring.field
        n = ring.nvars
        for _ in range(100):
            rows = [[field.random(rng) for _ in range(n)] for _ in range(n)]
            try:
                return cls(ring, rows)
            except ValueError:
                continue
        raise RuntimeError("failed to sample an invertible matrix")

    def apply(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        ring = self.ring
        images = [ring.linear_form(row) for row in self.matrix]
        pow_cache: dict = {}

        def image_power(i, k):
            key = (i, k)
            got = pow_cache.get(key)
            if got is None:
                got = images[i] ** k
                pow_cache[key] = got
            return got

        result = ring.zero()
        for e, c in f.terms.items():
            term = ring.const(c) if sum(e) == 0 else None
            for i, k in enumerate(e):
                if k == 0:
                    continue
                p = image_power(i, k)
                term = p if term is None else term * p
            result = result + (term.scale(c) if sum(e) > 0 else term)
        return result


def _field_rank(rows, field) -> int:
    """Tiny dense Gaussian elimination, used only for matrix validation."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if not field.is_zero(m[r][col])), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][col])
        m[rank] = [field.mul(inv, v) for v in m[rank]]
        for r in range(nrows):
            if r != rank and not field.is_zero(m[r][col]):
                factor = m[r][col]
                m[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def monomial_basis(ring: Ring, k: int):
    """All exponent tuples of total degree k, descending in the ring order."""
    if k < 0:
        return []
    n = ring.nvars
    monos = []
    # stars and bars over bar positions
    for bars in itertools.combinations(range(k + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(k + n - 2 - prev)
        monos.append(tuple(e))
    monos.sort(key=ring.order.sort_key, reverse=True)
    return monos
