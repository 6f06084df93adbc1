"""Exact integer-coefficient Laurent polynomials in one variable t.

The universal value type of this package.  A polynomial is a sparse map
exponent -> coefficient with arbitrary-precision integers on both sides;
the zero polynomial is the empty map.  All operations are exact.

Large products are computed by packing coefficients into a single Python
integer (one machine multiply) and unpacking balanced digits; small
products use plain dictionary convolution.  Both paths are exact and are
cross-checked against each other in the test suite.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Mapping


class ZeroPolynomial(ArithmeticError):
    """Raised when an operation requires a nonzero polynomial."""


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a remainder."""


# ---------------------------------------------------------------------------
# raw dict kernels (exponent -> coefficient, no zero values)

def _add_dicts(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _sub_dicts(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _mul_naive(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = get(e, 0) + ca * cb
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


# Kronecker packing: evaluate both factors at t = 2^bits and multiply once.
# Valid whenever every coefficient of the product fits below 2^(bits-1),
# which the bound max|a| * max|b| * min(#a, #b) guarantees.

_KRONECKER_CUTOFF = 1200


def _pack(d: dict, emin: int, width: int) -> int:
    pos = bytearray()
    neg = bytearray()
    size = 0
    for e, c in d.items():
        off = (e - emin) * width
        end = off + width
        if end > size:
            pos.extend(b"\x00" * (end - size))
            neg.extend(b"\x00" * (end - size))
            size = end
        if c > 0:
            pos[off:off + width] = c.to_bytes(width, "little")
        else:
            neg[off:off + width] = (-c).to_bytes(width, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, bits: int, shift: int) -> dict:
    if value == 0:
        return {}
    sign = 1
    if value < 0:
        sign = -1
        value = -value
    width = bits // 8
    base = 1 << bits
    half = base >> 1
    nbytes = (value.bit_length() + 7) // 8
    length = (nbytes // width + 2) * width
    raw = value.to_bytes(length, "little")
    out: dict = {}
    carry = 0
    for i in range(length // width):
        val = int.from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if val >= half:
            digit = val - base
            carry = 1
        else:
            digit = val
            carry = 0
        if digit:
            out[i + shift] = sign * digit
    return out


def _mul_kronecker(a: dict, b: dict) -> dict:
    amin = min(a)
    bmin = min(b)
    la = max(abs(c) for c in a.values())
    lb = max(abs(c) for c in b.values())
    bound = la * lb * min(len(a), len(b))
    bits = ((bound.bit_length() + 2) + 7) & ~7
    pa = _pack(a, amin, bits // 8)
    pb = _pack(b, bmin, bits // 8)
    return _unpack(pa * pb, bits, amin + bmin)


def _mul_dicts(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) == 1:
        (ea, ca), = a.items()
        return {eb + ea: cb * ca for eb, cb in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {ea + eb: ca * cb for ea, ca in a.items()}
    if len(a) * len(b) <= _KRONECKER_CUTOFF:
        return _mul_naive(a, b)
    return _mul_kronecker(a, b)


# ---------------------------------------------------------------------------

class LaurentPoly:
    """An immutable integer Laurent polynomial.

    >>> p = LaurentPoly({0: 1, 1: -1})
    >>> print(p * p)
    1 - 2*t + t^2
    >>> print(LaurentPoly.term(1, -2) * LaurentPoly.term(3, 2))
    3
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms:
            self._terms = {e: c for e, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPoly":
        # internal: d already has no zero coefficients and is not shared
        self = cls.__new__(cls)
        self._terms = d
        self._hash = None
        return self

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly._raw(_add_dicts(self._terms, other._terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly._raw(_sub_dicts(self._terms, other._terms))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly._raw(_mul_dicts(self._terms, other._terms))
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def key(self) -> tuple:
        """Hashable canonical identity of this polynomial."""
        return tuple(sorted(self._terms.items()))

    # -- queries -------------------------------------------------------------

    def degree_span(self) -> int:
        """max exponent minus min exponent (nonzero polynomials only)."""
        if not self._terms:
            raise ZeroPolynomial("degree span of the zero polynomial")
        return max(self._terms) - min(self._terms)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive_part(self) -> "LaurentPoly":
        g = self.content()
        if g <= 1:
            return self
        return LaurentPoly._raw({e: c // g for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        """True iff the coefficient sequence reads the same from both ends."""
        if not self._terms:
            raise ZeroPolynomial("palindromy of the zero polynomial")
        lo = min(self._terms)
        hi = max(self._terms)
        return all(c == self._terms.get(hi - (e - lo), 0) for e, c in self._terms.items())

    def normalize(self) -> "LaurentPoly":
        """Canonical representative under multiplication by +-t^k.

        Shifts the minimum exponent to 0, then flips the sign if the
        leading (highest-degree) coefficient is negative.
        """
        if not self._terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lo = min(self._terms)
        if self._terms[max(self._terms)] < 0:
            return LaurentPoly._raw({e - lo: -c for e, c in self._terms.items()})
        if lo == 0:
            return self
        return LaurentPoly._raw({e - lo: c for e, c in self._terms.items()})

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    _TERM_RE = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*?\s*)?(?P<var>t(?:\^(?P<exp>-?\d+))?)?\s*"
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of str(): parse renderings like ``1 - t + 2*t^-2``."""
        text = text.strip()
        if text == "0" or not text:
            return cls.zero()
        terms: dict = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM_RE.match(text, pos)
            if not m or m.end() == pos or (m.group("coeff") is None and m.group("var") is None):
                raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coeff = int(m.group("coeff")) if m.group("coeff") else 1
            if m.group("var"):
                exp = int(m.group("exp")) if m.group("exp") else 1
            else:
                exp = 0
            v = terms.get(exp, 0) + sign * coeff
            if v:
                terms[exp] = v
            elif exp in terms:
                del terms[exp]
            pos = m.end()
        return cls._raw(terms)

    def to_pairs(self) -> list[list]:
        """JSON form: [exponent, coefficient-as-decimal-string] pairs, ascending."""
        return [[e, str(c)] for e, c in self.sorted_items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs})


# ---------------------------------------------------------------------------
# module-level constructors and ring utilities

def one_minus_t_pow(n: int) -> LaurentPoly:
    """1 - t^n; the zero polynomial when n = 0."""
    if n == 0:
        return LaurentPoly.zero()
    return LaurentPoly._raw({0: 1, n: -1})


def geometric_quotient(x: LaurentPoly, n: int) -> LaurentPoly:
    """(1 - x^n)/(1 - x) under the usual three-case convention.

    Returns 0 when n = 0, the sum x^0 + ... + x^(n-1) when n > 0, and
    -(x^n + ... + x^-1) when n < 0.  Negative n requires x to be an
    invertible monomial +-t^e.
    """
    if n == 0:
        return LaurentPoly.zero()
    terms = x._terms
    if len(terms) == 1:
        (e, c), = terms.items()
        if c == 1:
            if n > 0:
                return LaurentPoly._raw({e * i: 1 for i in range(n)})
            return LaurentPoly._raw({e * i: -1 for i in range(n, 0)})
        if c == -1:
            if n > 0:
                return LaurentPoly._raw({e * i: (-1) ** i for i in range(n)})
            return LaurentPoly._raw({e * i: -((-1) ** i) for i in range(n, 0)})
    if n < 0:
        raise ValueError("negative n needs an invertible monomial")
    acc: dict = {}
    power = LaurentPoly.one()
    for _ in range(n):
        acc = _add_dicts(acc, power._terms)
        power = power * x
    return LaurentPoly._raw(acc)


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num/den; raises NonExactDivision on any remainder.

    Both operands are first shifted to ordinary polynomials by factoring
    out their lowest powers of t, so the quotient is again Laurent.
    """
    if den.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly.zero()
    shift = num.min_exp - den.min_exp
    rem = {e - num.min_exp: c for e, c in num._terms.items()}
    div = {e - den.min_exp: c for e, c in den._terms.items()}
    db = max(div)
    lead = div[db]
    quot: dict = {}
    while rem:
        da = max(rem)
        if da < db:
            raise NonExactDivision(f"remainder of degree {da} dividing by degree {db}")
        qc, leftover = divmod(rem[da], lead)
        if leftover:
            raise NonExactDivision("leading coefficient does not divide")
        quot[da - db] = qc
        off = da - db
        for e, c in div.items():
            ee = off + e
            v = rem.get(ee, 0) - qc * c
            if v:
                rem[ee] = v
            elif ee in rem:
                del rem[ee]
    return LaurentPoly._raw({e + shift: c for e, c in quot.items()})


def _pseudo_rem(a: dict, b: dict) -> dict:
    """Pseudo-remainder of a by b over the integers (both min-exp 0, b nonzero)."""
    db = max(b)
    lead = b[db]
    rem = dict(a)
    while rem:
        da = max(rem)
        if da < db:
            break
        ca = rem[da]
        off = da - db
        # lead * rem - ca * t^off * b  kills the leading term exactly
        if lead != 1:
            rem = {e: lead * c for e, c in rem.items()}
            ca = lead * rem_orig_scale = None  # unreachable marker
        for e, c in b.items():
            ee = off + e
            v = rem.get(ee, 0) - ca * c
            if v:
                rem[ee] = v
            elif ee in rem:
                del rem[ee]
    return rem


def _prim(d: dict) -> dict:
    """Primitive part with min exponent 0 and positive leading coefficient."""
    if not d:
        return {}
    g = 0
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if d[max(d)] < 0:
        g = -g
    lo = min(d)
    if g == 1 and lo == 0:
        return d
    return {e - lo: c // g for e, c in d.items()}


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd in the Laurent ring, in canonical (normalized) form.

    Computed by a Euclidean remainder sequence over the rationals,
    realized as an integer pseudo-remainder sequence with every remainder
    reduced to its primitive part.
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    u = _prim(a._terms)
    v = _prim(b._terms)
    if not u:
        return LaurentPoly._raw(v)
    if not v:
        return LaurentPoly._raw(u)
    if max(u) < max(v):
        u, v = v, u
    while v:
        r = _prim(_rational_rem(u, v))
        u, v = v, r
    return LaurentPoly._raw(u)


def _rational_rem(a: dict, b: dict) -> dict:
    """Remainder of a by b up to a nonzero rational scalar (min-exp-0 inputs)."""
    db = max(b)
    lead = b[db]
    rem = dict(a)
    while rem:
        da = max(rem)
        if da < db:
            break
        ca = rem[da]
        g = math.gcd(ca, lead)
        scale = lead // g
        mult = ca // g
        if scale != 1:
            rem = {e: scale * c for e, c in rem.items()}
        off = da - db
        for e, c in b.items():
            ee = off + e
            v = rem.get(ee, 0) - mult * c
            if v:
                rem[ee] = v
            elif ee in rem:
                del rem[ee]
    return rem
