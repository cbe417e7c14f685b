"""Exact coefficient rings.

Two coefficient rings are supported:

* ``Laurent`` -- the formal ring Z[v, v^-1] where ``v`` plays the role of q^(1/2).
* ``SqrtQ`` -- the field Q(sqrt(q0)) for a fixed prime ``q0``; an element is
  ``a + b*s`` with ``s = sqrt(q0)`` and ``a``, ``b`` rational.

Torus code never touches these classes directly; it goes through a ring
descriptor (``FORMAL`` or ``SqrtRing(q0)``) that knows how to build ``0``, ``1``
and powers of ``v``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class NotInvertible(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Laurent:
    """Integer Laurent polynomial in ``v``, stored as a sorted tuple of (exponent, coefficient)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        acc = {}
        for e, c in dict(terms).items():
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def _raw(cls, pairs):
        obj = cls.__new__(cls)
        obj.terms = pairs
        return obj

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Laurent":
        return cls._raw(((k, c),) if c else ())

    def as_dict(self):
        return dict(self.terms)

    def one(self):
        return Laurent._raw(((0, 1),))

    def zero(self):
        return Laurent._raw(())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent(other)
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(("L", self.terms))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return Laurent._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent(other)
        return self + (-other)

    def __rsub__(self, other):
        return Laurent(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent._raw(tuple((e, c * other) for e, c in self.terms)) if other else self.zero()
        if not isinstance(other, Laurent):
            return NotImplemented
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        """Multiply by ``v**k``."""
        if k == 0:
            return self
        return Laurent._raw(tuple((e + k, c) for e, c in self.terms))

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] in (1, -1)

    def inv(self) -> "Laurent":
        if not self.is_unit():
            raise NotInvertible(f"{self} is not a unit of Z[v, v^-1]")
        (e, c), = self.terms
        return Laurent._raw(((-e, c),))

    def divexact(self, other: "Laurent") -> "Laurent":
        """Exact division in Z[v, v^-1]; raises ``NotInvertible`` if ``other`` does not divide ``self``."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if other.is_unit():
            return self * other.inv()
        rem = dict(self.terms)
        lead_e, lead_c = other.terms[-1]
        low_bound = (self.terms[0][0] - other.terms[0][0]) if self.terms else 0
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c:
                raise NotInvertible(f"{other} does not divide {self}")
            qe, qc = e - lead_e, c // lead_c
            if qe < low_bound:
                raise NotInvertible(f"{other} does not divide {self}")
            quot[qe] = qc
            for oe, oc in other.terms:
                k = oe + qe
                rem[k] = rem.get(k, 0) - qc * oc
                if not rem[k]:
                    del rem[k]
        return Laurent(quot)

    def bar(self) -> "Laurent":
        return Laurent._raw(tuple(sorted((-e, c) for e, c in self.terms)))

    def ev(self, q0: int) -> "SqrtQ":
        return ev(self, q0)

    def __repr__(self):
        return f"Laurent({render_laurent(self)!r})"

    def __str__(self):
        return render_laurent(self)


class SqrtQ:
    """Element ``a + b*sqrt(q0)`` of Q(sqrt(q0)), ``q0`` prime."""

    __slots__ = ("q0", "a", "b")

    def __init__(self, q0: int, a=0, b=0):
        self.q0 = q0
        self.a = Fraction(a)
        self.b = Fraction(b)

    def one(self):
        return SqrtQ(self.q0, 1, 0)

    def zero(self):
        return SqrtQ(self.q0, 0, 0)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtQ(self.q0, other, 0)
        if isinstance(other, SqrtQ):
            if other.q0 != self.q0:
                raise ValueError(f"field mismatch: sqrt({self.q0}) vs sqrt({other.q0})")
            return other
        return None

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SqrtQ):
            return self.q0 == other.q0 and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash(("S", self.q0, self.a, self.b))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtQ(self.q0, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SqrtQ(self.q0, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtQ(self.q0, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SqrtQ(self.q0, self.a * o.a + self.q0 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def shift(self, k: int) -> "SqrtQ":
        """Multiply by ``sqrt(q0)**k``."""
        if k == 0:
            return self
        half, odd = divmod(k, 2)
        f = Fraction(self.q0) ** half
        a, b = self.a * f, self.b * f
        if odd:
            a, b = b * self.q0, a
        return SqrtQ(self.q0, a, b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.q0 * self.b * self.b

    def inv(self) -> "SqrtQ":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(q0))")
        n = self.norm()
        return SqrtQ(self.q0, self.a / n, -self.b / n)

    def divexact(self, other: "SqrtQ") -> "SqrtQ":
        return self * self._coerce(other).inv()

    def __truediv__(self, other):
        return self.divexact(other)

    def is_unit(self) -> bool:
        return bool(self)

    def bar(self):
        raise TypeError("bar involution is only defined on formal coefficients")

    def __repr__(self):
        return f"SqrtQ({self.q0}, {render_sqrt(self)!r})"

    def __str__(self):
        return render_sqrt(self)


def bar(x: Laurent) -> Laurent:
    """v -> v^-1."""
    if not isinstance(x, Laurent):
        raise TypeError("bar involution is only defined on formal coefficients")
    return x.bar()


def ev(x: Laurent, q0: int) -> SqrtQ:
    """Specialize ``v -> sqrt(q0)``."""
    if not is_prime(q0):
        raise ValueError(f"q0={q0} is not prime")
    out = SqrtQ(q0)
    for e, c in x.terms:
        out = out + SqrtQ(q0, c, 0).shift(e)
    return out


class FormalRing:
    """Descriptor for Z[v, v^-1]."""

    name = "formal"

    def zero(self):
        return Laurent._raw(())

    def one(self):
        return Laurent._raw(((0, 1),))

    def vpow(self, k: int, c: int = 1):
        return Laurent.monomial(k, c)

    def from_int(self, n: int):
        return Laurent(n)

    def __eq__(self, other):
        return isinstance(other, FormalRing)

    def __hash__(self):
        return hash("formal")

    def __repr__(self):
        return "FORMAL"


class SqrtRing:
    """Descriptor for Q(sqrt(q0))."""

    name = "specialized"

    def __init__(self, q0: int):
        if not is_prime(q0):
            raise ValueError(f"q0={q0} is not prime")
        self.q0 = q0

    def zero(self):
        return SqrtQ(self.q0)

    def one(self):
        return SqrtQ(self.q0, 1)

    def vpow(self, k: int, c=1):
        return SqrtQ(self.q0, c).shift(k)

    def from_int(self, n):
        return SqrtQ(self.q0, n)

    def __eq__(self, other):
        return isinstance(other, SqrtRing) and other.q0 == self.q0

    def __hash__(self):
        return hash(("sqrt", self.q0))

    def __repr__(self):
        return f"SqrtRing({self.q0})"


FORMAL = FormalRing()


def ring_of(x):
    if isinstance(x, Laurent):
        return FORMAL
    if isinstance(x, SqrtQ):
        return SqrtRing(x.q0)
    raise TypeError(f"not a coefficient: {x!r}")


def qbinom(n: int, k: int, base):
    """Balanced quantum binomial [n choose k] evaluated at ``base``.

    ``base`` must be invertible in its ring.  Computed with the recurrence
    ``[n k] = t^k [n-1 k] + t^(k-n) [n-1 k-1]`` so that no division is needed.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = base.one()
    if k > n:
        return base.zero()
    inv = base.inv()

    def power(t, e):
        if e < 0:
            t, e = inv, -e
        out = one
        for _ in range(e):
            out = out * t
        return out

    row = [one]
    for nn in range(1, n + 1):
        new = []
        for kk in range(0, min(nn, k) + 1):
            val = base.zero()
            if kk <= nn - 1:
                val = val + power(base, kk) * row[kk]
            if kk >= 1:
                val = val + power(base, kk - nn) * row[kk - 1]
            new.append(val)
        row = new
    return row[k]


# ---------------------------------------------------------------- text forms

def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_laurent(x: Laurent) -> str:
    if not x.terms:
        return "0"
    parts = []
    for e, c in reversed(x.terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "v" if e == 1 else f"v^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_sqrt(x: SqrtQ) -> str:
    if not x:
        return "0"
    parts = []
    if x.a:
        parts.append(("-" if x.a < 0 else "+", _fmt_frac(abs(x.a))))
    if x.b:
        mag = abs(x.b)
        parts.append(("-" if x.b < 0 else "+", "s" if mag == 1 else f"{_fmt_frac(mag)}*s"))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_LAURENT_TERM = re.compile(r"^(?:(\d+)\*)?v(?:\^(-?\d+))?$|^(\d+)$")
_SQRT_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?s$|^(\d+(?:/\d+)?)$")


def _split_signed(text: str):
    text = text.strip()
    tokens = re.split(r"\s+([+-])\s+", text)
    first = tokens[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    out = [(sign, first)]
    for i in range(1, len(tokens), 2):
        out.append((1 if tokens[i] == "+" else -1, tokens[i + 1]))
    return out


def parse_laurent(text: str) -> Laurent:
    if text.strip() == "0":
        return Laurent()
    acc = {}
    for sign, tok in _split_signed(text):
        m = _LAURENT_TERM.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse Laurent term {tok!r}")
        if m.group(3) is not None:
            e, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(2)) if m.group(2) else 1
        acc[e] = acc.get(e, 0) + sign * c
    return Laurent(acc)


def parse_sqrt(text: str, q0: int) -> SqrtQ:
    if text.strip() == "0":
        return SqrtQ(q0)
    a, b = Fraction(0), Fraction(0)
    for sign, tok in _split_signed(text):
        m = _SQRT_TERM.match(tok.strip())
        if not m:
            raise ValueError(f"cannot parse specialized term {tok!r}")
        if m.group(2) is not None:
            a += sign * Fraction(m.group(2))
        else:
            b += sign * (Fraction(m.group(1)) if m.group(1) else 1)
    return SqrtQ(q0, a, b)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den
