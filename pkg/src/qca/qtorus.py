"""The based quantum torus with a skew-symmetric twist.

Elements are finite sums ``sum c_e X^e`` over exponent vectors ``e`` in Z^m
with ``X^e X^f = v^{L(e, f)} X^{e+f}``, where ``v`` stands for q^(1/2).
"""

from __future__ import annotations

import re
from typing import Dict, Sequence

from .scalars import FORMAL, Laurent, SqrtQ, SqrtRing, ev, parse_laurent, parse_sqrt, render_laurent, render_sqrt


class NotExact(ArithmeticError):
    """Raised when a quotient does not exist inside the torus."""


class QuantumTorus:
    """Rank and twist form of a based quantum torus."""

    def __init__(self, lam):
        rows = tuple(tuple(int(t) for t in row) for row in lam)
        m = len(rows)
        for i in range(m):
            if len(rows[i]) != m:
                raise ValueError("lambda must be square")
            for j in range(m):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("lambda must be skew-symmetric")
        self.lam = rows
        self.rank = m
        # nonzero entries per row, for quick form evaluation
        self._sparse = tuple(tuple((j, v) for j, v in enumerate(row) if v) for row in rows)

    def form(self, e, f) -> int:
        s = 0
        for i, ei in enumerate(e):
            if ei:
                for j, v in self._sparse[i]:
                    fj = f[j]
                    if fj:
                        s += ei * v * fj
        return s

    def __eq__(self, other):
        return isinstance(other, QuantumTorus) and other.lam == self.lam

    def __hash__(self):
        return hash(self.lam)

    def __repr__(self):
        return f"QuantumTorus({[list(r) for r in self.lam]})"

    # constructors
    def monomial(self, e: Sequence[int], coeff=None, ring=FORMAL) -> "TorusElement":
        e = tuple(int(t) for t in e)
        if len(e) != self.rank:
            raise ValueError(f"exponent {e} has length {len(e)}, expected {self.rank}")
        if coeff is None:
            coeff = ring.one()
        return TorusElement(self, {e: coeff} if coeff else {}, ring)

    def one(self, ring=FORMAL) -> "TorusElement":
        return self.monomial((0,) * self.rank, ring=ring)

    def zero(self, ring=FORMAL) -> "TorusElement":
        return TorusElement(self, {}, ring)

    def gen(self, i: int, ring=FORMAL) -> "TorusElement":
        """X_i for 1-based ``i``."""
        e = [0] * self.rank
        e[i - 1] = 1
        return self.monomial(e, ring=ring)


class TorusElement:
    __slots__ = ("torus", "terms", "ring")

    def __init__(self, torus: QuantumTorus, terms: Dict[tuple, object], ring=FORMAL):
        self.torus = torus
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- basic protocol
    def _check(self, other: "TorusElement"):
        if not isinstance(other, TorusElement):
            raise TypeError(f"expected TorusElement, got {type(other).__name__}")
        if other.torus is not self.torus and other.torus != self.torus:
            raise ValueError("torus elements belong to different quantum tori")
        if other.ring != self.ring:
            raise ValueError(f"coefficient ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def copy_with(self, terms):
        return TorusElement(self.torus, terms, self.ring)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return self.copy_with(out)

    def __neg__(self):
        return self.copy_with({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TorusElement":
        return self.copy_with({e: c * x for e, x in self.terms.items()})

    def vshift(self, k: int) -> "TorusElement":
        """Multiply every coefficient by v^k."""
        if k == 0:
            return self
        return self.copy_with({e: c.shift(k) for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TorusElement):
            return self.scale(other)
        self._check(other)
        form = self.torus.form
        out = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                val = (c * d).shift(form(e, f))
                if g in out:
                    out[g] = out[g] + val
                else:
                    out[g] = val
        return self.copy_with(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int):
        if k < 0:
            return inverse_monomial(self) ** (-k)
        out = self.torus.one(self.ring)
        for _ in range(k):
            out = out * self
        return out

    # -- inspection
    def sorted_terms(self, descending=True):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=descending)

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.ring.zero())

    def is_monomial(self):
        return len(self.terms) == 1

    def __repr__(self):
        return f"TorusElement({render(self)!r})"

    def __str__(self):
        return render(self)


def monomial(torus: QuantumTorus, e, ring=FORMAL) -> TorusElement:
    return torus.monomial(e, ring=ring)


def inverse_monomial(x: TorusElement) -> TorusElement:
    """Inverse of a single-term element ``c X^e`` whose coefficient is invertible."""
    if not x.is_monomial():
        raise NotExact("only single-term elements are invertible in the torus")
    (e, c), = x.terms.items()
    # (c X^e)(c^-1 X^-e) = X^e X^-e = v^{L(e,-e)} = 1
    return x.copy_with({tuple(-t for t in e): c.inv()})


def normalized(c: Sequence[int], variables, lam) -> TorusElement:
    """The normalized product ``v^{sum_{i<j} c_i c_j lam[j][i]} X_1^{c_1} ... X_m^{c_m}``.

    ``variables`` are pairwise quasi-commuting torus elements.  Entries of
    ``c`` may be negative only where the variable is a single-term element.
    """
    m = len(c)
    if len(variables) != m:
        raise ValueError("need one variable per coordinate")
    twist = 0
    for i in range(m):
        if c[i]:
            for j in range(i + 1, m):
                if c[j]:
                    twist += c[i] * c[j] * int(lam[j][i])
    torus = variables[0].torus
    ring = variables[0].ring
    out = torus.one(ring)
    for i in range(m):
        if c[i]:
            out = out * (variables[i] ** c[i])
    return out.vshift(twist)


def bar(x: TorusElement) -> TorusElement:
    """Coefficient-wise v -> v^-1 (formal coefficients only)."""
    if x.ring != FORMAL:
        raise TypeError("bar involution is only defined on formal torus elements")
    return x.copy_with({e: c.bar() for e, c in x.terms.items()})


def specialize(x: TorusElement, q0: int) -> TorusElement:
    if x.ring != FORMAL:
        raise TypeError("only formal elements can be specialized")
    return TorusElement(x.torus, {e: ev(c, q0) for e, c in x.terms.items()}, SqrtRing(q0))


def _box(x: TorusElement):
    exps = list(x.terms)
    m = x.torus.rank
    return [min(e[i] for e in exps) for i in range(m)], [max(e[i] for e in exps) for i in range(m)]


def divide_exact(p: TorusElement, d: TorusElement, side: str = "right") -> TorusElement:
    """Return ``z`` with ``z*d == p`` (side='right') or ``d*z == p`` (side='left').

    Leading terms are cancelled in lexicographic order.  The Newton polytope of
    a quotient is the Minkowski difference of those of ``p`` and ``d``, so any
    candidate exponent outside the coordinate box ``[min p - min d, max p - max d]``
    proves that no quotient exists.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    p._check(d)
    if not d:
        raise ZeroDivisionError("division by zero torus element")
    if not p:
        return p.copy_with({})
    form = p.torus.form
    plo, phi = _box(p)
    dlo, dhi = _box(d)
    lo = [a - b for a, b in zip(plo, dlo)]
    hi = [a - b for a, b in zip(phi, dhi)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NotExact("no quotient: exponent box is empty")
    g, u = d.leading()
    rem = dict(p.terms)
    quot = {}
    while rem:
        f = max(rem)
        c = rem[f]
        h = tuple(a - b for a, b in zip(f, g))
        if any(x < a or x > b for x, a, b in zip(h, lo, hi)):
            raise NotExact(f"no quotient: leading exponent {f} leaves the Newton box")
        twist = form(h, g) if side == "right" else form(g, h)
        try:
            coef = c.divexact(u.shift(twist))
        except ArithmeticError as exc:
            raise NotExact(str(exc)) from exc
        quot[h] = coef
        w = p.copy_with({h: coef})
        sub = w * d if side == "right" else d * w
        for e, val in sub.terms.items():
            nv = rem[e] - val if e in rem else -val
            if nv:
                rem[e] = nv
            else:
                rem.pop(e, None)
        if f in rem:
            raise NotExact("leading term did not cancel")
    return p.copy_with(quot)


# ---------------------------------------------------------------- text form

def _render_coeff(c):
    return render_laurent(c) if isinstance(c, Laurent) else render_sqrt(c)


def render(x: TorusElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for e, c in x.sorted_terms():
        mono = "X[(" + ",".join(str(t) for t in e) + ")]"
        if c == c.one():
            parts.append(mono)
        elif c == -c.one():
            parts.append("-" + mono)
        else:
            parts.append(f"({_render_coeff(c)})*{mono}")
    out = parts[0]
    for t in parts[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


_TERM = re.compile(r"([+-])?\s*(?:\(([^()]*)\)\*)?X\[\(([^)]*)\)\]")


def parse(text: str, torus: QuantumTorus, ring=FORMAL) -> TorusElement:
    text = text.strip()
    if text == "0":
        return torus.zero(ring)
    terms = {}
    pos = 0
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected text {text[pos:m.start()]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        e = tuple(int(t) for t in m.group(3).split(","))
        if m.group(2) is None:
            c = ring.one()
        elif ring == FORMAL:
            c = parse_laurent(m.group(2))
        else:
            c = parse_sqrt(m.group(2), ring.q0)
        c = c if sign > 0 else -c
        terms[e] = terms[e] + c if e in terms else c
    if text[pos:].strip():
        raise ValueError(f"unexpected trailing text {text[pos:]!r}")
    return TorusElement(torus, terms, ring)


def to_json(x: TorusElement) -> dict:
    return {
        "ring": x.ring.name if x.ring == FORMAL else f"sqrt({x.ring.q0})",
        "terms": [{"exponent": list(e), "coefficient": _render_coeff(c)} for e, c in x.sorted_terms()],
        "text": render(x),
    }
