"""
Exact evaluation at roots of unity via cyclotomic quotient rings.

Substituting q = exp(i*pi*r/m) is done with no floating point at all:
the target is a primitive d-th root of unity with d = 2m/gcd(r, 2m), so
the substitution is the ring map into Z[t, t^-1][q] / Phi_d(q) that sends
q to the appropriate power of the residue class of q.  Phi_d is
irreducible over the rationals, so the quotient is an integral domain and
fractions over it can be compared by cross-multiplication.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import PoleAtRootError
from .laurent import Laurent2
from .rational import RationalFn

__all__ = ["cyclotomic_poly", "CycloFraction", "reduce_at_root", "root_order"]


def _poly_exact_div(f: list[int], g: list[int]) -> list[int]:
    """Exact division of dense integer polynomials (ascending)."""
    out = [0] * (len(f) - len(g) + 1)
    rem = f[:]
    for i in range(len(out) - 1, -1, -1):
        c = rem[len(g) - 1 + i]
        if c % g[-1]:
            raise ArithmeticError("inexact cyclotomic division")
        out[i] = c // g[-1]
        for j, b in enumerate(g):
            rem[i + j] -= out[i] * b
    if any(rem):
        raise ArithmeticError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    if d < 1:
        raise ValueError("d must be a positive integer")
    # (q^d - 1) divided by the cyclotomic polynomials of the proper divisors.
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_exact_div(poly, list(_cyclotomic_coeffs(e)))
    return tuple(poly)


def cyclotomic_poly(d: int) -> Laurent2:
    """
    The d-th cyclotomic polynomial, as a polynomial in q.

    >>> print(cyclotomic_poly(1))
    q - 1
    >>> print(cyclotomic_poly(4))
    q^2 + 1
    """
    return Laurent2({(0, e): c for e, c in enumerate(_cyclotomic_coeffs(d)) if c})


@lru_cache(maxsize=None)
def _qpower_table(d: int) -> tuple[tuple[int, ...], ...]:
    """Residues of q^e mod Phi_d for e in [0, d), as coefficient tuples."""
    phi = _cyclotomic_coeffs(d)
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    for _ in range(d):
        rows.append(tuple(cur))
        nxt = [0] + cur
        lead = nxt.pop()
        if lead:
            # q^deg == -(Phi_d - q^deg), since Phi_d is monic.
            for j in range(deg):
                nxt[j] -= lead * phi[j]
        cur = nxt
    return tuple(rows)


def _reduce_laurent(p: Laurent2, d: int) -> Laurent2:
    """Reduce all q-exponents of p modulo Phi_d (q^d == 1 in the quotient)."""
    table = _qpower_table(d)
    out: dict[tuple[int, int], int] = {}
    for (et, eq), c in p.terms():
        for j, a in enumerate(table[eq % d]):
            if a:
                e = (et, j)
                s = out.get(e, 0) + c * a
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
    return Laurent2(out)


def root_order(m: int, r: int) -> int:
    """Multiplicative order d of exp(i*pi*r/m), i.e. 2m / gcd(r, 2m)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return (2 * m) // gcd(r % (2 * m), 2 * m)


class CycloFraction:
    """
    A fraction over Z[t, t^-1][q] / Phi_d(q).

    Numerator and denominator are stored with q-exponents strictly below
    deg Phi_d = phi(d); the denominator must not reduce to zero.  Equality
    is cross-multiplication inside the quotient ring, which is sound
    because Phi_d is irreducible (the quotient is an integral domain).
    """

    __slots__ = ("d", "num", "den")

    def __init__(self, d: int, num: Laurent2 | int, den: Laurent2 | int = 1):
        if d < 1:
            raise ValueError("d must be a positive integer")
        num = num if isinstance(num, Laurent2) else Laurent2.const(num)
        den = den if isinstance(den, Laurent2) else Laurent2.const(den)
        num = _reduce_laurent(num, d)
        den = _reduce_laurent(den, d)
        if den.is_zero():
            raise PoleAtRootError(
                f"denominator vanishes in the quotient by Phi_{d}(q)"
            )
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("CycloFraction is immutable")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> CycloFraction:
        if isinstance(other, CycloFraction):
            if other.d != self.d:
                raise ValueError(
                    f"mixed moduli: Phi_{self.d} versus Phi_{other.d}"
                )
            return other
        if isinstance(other, int):
            return CycloFraction(self.d, other)
        if isinstance(other, Laurent2):
            if not other.is_q_free():
                raise ValueError(
                    "only q-free values embed unambiguously; "
                    "use reduce_at_root for q-dependent ones"
                )
            return CycloFraction(self.d, other)
        if isinstance(other, RationalFn):
            if not (other.num.is_q_free() and other.den.is_q_free()):
                raise ValueError(
                    "only q-free values embed unambiguously; "
                    "use reduce_at_root for q-dependent ones"
                )
            return CycloFraction(self.d, other.num, other.den)
        raise TypeError(f"cannot mix CycloFraction with {type(other).__name__}")

    def __add__(self, other) -> CycloFraction:
        other = self._coerce(other)
        if self.den == other.den:
            return CycloFraction(self.d, self.num + other.num, self.den)
        return CycloFraction(
            self.d,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> CycloFraction:
        return self + (-self._coerce(other))

    def __neg__(self) -> CycloFraction:
        out = CycloFraction.__new__(CycloFraction)
        object.__setattr__(out, "d", self.d)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __mul__(self, other) -> CycloFraction:
        other = self._coerce(other)
        return CycloFraction(self.d, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    # -- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Laurent2, RationalFn, CycloFraction)):
            other = self._coerce(other)
        else:
            return NotImplemented
        diff = self.num * other.den - other.num * self.den
        return _reduce_laurent(diff, self.d).is_zero()

    __hash__ = None

    # -- text --------------------------------------------------------------

    def render(self) -> str:
        if self.den.is_one():
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def modulus(self) -> Laurent2:
        return cyclotomic_poly(self.d)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CycloFraction(d={self.d}, {self.render()!r})"


def reduce_at_root(x: Laurent2 | RationalFn, m: int, r: int = 1) -> CycloFraction:
    """
    Evaluate x at q = exp(i*pi*r/m), exactly.

    Requires gcd(r, m) = 1 (reduce a common factor out of r/m first if you
    need other points on the unit circle).  The result lives in the
    quotient ring modulo Phi_d with d = 2m/gcd(r, 2m); the original q maps
    to the (r/gcd(r,2m))-th power of the residue class of q, which is a
    primitive d-th root of unity.

    Raises PoleAtRootError when a denominator vanishes at the root.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if gcd(r, m) != 1:
        raise ValueError(f"r={r} and m={m} must be relatively prime")
    rr = r % (2 * m)
    g = gcd(rr, 2 * m)
    d = (2 * m) // g
    rp = rr // g if g != 2 * m else 0
    if isinstance(x, Laurent2):
        return CycloFraction(d, _twist(x, rp, d))
    if isinstance(x, RationalFn):
        return CycloFraction(d, _twist(x.num, rp, d), _twist(x.den, rp, d))
    raise TypeError(f"cannot reduce {type(x).__name__} at a root of unity")


def _twist(p: Laurent2, rp: int, d: int) -> Laurent2:
    """Send q to the rp-th power of the residue class generating the root."""
    out: dict[tuple[int, int], int] = {}
    for (et, eq), c in p.terms():
        e = (et, (eq * rp) % d)
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Laurent2(out)
