"""
Exact Laurent polynomials over the integers.

Two value types live here:

- ``Laurent2``: a Laurent polynomial in the two commuting variables ``t``
  and ``q`` (both invertible), stored as a map from exponent pairs to
  nonzero integer coefficients.  This is the ambient ring for the whole
  spectral calculus.
- ``HalfLaurent``: a Laurent polynomial in a single variable ``s`` with
  the convention ``s^2 = t``; it carries Alexander-Conway values, where
  half-integer powers of ``t`` are unavoidable for links.

All values are immutable and hashable; arithmetic always returns
canonical forms (no explicit zero coefficients are ever stored), so two
values are equal exactly when their term maps are equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["Laurent2", "HalfLaurent", "involution_q"]


def _join_terms(parts: list[tuple[int, str]]) -> str:
    """Join (coefficient, monomial-text) pairs into a signed sum."""
    if not parts:
        return "0"
    out: list[str] = []
    for coeff, mono in parts:
        mag = abs(coeff)
        body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if mono else str(mag))
        if not out:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out)


def _var_power(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{e}"


class Laurent2:
    """
    An integer Laurent polynomial in ``t`` and ``q``.

    >>> x = Laurent2.t() - Laurent2.t(-1)
    >>> y = Laurent2.t() + Laurent2.t(-1)
    >>> print(x * y)
    t^2 - t^-2
    >>> (x + y) - (x + y)
    Laurent2('0')
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (et, eq), c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c != 0:
                    clean[(int(et), int(eq))] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Laurent2:
        return cls()

    @classmethod
    def one(cls) -> Laurent2:
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, n: int) -> Laurent2:
        return cls({(0, 0): n})

    @classmethod
    def term(cls, coeff: int, et: int = 0, eq: int = 0) -> Laurent2:
        return cls({(et, eq): coeff})

    @classmethod
    def t(cls, e: int = 1) -> Laurent2:
        """The monomial t^e."""
        return cls({(e, 0): 1})

    @classmethod
    def q(cls, e: int = 1) -> Laurent2:
        """The monomial q^e."""
        return cls({(0, e): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterable[tuple[tuple[int, int], int]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_q_free(self) -> bool:
        return all(eq == 0 for (_, eq) in self._terms)

    def coefficient(self, et: int, eq: int) -> int:
        return self._terms.get((et, eq), 0)

    def min_exponents(self) -> tuple[int, int]:
        """Componentwise minimum of the exponent pairs (zero reports (0, 0))."""
        if not self._terms:
            return (0, 0)
        return (
            min(et for (et, _) in self._terms),
            min(eq for (_, eq) in self._terms),
        )

    def max_exponents(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        return (
            max(et for (et, _) in self._terms),
            max(eq for (_, eq) in self._terms),
        )

    def content(self) -> int:
        """gcd of the absolute coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = _gcd_int(g, abs(c))
            if g == 1:
                return 1
        return g

    def leading_term(self) -> tuple[tuple[int, int], int]:
        """Term with the lexicographically largest (t, q) exponent pair."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Laurent2 | int) -> Laurent2:
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other: Laurent2 | int) -> Laurent2:
        return self + (-_coerce(other))

    def __rsub__(self, other: Laurent2 | int) -> Laurent2:
        return _coerce(other) - self

    def __neg__(self) -> Laurent2:
        return _raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: Laurent2 | int) -> Laurent2:
        other = _coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Laurent2:
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = Laurent2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_inverse(self) -> Laurent2:
        """Inverse of a unit monomial (coefficient must be +-1)."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        ((et, eq), c), = self._terms.items()
        if c not in (1, -1):
            raise ValueError(f"{self} is not a unit monomial")
        return _raw({(-et, -eq): c})

    def shifted(self, dt: int, dq: int) -> Laurent2:
        """Multiply by the monomial t^dt q^dq."""
        return _raw({(et + dt, eq + dq): c for (et, eq), c in self._terms.items()})

    def exact_div(self, other: Laurent2) -> Laurent2:
        """
        Exact division; raises ValueError when ``other`` does not divide.

        Monomial factors are units here, so both operands are first
        shifted into the polynomial quadrant; there the quotient of an
        exact division is again a polynomial, which makes a quotient term
        with a negative exponent (or an inexact coefficient division) a
        proof of non-divisibility.

        >>> num = Laurent2.t(2) - Laurent2.t(-2)
        >>> den = Laurent2.t() - Laurent2.t(-1)
        >>> print(num.exact_div(den))
        t + t^-1
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Laurent2.zero()
        smt, smq = self.min_exponents()
        omt, omq = other.min_exponents()
        g = other.shifted(-omt, -omq)
        (le, lc) = g.leading_term()
        rem = dict(self.shifted(-smt, -smq)._terms)
        quo: dict[tuple[int, int], int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            fac_e = (e[0] - le[0], e[1] - le[1])
            if fac_e[0] < 0 or fac_e[1] < 0 or c % lc != 0:
                raise ValueError(f"{other} does not divide {self}")
            fac_c = c // lc
            quo[fac_e] = fac_c
            for (a, b), d in g._terms.items():
                ee = (a + fac_e[0], b + fac_e[1])
                s = rem.get(ee, 0) - fac_c * d
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        return _raw(quo).shifted(smt - omt, smq - omq)

    def divides(self, other: Laurent2) -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # -- substitutions -----------------------------------------------------

    def invert_q(self) -> Laurent2:
        """Substitute q -> q^-1 (a self-inverse ring automorphism)."""
        return _raw({(et, -eq): c for (et, eq), c in self._terms.items()})

    def evaluate(self, t: Fraction | int, q: Fraction | int) -> Fraction:
        """Evaluate at exact rational (nonzero) values of t and q."""
        t = Fraction(t)
        q = Fraction(q)
        total = Fraction(0)
        for (et, eq), c in self._terms.items():
            total += c * t**et * q**eq
        return total

    # -- text --------------------------------------------------------------

    def render(self) -> str:
        parts = []
        for (et, eq) in sorted(self._terms, reverse=True):
            mono = _var_power("t", et) + _var_power("q", eq)
            parts.append((self._terms[(et, eq)], mono))
        return _join_terms(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Laurent2({self.render()!r})"

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent2.const(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))


def _raw(terms: dict[tuple[int, int], int]) -> Laurent2:
    """Wrap an already-clean term map without copying."""
    p = Laurent2.__new__(Laurent2)
    p._terms = terms
    return p


def _coerce(x: Laurent2 | int) -> Laurent2:
    if isinstance(x, Laurent2):
        return x
    if isinstance(x, int):
        return Laurent2.const(x)
    raise TypeError(f"cannot mix Laurent2 with {type(x).__name__}")


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def involution_q(x):
    """
    The substitution q -> q^-1, on any value that supports it.

    Applying it twice is the identity, and t-only values are fixed.
    """
    return x.invert_q()


class HalfLaurent:
    """
    An integer Laurent polynomial in ``s``, where ``s^2 = t``.

    Alexander-Conway values of knots use only even powers of ``s`` and can
    be rendered in ``t``; links genuinely need the odd powers.

    >>> d = HalfLaurent.s() - HalfLaurent.s(-1)
    >>> print(d)
    s - s^-1
    >>> print((d * d + 2).render("t"))
    t + t^-1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c != 0:
                    clean[int(e)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> HalfLaurent:
        return cls()

    @classmethod
    def one(cls) -> HalfLaurent:
        return cls({0: 1})

    @classmethod
    def const(cls, n: int) -> HalfLaurent:
        return cls({0: n})

    @classmethod
    def s(cls, e: int = 1) -> HalfLaurent:
        return cls({e: 1})

    def terms(self) -> Iterable[tuple[int, int]]:
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def all_even_powers(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def __add__(self, other: HalfLaurent | int) -> HalfLaurent:
        other = _coerce_half(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw_half(out)

    __radd__ = __add__

    def __sub__(self, other: HalfLaurent | int) -> HalfLaurent:
        return self + (-_coerce_half(other))

    def __rsub__(self, other: HalfLaurent | int) -> HalfLaurent:
        return _coerce_half(other) - self

    def __neg__(self) -> HalfLaurent:
        return _raw_half({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: HalfLaurent | int) -> HalfLaurent:
        other = _coerce_half(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw_half(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HalfLaurent:
        if n < 0:
            return self.monomial_inverse() ** (-n)
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_inverse(self) -> HalfLaurent:
        """Inverse of a unit monomial (coefficient must be +-1)."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        (e, c), = self._terms.items()
        if c not in (1, -1):
            raise ValueError(f"{self} is not a unit monomial")
        return _raw_half({-e: c})

    def mirror(self) -> HalfLaurent:
        """Substitute s -> s^-1."""
        return _raw_half({-e: c for e, c in self._terms.items()})

    def evaluate(self, s: Fraction | int) -> Fraction:
        s = Fraction(s)
        return sum((c * s**e for e, c in self._terms.items()), Fraction(0))

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def substitute_power(self, m: int) -> Laurent2:
        """Substitute s -> t^m, giving a q-free two-variable value."""
        if m < 1:
            raise ValueError("m must be a positive integer")
        return Laurent2({(m * e, 0): c for e, c in self._terms.items()})

    def render(self, var: str = "s") -> str:
        if var not in ("s", "t"):
            raise ValueError("var must be 's' or 't'")
        if var == "t" and not self.all_even_powers():
            raise ValueError(
                "value has odd powers of s = t^(1/2); render with var='s'"
            )
        parts = []
        for e in sorted(self._terms, reverse=True):
            exp = e // 2 if var == "t" else e
            parts.append((self._terms[e], _var_power(var, exp)))
        return _join_terms(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HalfLaurent({self.render()!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))


def _raw_half(terms: dict[int, int]) -> HalfLaurent:
    p = HalfLaurent.__new__(HalfLaurent)
    p._terms = terms
    return p


def _coerce_half(x: HalfLaurent | int) -> HalfLaurent:
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        return HalfLaurent.const(x)
    raise TypeError(f"cannot mix HalfLaurent with {type(x).__name__}")
