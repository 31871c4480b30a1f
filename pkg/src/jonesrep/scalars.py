"""Scalar domains: Laurent polynomials in A, Gaussian rationals, complex floats.

Every representation matrix in the package has entries in one of these.
Complex floats are plain Python ``complex`` (or numpy ``complex128`` inside
arrays); the two exact domains are defined here.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class ScalarDomainError(ValueError):
    """Raised when a value cannot be evaluated in the requested domain."""


def _norm_rational(x):
    # keep integers as int so the common Z[i] case stays on the fast path
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _norm_rational(Fraction(x))
    raise TypeError(f"not a rational: {x!r}")


class LaurentPoly:
    """Element of Z[A, A^-1], stored sparsely as ``{exponent: coefficient}``.

    Instances are immutable and canonical (no zero coefficients), so ``==``
    and ``hash`` are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            clean = {}
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            clean = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: coeff} if coeff else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_exp(self):
        return min(self._terms) if self._terms else None

    def max_exp(self):
        return max(self._terms) if self._terms else None

    def exponents_even(self):
        return all(e % 2 == 0 for e in self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                out[k] = out.get(k, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by the monomial A^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def __pow__(self, k):
        if k < 0:
            if len(self._terms) != 1:
                raise ScalarDomainError("only monomials are invertible in Z[A, A^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ScalarDomainError("only unit monomials are invertible")
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "A" if e == 1 else f"A^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(c) for e, c in obj.items()})


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
# value of a closed loop
LOOP = LaurentPoly({2: -1, -2: -1})


class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _norm_rational(re)
        self.im = _norm_rational(im)

    @classmethod
    def _raw(cls, re, im):
        g = object.__new__(cls)
        g.re = re
        g.im = im
        return g

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return None

    def __eq__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianRational._raw(_norm_rational(self.re + other), self.im)
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(_norm_rational(self.re + o.re), _norm_rational(self.im + o.im))

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(_norm_rational(self.re - o.re), _norm_rational(self.im - o.im))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianRational._raw(_norm_rational(self.re * other), _norm_rational(self.im * other))
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational._raw(_norm_rational(a * c - b * d), _norm_rational(a * d + b * c))

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(Fraction(self.re) / n, -Fraction(self.im) / n)

    def __truediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussianRational._raw(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}i"


I_UNIT = GaussianRational(0, 1)
G_ZERO = GaussianRational(0, 0)
G_ONE = GaussianRational(1, 0)
_I_POWERS = (G_ONE, I_UNIT, GaussianRational(-1, 0), GaussianRational(0, -1))


def i_power(k):
    """i**k for any integer k."""
    return _I_POWERS[k % 4]


def _complex_power(a, k):
    if k < 0:
        a = 1 / a
        k = -k
    result = 1 + 0j
    while k:
        if k & 1:
            result *= a
        a *= a
        k >>= 1
    return result


def eval_laurent(p, a):
    """Evaluate ``p`` at the nonzero complex number ``a``."""
    a = complex(a)
    if a == 0:
        raise ScalarDomainError("cannot evaluate a Laurent polynomial at A = 0")
    total = 0j
    for e, c in p._terms.items():
        total += c * _complex_power(a, e)
    return total


def eval_laurent_gaussian(p, k=3):
    """Evaluate ``p`` exactly at a point where A^2 = i^k.

    The default ``k=3`` is A^2 = -i, i.e. A = exp(-pi*i/4) and q = A^4 = -1.
    Only even powers of A are determined by A^2, so odd exponents are
    rejected.
    """
    re = 0
    im = 0
    for e, c in p._terms.items():
        if e % 2:
            raise ScalarDomainError(f"odd exponent A^{e} has no value in Q(i)")
        r = (k * (e // 2)) % 4
        if r == 0:
            re += c
        elif r == 1:
            im += c
        elif r == 2:
            re -= c
        else:
            im -= c
    return GaussianRational._raw(re, im)
