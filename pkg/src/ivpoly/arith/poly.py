"""Dense univariate polynomials over Z, Q and Z/dZ.

Coefficients are stored low degree first (index i holds the coefficient of
x^i).  The zero polynomial is the empty tuple; its degree is ZERO_DEGREE,
which compares below every integer but is not one.
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from itertools import zip_longest

from ..errors import ModulusMismatch, NonMonicDivisor

ZERO_DEGREE = float("-inf")


def format_poly(coeffs, var: str = "x") -> str:
    """Render low-to-high coefficients in the shared text syntax, e.g. ``3/2*x^3 - x + 5``."""
    parts: list[tuple[str, str]] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        sign, mag = ("-", -c) if c < 0 else ("+", c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class _DensePoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        c = [self._coerce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._coeffs = tuple(c)

    # ring hooks
    def _coerce(self, x):
        raise NotImplementedError

    def _is_scalar(self, x) -> bool:
        raise NotImplementedError

    def _new(self, coeffs):
        return type(self)(coeffs)

    def _ring_key(self):
        return None

    def _other_coeffs(self, other):
        if type(other) is type(self):
            if other._ring_key() != self._ring_key():
                raise ModulusMismatch(f"moduli {self._ring_key()} and {other._ring_key()}")
            return other._coeffs
        if isinstance(other, bool):
            return None
        if self._is_scalar(other):
            return (other,)
        return None

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    @property
    def leading(self):
        return self._coeffs[-1] if self._coeffs else self._coerce(0)

    def __getitem__(self, i: int):
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else self._coerce(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __add__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        return self._new([a + b for a, b in zip_longest(self._coeffs, oc, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self._coeffs])

    def __sub__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        return self._new([a - b for a, b in zip_longest(self._coeffs, oc, fillvalue=0)])

    def __rsub__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        return self._new([b - a for a, b in zip_longest(self._coeffs, oc, fillvalue=0)])

    def __mul__(self, other):
        oc = self._other_coeffs(other)
        if oc is None:
            return NotImplemented
        if not self._coeffs or not oc:
            return self._new(())
        return self._new(_convolve(self._coeffs, oc))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        e = operator.index(e)
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self._new((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return type(other) is type(self) and other._ring_key() == self._ring_key() and other._coeffs == self._coeffs
        if self._is_scalar(other):
            return self._coeffs == self._new((other,))._coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._ring_key(), self._coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """Return self(other) as a polynomial."""
        acc = other * 0
        for c in reversed(self._coeffs):
            acc = acc * other + c
        return acc

    def derivative(self):
        return self._new([i * c for i, c in enumerate(self._coeffs)][1:])

    def __str__(self) -> str:
        return format_poly(self._coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def _divmod_monic(a, m, norm):
    dm = len(m) - 1
    r = list(a)
    if len(r) <= dm:
        return [], r
    q = [0] * (len(r) - dm)
    for i in range(len(r) - 1, dm - 1, -1):
        c = norm(r[i])
        if c:
            q[i - dm] = c
            base = i - dm
            for j in range(dm):
                r[base + j] -= c * m[j]
        r[i] = 0
    return q, r[:dm]


class ZPoly(_DensePoly):
    """Polynomial with integer coefficients."""

    __slots__ = ()

    def _coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral coefficient {x}")
            return x.numerator
        return operator.index(x)

    def _is_scalar(self, x) -> bool:
        return isinstance(x, int)

    def __call__(self, x):
        if isinstance(x, QPoly) or isinstance(x, Fraction):
            return self.to_qpoly()(x)
        return super().__call__(x)

    def compose(self, other):
        if isinstance(other, QPoly):
            return self.to_qpoly().compose(other)
        return super().compose(other)

    def content(self) -> int:
        """gcd of the coefficients; content(0) = 0."""
        return math.gcd(*self._coeffs) if self._coeffs else 0

    def reduce(self, modulus: int) -> ModPoly:
        return ModPoly(self._coeffs, modulus)

    def to_qpoly(self) -> QPoly:
        return QPoly(self._coeffs)

    def divmod_monic(self, m: ZPoly) -> tuple[ZPoly, ZPoly]:
        if not m.is_monic():
            raise NonMonicDivisor(f"divisor {m} is not monic")
        q, r = _divmod_monic(self._coeffs, m._coeffs, lambda c: c)
        return ZPoly(q), ZPoly(r)

    def __mod__(self, m: ZPoly) -> ZPoly:
        return self.divmod_monic(m)[1]


class QPoly(_DensePoly):
    """Polynomial with rational coefficients (Fractions in lowest terms)."""

    __slots__ = ()

    def _coerce(self, x):
        return x if type(x) is Fraction else Fraction(x)

    def _is_scalar(self, x) -> bool:
        return isinstance(x, (int, Fraction))

    def _other_coeffs(self, other):
        if isinstance(other, ZPoly):
            return other.coeffs
        return super()._other_coeffs(other)

    def compose(self, other):
        if isinstance(other, ZPoly):
            other = other.to_qpoly()
        return super().compose(other)

    def denominator(self) -> int:
        """Least common multiple of the coefficient denominators (1 for zero)."""
        return math.lcm(*(c.denominator for c in self._coeffs)) if self._coeffs else 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def to_zpoly(self) -> ZPoly:
        return ZPoly(self._coeffs)

    def divmod(self, m: QPoly) -> tuple[QPoly, QPoly]:
        if not m:
            raise ZeroDivisionError("polynomial division by zero")
        lead = m.leading
        dm = m.degree
        r = list(self._coeffs)
        if len(r) <= dm:
            return QPoly(()), QPoly(r)
        q = [Fraction(0)] * (len(r) - dm)
        for i in range(len(r) - 1, dm - 1, -1):
            c = r[i] / lead
            if c:
                q[i - dm] = c
                for j in range(dm + 1):
                    r[i - dm + j] -= c * m.coeffs[j]
        return QPoly(q), QPoly(r[:dm])

    def __mod__(self, m) -> QPoly:
        if isinstance(m, ZPoly):
            m = m.to_qpoly()
        return self.divmod(m)[1]


class ModPoly(_DensePoly):
    """Polynomial over Z/dZ with residues stored in [0, d)."""

    __slots__ = ("modulus",)

    def __init__(self, coeffs=(), modulus: int = 0):
        modulus = operator.index(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        super().__init__(coeffs)

    def _coerce(self, x):
        return operator.index(x) % self.modulus

    def _is_scalar(self, x) -> bool:
        return isinstance(x, int)

    def _new(self, coeffs):
        return ModPoly(coeffs, self.modulus)

    def _ring_key(self):
        return self.modulus

    def __call__(self, x):
        acc = super().__call__(x)
        return acc % self.modulus if isinstance(acc, int) else acc

    def __reduce__(self):
        return (ModPoly, (self._coeffs, self.modulus))

    def lift(self) -> ZPoly:
        """Integer polynomial with coefficients in [0, d)."""
        return ZPoly(self._coeffs)

    def divmod_monic(self, m: ModPoly) -> tuple[ModPoly, ModPoly]:
        return poly_divmod_monic(self, m)

    def __mod__(self, m: ModPoly) -> ModPoly:
        return poly_divmod_monic(self, m)[1]

    def __str__(self) -> str:
        return format_poly(self._coeffs)

    def __repr__(self) -> str:
        return f"ModPoly({str(self)!r}, {self.modulus})"

    # field-only helpers (prime modulus)
    def monic(self) -> ModPoly:
        return self * pow(self.leading, -1, self.modulus)

    def gcd(self, other: ModPoly) -> ModPoly:
        """Monic gcd; the modulus must be prime."""
        a, b = self, other
        while b:
            b = b.monic()
            a, b = b, poly_divmod_monic(a, b)[1]
        return a.monic() if a else a

    def powmod(self, e: int, m: ModPoly) -> ModPoly:
        result, base = self._new((1,)) % m, self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result


def poly_divmod_monic(a: ModPoly, m: ModPoly) -> tuple[ModPoly, ModPoly]:
    """Euclidean division a = q*m + r over Z/dZ by a monic divisor m."""
    if a.modulus != m.modulus:
        raise ModulusMismatch(f"moduli {a.modulus} and {m.modulus}")
    if not m.is_monic():
        raise NonMonicDivisor(f"divisor {m} is not monic mod {m.modulus}")
    d = a.modulus
    q, r = _divmod_monic(a.coeffs, m.coeffs, lambda c: c % d)
    return ModPoly(q, d), ModPoly(r, d)


def x_poly(cls=ZPoly, modulus: int | None = None):
    """The polynomial X in the given ring."""
    return ModPoly((0, 1), modulus) if cls is ModPoly else cls((0, 1))
