"""Square matrices over Z, Q and Z/dZ, characteristic polynomials and
polynomial evaluation at a matrix."""
from __future__ import annotations

import operator
from fractions import Fraction

from ..errors import ModulusMismatch, NonMonic
from .poly import ModPoly, QPoly, ZPoly


def _matmul(a, b, norm):
    cols = list(zip(*b))
    return tuple(tuple(norm(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a)


class _SquareMatrix:
    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(self._coerce(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square with dimension >= 1")
        self._rows = rows

    def _coerce(self, x):
        raise NotImplementedError

    def _norm(self, x):
        return x

    def _new(self, rows):
        return type(self)(rows)

    def _ring_key(self):
        return None

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def flatten(self) -> tuple:
        """Entries in row-major order."""
        return tuple(x for r in self._rows for x in r)

    def identity(self):
        n = self.n
        return self._new([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def zero(self):
        return self._new([[0] * self.n for _ in range(self.n)])

    def is_zero(self) -> bool:
        return not any(self.flatten())

    def _check(self, other):
        if type(other) is not type(self):
            return False
        if other._ring_key() != self._ring_key():
            raise ModulusMismatch(f"moduli {self._ring_key()} and {other._ring_key()}")
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return self._new([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self._new([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self):
        return self._new([[-a for a in r] for r in self._rows])

    def __mul__(self, other):
        if isinstance(other, _SquareMatrix):
            if not self._check(other):
                return NotImplemented
            return self._new(_matmul(self._rows, other._rows, self._norm))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._new([[a * other for a in r] for r in self._rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        e = operator.index(e)
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.identity(), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, _SquareMatrix):
            return NotImplemented
        return type(other) is type(self) and other._ring_key() == self._ring_key() and other._rows == self._rows

    def __hash__(self):
        return hash((type(self).__name__, self._ring_key(), self._rows))

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self._rows) + "]"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class ZMat(_SquareMatrix):
    __slots__ = ()

    def _coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral entry {x}")
            return x.numerator
        return operator.index(x)

    def reduce(self, modulus: int) -> ModMat:
        return ModMat(self._rows, modulus)

    def to_qmat(self) -> QMat:
        return QMat(self._rows)


class QMat(_SquareMatrix):
    __slots__ = ()

    def _coerce(self, x):
        return x if type(x) is Fraction else Fraction(x)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.flatten())

    def to_zmat(self) -> ZMat:
        return ZMat(self._rows)


class ModMat(_SquareMatrix):
    __slots__ = ("modulus",)

    def __init__(self, rows, modulus: int):
        modulus = operator.index(modulus)
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        super().__init__(rows)

    def _coerce(self, x):
        return operator.index(x) % self.modulus

    def _norm(self, x):
        return x % self.modulus

    def _new(self, rows):
        return ModMat(rows, self.modulus)

    def _ring_key(self):
        return self.modulus

    def __reduce__(self):
        return (ModMat, (self._rows, self.modulus))

    def lift(self) -> ZMat:
        return ZMat(self._rows)

    def __repr__(self) -> str:
        return f"ModMat({str(self)!r}, {self.modulus})"


def _berkowitz(a, norm):
    """Coefficients of det(x*I - a), highest degree first, without division."""
    n = len(a)
    if n == 0:
        return [1]
    head = a[0][0]
    row = a[0][1:]
    col = [a[i][0] for i in range(1, n)]
    sub = [r[1:] for r in a[1:]]
    # first column of the lower-triangular Toeplitz factor
    t = [1, norm(-head)]
    v = col
    for _ in range(n - 1):
        t.append(norm(-sum(x * y for x, y in zip(row, v))))
        v = [norm(sum(x * y for x, y in zip(r, v))) for r in sub]
    inner = _berkowitz(sub, norm)
    return [norm(sum(t[i - j] * inner[j] for j in range(min(i, n - 1) + 1))) for i in range(n + 1)]


def charpoly(m):
    """det(X*I - M) over the entry ring of M (ZPoly, QPoly or ModPoly)."""
    norm = m._norm
    high_first = _berkowitz([list(r) for r in m.rows], norm)
    coeffs = high_first[::-1]
    if isinstance(m, ModMat):
        return ModPoly(coeffs, m.modulus)
    if isinstance(m, QMat):
        return QPoly(coeffs)
    return ZPoly(coeffs)


def charpoly_by_lift(m: ModMat) -> ModPoly:
    """Characteristic polynomial of the integer lift, reduced mod d."""
    return charpoly(m.lift()).reduce(m.modulus)


def companion(p: ZPoly) -> ZMat:
    """Companion matrix: ones on the subdiagonal, last column -p_0, ..., -p_{n-1}."""
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"companion matrix needs a monic polynomial of degree >= 1, got {p}")
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return ZMat(rows)


def horner_rows(coeffs, rows, norm):
    """Evaluate sum coeffs[i] * A^i on raw row tuples."""
    n = len(rows)
    acc = None
    for c in reversed(coeffs):
        if acc is None:
            acc = tuple(tuple(norm(c) if i == j else 0 for j in range(n)) for i in range(n))
            continue
        acc = _matmul(acc, rows, norm)
        if c:
            acc = tuple(
                tuple(norm(x + c) if i == j else x for j, x in enumerate(r)) for i, r in enumerate(acc)
            )
    if acc is None:
        return tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return acc


def mat_poly_eval(g, m):
    """g(M) with the constant term contributing g_0 * I.

    An integer polynomial may be evaluated on any matrix kind; a rational
    polynomial on ZMat/QMat (result QMat); a residue polynomial on ModMat
    with the same modulus or on ZMat (reduced first).
    """
    if isinstance(g, ModPoly):
        if isinstance(m, ZMat):
            m = m.reduce(g.modulus)
        if not isinstance(m, ModMat):
            raise TypeError("residue polynomial needs an integer or residue matrix")
        if m.modulus != g.modulus:
            raise ModulusMismatch(f"moduli {g.modulus} and {m.modulus}")
    elif isinstance(g, QPoly):
        if isinstance(m, ZMat):
            m = m.to_qmat()
        if not isinstance(m, QMat):
            raise TypeError("rational polynomial needs an integer or rational matrix")
    elif not isinstance(g, ZPoly):
        raise TypeError(f"not a polynomial: {g!r}")
    return m._new(horner_rows(g.coeffs, m.rows, m._norm))


def format_matrix(rows) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in rows) + "]"


__all__ = [
    "ZMat",
    "QMat",
    "ModMat",
    "charpoly",
    "charpoly_by_lift",
    "companion",
    "mat_poly_eval",
    "horner_rows",
    "format_matrix",
]
