"""Brute force over M_n(Z/dZ): exhaustive oracles, matrices with a given
characteristic polynomial, null ideals truncated at a degree bound, and
coordinates of f(C_p) in the basis of powers of C_p."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product

from ._parallel import first_failure
from .arith.linalg import kernel_mod_d, solve_rational, span_mod_d
from .arith.matrix import ModMat, _berkowitz, companion, horner_rows, mat_poly_eval
from .arith.poly import ModPoly, ZPoly
from .config import MATRIX_ENUMERATION_CAP, check_cap
from .errors import NonMonic, NotInSubalgebra
from .membership import MEMBER, IvpCandidate, MembershipVerdict, Witness

__all__ = [
    "companion",
    "MatrixClassStream",
    "enumerate_with_charpoly",
    "oracle_int_MnZ",
    "NullIdealSpan",
    "null_ideal_span",
    "multiples_span",
    "intersect_null_ideals",
    "annihilates_class",
    "annihilates_companion",
    "image_in_subalgebra",
]


class MatrixClassStream:
    """All n x n matrices over Z/dZ in row-major lexicographic order,
    optionally only those whose characteristic polynomial is ``charpoly``."""

    def __init__(self, n: int, modulus: int, charpoly: ModPoly | None = None, *, cap: int = MATRIX_ENUMERATION_CAP):
        if n < 1 or modulus < 2:
            raise ValueError("need n >= 1 and modulus >= 2")
        if charpoly is not None and (charpoly.modulus != modulus or charpoly.degree != n or not charpoly.is_monic()):
            raise ValueError(f"target must be monic of degree {n} mod {modulus}")
        check_cap("matrices", modulus ** (n * n), cap)
        self.n = n
        self.modulus = modulus
        self.charpoly = charpoly

    @property
    def unfiltered_count(self) -> int:
        return self.modulus ** (self.n * self.n)

    def rows(self):
        """Raw row tuples, skipping object construction."""
        n, d = self.n, self.modulus
        target = None if self.charpoly is None else list(self.charpoly.coeffs[::-1])
        norm = lambda x: x % d  # noqa: E731
        for flat in product(range(d), repeat=n * n):
            rows = tuple(flat[i * n : (i + 1) * n] for i in range(n))
            if target is None or _berkowitz(rows, norm) == target:
                yield rows

    def __iter__(self):
        for rows in self.rows():
            yield ModMat(rows, self.modulus)


def enumerate_with_charpoly(p: ZPoly, d: int, *, cap: int = MATRIX_ENUMERATION_CAP) -> MatrixClassStream:
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"{p} is not monic of degree >= 1")
    return MatrixClassStream(p.degree, d, p.reduce(d), cap=cap)


def _annihilates(gbar_coeffs, d, rows) -> bool:
    return not any(any(r) for r in horner_rows(gbar_coeffs, rows, lambda x: x % d))


def oracle_int_MnZ(
    f: IvpCandidate, n: int, *, cap: int = MATRIX_ENUMERATION_CAP, jobs: int = 1
) -> MembershipVerdict:
    """Decide f in Int(M_n(Z)) by evaluating g mod d on every matrix mod d."""
    if f.den == 1:
        return MEMBER
    d = f.den
    stream = MatrixClassStream(n, d, cap=cap)
    hit = first_failure(partial(_annihilates, f.residue().coeffs, d), stream.rows(), jobs)
    if hit is None:
        return MEMBER
    return MembershipVerdict(False, Witness("residue_matrix", ModMat(hit[1], d)))


def annihilates_class(gbar: ModPoly, p: ZPoly) -> bool:
    """g(M) = 0 for every M mod d with characteristic polynomial p mod d."""
    d = gbar.modulus
    return all(_annihilates(gbar.coeffs, d, rows) for rows in enumerate_with_charpoly(p, d).rows())


def annihilates_companion(gbar: ModPoly, p: ZPoly) -> bool:
    d = gbar.modulus
    return _annihilates(gbar.coeffs, d, companion(p).reduce(d).rows)


# Coefficient vectors of degree <= B are stored highest degree first, so the
# echelon pivot of a generator is its leading coefficient.
def _to_vector(q: ModPoly, bound: int) -> tuple[int, ...]:
    return tuple(q[bound - j] for j in range(bound + 1))


def _from_vector(v, modulus: int) -> ModPoly:
    return ModPoly(tuple(v)[::-1], modulus)


@dataclass(frozen=True)
class NullIdealSpan:
    """Canonical generators of a Z/dZ-submodule of polynomials of degree <= B."""

    modulus: int
    degree_bound: int
    generators: tuple[ModPoly, ...]

    @classmethod
    def from_vectors(cls, vectors, modulus: int, bound: int) -> NullIdealSpan:
        canon = span_mod_d(vectors, bound + 1, modulus)
        return cls(modulus, bound, tuple(_from_vector(v, modulus) for v in canon))

    def vectors(self) -> list[tuple[int, ...]]:
        return [_to_vector(g, self.degree_bound) for g in self.generators]

    def __contains__(self, q: ModPoly) -> bool:
        if q.modulus != self.modulus or q.degree > self.degree_bound:
            return False
        base = self.vectors()
        return span_mod_d(base + [_to_vector(q, self.degree_bound)], self.degree_bound + 1, self.modulus) == base

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "degree_bound": self.degree_bound,
            "generators": [str(g) for g in self.generators],
        }


def _power_columns(rows, d: int, bound: int) -> list[list[int]]:
    """Relation matrix whose column j is M^(B-j) flattened."""
    n = len(rows)
    powers = [tuple(tuple(int(i == j) for j in range(n)) for i in range(n))]
    for _ in range(bound):
        powers.append(_mul(powers[-1], rows, d))
    cols = [[x for r in powers[bound - j] for x in r] for j in range(bound + 1)]
    return [list(r) for r in zip(*cols)]


def _mul(a, b, d):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) % d for c in bt) for r in a)


def null_ideal_span(m: ModMat, bound: int) -> NullIdealSpan:
    """Polynomials of degree <= bound over Z/dZ annihilating m."""
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    d = m.modulus
    rel = _power_columns(m.rows, d, bound)
    gens = kernel_mod_d(rel, len(rel), bound + 1, d)
    return NullIdealSpan(d, bound, tuple(_from_vector(v, d) for v in gens))


def multiples_span(pbar: ModPoly, bound: int) -> NullIdealSpan:
    """Canonical span of pbar, X*pbar, ..., X^(B-n)*pbar."""
    n = pbar.degree
    vecs = [_to_vector(ModPoly((0,) * k + pbar.coeffs, pbar.modulus), bound) for k in range(bound - n + 1)]
    return NullIdealSpan.from_vectors(vecs, pbar.modulus, bound)


def intersect_null_ideals(
    p: ZPoly, d: int, bound: int | None = None, *, cap: int = MATRIX_ENUMERATION_CAP
) -> NullIdealSpan:
    """Degree-<=B polynomials annihilating every matrix mod d with
    characteristic polynomial p mod d (B defaults to 3n).

    The intersection of the kernels is the kernel of the stacked relation
    matrices; duplicate rows are dropped.
    """
    if bound is None:
        bound = 3 * p.degree
    stacked: dict[tuple[int, ...], None] = {}
    for rows in enumerate_with_charpoly(p, d, cap=cap).rows():
        for r in _power_columns(rows, d, bound):
            stacked.setdefault(tuple(r), None)
    rel = [list(r) for r in stacked]
    if not rel:
        rel = [[0] * (bound + 1)]
    gens = kernel_mod_d(rel, len(rel), bound + 1, d)
    return NullIdealSpan(d, bound, tuple(_from_vector(v, d) for v in gens))


def image_in_subalgebra(f: IvpCandidate, p: ZPoly) -> tuple[int, ...]:
    """Integers c_i with f(C_p) = sum c_i C_p^i, or NotInSubalgebra.

    The system is solved over Q in the basis C_p^0..C_p^(n-1); the
    coordinates are integral exactly when f lies in Z[X] + p*Q[X].
    """
    c = companion(p)
    n = c.n
    target = mat_poly_eval(f.to_qpoly(), c).flatten()
    basis = [c.identity()]
    for _ in range(1, n):
        basis.append(basis[-1] * c)
    system = [[b.flatten()[k] for b in basis] for k in range(n * n)]
    coords = solve_rational(system, target)
    if coords is None:  # unreachable: f(C_p) always lies in Q[C_p]
        raise ArithmeticError("f(C_p) outside Q[C_p]")
    if any(x.denominator != 1 for x in coords):
        raise NotInSubalgebra(coords)
    return tuple(int(x) for x in coords)


def subalgebra_element(coords, p: ZPoly):
    """sum c_i C_p^i as an exact matrix."""
    c = companion(p)
    acc = c.zero().to_qmat()
    power = c.identity()
    for x in coords:
        acc = acc + power.to_qmat() * Fraction(x)
        power = power * c
    return acc
