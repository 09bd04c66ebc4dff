"""Canonical fractions g/d and membership criteria for Int(Z), Int(M_n(Z)),
the pullbacks Int(M_n^p(Z)) = Z[X] + p*Q[X], and Int(Z[C_p]).

Every test reduces to arithmetic in (Z/dZ)[X]: f = g/d maps an integer
matrix M to an integer matrix iff g mod d annihilates M mod d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product

from ._parallel import first_failure
from .arith.matrix import ModMat, companion, format_matrix, horner_rows
from .arith.poly import ModPoly, QPoly, ZPoly, format_poly, poly_divmod_monic
from .config import DEGREE_CAP, ENUMERATION_CAP, check_cap
from .errors import NonMonic


@dataclass(frozen=True)
class IvpCandidate:
    """f = num/den with gcd(content(num), den) = 1 and den >= 1."""

    num: ZPoly
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive")
        if math.gcd(self.num.content(), self.den) != 1:
            raise ValueError(f"({self.num})/{self.den} is not in lowest terms")

    @property
    def degree(self):
        return self.num.degree

    def to_qpoly(self) -> QPoly:
        return QPoly(Fraction(c, self.den) for c in self.num.coeffs)

    def residue(self) -> ModPoly:
        """g mod d (only meaningful for den >= 2)."""
        return self.num.reduce(self.den)

    def __call__(self, x):
        return Fraction(self.num(x), self.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


def canonicalize(poly, den: int = 1) -> IvpCandidate:
    """Normal form g/d of poly/den with gcd(content(g), d) = 1; idempotent."""
    if isinstance(poly, IvpCandidate):
        poly, den = poly.num, poly.den * den
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if isinstance(poly, QPoly):
        lcm = poly.denominator()
        g = ZPoly(c * lcm for c in poly.coeffs)
        den *= lcm
    elif isinstance(poly, ZPoly):
        g = poly
    else:
        raise TypeError(f"expected ZPoly or QPoly, got {type(poly).__name__}")
    if den < 0:
        g, den = -g, -den
    common = math.gcd(g.content(), den)
    if common > 1:
        g = ZPoly(c // common for c in g.coeffs)
        den //= common
    return IvpCandidate(g, den)


@dataclass(frozen=True)
class Witness:
    """Object exhibiting a failure: kind is one of residue, monic_residue_poly,
    residue_poly, residue_matrix, ok_residue, charpoly, field_element."""

    kind: str
    value: object

    def render(self) -> str:
        v = self.value
        if self.kind == "residue_matrix":
            return format_matrix(v.rows)
        if self.kind in ("ok_residue", "field_element"):
            return format_poly(v, var="w")
        return str(v)

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.render()}


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.member == (self.witness is not None):
            raise ValueError("a witness is present exactly for non-members")

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> dict:
        return {"member": self.member, "witness": self.witness.to_json() if self.witness else None}


MEMBER = MembershipVerdict(True)


def _fail(kind: str, value) -> MembershipVerdict:
    return MembershipVerdict(False, Witness(kind, value))


def is_int_valued_on_Z(f: IvpCandidate) -> MembershipVerdict:
    """f(Z) in Z iff g(a) = 0 mod d for every residue a; witness is the smallest failing a."""
    if f.den == 1:
        return MEMBER
    gbar = f.residue()
    for a in range(f.den):
        if gbar(a):
            return _fail("residue", a)
    return MEMBER


def enumerate_monic_residue_polys(n: int, d: int):
    """Every monic degree-n polynomial over Z/dZ once, lexicographic in
    (c_{n-1}, ..., c_0)."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    for tail in product(range(d), repeat=n):
        yield ModPoly(tail[::-1] + (1,), d)


def enumerate_residue_polys(n: int, d: int):
    """Every polynomial of degree < n over Z/dZ once, lexicographic in (c_{n-1}, ..., c_0)."""
    for coeffs in product(range(d), repeat=n):
        yield ModPoly(coeffs[::-1], d)


def _divisible_by(gbar: ModPoly, q: ModPoly) -> bool:
    return not poly_divmod_monic(gbar, q)[1]


def is_int_valued_on_MnZ(
    f: IvpCandidate, n: int, *, cap: int = ENUMERATION_CAP, jobs: int = 1
) -> MembershipVerdict:
    """f in Int(M_n(Z)) iff g mod d is divisible by every monic residue
    polynomial of degree n; witness is the first failing one."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if f.den == 1:
        return MEMBER
    check_cap("monic residue polynomials", f.den**n, cap)
    hit = first_failure(partial(_divisible_by, f.residue()), enumerate_monic_residue_polys(n, f.den), jobs)
    return MEMBER if hit is None else _fail("monic_residue_poly", hit[1])


def _require_monic(p: ZPoly) -> None:
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"{p} is not monic of degree >= 1")


def is_int_valued_on_Mnp(f: IvpCandidate, p: ZPoly) -> MembershipVerdict:
    """f in Int(M_n^p(Z)) = Z[X] + p*Q[X] iff p mod d divides g mod d.

    The witness is p mod d itself (the division leaves a nonzero remainder).
    """
    _require_monic(p)
    if f.den == 1:
        return MEMBER
    pbar = p.reduce(f.den)
    return MEMBER if _divisible_by(f.residue(), pbar) else _fail("monic_residue_poly", pbar)


def generate_int_MnZ(n: int, d: int, *, degree_cap: int = DEGREE_CAP) -> IvpCandidate:
    """Product of the [0, d)-lifts of all monic degree-n residue polynomials, over d."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    check_cap("generated degree", n * d**n, degree_cap)
    g = ZPoly((1,))
    for q in enumerate_monic_residue_polys(n, d):
        g = g * q.lift()
    return canonicalize(g, d)


def _kills_element(gbar_coeffs, c_rows, d, h: ModPoly) -> bool:
    norm = lambda x: x % d  # noqa: E731
    hc = horner_rows(h.coeffs, c_rows, norm)
    return not any(any(r) for r in horner_rows(gbar_coeffs, hc, norm))


def is_int_valued_on_subalgebra(
    f: IvpCandidate, p: ZPoly, *, cap: int = ENUMERATION_CAP, jobs: int = 1
) -> MembershipVerdict:
    """f in Int(Z[C_p]) iff g(h(C_p)) = 0 mod d for all d^n residue
    polynomials h of degree < n; witness is the first failing h."""
    _require_monic(p)
    if f.den == 1:
        return MEMBER
    d, n = f.den, p.degree
    check_cap("subalgebra residues", d**n, cap)
    c_rows = companion(p).reduce(d).rows
    pred = partial(_kills_element, f.residue().coeffs, c_rows, d)
    hit = first_failure(pred, enumerate_residue_polys(n, d), jobs)
    return MEMBER if hit is None else _fail("residue_poly", hit[1])


def residue_matrix_witness(rows, d: int) -> Witness:
    return Witness("residue_matrix", ModMat(rows, d))
