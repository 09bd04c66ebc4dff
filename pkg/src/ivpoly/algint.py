"""Algebraic integers given by their minimal polynomial, the rings
R_alpha = Z[X] + p_alpha*Q[X] and S_alpha = {f : f(alpha) integral},
quadratic fields with their rings of integers, the integralizer and the
conductor of a quadratic order."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product

from .arith.matrix import ZMat, charpoly, companion, mat_poly_eval
from .arith.numtheory import divisors, is_square, is_squarefree, primes_up_to, squarefree_decomposition
from .arith.poly import ModPoly, QPoly, ZPoly
from .config import DEGREE_CAP, ENUMERATION_CAP, check_cap
from .errors import IrreducibilityUnknown, NonMonic, NotInS, Reducible
from .membership import (
    MEMBER,
    IvpCandidate,
    MembershipVerdict,
    Witness,
    canonicalize,
    enumerate_monic_residue_polys,
    is_int_valued_on_Mnp,
)

KRONECKER_EFFORT = 200_000
_CERT_PRIMES = primes_up_to(200)


# -- irreducibility -----------------------------------------------------------


def _rational_root(p: ZPoly) -> int | None:
    if p[0] == 0:
        return 0
    for r in divisors(p[0]):
        for cand in (r, -r):
            if p(cand) == 0:
                return cand
    return None


def _factor_degrees_mod(p: ZPoly, q: int) -> list[int] | None:
    """Degrees of the irreducible factors of p mod q, or None if p mod q is
    not squarefree (distinct-degree factorization)."""
    f = p.reduce(q)
    if f.gcd(f.derivative()).degree > 0:
        return None
    x = ModPoly((0, 1), q)
    degrees, h, k = [], x, 0
    while f.degree > 0:
        k += 1
        if 2 * k > f.degree:
            degrees.append(f.degree)
            break
        h = h.powmod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            degrees += [k] * (g.degree // k)
            f = poly_quotient(f, g)
            h = h % f if f.degree > 0 else h
    return degrees


def poly_quotient(a: ModPoly, b: ModPoly) -> ModPoly:
    return a.divmod_monic(b.monic())[0]


def _subset_sums(degrees) -> set[int]:
    sums = {0}
    for e in degrees:
        sums |= {s + e for s in sums}
    return sums


def _quartic_split(p: ZPoly) -> ZPoly | None:
    """A monic quadratic factor of a monic quartic without rational roots."""
    p0, p1, p2, p3 = p.coeffs[:4]
    for b in divisors(p0):
        for b0 in (b, -b):
            e0 = p0 // b0
            disc = p3 * p3 - 4 * (p2 - b0 - e0)
            if not is_square(disc):
                continue
            r = math.isqrt(disc)
            if (p3 + r) % 2:
                continue
            for a in {(p3 + r) // 2, (p3 - r) // 2}:
                c = p3 - a
                if a * e0 + b0 * c == p1:
                    return ZPoly((b0, a, 1))
    return None


def _kronecker_factor(p: ZPoly, m: int, effort: int) -> ZPoly | None:
    """Monic degree-m factor via Kronecker's method: h(x_i) divides p(x_i)
    at m+1 points; raises IrreducibilityUnknown past ``effort`` trials."""
    points = sorted(range(-3 * m - 3, 3 * m + 4), key=lambda x: (len(divisors(p(x))), abs(x)))[: m + 1]
    values = [p(x) for x in points]
    choices = [[s * v for v in divisors(val) for s in (1, -1)] for val in values]
    total = math.prod(len(c) for c in choices)
    if total > effort:
        raise IrreducibilityUnknown(f"{p}: factor search of degree {m} needs {total} trials (> {effort})")
    weights = [Fraction(1, math.prod(xi - xj for xj in points if xj != xi)) for xi in points]
    for vals in product(*choices):
        if sum(w * v for w, v in zip(weights, vals)) != 1:
            continue
        h = _interpolate(points, vals)
        if h is not None and not p.divmod_monic(h)[1]:
            return h
    return None


def _interpolate(xs, ys) -> ZPoly | None:
    acc = QPoly(())
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = QPoly((yi,))
        for j, xj in enumerate(xs):
            if j != i:
                term = term * QPoly((Fraction(-xj, xi - xj), Fraction(1, xi - xj)))
        acc = acc + term
    return acc.to_zpoly() if acc.is_integral() else None


def certify_irreducible(p: ZPoly, *, effort: int = KRONECKER_EFFORT) -> None:
    """Return if p is irreducible over Q; raise Reducible with a factor,
    or IrreducibilityUnknown when the bounded search gives up."""
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"{p} is not monic of degree >= 1")
    n = p.degree
    if n == 1:
        return
    root = _rational_root(p)
    if root is not None:
        raise Reducible(p, ZPoly((-root, 1)))
    if n <= 3:
        return
    # factor-degree patterns modulo small primes bound the degrees of Z-factors
    possible = set(range(1, n // 2 + 1))
    for q in _CERT_PRIMES:
        degrees = _factor_degrees_mod(p, q)
        if degrees is not None:
            possible &= _subset_sums(degrees)
            if not possible:
                return
    if n == 4:
        factor = _quartic_split(p)
        if factor is None:
            return
        raise Reducible(p, factor)
    for m in sorted(possible):
        factor = _kronecker_factor(p, m, effort)
        if factor is not None:
            raise Reducible(p, factor)


# -- algebraic integers -------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicInteger:
    """A root of the monic irreducible ``minpoly``; only the polynomial is
    ever consulted, so conjugates are indistinguishable."""

    minpoly: ZPoly

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @cached_property
    def companion(self) -> ZMat:
        return companion(self.minpoly)

    def __str__(self) -> str:
        return f"root of {self.minpoly}"


@lru_cache(maxsize=256)
def mk_algebraic_integer(p: ZPoly) -> AlgebraicInteger:
    certify_irreducible(p)
    return AlgebraicInteger(p)


def in_R_alpha(f: IvpCandidate, alpha: AlgebraicInteger) -> MembershipVerdict:
    return is_int_valued_on_Mnp(f, alpha.minpoly)


def image_charpoly(f: IvpCandidate, alpha: AlgebraicInteger) -> QPoly:
    """Characteristic polynomial of f(C_alpha): prod (X - f(alpha_i)) over the conjugates."""
    return charpoly(mat_poly_eval(f.to_qpoly(), alpha.companion.to_qmat()))


def in_S_alpha(f: IvpCandidate, alpha: AlgebraicInteger) -> MembershipVerdict:
    """f(alpha) is an algebraic integer iff charpoly(f(C_alpha)) has integer coefficients."""
    if f.den == 1:
        return MEMBER
    chi = image_charpoly(f, alpha)
    return MEMBER if chi.is_integral() else MembershipVerdict(False, Witness("charpoly", chi))


def eval_at_alpha(f: IvpCandidate, alpha: AlgebraicInteger) -> tuple[Fraction, ...]:
    """Coordinates of f(alpha) in the basis 1, alpha, ..., alpha^(n-1)."""
    r = f.num.divmod_monic(alpha.minpoly)[1]
    return tuple(Fraction(r[i], f.den) for i in range(alpha.degree))


def compose(outer: ZPoly, f: IvpCandidate) -> IvpCandidate:
    """outer(f) as a canonical fraction."""
    return canonicalize(outer.to_qpoly().compose(f.to_qpoly()))


def integralizer(
    f: IvpCandidate, alpha: AlgebraicInteger, *, degree_cap: int = DEGREE_CAP
) -> ZPoly:
    """Monic phi in Z[X] with phi(f) in R_alpha, witnessing that f is integral over R_alpha.

    phi multiplies the [0, D^2)-lifts of every monic degree-n polynomial
    mod D^2, where D = d^(n-1).
    """
    verdict = in_S_alpha(f, alpha)
    if not verdict.member:
        raise NotInS(f"{f} does not map a root of {alpha.minpoly} to an algebraic integer")
    n = alpha.degree
    modulus = f.den ** (2 * (n - 1))
    if modulus == 1:
        return ZPoly((0,) * n + (1,))
    check_cap("integralizer degree", n * modulus**n, degree_cap)
    phi = ZPoly((1,))
    for q in enumerate_monic_residue_polys(n, modulus):
        phi = phi * q.lift()
    return phi


# -- quadratic fields -----------------------------------------------------------


@dataclass(frozen=True)
class QuadraticField:
    """Q(sqrt(D)) with integral basis {1, w}, w a root of ``omega_minpoly``."""

    D: int

    def __post_init__(self):
        if self.D in (0, 1) or not is_squarefree(self.D):
            raise ValueError(f"D = {self.D} must be a squarefree integer other than 0 and 1")

    @property
    def disc(self) -> int:
        return self.D if self.D % 4 == 1 else 4 * self.D

    @property
    def omega_minpoly(self) -> ZPoly:
        if self.D % 4 == 1:
            return ZPoly((-(self.D - 1) // 4, -1, 1))
        return ZPoly((-self.D, 0, 1))

    @property
    def omega_square(self) -> tuple[int, int]:
        """w^2 in coordinates (s, t): w^2 = s + t*w."""
        p = self.omega_minpoly
        return -p[0], -p[1]

    def mul(self, x, y) -> tuple:
        (a, b), (c, e) = x, y
        s, t = self.omega_square
        return a * c + b * e * s, a * e + b * c + b * e * t

    def eval_poly(self, coeffs, beta) -> tuple:
        """sum coeffs[i] * beta^i, by Horner."""
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = self.mul(acc, beta)
            acc = (acc[0] + c, acc[1])
        return acc

    def __str__(self) -> str:
        return f"Q(sqrt({self.D}))"


class OKResidueRing:
    """O_K / d O_K as pairs (a, b) mod d in the basis {1, w}."""

    def __init__(self, field: QuadraticField, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.field = field
        self.modulus = modulus

    def __len__(self) -> int:
        return self.modulus**2

    def __iter__(self):
        return iter(product(range(self.modulus), repeat=2))

    def mul(self, x, y) -> tuple[int, int]:
        a, b = self.field.mul(x, y)
        return a % self.modulus, b % self.modulus

    def eval_poly(self, g: ModPoly, beta) -> tuple[int, int]:
        acc = (0, 0)
        for c in reversed(g.coeffs):
            a, b = self.mul(acc, beta)
            acc = ((a + c) % self.modulus, b)
        return acc


def in_IntQ_OK(f: IvpCandidate, field: QuadraticField, *, cap: int = ENUMERATION_CAP) -> MembershipVerdict:
    """f(O_K) in O_K iff g vanishes on O_K / d O_K; witness is the first failing (a, b)."""
    if f.den == 1:
        return MEMBER
    check_cap("residues of O_K", f.den**2, cap)
    ring = OKResidueRing(field, f.den)
    gbar = f.residue()
    for beta in ring:
        if ring.eval_poly(gbar, beta) != (0, 0):
            return MembershipVerdict(False, Witness("ok_residue", beta))
    return MEMBER


def _require_quadratic(alpha: AlgebraicInteger) -> None:
    if alpha.degree != 2:
        raise ValueError(f"expected a quadratic algebraic integer, got degree {alpha.degree}")


def field_of(alpha: AlgebraicInteger) -> QuadraticField:
    _require_quadratic(alpha)
    p0, p1 = alpha.minpoly[0], alpha.minpoly[1]
    return QuadraticField(squarefree_decomposition(p1 * p1 - 4 * p0)[0])


def index_of_order(alpha: AlgebraicInteger) -> int:
    """[O_K : Z[alpha]], from disc(p_alpha) = c^2 * disc(K)."""
    p0, p1 = alpha.minpoly[0], alpha.minpoly[1]
    disc = p1 * p1 - 4 * p0
    c2, rem = divmod(disc, field_of(alpha).disc)
    assert rem == 0 and is_square(c2)
    return math.isqrt(c2)


def alpha_coordinates(alpha: AlgebraicInteger) -> tuple[int, int]:
    """(u, c) with alpha = u + c*w for the root (-p1 + sqrt(disc))/2."""
    field = field_of(alpha)
    c = index_of_order(alpha)
    p1 = alpha.minpoly[1]
    if field.D % 4 == 1:
        return (-p1 - c) // 2, c
    return -p1 // 2, c


def preimage_under_eval(beta, alpha: AlgebraicInteger) -> IvpCandidate:
    """f = g/c with deg g < 2 and f(alpha) = beta, beta = (a, b) meaning a + b*w."""
    a, b = beta
    u, c = alpha_coordinates(alpha)
    # w = (alpha - u)/c
    return canonicalize(ZPoly((a * c - b * u, b)), c)


def to_field_coordinates(coords, alpha: AlgebraicInteger) -> tuple[Fraction, Fraction]:
    """Convert e0 + e1*alpha into the basis {1, w}."""
    e0, e1 = coords
    u, c = alpha_coordinates(alpha)
    return Fraction(e0 + e1 * u), Fraction(e1 * c)


def in_conductor(f: IvpCandidate, alpha: AlgebraicInteger) -> MembershipVerdict:
    """f(alpha) lies in Z[alpha] and in c*O_K, c the index of Z[alpha]."""
    _require_quadratic(alpha)
    verdict = in_R_alpha(f, alpha)
    if not verdict.member:
        return verdict
    c = index_of_order(alpha)
    x, y = to_field_coordinates(eval_at_alpha(f, alpha), alpha)
    if x % c or y % c:
        return MembershipVerdict(False, Witness("field_element", (int(x), int(y))))
    return MEMBER


def quadratic_trace_norm(coords, alpha: AlgebraicInteger) -> tuple[Fraction, Fraction]:
    """Trace and norm of u + v*alpha for alpha a root of X^2 + p1*X + p0."""
    u, v = coords
    p0, p1 = alpha.minpoly[0], alpha.minpoly[1]
    return 2 * u - v * p1, u * u - p1 * u * v + p0 * v * v


__all__ = [
    "AlgebraicInteger",
    "QuadraticField",
    "OKResidueRing",
    "certify_irreducible",
    "mk_algebraic_integer",
    "in_R_alpha",
    "in_S_alpha",
    "image_charpoly",
    "eval_at_alpha",
    "compose",
    "integralizer",
    "in_IntQ_OK",
    "field_of",
    "index_of_order",
    "alpha_coordinates",
    "preimage_under_eval",
    "to_field_coordinates",
    "in_conductor",
    "quadratic_trace_norm",
]
