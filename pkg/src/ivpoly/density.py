"""Finite experiments around polynomial density: degree-n representatives
of every residue class of Z[theta]/dZ[theta], the sandwich
Int(M_2(Z)) -> Int_Q(O_K), and a falsification search for polynomials
integral on all sampled quadratic integers but not integer-valued."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .algint import AlgebraicInteger, QuadraticField, in_IntQ_OK, in_S_alpha
from .arith.linalg import rank_rational
from .arith.numtheory import is_square, is_squarefree, prime_divisors
from .arith.poly import ZPoly
from .config import ENUMERATION_CAP, check_cap
from .errors import NonMonic
from .membership import (
    IvpCandidate,
    MembershipVerdict,
    canonicalize,
    generate_int_MnZ,
    is_int_valued_on_MnZ,
    is_int_valued_on_Z,
)


def degree_of_element(g: ZPoly, p: ZPoly) -> int:
    """Degree of g(theta) over Q in Z[X]/(p): rank of 1, g, ..., g^(n-1) mod p."""
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"{p} is not monic of degree >= 1")
    n = p.degree
    g = g.divmod_monic(p)[1]
    rows, power = [], ZPoly((1,))
    for _ in range(n):
        rows.append([power[i] for i in range(n)])
        power = (power * g).divmod_monic(p)[1]
    return rank_rational(rows)


def is_monogenic_generator(coords) -> bool:
    """a + b*theta generates Z[theta] (quadratic case) iff b = +-1."""
    return abs(coords[1]) == 1


@dataclass(frozen=True)
class ClassResult:
    residue: tuple[int, ...]
    representative: tuple[int, ...] | None
    k: int | None
    skipped_generator: bool = False


@dataclass(frozen=True)
class CoverageReport:
    order: ZPoly
    modulus: int
    exclude_generators: bool
    k_bound: int
    classes: tuple[ClassResult, ...]

    @property
    def not_found(self) -> int:
        return sum(c.representative is None for c in self.classes)

    def validate(self) -> bool:
        """Re-check every representative: class, degree and exclusion."""
        n, d = self.order.degree, self.modulus
        for c in self.classes:
            if c.representative is None:
                continue
            rep = c.representative
            if tuple(x % d for x in rep) != c.residue:
                return False
            if degree_of_element(ZPoly(rep), self.order) != n:
                return False
            if self.exclude_generators and is_monogenic_generator(rep):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "modulus": self.modulus,
            "exclude_generators": self.exclude_generators,
            "k_bound": self.k_bound,
            "not_found": self.not_found,
            "classes": [
                {
                    "class": list(c.residue),
                    "representative": None if c.representative is None else str(ZPoly(c.representative)),
                    "k": c.k,
                }
                for c in self.classes
            ],
        }


def _coords_mod(g: ZPoly, p: ZPoly) -> tuple[int, ...]:
    r = g.divmod_monic(p)[1]
    return tuple(r[i] for i in range(p.degree))


def coverage_by_degree_n(
    p: ZPoly,
    d: int,
    k_bound: int | None = None,
    *,
    exclude_generators: bool = False,
    cap: int = ENUMERATION_CAP,
) -> CoverageReport:
    """For each class mod dO, search gamma = alpha0 + k*d*theta, k = 0..k_bound,
    for an element of full degree n (k_bound defaults to n^2)."""
    if not p.is_monic() or p.degree < 1:
        raise NonMonic(f"{p} is not monic of degree >= 1")
    if d < 2:
        raise ValueError("modulus must be >= 2")
    n = p.degree
    if exclude_generators and n != 2:
        raise ValueError("generator exclusion is implemented for quadratic orders only")
    if k_bound is None:
        k_bound = n * n
    check_cap("residue classes", d**n, cap)
    step = _coords_mod(ZPoly((0, d)), p)
    results = []
    for residue in product(range(d), repeat=n):
        found, skipped = None, False
        for k in range(k_bound + 1):
            gamma = tuple(a + k * s for a, s in zip(residue, step))
            if degree_of_element(ZPoly(gamma), p) != n:
                continue
            if exclude_generators and is_monogenic_generator(gamma):
                skipped = True
                continue
            found = (gamma, k)
            break
        if found is None:
            results.append(ClassResult(residue, None, None, skipped))
        else:
            results.append(ClassResult(residue, found[0], found[1], skipped))
    return CoverageReport(p, d, exclude_generators, k_bound, tuple(results))


def coverage_excluding_generators(p: ZPoly, d: int, k_bound: int | None = None, **kw) -> CoverageReport:
    return coverage_by_degree_n(p, d, k_bound, exclude_generators=True, **kw)


# -- sandwich -----------------------------------------------------------------------


def squarefree_family(bound: int = 20) -> list[int]:
    """Squarefree D with |D| <= bound, D not in {0, 1}, in increasing order."""
    return [D for D in range(-bound, bound + 1) if D not in (0, 1) and is_squarefree(D)]


@dataclass(frozen=True)
class SandwichReport:
    candidate: IvpCandidate
    lower: MembershipVerdict
    upper: tuple[tuple[int, MembershipVerdict], ...]

    @property
    def consistent(self) -> bool:
        return not self.lower.member or all(v.member for _, v in self.upper)

    def to_json(self) -> dict:
        return {
            "candidate": str(self.candidate),
            "lower": self.lower.to_json(),
            "upper": [{"D": D, "member": v.member} for D, v in self.upper],
            "consistent": self.consistent,
        }


def sandwich_check(f: IvpCandidate, n: int = 2, family=None, *, cap: int = ENUMERATION_CAP) -> SandwichReport:
    """Membership in Int(M_n(Z)) against membership in Int_Q(O_K) for each K = Q(sqrt(D))."""
    if n != 2:
        raise ValueError("the Int_Q(O_K) side is available for quadratic fields only (n = 2)")
    family = squarefree_family() if family is None else list(family)
    if not family:
        raise ValueError("empty field family")
    lower = is_int_valued_on_MnZ(f, n, cap=cap)
    upper = tuple((D, in_IntQ_OK(f, QuadraticField(D), cap=cap)) for D in family)
    return SandwichReport(f, lower, upper)


def random_int_MnZ_member(n: int, d: int, rng: random.Random, *, max_degree: int = 3, box: int = 5) -> IvpCandidate:
    """(G*r + d*s)/d with G/d the generated member and r, s random integer polynomials."""
    g = generate_int_MnZ(n, d).num
    r = ZPoly(rng.randint(-box, box) for _ in range(max_degree + 1))
    s = ZPoly(rng.randint(-box, box) for _ in range(max_degree + 1))
    return canonicalize(g * r + s * d, d)


# -- falsifier ----------------------------------------------------------------------


def irreducible_quadratics(bound: int) -> list[AlgebraicInteger]:
    """Roots of X^2 + b*X + c with |b|, |c| <= bound and non-square discriminant."""
    out = []
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            if not is_square(b * b - 4 * c):
                out.append(AlgebraicInteger(ZPoly((c, b, 1))))
    return out


def _residue_candidates(d: int, max_degree: int, coeff_bound: int):
    """Residues mod d of numerators in the coefficient box whose content is prime to d.

    Every verdict below depends on g only through g mod d, so one
    representative per residue suffices.
    """
    values = sorted({c % d for c in range(-coeff_bound, coeff_bound + 1)})
    primes = prime_divisors(d)
    for coeffs in product(values, repeat=max_degree + 1):
        g = ZPoly(coeffs[::-1])
        if all(g.reduce(q) for q in primes):
            yield canonicalize(g, d)


@dataclass(frozen=True)
class FalsifierReport:
    denominators: tuple[int, ...]
    max_degree: int
    coeff_bound: int
    alpha_bound: int
    alpha_sample: int
    examined: int
    survivors: tuple[IvpCandidate, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "space": {
                "denominators": list(self.denominators),
                "max_degree": self.max_degree,
                "coeff_bound": self.coeff_bound,
                "alpha_bound": self.alpha_bound,
            },
            "alpha_sample": self.alpha_sample,
            "examined": self.examined,
            "survivors": [str(f) for f in self.survivors],
        }


def theorem2_falsifier(
    denominators=(2, 3), max_degree: int = 8, coeff_bound: int = 6, alpha_bound: int = 10
) -> FalsifierReport:
    """Search for f integral at every sampled quadratic integer yet not in Int(Z)."""
    alphas = irreducible_quadratics(alpha_bound)
    survivors, examined = [], 0
    for d in denominators:
        if d < 2:
            continue
        for f in _residue_candidates(d, max_degree, coeff_bound):
            examined += 1
            if is_int_valued_on_Z(f).member:
                continue
            if all(in_S_alpha(f, a).member for a in alphas):
                survivors.append(f)
    return FalsifierReport(tuple(denominators), max_degree, coeff_bound, alpha_bound, len(alphas), examined, tuple(survivors))


__all__ = [
    "degree_of_element",
    "is_monogenic_generator",
    "ClassResult",
    "CoverageReport",
    "coverage_by_degree_n",
    "coverage_excluding_generators",
    "squarefree_family",
    "SandwichReport",
    "sandwich_check",
    "random_int_MnZ_member",
    "irreducible_quadratics",
    "FalsifierReport",
    "theorem2_falsifier",
]
