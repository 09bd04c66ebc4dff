from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ivpoly.arith import ModPoly, QPoly, ZMat, ZPoly, companion, mat_poly_eval, parse_poly
from ivpoly.errors import NonMonic, ResourceLimit
from ivpoly.matrixlab import oracle_int_MnZ
from ivpoly.membership import (
    IvpCandidate,
    MembershipVerdict,
    Witness,
    canonicalize,
    enumerate_monic_residue_polys,
    enumerate_residue_polys,
    generate_int_MnZ,
    is_int_valued_on_Mnp,
    is_int_valued_on_MnZ,
    is_int_valued_on_subalgebra,
    is_int_valued_on_Z,
)

from .conftest import candidates, monic_zpolys, zpolys


def cand(text: str) -> IvpCandidate:
    return canonicalize(parse_poly(text))


def integral_on_matrix(f: IvpCandidate, rows) -> bool:
    """Independent check: f(M) over Q has integer entries."""
    return mat_poly_eval(f.to_qpoly(), ZMat(rows)).is_integral()


# -- canonical form ----------------------------------------------------------------


def test_canonicalize_examples():
    assert canonicalize(ZPoly([0, 2]), 4) == IvpCandidate(ZPoly([0, 1]), 2)
    assert canonicalize(ZPoly([0, -1, 1]), 2) == IvpCandidate(ZPoly([0, -1, 1]), 2)
    assert canonicalize(ZPoly([3, 3]), 3) == IvpCandidate(ZPoly([1, 1]), 1)
    assert canonicalize(QPoly([Fraction(1, 2), Fraction(1, 3)])) == IvpCandidate(ZPoly([3, 2]), 6)
    assert canonicalize(ZPoly([0]), 7) == IvpCandidate(ZPoly([]), 1)
    assert canonicalize(ZPoly([2]), -4) == IvpCandidate(ZPoly([-1]), 2)


def test_candidate_rejects_non_canonical():
    with pytest.raises(ValueError):
        IvpCandidate(ZPoly([0, 2]), 4)
    with pytest.raises(ValueError):
        IvpCandidate(ZPoly([1]), 0)
    with pytest.raises(ValueError):
        IvpCandidate(ZPoly([]), 3)


@given(zpolys(8, 30), st.integers(-12, 12).filter(bool))
def test_canonicalize_is_exact_and_idempotent(g, d):
    f = canonicalize(g, d)
    assert f.to_qpoly() == g.to_qpoly() * Fraction(1, d)
    assert canonicalize(f.num, f.den) == f
    assert canonicalize(f.to_qpoly()) == f
    assert str(f.to_qpoly()) and parse_poly(str(f)) == f.to_qpoly()


# -- Int(Z) ---------------------------------------------------------------------------


def test_int_Z_examples():
    assert is_int_valued_on_Z(cand("x*(x-1)/2")).member
    v = is_int_valued_on_Z(cand("x/2"))
    assert not v.member and v.witness == Witness("residue", 1)
    assert is_int_valued_on_Z(cand("7*x^5 - 3")).member


@given(candidates())
def test_int_Z_matches_evaluation(f):
    v = is_int_valued_on_Z(f)
    values = [f(a) for a in range(-2 * f.den, 2 * f.den)]
    assert v.member == all(x.denominator == 1 for x in values)
    if not v.member:
        a = v.witness.value
        assert f(a).denominator != 1
        assert all(f(b).denominator == 1 for b in range(a))


def test_verdict_invariant():
    with pytest.raises(ValueError):
        MembershipVerdict(True, Witness("residue", 0))
    with pytest.raises(ValueError):
        MembershipVerdict(False)
    assert MembershipVerdict(False, Witness("residue", 1)).to_json() == {
        "member": False,
        "witness": {"kind": "residue", "value": "1"},
    }


# -- enumerations ---------------------------------------------------------------------


def test_enumerate_monic_residue_polys():
    assert [q.coeffs for q in enumerate_monic_residue_polys(1, 2)] == [(0, 1), (1, 1)]
    quads = list(enumerate_monic_residue_polys(2, 2))
    assert [str(q) for q in quads] == ["x^2", "x^2 + 1", "x^2 + x", "x^2 + x + 1"]
    assert len(list(enumerate_monic_residue_polys(2, 3))) == 9


@pytest.mark.parametrize("n, d", [(1, 5), (2, 4), (3, 3)])
def test_enumerations_are_complete_and_distinct(n, d):
    monic = list(enumerate_monic_residue_polys(n, d))
    assert len(set(monic)) == len(monic) == d**n
    assert all(q.is_monic() and q.degree == n for q in monic)
    low = list(enumerate_residue_polys(n, d))
    assert len(set(low)) == len(low) == d**n
    assert all(q.degree < n for q in low)


# -- Int(M_n(Z)) -------------------------------------------------------------------------


def test_MnZ_examples():
    f = cand("x*(x-1)/2")
    v = is_int_valued_on_MnZ(f, 2)
    # first failure in enumeration order is X^2; X^2+X+1 fails too, remainder 1
    assert not v.member and v.witness.value == ModPoly([0, 0, 1], 2)
    assert f.residue().divmod_monic(ModPoly([1, 1, 1], 2))[1] == ModPoly([1], 2)
    failing = [q for q in enumerate_monic_residue_polys(2, 2) if f.residue().divmod_monic(q)[1]]
    assert [str(q) for q in failing] == ["x^2", "x^2 + 1", "x^2 + x + 1"]
    assert is_int_valued_on_MnZ(cand("x*(x-1)/2"), 1).member
    assert is_int_valued_on_MnZ(generate_int_MnZ(2, 2), 2).member
    assert is_int_valued_on_MnZ(cand("x^3 - 4"), 3).member


def test_MnZ_cap():
    with pytest.raises(ResourceLimit):
        is_int_valued_on_MnZ(cand("x/7"), 4, cap=1000)


@given(candidates(dens=(2, 3), max_degree=10))
def test_MnZ_agrees_with_oracle(f):
    assert is_int_valued_on_MnZ(f, 2).member == oracle_int_MnZ(f, 2).member


@given(candidates(dens=(2, 3, 4), max_degree=12), st.integers(2, 4))
def test_MnZ_monotone_in_n(f, n):
    if is_int_valued_on_MnZ(f, n).member:
        assert is_int_valued_on_MnZ(f, n - 1).member


@given(candidates(dens=(2, 3, 4), max_degree=8))
def test_MnZ_witness_rechecks(f):
    v = is_int_valued_on_MnZ(f, 2)
    if not v.member:
        q = v.witness.value
        assert f.residue().divmod_monic(q)[1]
        # companion of the witness lift is a matrix where f fails to be integral
        assert not integral_on_matrix(f, companion(q.lift()).rows)


# -- Int(M_n^p(Z)) --------------------------------------------------------------------------


def test_Mnp_examples():
    p = ZPoly([-8, 0, 1])
    assert not is_int_valued_on_Mnp(cand("x/2"), p).member
    f = canonicalize(p, 2)
    assert f == IvpCandidate(ZPoly([-8, 0, 1]), 2)
    assert is_int_valued_on_Mnp(f, p).member
    assert integral_on_matrix(f, companion(p).rows)
    assert oracle_class_integral(f, p, 2)
    assert is_int_valued_on_Mnp(cand("x^2 + 1"), p).member
    with pytest.raises(NonMonic):
        is_int_valued_on_Mnp(cand("x/2"), ZPoly([1, 2]))


def oracle_class_integral(f, p, bound):
    """f(M) integral for every integer M with entries in [0, bound) and charpoly p."""
    from ivpoly.arith import charpoly

    n = p.degree
    for flat in itertools.product(range(-bound, bound + 1), repeat=n * n):
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        if charpoly(ZMat(rows)) == p and not integral_on_matrix(f, rows):
            return False
    return True


@given(candidates(dens=(2, 3, 4, 6), max_degree=8), monic_zpolys(1, 3))
def test_Mnp_matches_companion_integrality(f, p):
    v = is_int_valued_on_Mnp(f, p)
    assert v.member == integral_on_matrix(f, companion(p).rows)
    if v.member:
        # f in Z[X] + p*Q[X]: f - (p * quotient) is an integer polynomial
        quotient, remainder = f.to_qpoly().divmod(p.to_qpoly())
        assert remainder.is_integral()


@given(candidates(dens=(2, 3), max_degree=10), monic_zpolys(2, 2, bound=5))
def test_MnZ_contained_in_Mnp(f, p):
    if is_int_valued_on_MnZ(f, 2).member:
        assert is_int_valued_on_Mnp(f, p).member


# -- generation ---------------------------------------------------------------------------


@pytest.mark.parametrize("d", [2, 3, 5, 7])
def test_generate_n1_is_falling_product(d):
    expected = ZPoly([1])
    for a in range(d):
        expected = expected * ZPoly([a, 1])
    f = generate_int_MnZ(1, d)
    assert f == IvpCandidate(expected, d)
    assert is_int_valued_on_Z(f).member


def test_generate_n2_d2():
    f = generate_int_MnZ(2, 2)
    expected = ZPoly([0, 0, 1]) * ZPoly([1, 0, 1]) * ZPoly([0, 1, 1]) * ZPoly([1, 1, 1])
    assert f == IvpCandidate(expected, 2) and f.degree == 8
    assert is_int_valued_on_MnZ(f, 2).member and oracle_int_MnZ(f, 2).member


@pytest.mark.parametrize("n, d", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_generate_passes_oracle(n, d):
    f = generate_int_MnZ(n, d)
    assert f.degree == n * d**n
    assert is_int_valued_on_MnZ(f, n).member
    assert oracle_int_MnZ(f, n).member


def test_generate_cap():
    with pytest.raises(ResourceLimit):
        generate_int_MnZ(2, 100)
    assert generate_int_MnZ(2, 5, degree_cap=50).degree == 50


# -- subalgebra ----------------------------------------------------------------------------


def test_subalgebra_examples():
    p = ZPoly([-8, 0, 1])
    assert is_int_valued_on_subalgebra(generate_int_MnZ(2, 2), p).member
    v = is_int_valued_on_subalgebra(cand("x/2"), p)
    assert not v.member and v.witness.value == ModPoly([1], 2)
    assert is_int_valued_on_subalgebra(cand("x^5 + 3"), p).member
    with pytest.raises(ResourceLimit):
        is_int_valued_on_subalgebra(cand("x/10"), ZPoly([0, 0, 0, 0, 0, 0, 1]), cap=10**5)


@given(candidates(dens=(2, 3), max_degree=8), monic_zpolys(2, 2, bound=4))
def test_subalgebra_matches_rational_evaluation(f, p):
    assume(f.den > 1)
    c = companion(p)
    expected = True
    for h in enumerate_residue_polys(p.degree, f.den):
        hc = mat_poly_eval(h.lift(), c)
        if not mat_poly_eval(f.to_qpoly(), hc).is_integral():
            expected = False
            break
    v = is_int_valued_on_subalgebra(f, p)
    assert v.member == expected
    if not v.member:
        assert not mat_poly_eval(f.to_qpoly(), mat_poly_eval(v.witness.value.lift(), c)).is_integral()


@given(candidates(dens=(2, 3), max_degree=8), monic_zpolys(2, 2, bound=4))
def test_parallel_witness_matches_serial(f, p):
    assume(f.den > 1)
    assert is_int_valued_on_subalgebra(f, p, jobs=2) == is_int_valued_on_subalgebra(f, p)
