from __future__ import annotations

from hypothesis import settings
from hypothesis import strategies as st

from ivpoly.arith import ModPoly, ZPoly
from ivpoly.membership import canonicalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def zpolys(max_degree: int = 6, bound: int = 9):
    return st.lists(st.integers(-bound, bound), max_size=max_degree + 1).map(ZPoly)


def monic_zpolys(min_degree: int = 1, max_degree: int = 4, bound: int = 9):
    return st.lists(st.integers(-bound, bound), min_size=min_degree, max_size=max_degree).map(
        lambda c: ZPoly(c + [1])
    )


def modpolys(d: int, max_degree: int = 6):
    return st.lists(st.integers(0, d - 1), max_size=max_degree + 1).map(lambda c: ModPoly(c, d))


@st.composite
def candidates(draw, dens=(1, 2, 3, 4), max_degree: int = 10, bound: int = 12):
    """Canonical g/d with d drawn from ``dens``."""
    g = draw(zpolys(max_degree, bound))
    d = draw(st.sampled_from(dens))
    return canonicalize(g, d)


@st.composite
def int_matrices(draw, n_max: int = 4, bound: int = 9):
    n = draw(st.integers(1, n_max))
    return draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n))
