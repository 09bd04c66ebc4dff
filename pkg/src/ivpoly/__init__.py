"""Integer-valued polynomials on integer matrices and on algebraic integers
of bounded degree: exact membership criteria, brute-force oracles and
finite density experiments."""
from .algint import (
    AlgebraicInteger,
    QuadraticField,
    in_conductor,
    in_IntQ_OK,
    in_R_alpha,
    in_S_alpha,
    index_of_order,
    integralizer,
    mk_algebraic_integer,
    preimage_under_eval,
)
from .arith import ModMat, ModPoly, QMat, QPoly, ZMat, ZPoly, parse_poly, parse_zpoly
from .membership import (
    IvpCandidate,
    MembershipVerdict,
    Witness,
    canonicalize,
    generate_int_MnZ,
    is_int_valued_on_MnZ,
    is_int_valued_on_Mnp,
    is_int_valued_on_subalgebra,
    is_int_valued_on_Z,
)

__version__ = "0.1.0"
