"""Exact verification tools for weighted-homogeneous ideals (x, y)^(3m-2) + (g)
and the genus numerology of primitive multiple lines in P^3."""

from .fields import GF, QQ, TPoly, field_inverse, tpoly_mul
from .poly import (ParamSet, Poly, PolyRing, dehomogenize_at_z, homogenize,
                   mul_mod_xy_power, parse_poly, w_coefficients)
from .basis import basis_M, basis_R_shifted, hilbert_table, psi, psi_inverse
from .phi import build_phi_block, phi_iso_verdict
from .groebner import (GREVLEX, GRLEX, TermOrder, buchberger_truncated,
                       initial_ideal_verdict, normal_form)
from .direct import low_degree_member_verdict
from .lift import construct_lift, surface_equation, verify_congruence
from .genus import (biliaison_genus, conjectureA_assembly, hilbert_poly_F,
                    max_genus_bound, n0, primitive_genus, union_genus)
from .verify import VerifyConfig, random_g, run_verify

__version__ = "0.1.0"
