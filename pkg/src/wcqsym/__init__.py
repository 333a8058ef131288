"""Exact computations in the Hopf algebra of weak composition quasi-symmetric
functions (exponents in N u {e}), its projection onto QSym, and the free
commutative unitary Rota-Baxter algebra of weight 1 on one generator.
"""
from .compositions import format_composition, parse_composition
from .hopf import (
    F,
    M,
    antipode,
    antipode_coefficient,
    c_coefficient,
    coproduct,
    counit,
    f_to_m,
    m_to_f,
    product,
)
from .lincomb import LinComb
from .monoid import EPS, NATURALS, NTILDE, nt_add, theta, theta_inv
from .projection import kernel_basis, phi, verify_kernel_truncation

__version__ = "0.1.0"
