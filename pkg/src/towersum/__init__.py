"""Divisibility witnesses for ``1 + 2**(2**n) + ... + 2**(2**(n+m))`` modulo odd N."""
from .modmath import (
    CongruenceClass,
    Residue,
    crt,
    egcd,
    multiplicative_order,
    mul_mod,
    pow_mod,
    solve_linear_congruence,
)
from .tower import SumSpec, TowerContext, block_sum_check, i_sum_exact_mod, i_sum_mod, tower_residue
from .theorem1 import (
    Inapplicability,
    OrderChain,
    Reason,
    VerificationReport,
    Witness,
    build_witness,
    derive_order_chain,
    m_family,
    scan,
    verify_witness,
)
from .mersenne import MersenneChain, Theorem2Witness, lucas_lehmer, mersenne_chain, theorem2_verify, theorem2_witness
from .fermat import FermatSumSpec, fermat_number_mod, fermat_sum_mod, verify_corollary3

__version__ = "0.1.0"
