"""Exact computer algebra for tree Hopf algebras and (quasi)symmetric functions.

The package implements the grafting algebra of rooted trees and its dual
Connes-Kreimer algebra, their planar analogues, the Hopf algebras of
symmetric, quasi-symmetric and noncommutative symmetric functions, the
morphisms connecting all of them, and explicit solutions of the
combinatorial Dyson-Schwinger equation X = 1 + B_+(X^p) — all over exact
rational (or rational-polynomial) scalars, with machine-checkable
verification suites for every structural identity.
"""

from .scalar import QQ, QP, Poly, Rational, binom_of, binom_poly, poly_eval
from .trees import (
    BBAParseError,
    Forest,
    OrderedForest,
    PlanarTree,
    ResourceLimitError,
    RootedTree,
    bba_decode,
    bba_encode,
    canonicalize,
    embedding_count,
    enumerate_planar,
    enumerate_rooted,
    ladder,
    planar_ladder,
    sym_order,
    t_lambda,
    T_comp,
    to_planar,
)
from .freemodule import (
    HopfOps,
    LinComb,
    Report,
    TensorElem,
    check_axioms,
    check_cocommutativity,
    duality_check,
    generic_antipode,
    pairing_extend,
    tensor_pairing,
)
from .hopf_trees import (
    Cut,
    bminus,
    bminus_ordered,
    bplus,
    bplus_ordered,
    ck_antipode,
    ck_coproduct,
    ck_coproduct_recursive,
    ck_ops,
    cuts_of,
    gl_coproduct,
    gl_ops,
    gl_product,
    hf_antipode,
    hf_coproduct,
    hf_ops,
    kp_coproduct,
    kp_ops,
    kp_product,
    pairing_hf,
    pairing_hk,
    pairing_kp_hf,
    pairing_kt_hk,
)
from .symfun import (
    Composition,
    Partition,
    basis_expand,
    eh_identity_check,
    nsym_ops,
    qsym_antipode,
    qsym_coproduct,
    qsym_ops,
    qsym_product,
    series_oracle,
    sym_coproduct,
    sym_ops,
    sym_pairing,
    tau,
)
from .morphisms import (
    Phi,
    Phi_star,
    diagram_check,
    phi,
    phi_star,
    rho,
    rho_star,
    tau_star,
)
from .special import (
    epsilon,
    growth_formulas_check,
    kappa,
    lemma_check,
    m_count,
    n_count,
    natural_growth,
    proposition_check,
)
from .dse import (
    DSESolution,
    Q_poly,
    cp_coefficient,
    coproduct_theorem_check,
    q_poly,
    solve_closed,
    solve_recursive,
)

__version__ = "0.1.0"
