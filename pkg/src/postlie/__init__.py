"""Exact computation in free post-Lie algebras on planar rooted trees.

Post-Lie Magnus expansion and its inverse, the weighted BCH-recursion in a
Rota-Baxter lift, and a matrix Rota-Baxter model for numeric checks.
"""

from .coeffs import LAMBDA, Laurent, specialize
from .formats import emit_latex, series_from_json, series_latex, series_text, series_to_json
from .lie import BchTable, BracketExpr, bch_table, bch_tilde, dynkin_project, evaluate
from .magnus import MagnusExpansion, bernoulli, inverse_postlie_magnus, postlie_magnus
from .rblift import (
    LiftedElement,
    bch_recursion,
    bch_recursion_inverse,
    lifted_bracket,
    verify_main_theorem,
)
from .series import (
    Series,
    commutator,
    concat,
    counit,
    exp_concat,
    exp_gl,
    gl_antipode,
    gl_product,
    gl_product_via_bplus,
    graft,
    is_grouplike,
    is_primitive,
    log_concat,
    log_gl,
    unshuffle,
)
from .trees import (
    Tree,
    b_minus,
    b_plus,
    butcher_product,
    enumerate_forests,
    enumerate_trees,
    graft_at,
    parse,
    psi,
    psi_inverse,
    serialize,
)

__version__ = "0.1.0"
