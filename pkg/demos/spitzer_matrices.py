"""Rota-Baxter operators on lower triangular matrices.

R(x) = -tril(x, -1) is a Rota-Baxter operator of weight one. The fixed point
X = 1 + t R(a X) factors through the Magnus expansion evaluated in this model.
"""

import numpy as np

from postlie.matrix_model import (
    random_matrix,
    rb_operator,
    verify_et9,
    verify_rb_identity,
    verify_spitzer,
)

rng = np.random.default_rng(0)
a = random_matrix(3, rng)
print("a =")
print(a)
print("R(a) =")
print(rb_operator(a))

for report in (
    verify_rb_identity(100, seed=0, dim=4),
    verify_et9(a, 6),
    verify_spitzer(a, 6),
):
    print()
    print("\n".join(report.lines()))
