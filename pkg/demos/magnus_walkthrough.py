"""Post-Lie Magnus expansion, computed two ways.

Prints the first components of chi (exp*(chi) = exp(o)) and of its inverse
theta (exp(theta) = exp*(o)), then checks the defining identities.
"""

from postlie.formats import series_text
from postlie.magnus import inverse_postlie_magnus, magnus_by_log, postlie_magnus
from postlie.series import Series, exp_concat, exp_gl

ORDER = 5

chi = postlie_magnus(ORDER)
theta = inverse_postlie_magnus(ORDER)

print("chi, by the Bernoulli-type recursion:")
for n, comp in chi.items():
    print(f"  chi^({n}) = {series_text(comp)}")

print("\ntheta:")
for n, comp in theta.items():
    print(f"  theta^({n}) = {series_text(comp)}")

# the log route knows nothing about the recursion
log_route = magnus_by_log(ORDER)
print("\nrecursion and log route agree:", all(chi[n] == log_route[n] for n in range(1, ORDER + 1)))

f = Series.generator(ORDER)
print("exp*(chi) == exp(o):", exp_gl(chi.total()) == exp_concat(f))
print("exp(theta) == exp*(o):", exp_concat(theta.total()) == exp_gl(f))
