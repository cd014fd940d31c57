# The residue sum R_f(x) = sum_I f(W_I) / e(W_I) as a family of identities.
#
# For a homogeneous symmetric f, written in elementary (e_k) and power-sum
# (p_k) generators:
#   deg f <  d      R_f vanishes identically,
#   deg f == d      R_f is a constant (a Chern number when f = c_lambda),
#   deg f == d + 1  R_f still vanishes for e1^(d+1) and e_d * e1,
#   otherwise       R_f depends on x and carries no geometric meaning.
from flagchern import (
    Special,
    parse_expr,
    residue_sum,
    verify_constant,
    verify_special,
    verify_vanishing,
)
from flagchern.residue import random_assignments

dims = (1, 2, 2)  # N = 5, d = 8, 30 fixed points
print("below d:", verify_vanishing(dims, "e1^3*e2^2 + 7*p7", trials=4, seed=1).verdict)

f = parse_expr("e1^8 - 3*e2*e3^2 + p8")
report = verify_constant(dims, f, trials=4, seed=1)
print(f"degree d, f = {f}: {report.verdict}")

for which in Special:
    print(f"degree d+1, {which.value}:", verify_special(dims, which, trials=4, seed=1).verdict)

# Past that range the value moves with the assignment.
for x in random_assignments(5, 3, seed=7):
    print("e1^10 at", [int(v) for v in x], "->", residue_sum(dims, "e1^10", x))

# Rational assignments are fine too: the identities are identities of
# rational functions.
print("e1^8 at x = (1/2, 1/3, 1/5, 1/7, 1/11):", residue_sum(dims, "e1^8", ["1/2", "1/3", "1/5", "1/7", "1/11"]))
