# Recovering fixed-point weights from explicit coordinate charts.
#
# The combinatorial weights W_I are justified geometrically: in the chart U_I
# around the fixed point P_I the action diag(t^k_1, ..., t^k_N) multiplies the
# coordinate indexed by (alpha, beta) by t^(k_beta - k_alpha).  Here we watch
# that happen numerically on random flags.
import numpy as np

from flagchern import enumerate_decompositions, make_decomposition, weight_multiset
from flagchern.flaggeom import (
    chart_to_matrix,
    circle_act,
    fixed_point_matrix,
    normalize_chart,
    numeric_weights,
    random_block_upper,
    random_coords,
)

rng = np.random.default_rng(0)
I = make_decomposition([[2], [4], [1, 3]])
k = [5, -2, 7, 1]

# A random flag in U_I, hidden behind a change of basis that keeps the flag.
coords = random_coords(5, rng)
A = chart_to_matrix(coords, I) @ random_block_upper((1, 1), rng)
print("coordinates recovered:", np.allclose(normalize_chart(A, I), coords))

moved = normalize_chart(circle_act(2.0, k, A), I)
print("log2 of coordinate ratios:", np.round(np.log2(np.abs(moved / coords)), 12))
print("weights from the formula: ", [int(w) for w in weight_multiset(I, k)])

# P_I itself does not move.
print("P_I fixed:", np.allclose(normalize_chart(circle_act(2.0, k, fixed_point_matrix(I)), I), 0))

# Every fixed point of F(1,1,2) at once.
agree = all(
    sorted(numeric_weights((1, 1, 2), J, k, rng=rng)) == sorted(int(w) for w in weight_multiset(J, k))
    for J in enumerate_decompositions((1, 1, 2))
)
print("all 12 fixed points agree:", agree)
