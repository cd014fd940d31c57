# The worked F(1,1,2) example: weights, products and sums at x_i = i.
import math

from flagchern import enumerate_decompositions, residue_sum, weight_multiset

x = (1, 2, 3, 4)
total5 = 0
for I in enumerate_decompositions((1, 1, 2)):
    w = [int(v) for v in weight_multiset(I, x)]
    e, c1 = math.prod(w), sum(w)
    total5 += c1**5 / e
    print(f"{str(I):<18} W = {str(w):<22} e = {e:>4}  c1 = {c1:>3}")

print("sum c1^5 / e =", residue_sum((1, 1, 2), "e1^5", x), f"(float check {total5:.6f})")
print("sum c1^6 / e =", residue_sum((1, 1, 2), "e1^6", x))
