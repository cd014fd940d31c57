# Chern numbers of complex flag manifolds from fixed-point data.
#
# Every Chern number of F(m_1, ..., m_{r+1}) is a finite exact sum over the
# N!/prod(m_i!) decompositions of {1, ..., N}.  Nothing here is floating point.
from flagchern import chern_number, chern_numbers, euler_characteristic

# F(1,1,2) and F(1,2,1) are diffeomorphic, yet their canonical complex
# structures are told apart by a single Chern number.
print("c1^5[F(1,1,2)] =", chern_number((1, 1, 2), (1, 1, 1, 1, 1)))
print("c1^5[F(1,2,1)] =", chern_number((1, 2, 1), (1, 1, 1, 1, 1)))

# The full list for both orderings, side by side.
a = chern_numbers((1, 1, 2))
b = chern_numbers((1, 2, 1))
print(f"\n{'partition':<12}{'F(1,1,2)':>10}{'F(1,2,1)':>10}")
for lam in a:
    mark = "  <-- differs" if a[lam] != b[lam] else ""
    print(f"{str(lam):<12}{a[lam]:>10}{b[lam]:>10}{mark}")

# The top Chern number is the Euler characteristic, i.e. the number of
# fixed points.
for dims in [(1, 1, 2), (2, 3), (1, 1, 1, 1), (2, 2, 2)]:
    d = sum(x * y for i, x in enumerate(dims) for y in dims[i + 1 :])
    print(f"F{dims}: c_{d} = {chern_number(dims, (d,))}, chi = {euler_characteristic(dims)}")

# CP^n is F(1, n); its total Chern class is (1+h)^(n+1), so c1^n = (n+1)^n.
for n in range(1, 6):
    print(f"c1^{n}[CP^{n}] = {chern_number((1, n), (1,) * n)}  (expected {(n + 1) ** n})")
