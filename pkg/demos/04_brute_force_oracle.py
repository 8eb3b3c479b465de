# Check the formula against exhaustive search on the diamond poset:
# 5^9 matrices over GF(5), keep those with A^3 = A.
import time

from kpotent import brute_force_count, parse_field, poset_rhombus, rhombus_count
from kpotent.counting import num_scalars

F = parse_field("5")
k = 2
P = poset_rhombus(1, 1)
print(P.render())

t0 = time.perf_counter()
found = brute_force_count(P, F, k)
print(f"exhaustive: {found}  ({time.perf_counter() - t0:.1f}s)")
print("formula:   ", rhombus_count(1, 1, num_scalars(F, k), q=F.q))
