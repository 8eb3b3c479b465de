# Counting polynomials: the number of (k+1)-potent elements is a polynomial
# in q once s = #potent scalars is fixed.
from kpotent import (count_triangular, free_slot_polynomial, poset_rhombus, poset_y,
                     rhombus_count, slowik_count, star_P, y_count)

s = 3  # e.g. k = 2 over GF(5): the scalars 0, 1, 4

for n in range(1, 5):
    print(f"T_{n}:", count_triangular(n, s))

print("arm P(3,3):", star_P(3, 3))
print("rhombus(2,2):", rhombus_count(2, 2, 3))
print("Y(1,2,1):", y_count(1, 2, 1, 3))

# the closed forms agree with a direct walk over all diagonal patterns
assert rhombus_count(2, 2, 3) == free_slot_polynomial(poset_rhombus(2, 2), 3)
assert y_count(1, 2, 1, 3) == free_slot_polynomial(poset_y(1, 2, 1), 3)

# and the partition form of the triangular count is the same polynomial
assert slowik_count(5, 4) == count_triangular(5, 4)

# evaluate at q
print("T_3 over GF(5), k=2:", count_triangular(3, 3, q=5))
