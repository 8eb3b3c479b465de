# Build a 5-potent (k = 4) 3x3 upper triangular matrix over GF(9).
# Pick a diagonal of potent scalars, choose the free entries, and the
# rest follows.
import random

from kpotent import (DiagonalAssignment, complete_potent, free_slots, is_potent, parse_field,
                     poset_chain, primitive_kth_root)

F = parse_field("9")
k = 4
w = primitive_kth_root(F, k)

diag = [w ** 3, w ** 2, w ** 3]
d = DiagonalAssignment(poset_chain(3), F, k, diag)

slots = free_slots(d)
print("free pairs:", list(slots))  # (0,1) and (1,2); (0,2) is forced

rng = random.Random(0)
a, b = rng.randrange(1, 9), rng.randrange(1, 9)
A = complete_potent(d, {(0, 1): a, (1, 2): b})
print(A.render())
print("A^5 == A:", is_potent(A, k))

# the corner is -(1/4)(2+2w) * a * b
X = -(2 + 2 * w) * F.elem(a) * F.elem(b) / 4
print("corner", A[(0, 2)].code, "expected", X.code)
