# Which field elements can sit on the diagonal of a potent matrix?
from kpotent import char_divisibility_guard, parse_field, potent_scalars, primitive_kth_root

F = parse_field("13")

for k in range(1, 7):
    roots = potent_scalars(F, k)  # x with x^(k+1) = x
    print(f"k={k}: {[x.code for x in roots]}  (gcd(k,12)+1 = {len(roots)})")

# w generates the k-th roots of unity; 1 + w + ... + w^(k-1) vanishes
w = primitive_kth_root(F, 4)
print("omega =", w.code, " 1+w+w^2+w^3 =", (1 + w + w ** 2 + w ** 3).code)

# the construction needs p to divide neither k nor k+1
for name, k in [("13", 4), ("5", 4), ("9", 4), ("4", 1)]:
    v = char_divisibility_guard(parse_field(name), k)
    print(f"GF({name}), k={k}: {'ok' if v else 'refused'} - {v.reason}")
