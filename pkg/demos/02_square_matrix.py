"""Tour 2: the column set, the four-way partition, and the square matrix.

The column monomials admit two descriptions that must coincide: a
divisibility cascade driven by the four main monomials, and closed-form
products of multiplier sets.  Their agreement makes the matrix square.
"""

from diffres import (SystemSpec, build_square_matrix, closed_form_partition,
                     column_set, default_main_monomials, multiplier_sizes,
                     partition_divisibility, ym_render)

spec = SystemSpec(2, 2)
E = column_set(spec)
mm = default_main_monomials(spec)

print("== columns and partition for degrees", (spec.d1, spec.d2), "==")
print(f"degree bound D = {spec.D}, column count N = (D+1)^2 = {spec.N}")
print("main monomials:", [ym_render(m) for m in mm.as_tuple()])
print()

cascade = partition_divisibility(E, mm)
closed = closed_form_partition(spec)
print("partition sizes by divisibility cascade:", cascade.sizes())
print("partition sizes by closed forms:       ", closed.sizes())
agree = all(a.as_set() == b.as_set()
            for a, b in zip(cascade.sets(), closed.sets()))
print("the two partitions coincide:", agree)
print()

print("the fourth block (smallest) in full:")
print(" ", cascade.s4.render())
print()

M = build_square_matrix(spec)
print(f"square matrix: {M.nrows} x {M.ncols} "
      f"with row blocks {M.meta['block_counts']}")
print("first three columns:", [ym_render(c) for c in M.cols[:3]])
print()

print("multiplier-set sizes over a range of degrees (always summing to N):")
for d1 in range(1, 5):
    for d2 in range(d1, 5):
        s = SystemSpec(d1, d2)
        sizes = multiplier_sizes(s)
        print(f"  d={d1},{d2}:  {sizes}  sum={sum(sizes)}  N={s.N}")
