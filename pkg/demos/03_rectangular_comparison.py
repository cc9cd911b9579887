"""Tour 3: why the full rectangular construction fails at degree two.

Taking every derivative row over the full degree-D monomial box produces a
matrix with an identically zero column: the top power of the highest
derivative never occurs in any row polynomial.  The square construction
avoids the problem by shrinking the column set.
"""

from diffres import (SystemSpec, build_carra_ferro, build_square_matrix,
                     carra_ferro_shape, zero_columns, ym_render)

print("== rectangular construction for two order-1 degree-2 polynomials ==")
M = build_carra_ferro(2, 2, 1, 1)
meta = M.meta
print(f"shape: {M.nrows} x {M.ncols}   "
      f"(D={meta['D']}, L={meta['L']}, L1={meta['L1']}, L2={meta['L2']})")

zeros = zero_columns(M)
print("identically zero columns:", [ym_render(c) for c in zeros])
print("first column monomial:  ", ym_render(M.cols[0]))
print()
print("every minor that uses the zero column vanishes, so a gcd over all")
print("maximal minors collapses to zero: the construction is degenerate here.")
print()

sq = build_square_matrix(SystemSpec(2, 2))
print(f"square construction for the same system: {sq.nrows} x {sq.ncols}, "
      f"zero columns: {zero_columns(sq)}")
print()

print("size comparison across degrees (rectangular rows x cols vs square N):")
for d in (1, 2, 3):
    shape = carra_ferro_shape(d, d, 1, 1)
    n = SystemSpec(d, d).N
    print(f"  degree {d}:  {shape['rows']:4} x {shape['L']:4}"
          f"   vs   {n:4} x {n:4}")
