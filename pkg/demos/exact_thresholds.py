"""
Exact singularity thresholds
============================

Every value below is exact rational arithmetic; floats only appear
when we ask for them.
"""

from fractions import Fraction

from lctkit import (
    Diagonal,
    DivisorRecord,
    ExtRational,
    ResolutionData,
    arnold_multiplicity,
    lct_from_resolution,
    lct_monomial,
    lelong_sandwich,
    parse_spec,
    spec_to_text,
    truncation_gap_bound,
)

# the cusp z1^2 + z2^3 has threshold 1/2 + 1/3 = 5/6
cusp = Diagonal([2, 3])
c = lct_monomial(cusp)
print("lct(z1^2 + z2^3) =", c)
print("arnold multiplicity =", arnold_multiplicity(c))

# the same computations from compact text specs
for text in ("mono:3,2", "ssum(mono:2;mono:2)", "dsum(diag:2;diag:3)"):
    spec = parse_spec(text)
    print(f"lct({spec_to_text(spec)}) = {lct_monomial(spec)}")

# thresholds straight off a log resolution: min (a_i + 1) / b_i
data = ResolutionData(
    [
        DivisorRecord(a=1, b=2, meets_k=True),
        DivisorRecord(a=3, b=4, meets_k=True),
        DivisorRecord(a=0, b=9, meets_k=False),  # misses the point, never constrains
    ]
)
print("resolution threshold =", lct_from_resolution(data))

# a divisor with b=0 contributes nothing; no qualifying divisor means infinity
empty = ResolutionData([DivisorRecord(a=5, b=0, meets_k=True)])
print("no pole anywhere ->", lct_from_resolution(empty))

# infinity behaves: reciprocal of 0 is inf, 0 * inf is 0
zero = ExtRational(0)
print("arnold(0) =", arnold_multiplicity(zero))

# dropping a Taylor expansion after degree k costs at most n/(k+1)
print("truncation gap, 2 variables, degree 3:", truncation_gap_bound(2, 3))

# the Lelong number nu brackets the multiplicity: nu/n <= 1/c <= nu
lo, hi = lelong_sandwich(2, 2)
print(f"lelong 2 in dim 2: 1/c is between {lo} and {hi}")
print("check against diag:2,2:", arnold_multiplicity(lct_monomial(Diagonal([2, 2]))))
