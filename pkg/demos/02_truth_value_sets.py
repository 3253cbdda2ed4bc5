"""Symbolic truth-value sets and their axiomatizability classes.

A set is a finite union of points, intervals, Cantor pieces and
convergent sequences.  Membership, the perfect kernel, and isolation of
0 are all decided exactly, which turns the classification theorem into
a computable function of the set description.
"""

from fractions import Fraction as F

from goedel_logics import (
    Cantor, cb_kernel, classify, embed_into_perfect, member, parse_set,
    print_set, sample_finite, saturate_above_kernel_inf,
)

EXAMPLES = [
    "[0,1]",                              # the standard set
    "{0,1/2,2/3,1}",                      # four-valued
    "{0} + [1/2,1]",                      # 0 isolated below a continuum
    "{0} + cantor(1/2,1)",                # same class, Cantor-shaped kernel
    "seqdown(0;1)",                       # 1/k descending to 0
    "sequp(1;1)",                         # 1 - 1/k ascending to 1
    "{0} + seqdown(0;1/4) + [1/2,1]",     # 0 not isolated, kernel away from 0
]

for text in EXAMPLES:
    V = parse_set(text)
    c = classify(V)
    kernel = cb_kernel(V)
    print(f"{text:36} kernel={print_set(kernel):14} {c.describe()}")

# Exact membership, including Cantor pieces via ternary expansions:
C = parse_set("{0} + cantor(0,1)")
for q in (F(1, 3), F(1, 4), F(1, 2), F(3, 4)):
    print(f"{q} in cantor(0,1):", member(C, q))

# Saturating above the kernel infimum does not change the logic:
V = parse_set("{0} + cantor(1/2,1)")
print("saturated:", print_set(saturate_above_kernel_inf(V)))

# Strictly monotone embedding of a finite chain into the Cantor set
# (binary digits doubled into ternary), sending 0 to the infimum:
print("embed:", embed_into_perfect([F(0), F(1, 4), F(1, 2), F(1)],
                                   Cantor(F(0), F(1))))

# Finite sub-sets for brute-force searches keep 0, 1 and, when 0 is
# isolated, the smallest positive element:
print("sample of {0}+[1/2,1]:", print_set(sample_finite(parse_set("{0} + [1/2,1]"), 4)))
print("sample of seqdown(0;1):", print_set(sample_finite(parse_set("seqdown(0;1)"), 4)))
