"""
Counting and multiplying basis diagrams
=======================================

Enumerate each family, compare with its counting formula, and print the
multiplication table of the Temperley-Lieb monoid on three strands.
"""

import numpy as np

from diagcat import Family, closed_form_count, count, multiplication_table

sizes = range(4)
for family in Family:
    counts = np.array([[count(family, k, l) for l in sizes] for k in sizes])
    formula = np.array([[closed_form_count(family, k, l) for l in sizes] for k in sizes])
    assert (counts == formula).all()
    print(family.value)
    print(counts)

basis, table = multiplication_table(Family.TEMPERLEY_LIEB, 3)
for i, D in enumerate(basis):
    print(f"[{i}] {D}")
alphas = np.array([[a for a, _ in row] for row in table])
products = np.array([[j for _, j in row] for row in table])
print("basis index of b_i o b_j\n", products)
print("power of t in b_i o b_j\n", alphas)
