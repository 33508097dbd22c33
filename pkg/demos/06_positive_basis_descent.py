"""
Positive automorphisms from nonnegative 2x2 matrices
====================================================

Every invertible nonnegative integer 2x2 matrix is realized as the
abelianization of an automorphism of the rank-2 free group whose images
are positive words (no inverse letters).  The construction runs a
continued-fraction style descent on the columns and rebuilds the words
from the quotient digits.
"""

import random

from lehmerlab import (
    IntMatrix,
    abelianization,
    format_endo,
    format_word,
    nielsen_verify_basis,
    positive_f2_aut,
)

A = IntMatrix(((2, 1), (1, 1)))
descent = positive_f2_aut(A)
print("A =", A.rows)
print("descent digits:", descent.ds, " swapped:", descent.swapped)
print("automorphism:", format_endo(descent.endo))

u, v = descent.endo.images
print("positive words:", format_word(u), "|", format_word(v))
print("abelianization matches:", abelianization(descent.endo) == A)

# A greedy Nielsen reduction certifies that (u, v) is actually a basis:
# repeatedly replace a word by a shorter product until two distinct
# generators remain.
print("Nielsen basis check:", nielsen_verify_basis(u, v))

# The digits are exactly the continued-fraction expansion data of the
# column entries; larger entries just mean longer positive words.
B = IntMatrix(((13, 8), (8, 5)))
d2 = positive_f2_aut(B)
print()
print("B =", B.rows, " digits:", d2.ds)
print("word lengths:", d2.endo.images[0].length(), d2.endo.images[1].length())
assert abelianization(d2.endo) == B

# Randomized round trip: build nonnegative matrices from shears, lift,
# and confirm the abelianization comes back exactly.
rng = random.Random(7)
for trial in range(5):
    m = IntMatrix(((1, 0), (0, 1)))
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(1, 3)
        rows = ((1, k), (0, 1)) if rng.random() < 0.5 else ((1, 0), (k, 1))
        m = m @ IntMatrix(rows)
    lifted = positive_f2_aut(m)
    assert abelianization(lifted.endo) == m
    assert nielsen_verify_basis(*lifted.endo.images)
    print(f"trial {trial}: {m.rows} -> {format_endo(lifted.endo)}")
