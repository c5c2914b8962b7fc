"""Hall bases: Lyndon brackets, face alphabets, and the Witt count oracle.

Run as: python demos/02_hall_bases.py
"""

from collections import Counter

from polyco import (
    generators_for,
    hall_basis,
    plain_alphabet,
    restricted_support,
    stats,
    witt_dimension,
)

# Lyndon brackets over two plain symbols, up to weight 4.
print("brackets on {x1 < x2} of weight <= 4:")
for b in hall_basis(plain_alphabet(2), 4):
    print(f"  weight {b.weight}: {b.serialize()}")

# The face alphabet over a vertex set I has one letter a_{J,i} per subset J
# of at least two vertices and copy index i up to |J| - 1.
gens = generators_for([1, 2, 3])
print("\nface alphabet over {1,2,3}:", [g.name() for g in gens])

# Bracket statistics drive the decompositions: b(J) counts letters per
# subset, l_j totals the appearances of each vertex, and the support within
# I picks out the full subcomplex a bracket factor lives over.
basis = hall_basis(gens, 2)
b = basis[-1]
st = stats(b, 3)
print(f"\nbracket {b.serialize()}: b(J)={st.bJ} l={st.l}")
print("support in {1,2,3}:", restricted_support(b, [1, 2, 3]))

# The multigraded Witt formula counts brackets per multidegree and serves as
# an independent oracle for the enumeration.
counts = Counter()
alphabet = plain_alphabet(2)
for b in hall_basis(alphabet, 6):
    md = b.multidegree()
    counts[tuple(md.get(g, 0) for g in alphabet)] += 1
print("\nmultidegree counts vs the Witt formula (weight <= 6):")
for md in sorted(counts):
    print(f"  {md}: enumerated {counts[md]}, Witt {witt_dimension(md)}")
