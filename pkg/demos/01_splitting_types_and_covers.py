"""Splitting types and the discrete invariants of a branched cover.

A degree-d cover of the line carries a rank d-1 bundle E (its relative
canonical embedding lives in P(E)) and, for d >= 4, the rank d(d-3)/2
bundle F of quadrics through the fibers.  This script walks through the
combinatorics: balancedness, tame types, the divisoriality congruences,
and the ranks of the full resolution.
"""

from hurwitzcalc import (CoverInvariants, SplittingType, balanced_type,
                         divisorial_conditions, ext1_dim, generic_tame,
                         is_balanced, maroni_codimension,
                         rational_and_elliptic_tables, syzygy_rank)

print("=== a pentagonal cover of genus 16 ===")
cover = CoverInvariants(5, 16)
print(f"rank E = {cover.rank_e}, deg E = {cover.deg_e}")
print(f"rank F = {cover.rank_f}, deg F = {cover.deg_f}  (= (d-3) deg E)")
print(f"branch points: {cover.branch_points}")

print()
print("=== balancedness ===")
for degrees in ((3, 3, 3), (2, 3, 4), (1, 1, 2, 2, 2)):
    t = SplittingType(degrees)
    print(f"{str(t).rjust(24)}  balanced={is_balanced(t)}  ext1={ext1_dim(t)}")
print("the balanced type of rank 5, degree 12:", balanced_type(5, 12))

print()
print("=== tame types and the most generic one per floor ===")
for m in (2, 3):
    t = generic_tame(4, 6, m)
    codim = maroni_codimension(4, 6, m)
    print(f"floor {m}: most generic tame type {t}, locus codimension {codim}")

print()
print("=== when are the unbalanced loci divisors? ===")
for d, g in ((3, 4), (4, 9), (5, 16), (5, 17)):
    flags = divisorial_conditions(d, g)
    print(f"(d, g) = ({d}, {g}): E-side {flags['maroni']}, F-side {flags['ce']}")

print()
print("=== resolution ranks for a degree-six cover ===")
print("syzygy ranks:", [syzygy_rank(6, i) for i in range(1, 5)])
print("(symmetric through the middle; the last one is the determinant line)")

print()
print("=== rational and elliptic reference tables ===")
tables = rational_and_elliptic_tables(5)
for name, value in tables.items():
    print(f"{name}: {value}")
