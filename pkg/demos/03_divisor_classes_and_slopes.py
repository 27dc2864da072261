"""From Bogomolov expressions to the sharp slope bounds.

The locus where E (or F) goes unbalanced is detected by the Bogomolov
expression of the universal bundle; pushed through the change of basis to
(lambda, delta, D) it becomes an exact divisor class.  Eliminating D from
the pair of classes produces X = a lambda - b delta, and a/b is the sharp
bound for the slope of a sweeping family.
"""

from hurwitzcalc import Poly
from hurwitzcalc.divisor_classes import (ce_class, class_x, maroni_class,
                                         maroni_class_from_bogomolov,
                                         slope_bound)

print("=== the unbalancedness classes at degree four ===")
m = maroni_class(4)
ce = ce_class(4)
print("M :", m.to_json())
print("CE:", ce.to_json())
print("evaluated at g = 9:", maroni_class(4).eval_at(9))

print()
print("=== the closed formulas agree with the Bogomolov derivation ===")
derived = maroni_class_from_bogomolov(4)
print("lambda-coefficients equal:", m.lambda_coef == derived.lambda_coef)
print("delta-coefficients equal: ", m.delta_coef == derived.delta_coef)
print("D-coefficients equal:     ", m.d_coef == derived.d_coef)

print()
print("=== eliminating D: the class X = a lambda - b delta ===")
for d in (3, 4, 5):
    data = class_x(d)
    print(f"d = {d}: a = {data['a']}, b = {data['b']}, "
          f"weights (M, CE) = ({data['weightM']}, {data['weightCE']})")

print()
print("=== sharp slope bounds at the smallest admissible genera ===")
for d, g in ((3, 4), (4, 9), (5, 16)):
    print(f"degree {d}, genus {g}: slope bound {slope_bound(d, g)}")

print()
print("=== the three closed forms ===")
g = Poly.var("g")
for d, text in ((3, "7 + 6/g"), (4, "13/2 + 15/(2g)"), (5, "31/5 + 44/(5g)")):
    data = class_x(d)
    print(f"d = {d}: a/b = {data['a'] / data['b']}   ({text})")
