"""Intersection numbers behind the pencil counts.

Every singular-member count in the engine reduces to exact symbolic
intersection arithmetic in a small graded ring: the quadric surface for
trigonal pencils, a conic bundle in P(E) for tetragonal ones, and a
Grassmannian bundle for pentagonal ones.  The same counts come out of the
topological Euler-characteristic pipeline, giving an independent check.
"""

from hurwitzcalc import Poly
from hurwitzcalc.chow import (grassmann_top_constant_from_twist,
                              ring_grassmann_bundle_g25,
                              ring_proj_bundle_over_p1, surface_p1xp1)
from hurwitzcalc.family_calc import (c2_omega_tetragonal_surface,
                                     pencil_delta_on_surface,
                                     pencil_delta_via_euler,
                                     pentagonal_pencil_numbers,
                                     surface_tetragonal)

print("=== trigonal pencils on the quadric surface ===")
surface = surface_p1xp1()
rs, rt = surface.ring.gen("Rs"), surface.ring.gen("Rt")
k = Poly.var("k")
pencil = k * rs + 3 * rt                 # genus 2(k-1)
print("jet-bundle count:   ", pencil_delta_on_surface(surface, pencil))
print("euler-number route: ", pencil_delta_via_euler(surface, pencil))
print("(substitute g = 2(k-1) to see 7g + 6)")

print()
print("=== the tetragonal conic bundle ===")
u, v, g_r = Poly.var("u"), Poly.var("v"), Poly.var("gR")
print("c2 of its cotangent bundle:", c2_omega_tetragonal_surface(u, v, g_r))
quadric_bundle = surface_tetragonal(u, v)
z, f = quadric_bundle.ring.gen("z"), quadric_bundle.ring.gen("f")
delta = pencil_delta_on_surface(quadric_bundle, 2 * z - u * f)
print("pencil count:", delta.subs({"u": g_r + 3 - v}), " (v + 6g + 6)")

print()
print("=== the convention that fixes every sign ===")
ring = ring_proj_bundle_over_p1(3, u + v)
zz = ring.gen("z")
print("integral of z^3 on P(E), rank three:", (zz ** 3).integrate())

print()
print("=== the Grassmannian bundle for degree five ===")
g = Poly.var("g")
gr_ring = ring_grassmann_bundle_g25(-2 * (g + 4))
zg, fg = gr_ring.gen("z"), gr_ring.gen("f")
print("z^6 . f =", (zg ** 6 * fg).integrate())
print("top constant from the twist argument:",
      grassmann_top_constant_from_twist())

print()
print("=== pentagonal pencil numbers ===")
for genus in (6, 16, 36):
    numbers = pentagonal_pencil_numbers(genus)
    print(f"g = {genus}: k1 = {numbers['k1']}, basepoints = {numbers['B']}, "
          f"lambda = {numbers['lambda']}, delta = {numbers['delta']}")
