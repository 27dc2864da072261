"""Rotating directrices: how the minimal sub-scroll of a one-parameter
family of balanced scrolls sweeps through a fixed fiber.

The family is cut out of a fixed rank-N bundle V on the line by a varying
sub-line-bundle of twist (a, 1); the quotients W_t are balanced with r
minimal summands of degree l.  Inside the fiber product P^(N-1) x P^1_t the
directrices sweep a cycle whose class is computed here through the full
pipeline (Riemann-Roch degree of the pushforward, then class expansion) and
independently given by the closed form

    [Y] = H^(N-r) + (a + l + 1) H^(N-r-1) . F.

The degree-five application: the Maroni intersection number of a pentagonal
partial pencil is the rotation degree at a = k_R, l + 1 = m_R, i.e.
k_R + m_R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bundles import SplittingType, balanced_type, k1_pentagonal, m_r_pentagonal
from .chow import (ChowClass, expansion_ring, grr_degree_on_p1xp1, ring_p1xp1,
                   ring_product_with_p1, ring_proj_space)
from .errors import InvalidFamily
from .symkernel import Poly


@dataclass(frozen=True)
class DirectrixFamily:
    """Parameters of the family: ambient rank N, number r of minimal
    summands of the balanced quotient, twist a of the varying sub-line
    bundle, and lower balanced degree l."""

    n: int
    r: int
    a: int
    l: int

    def __post_init__(self):
        if self.n < 3 or not 1 <= self.r <= self.n - 2:
            raise InvalidFamily(
                f"need N >= 3 and 1 <= r <= N-2, got N={self.n}, r={self.r}")


def _quotient_chern_data(n: int, a: int, twist: int):
    """Chern data of W(twist * Rs) on the product of two lines, where W is
    the quotient of the pulled-back rank-N bundle V by O(-a Rs - Rt).  The
    degree of V stays symbolic; it cancels from every downstream number.
    """
    ring = ring_p1xp1()
    rs, rt = ring.gen("Rs"), ring.gen("Rt")
    deg_v = Poly.var("degV")
    c1_w = (deg_v + a) * rs + rt
    # c2 of the pullback of V vanishes, so c2(W) = c1(O(a Rs + Rt)) . c1(W)
    c2_w = ((a * rs + rt) * c1_w).integrate()
    rank_w = n - 1
    c1_l = twist * rs
    c1_tw = c1_w + rank_w * c1_l
    c2_tw = (c2_w
             + (rank_w - 1) * (c1_w * c1_l).integrate()
             + comb(rank_w, 2) * (c1_l * c1_l).integrate())
    return ring, c1_tw, c2_tw


def directrix_pushforward_degree(fam: DirectrixFamily) -> Poly:
    """Degree of the pushforward of W(-(l+1) Rs) to the pencil line, by the
    Riemann-Roch count on the product surface.  Always equals -a - l,
    independently of the (symbolic) degree of V."""
    ring, c1_tw, c2_tw = _quotient_chern_data(fam.n, fam.a, -(fam.l + 1))
    degree = grr_degree_on_p1xp1(c1_tw, c2_tw)
    assert degree == Poly.const(-fam.a - fam.l)
    return degree


def rotating_directrix_class(fam: DirectrixFamily) -> ChowClass:
    """Class of the directrix sweep in the Chow ring of P^(N-1) x P^1_t,
    computed by the pipeline (not transcribed from the closed form):

    1. the pushforward of W(-(l+1) Rs) is free of rank N-1-r and its degree
       -a-l comes from the Riemann-Roch count;
    2. the directrix scroll inside the projectivized quotient has class
       eta^(N-1-r) + (a+l) Rt eta^(N-2-r) with eta = zeta - (l+1) Rs;
    3. pushing into the ambient projectivized V multiplies by the class
       zeta + a Rs + Rt of the projectivized quotient, and restricting to a
       fixed fiber multiplies by Rs.
    """
    n, r, a, l = fam.n, fam.r, fam.a, fam.l
    rotation = -directrix_pushforward_degree(fam).constant_value()  # a + l

    generic_type = SplittingType((l,) * r + (l + 1,) * (n - 1 - r))
    twisted = SplittingType(tuple(d - (l + 1) for d in generic_type.degrees))
    kernel_rank = twisted.h0()
    assert kernel_rank == n - 1 - r

    ring = expansion_ring(square_zero=("Rs", "Rt"), free=("zeta",))
    zeta, rs, rt = ring.gen("zeta"), ring.gen("Rs"), ring.gen("Rt")
    eta = zeta - (l + 1) * rs
    hyperplane_of_quotient = zeta + a * rs + rt
    directrix_in_quotient = eta ** kernel_rank + rotation * rt * eta ** (kernel_rank - 1)
    swept = directrix_in_quotient * hyperplane_of_quotient * rs

    product = ring_product_with_p1(ring_proj_space(n - 1))
    result = product.zero()
    h_gen, f_gen = product.gen("H"), product.gen("F")
    for mono, coeff in swept.terms.items():
        zexp, rs_exp, rt_exp = mono
        assert rs_exp == 1
        result = result + coeff * h_gen ** zexp * (f_gen ** rt_exp)
    return result


def rotating_directrix_closed_form(fam: DirectrixFamily) -> ChowClass:
    """H^(N-r) + (a+l+1) H^(N-r-1) F, the acceptance oracle for the
    pipeline computation."""
    product = ring_product_with_p1(ring_proj_space(fam.n - 1))
    h_gen, f_gen = product.gen("H"), product.gen("F")
    return (h_gen ** (fam.n - fam.r)
            + (fam.a + fam.l + 1) * h_gen ** (fam.n - fam.r - 1) * f_gen)


def perfectly_balanced_jump_count(n: int, a: int, l: int) -> Fraction:
    """Rotation count when the quotients are perfectly balanced of twist
    l+1 (formally r = N-1).

    The splitting type jumps at finitely many t; after twisting down by
    l+2 the quotient has no sections on any fiber, so the pushforward
    vanishes and the jump count is the length of the first derived
    pushforward, i.e. minus the Riemann-Roch degree.  The count is again
    a + l + 1.
    """
    if n < 3:
        raise InvalidFamily("need N >= 3")
    perfect = SplittingType((l + 1,) * (n - 1))
    twisted = SplittingType(tuple(d - (l + 2) for d in perfect.degrees))
    assert twisted.h0() == 0 and twisted.h1() == 0

    ring, c1_tw, c2_tw = _quotient_chern_data(n, a, -(l + 2))
    degree = grr_degree_on_p1xp1(c1_tw, c2_tw)
    count = -degree.constant_value()
    assert count == a + l + 1
    return Fraction(count)


def maroni_intersection_pentagonal(g_r: int) -> Fraction:
    """Maroni intersection number of the degree-five partial pencil of
    genus g_r: k_R + m_R with k_R = ceil(5(g+4)/6), m_R = ceil(-3(g+4)/4).

    Computed through the rotating-directrix pipeline applied to the twisted
    bundles E tensor (det E)^(-1) of rank four and degree -3(g+4): the
    substitutions are a = k_R and l + 1 = m_R.  When 4 divides 3(g+4) the
    quotients are perfectly balanced and the jump-count route applies.
    """
    k_r = k1_pentagonal(g_r)
    m_r = m_r_pentagonal(g_r)
    quotient_type = balanced_type(4, -3 * (g_r + 4))
    low = quotient_type.degrees[0]
    minimal_count = sum(1 for d in quotient_type.degrees if d == low)
    if minimal_count == 4:
        assert m_r == low
        count = perfectly_balanced_jump_count(5, k_r, m_r - 1)
    else:
        assert m_r == low + 1
        fam = DirectrixFamily(5, minimal_count, k_r, low)
        swept = rotating_directrix_class(fam)
        rotation_mono = (5 - fam.r - 1, 1)     # H^(N-r-1) F
        count = swept.coefficient(rotation_mono).constant_value()
    assert count == k_r + m_r
    return Fraction(count)
