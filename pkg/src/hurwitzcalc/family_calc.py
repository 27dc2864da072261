"""Invariants of one-parameter families of covers and the concrete pencil
records for degrees three, four, and five.

For a family of degree-d genus-g covers over a complete curve, the classes
lambda, kappa, delta, and the two ramification divisors T (triple point) and
D ((2,2)-pair) are polynomial expressions in the Chern data of the two
structural bundles.  This module computes them exactly, together with the
singular-element counts of the explicit pencils the divisor bounds rest on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, lcm

from .bundles import k1_pentagonal, m_r_pentagonal, v_tetragonal
from .chow import (ChowClass, Surface, canonical_class, grassmann_canonical_class,
                   ring_grassmann_bundle_g25, ring_proj_bundle_over_p1)
from .errors import InvalidProfile, OutOfRange, RingMismatch, UnknownKind
from .symkernel import Poly, PolyLike, RationalFunction


# ---------------------------------------------------------------------------
# lambda / kappa / delta / T / D from Chern data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChernData:
    """Chern data of the structural bundles of a one-parameter family.

    `d` and `g` may be symbols, so the identities among the derived
    invariants can be certified as polynomial identities.  At d = 3 the
    bundle of quadrics has rank zero, so ch2F must vanish.
    """

    d: PolyLike
    g: PolyLike
    ch2e: PolyLike
    ch2f: PolyLike
    c1sq: PolyLike

    def __post_init__(self):
        for name in ("d", "g", "ch2e", "ch2f", "c1sq"):
            object.__setattr__(self, name, Poly.coerce(getattr(self, name)))
        if self.d == Poly.const(3) and not self.ch2f.is_zero():
            raise OutOfRange("degree-three covers have no bundle of quadrics")

    @property
    def b(self) -> Poly:
        """Number of branch points, 2g + 2d - 2."""
        return 2 * self.g + 2 * self.d - 2


@dataclass(frozen=True)
class FamilyInvariants:
    """The five divisor-theoretic invariants of a family, plus the
    self-intersection of the ramification divisor."""

    lam: RationalFunction
    kappa: RationalFunction
    delta: RationalFunction
    t_div: RationalFunction
    d_div: RationalFunction
    r_squared: RationalFunction

    def as_dict(self) -> dict[str, RationalFunction]:
        return {"lambda": self.lam, "kappa": self.kappa, "delta": self.delta,
                "T": self.t_div, "D": self.d_div, "R^2": self.r_squared}


def invariants_from_chern(c: ChernData) -> FamilyInvariants:
    """Exact invariants of the family:

        lambda = ch2(E) - c1^2(E)/b
        kappa  = d ch2(E) - ch2(F) + (1/2 - 8/b) c1^2(E)
        delta  = (12-d) ch2(E) + ch2(F) - (1/2 + 4/b) c1^2(E)
        T      = (3d-12) ch2(E) - 3 ch2(F) + (3/2) c1^2(E)
        D      = 4 ch2(F) - (4d-12) ch2(E)
        R^2    = d ch2(E) - ch2(F) + c1^2(E)/2

    delta is pinned against lambda and kappa by 12 lambda = kappa + delta,
    and all five satisfy 24(b-1) lambda - 3(b-2) delta + 6D - (b-10) T = 0
    identically.
    """
    d, g = c.d, c.g
    e2 = RationalFunction(c.ch2e)
    f2 = RationalFunction(c.ch2f)
    s = RationalFunction(c.c1sq)
    b = RationalFunction(c.b)

    lam = e2 - s / b
    kappa = d * e2 - f2 + (Fraction(1, 2) - 8 / b) * s
    delta = (12 - d) * e2 + f2 - (Fraction(1, 2) + 4 / b) * s
    t_div = (3 * d - 12) * e2 - 3 * f2 + Fraction(3, 2) * s
    d_div = 4 * f2 - (4 * d - 12) * e2
    r_squared = d * e2 - f2 + s / 2
    return FamilyInvariants(lam, kappa, delta, t_div, d_div, r_squared)


def chern_from_basis(d: int, lam: RationalFunction, delta: RationalFunction,
                     d_div: RationalFunction,
                     g: PolyLike = "g") -> tuple[RationalFunction, ...]:
    """Invert the (lambda, delta, D) <- (ch2E, ch2F, c1^2E) change of basis
    at fixed degree d.  Degenerates at b = 10, i.e. g + d = 6."""
    g = Poly.var(g) if isinstance(g, str) else Poly.coerce(g)
    b = 2 * g + 2 * d - 2
    s = (9 * lam + d_div / 4 - delta) * RationalFunction(2 * b, b - 10)
    e2 = lam + s / RationalFunction(b)
    f2 = d_div / 4 + (d - 3) * e2
    return e2, f2, s


# ---------------------------------------------------------------------------
# Singular-element counts of pencils on surfaces
# ---------------------------------------------------------------------------

def pencil_delta_on_surface(surface: Surface, pencil_class: ChowClass) -> Poly:
    """Number of singular elements of a general pencil in |L| on a smooth
    surface, by the jet-bundle count: 3 L^2 + 2 L.K + c2(Omega)."""
    if pencil_class.ring != surface.ring:
        raise RingMismatch(f"pencil class must live on {surface.ring.name}")
    if pencil_class.degrees() != {1}:
        raise RingMismatch("pencil class must be a divisor class")
    l_sq = surface.dot(pencil_class, pencil_class)
    l_k = surface.dot(pencil_class, surface.K)
    return 3 * l_sq + 2 * l_k + surface.c2_omega


def pencil_delta_via_euler(surface: Surface, pencil_class: ChowClass) -> Poly:
    """The same count assembled from topological Euler characteristics:
    chi_top(blown-up surface) minus twice chi_top of the generic member."""
    l_sq = surface.dot(pencil_class, pencil_class)
    genus = surface.adjunction_genus(pencil_class)
    chi_total = surface.c2_omega + l_sq          # one blow-up per basepoint
    chi_fiber = 2 - 2 * genus
    return chi_total - 2 * chi_fiber


# ---------------------------------------------------------------------------
# The degree-four surface: a conic bundle inside P(E) for rank-three E
# ---------------------------------------------------------------------------

def _rebase_by_adjunction(raw: Poly, coeff: int, u: Poly, v: Poly, g_r: Poly) -> Poly:
    """Rewrite a (u, v)-expression using the genus relation g = u + v - 3:
    add coeff * (g_r - (u + v - 3)), which vanishes on the surface."""
    return raw + coeff * (g_r - (u + v - 3))


def _twisted_split_c2(rank: int, c1: Poly, fiber: ChowClass, twist: ChowClass) -> ChowClass:
    """c2 of (split rank-`rank` bundle pulled back from the line) tensor a
    line bundle with class `twist`: since the fiber class squares to zero,

        c2 = C(rank,2) twist^2 + (rank-1) c1 fiber twist.
    """
    return comb(rank, 2) * twist * twist + (rank - 1) * (fiber * twist) * c1


def c2_omega_tetragonal_surface(u: PolyLike, v: PolyLike, g_r: PolyLike) -> Poly:
    """c2 of the cotangent bundle of the conic-bundle surface in |2z - vf|
    inside P(E), E of rank three with c1(E) = u + v.

    Derived through three exact sequences (relative Euler, relative
    cotangent, conormal), landing on 3v + 6u - 4g - 8; the restriction of
    c2 of the ambient cotangent bundle is the intermediate 3v + 6u - 4g.
    """
    u, v, g_r = Poly.coerce(u), Poly.coerce(v), Poly.coerce(g_r)
    inter, final = _c2_omega_tetragonal_pipeline(u, v, g_r)
    return final


def c2_omega_tetragonal_ambient_restricted(u: PolyLike, v: PolyLike,
                                           g_r: PolyLike) -> Poly:
    """The intermediate of the pipeline: c2(Omega of P(E)) restricted to the
    surface, equal to 3v + 6u - 4g."""
    u, v, g_r = Poly.coerce(u), Poly.coerce(v), Poly.coerce(g_r)
    inter, final = _c2_omega_tetragonal_pipeline(u, v, g_r)
    return inter


def _c2_omega_tetragonal_pipeline(u: Poly, v: Poly, g_r: Poly) -> tuple[Poly, Poly]:
    c1e = u + v
    ring = ring_proj_bundle_over_p1(3, c1e)
    z, f = ring.gen("z"), ring.gen("f")
    surface_class = 2 * z - f * v

    # relative Euler sequence: Omega_rel = (pullback E)(-z) minus a trivial rank
    c1_rel = f * c1e - 3 * z
    c2_rel = _twisted_split_c2(3, c1e, f, -z)
    # relative cotangent sequence adds the pullback of Omega of the base line
    c1_ambient = c1_rel - 2 * f
    c2_ambient = c2_rel + c1_rel * (-2 * f)

    intermediate_raw = (c2_ambient * surface_class).integrate()
    intermediate = _rebase_by_adjunction(intermediate_raw, -4, u, v, g_r)
    assert intermediate == 6 * u + 3 * v - 4 * g_r

    # conormal sequence: c2(Omega_S) = c1(M)^2 - K_ambient.c1(M) + c2(Omega_ambient)|_S
    conormal = -surface_class
    k_ambient = canonical_class(ring)
    correction = conormal * conormal - k_ambient * conormal
    final_raw = ((correction + c2_ambient) * surface_class).integrate()
    final = _rebase_by_adjunction(final_raw, -4, u, v, g_r)
    assert final == 6 * u + 3 * v - 4 * g_r - 8
    return intermediate, final


def surface_tetragonal(u: PolyLike, v: PolyLike) -> Surface:
    """The smooth conic-bundle surface in |2z - vf| inside P(E) for a
    rank-three bundle E = O(u) + O(v) (so c1(E) = u + v); its curves in
    |2z - uf| are the degree-four covers of genus u + v - 3."""
    u, v = Poly.coerce(u), Poly.coerce(v)
    g_r = u + v - 3
    ring = ring_proj_bundle_over_p1(3, u + v)
    z, f = ring.gen("z"), ring.gen("f")
    fundamental = 2 * z - f * v
    k_surface = canonical_class(ring) + fundamental
    c2 = c2_omega_tetragonal_surface(u, v, g_r)
    return Surface("conic-bundle", ring, k_surface, c2, fundamental)


def tetragonal_pencil_delta(g_r: int) -> Fraction:
    """Singular elements of the basic degree-four pencil: v + 6g + 6, with
    v = ceil((g+3)/2) the larger twist of the rank-two bundle F."""
    v = v_tetragonal(g_r)
    u = g_r + 3 - v
    surface = surface_tetragonal(u, v)
    z, f = surface.ring.gen("z"), surface.ring.gen("f")
    delta = pencil_delta_on_surface(surface, 2 * z - u * f)
    assert delta == pencil_delta_via_euler(surface, 2 * z - u * f)
    return delta.constant_value()


# ---------------------------------------------------------------------------
# Degree-five pencils through the Grassmannian bundle
# ---------------------------------------------------------------------------

def pentagonal_pencil_symbolic(g: PolyLike = "g", k1: PolyLike = "k1") -> dict[str, Poly]:
    """The degree-five pencil invariants with the genus and the top kernel
    twist kept symbolic.

    Pipeline: the canonical class of the Grassmannian bundle gives the
    canonical class of the elliptic-fibration surface as (g + 2 - k1) f;
    the elliptic-fibration canonical-bundle formula then pins
    chi(O) = g + 4 - k1, Noether converts it to chi_top (the canonical class
    is a fiber multiple, so K^2 = 0), and the basepoint count B comes from
    intersection numbers on the bundle.  The pencil invariants follow:

        lambda = 2g + 3 - k1,   delta = 13g + 32 - 7k1,   B = 5k1 - 3(g+4).
    """
    g = Poly.var(g) if isinstance(g, str) else Poly.coerce(g)
    k1 = Poly.var(k1) if isinstance(k1, str) else Poly.coerce(k1)
    c1e = g + 4
    c1_f_dual = -2 * (g + 4)          # deg F = 2 deg E for degree-five covers
    kernel_degree_sum = 5 * (g + 4)   # the k_i sum to 5(g+4)

    ring = ring_grassmann_bundle_g25(c1_f_dual)
    z, f = ring.gen("z"), ring.gen("f")

    # basepoints: (z + k1 f)^2 . prod_{i>=2}(z + k_i f), expanded with
    # symbolic twists and only their sum substituted at the end
    ks = [k1] + [Poly.var(f"k{i}") for i in range(2, 7)]
    product = ring.one()
    for k in ks:
        product = product * (z + f * k)
    b_raw = ((z + f * k1) * product).integrate()
    tail_sum = kernel_degree_sum - k1
    b_count = _substitute_symmetric_tail(b_raw, [f"k{i}" for i in range(2, 7)], tail_sum)
    assert b_count == 5 * k1 - 3 * (g + 4)

    # canonical class of the surface: the five cutting divisors plus K of
    # the bundle; the z-terms cancel and only a fiber multiple survives
    k_bundle = grassmann_canonical_class(ring)
    cutting = ring.zero()
    for k in ks[1:]:
        cutting = cutting + (z + f * k)
    k_surface = cutting + k_bundle
    assert k_surface.coefficient((1, 0)).is_zero()
    k_fiber_raw = k_surface.coefficient((0, 1))
    k_fiber = _substitute_symmetric_tail(k_fiber_raw, [f"k{i}" for i in range(2, 7)], tail_sum)
    assert k_fiber == g + 2 - k1

    chi_structure = k_fiber + 2          # K = (chi(O) - 2) f for the fibration
    chi_top_surface = 12 * chi_structure  # Noether with K^2 = 0
    chi_top_total = chi_top_surface + b_count
    delta = chi_top_total - 2 * (2 - 2 * g)
    lam = chi_structure - (1 - g)
    assert lam == 2 * g + 3 - k1
    assert delta == 13 * g + 32 - 7 * k1
    return {"lambda": lam, "delta": delta, "B": b_count, "K_fiber": k_fiber,
            "chi_structure": chi_structure}


def _substitute_symmetric_tail(p: Poly, names: list[str], total: Poly) -> Poly:
    """Substitute a symmetric linear dependence on `names` by their sum."""
    first = p.coefficient(((names[0], 1),))
    for name in names:
        mono = ((name, 1),)
        if p.coefficient(mono) != first:
            raise AssertionError("expression is not symmetric in the tail twists")
        if any(name in {n for n, _ in m} and m != mono for m in p.terms):
            raise AssertionError("expression is not linear in the tail twists")
    share = total / len(names)
    return p.subs({name: share for name in names})


def pentagonal_pencil_numbers(g_r: int) -> dict[str, Fraction]:
    """Exact invariants of a general degree-five pencil of genus g_r >= 2:
    k1, the basepoint count B, and the pencil's lambda and delta.  delta is
    recomputed through the Euler-characteristic pipeline inside
    :func:`pentagonal_pencil_symbolic`."""
    if g_r < 2:
        raise OutOfRange("pentagonal pencils need genus >= 2")
    k1 = k1_pentagonal(g_r)
    sym = pentagonal_pencil_symbolic(Poly.const(g_r), Poly.const(k1))
    return {
        "k1": Fraction(k1),
        "B": sym["B"].constant_value(),
        "lambda": sym["lambda"].constant_value(),
        "delta": sym["delta"].constant_value(),
    }


# ---------------------------------------------------------------------------
# Base-change section bookkeeping (degree-five ramified families)
# ---------------------------------------------------------------------------

def basechange_section_bookkeeping(d: int, branch_points: int,
                                   profile: tuple[int, ...]) -> dict[str, Fraction]:
    """Self- and pairwise-intersections of the d sections appearing after
    the degree-d! base change that kills the monodromy of a d-fold
    multisection with the given number of simple branch points.

    The recorded convention: the total pairwise meeting count is
    branch_points * d!/2, distributed evenly over the C(d,2) pairs; the
    section self-intersection solves (sum of sections)^2 = 0 as
    -(total)/d; and the admissibility blow-ups subtract one per meeting
    incident to the section and two per meeting of a disjoint pair.
    """
    if d < 2:
        raise InvalidProfile("need degree >= 2")
    if not profile or any(m < 1 for m in profile) or sum(profile) != d:
        raise InvalidProfile(f"{profile} is not a partition of {d}")
    n_sections = d
    total = Fraction(branch_points * factorial(d), 2)
    pair_int = total / comb(n_sections, 2)
    self_int = -total / n_sections
    blown = (self_int
             - (n_sections - 1) * pair_int
             - 2 * comb(n_sections - 1, 2) * pair_int)
    return {
        "pairInt": pair_int,
        "selfInt": self_int,
        "blownSelfInt": blown,
        "lcmOrder": Fraction(lcm(*profile)),
    }


# ---------------------------------------------------------------------------
# Pencil records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PencilRecord:
    """The numeric shadow of a (partial) pencil family: its lambda and
    delta, its intersection numbers with the boundary divisors it touches
    (by role), and its intersection with the divisor class X.

    For families that sweep the boundary divisor containing them, the X-,
    Maroni-, and quadric-locus intersections are only known to be
    nonnegative; those carry the tag ">=0" instead of a number.
    """

    kind: str
    params: dict[str, int]
    lam: Fraction
    delta: Fraction
    boundary_hits: dict[str, Fraction]
    x_hit: Fraction | str = ">=0"
    maroni_hit: Fraction | str = ">=0"
    ce_hit: Fraction | str = ">=0"
    sweeps: bool = True
    extras: dict[str, Fraction] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.sweeps:
            for tag in (self.maroni_hit, self.ce_hit):
                if not isinstance(tag, str) and tag < 0:
                    raise ValueError("sweeping families meet the special loci nonnegatively")

    def to_json(self) -> dict:
        def enc(x):
            return str(x)
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "lambda": enc(self.lam),
            "delta": enc(self.delta),
            "boundaryHits": {k: enc(v) for k, v in self.boundary_hits.items()},
            "xHit": enc(self.x_hit),
            "maroniHit": enc(self.maroni_hit),
            "ceHit": enc(self.ce_hit),
            "sweeps": self.sweeps,
            "extras": {k: enc(v) for k, v in self.extras.items()},
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PencilRecord":
        def dec(s):
            return s if s == ">=0" else Fraction(s)
        return cls(
            kind=data["kind"],
            params={k: int(v) for k, v in data["params"].items()},
            lam=Fraction(data["lambda"]),
            delta=Fraction(data["delta"]),
            boundary_hits={k: Fraction(v) for k, v in data["boundaryHits"].items()},
            x_hit=dec(data["xHit"]),
            maroni_hit=dec(data["maroniHit"]),
            ce_hit=dec(data["ceHit"]),
            sweeps=data["sweeps"],
            extras={k: Fraction(v) for k, v in data.get("extras", {}).items()},
            notes=tuple(data.get("notes", ())),
        )


PENCIL_KINDS = (
    "rational_partial",
    "trigonal_plain",
    "trigonal_unramified_3pts",
    "trigonal_ramified_21",
    "trigonal_triple",
    "hyperelliptic_plain",
    "hyperelliptic_3vertex",
    "hyperelliptic_4vertex",
    "tetragonal_plain",
    "tetragonal_unramified_4pts",
    "tetragonal_ramified_2pp",
    "pentagonal_plain",
    "pentagonal_unramified_5pts",
    "pentagonal_basechange",
)

_PENTAGONAL_DELTA_NOTE = (
    "the leading delta coefficient 13 is pinned by the Euler-characteristic "
    "pipeline; the digit-transposed 31 fails it")


def trigonal_pencil_delta(g_r: int) -> Fraction:
    """Singular members of the basic trigonal pencil, 7g + 6, computed on
    the quadric surface (even genus) or its blown-up twin (odd genus)."""
    from .chow import surface_hirzebruch, surface_p1xp1
    if g_r % 2 == 0:
        surface = surface_p1xp1()
        k = g_r // 2 + 1
        rs, rt = surface.ring.gen("Rs"), surface.ring.gen("Rt")
        # bidegree (3, k): degree three over one ruling, genus 2(k-1) = g_r
        pencil = k * rs + 3 * rt
        delta = pencil_delta_on_surface(surface, pencil)
        assert delta == pencil_delta_via_euler(surface, pencil)
        assert surface.adjunction_genus(pencil) == g_r
        return delta.constant_value()
    surface = surface_hirzebruch(Poly.const(1))
    m = (g_r - 1) // 2
    tau, f = surface.ring.gen("tau"), surface.ring.gen("f")
    pencil = 3 * tau + m * f
    delta = pencil_delta_on_surface(surface, pencil)
    assert delta == pencil_delta_via_euler(surface, pencil)
    assert surface.adjunction_genus(pencil) == g_r
    return delta.constant_value()


def hyperelliptic_pencil_delta(g_r: int) -> Fraction:
    """Singular members of the genus-g hyperelliptic pencil on F_g: 8g + 4."""
    from .chow import surface_hirzebruch
    surface = surface_hirzebruch(Poly.const(g_r))
    tau, f = surface.ring.gen("tau"), surface.ring.gen("f")
    delta = pencil_delta_on_surface(surface, 2 * tau + f)
    assert delta == pencil_delta_via_euler(surface, 2 * tau + f)
    return delta.constant_value()


def partial_pencil_record(kind: str, **params: int) -> PencilRecord:
    """The intersection record of one of the named (partial) pencil
    families.  `gr` is the genus of the varying right side; pentagonal
    records also take the total genus `g` (for the X-intersection)."""
    if kind not in PENCIL_KINDS:
        raise UnknownKind(f"unknown pencil kind {kind!r}; known: {PENCIL_KINDS}")

    if kind == "rational_partial":
        dv = params.get("dv", 3)
        return PencilRecord(kind, {"dv": dv}, Fraction(0), Fraction(dv),
                            {"delta_self": Fraction(-1)})

    g_r = params["gr"]

    if kind == "trigonal_plain":
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            trigonal_pencil_delta(g_r), {})
    if kind == "trigonal_unramified_3pts":
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            trigonal_pencil_delta(g_r) - 3,
                            {"delta_self": Fraction(-1), "delta_split": Fraction(1)})
    if kind == "trigonal_ramified_21":
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            trigonal_pencil_delta(g_r) - 2,
                            {"delta_self": Fraction(-1), "delta_split": Fraction(1),
                             "delta_ram": Fraction(1)})
    if kind == "trigonal_triple":
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            trigonal_pencil_delta(g_r) - 1,
                            {"delta_self": Fraction(-1), "delta_split": Fraction(1),
                             "delta_ram": Fraction(1)})

    if kind == "hyperelliptic_plain":
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            hyperelliptic_pencil_delta(g_r), {})
    if kind == "hyperelliptic_3vertex":
        # both attaching nodes sit on the main vertex and contribute,
        # so two units come off the plain count 8g + 4
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            hyperelliptic_pencil_delta(g_r) - 2,
                            {"delta_self": Fraction(-1), "delta_split": Fraction(1)})
    if kind == "hyperelliptic_4vertex":
        # the section glued to the rational vertex meets a node that does
        # not contribute to delta, so only one unit is subtracted
        return PencilRecord(kind, {"gr": g_r}, Fraction(g_r),
                            hyperelliptic_pencil_delta(g_r) - 1,
                            {"delta_self": Fraction(-1), "delta_split": Fraction(1)})

    if kind.startswith("tetragonal"):
        base = tetragonal_pencil_delta(g_r)
        v = v_tetragonal(g_r)
        if kind == "tetragonal_plain":
            return PencilRecord(kind, {"gr": g_r, "v": v}, Fraction(g_r), base, {})
        if kind == "tetragonal_unramified_4pts":
            return PencilRecord(kind, {"gr": g_r, "v": v}, Fraction(g_r), base - 4,
                                {"delta_self": Fraction(-1), "delta_split": Fraction(1)})
        if kind == "tetragonal_ramified_2pp":
            return PencilRecord(kind, {"gr": g_r, "v": v}, Fraction(g_r), base - 3,
                                {"delta_self": Fraction(-1), "delta_split": Fraction(1),
                                 "delta_ram": Fraction(1)})

    if kind == "pentagonal_plain":
        numbers = pentagonal_pencil_numbers(g_r)
        return PencilRecord(kind, {"gr": g_r, "k1": int(numbers["k1"])},
                            numbers["lambda"], numbers["delta"], {},
                            notes=(_PENTAGONAL_DELTA_NOTE,))

    g = params["g"]
    k_r = k1_pentagonal(g_r)
    m_r = m_r_pentagonal(g_r)
    weight = Fraction(2 * g - 22, 5)
    maroni = Fraction(k_r + m_r)

    if kind == "pentagonal_unramified_5pts":
        numbers = pentagonal_pencil_numbers(g_r)
        return PencilRecord(
            kind, {"gr": g_r, "g": g, "kR": k_r, "mR": m_r},
            numbers["lambda"], numbers["delta"] - 5,
            {"delta_self": Fraction(-1), "delta_split": Fraction(1)},
            x_hit=weight * maroni, maroni_hit=maroni, ce_hit=Fraction(0),
            sweeps=False, notes=(_PENTAGONAL_DELTA_NOTE,))

    if kind == "pentagonal_basechange":
        numbers = pentagonal_pencil_numbers(g_r)
        n = factorial(5)
        books = basechange_section_bookkeeping(5, 10, (2, 1, 1, 1))
        return PencilRecord(
            kind, {"gr": g_r, "g": g, "kR": k_r, "mR": m_r},
            n * numbers["lambda"], n * numbers["delta"] - 2400,
            {"delta_self": books["blownSelfInt"],
             "delta_collision": Fraction(600)},
            x_hit=n * weight * maroni, maroni_hit=n * maroni, ce_hit=Fraction(0),
            sweeps=False,
            extras={"sectionSelfInt": books["selfInt"],
                    "sectionPairInt": books["pairInt"]},
            notes=(_PENTAGONAL_DELTA_NOTE,))

    raise UnknownKind(kind)


def pentagonal_basechange_profile_record(g: int, g_r: int,
                                         profile: tuple[int, ...]) -> PencilRecord:
    """Reconstructed record for the base-changed degree-five family whose
    marked fiber degenerates with the given ramification profile.

    The section bookkeeping is profile-independent (each pair of sections
    meets d!/2 times in total, whether transversely over simple collisions
    or tangentially over the marked point), so the self-intersection of the
    family inside its boundary divisor is always -9 * 5!.  The family meets
    the simple-collision divisor over (10 - r) * 5!/2 points and the
    profile divisor over 5!/lcm points, r being the profile's ramification
    index.
    """
    if sum(profile) != 5 or any(m < 1 for m in profile):
        raise InvalidProfile(f"{profile} is not a partition of 5")
    r = sum(m - 1 for m in profile)
    if r < 1:
        raise InvalidProfile("the profile must carry ramification")
    if g_r < 1:
        raise OutOfRange("base-change families need genus >= 1")
    n = factorial(5)
    k_r = k1_pentagonal(g_r)
    m_r = m_r_pentagonal(g_r)
    if g_r >= 2:
        numbers = pentagonal_pencil_numbers(g_r)
    else:
        # genus one: the closed formulas extend the Euler pipeline
        numbers = {"lambda": Fraction(2 * g_r + 3 - k_r),
                   "delta": Fraction(13 * g_r + 32 - 7 * k_r)}
    weight = Fraction(2 * g - 22, 5)
    maroni = Fraction(k_r + m_r)
    hits = {"delta_self": Fraction(-9 * n),
            "delta_profile": Fraction(n, lcm(*profile))}
    simple = Fraction((10 - r) * n, 2)
    if simple:
        hits["delta_collision"] = simple
    return PencilRecord(
        "pentagonal_basechange", {"gr": g_r, "g": g, "kR": k_r, "mR": m_r},
        n * numbers["lambda"], n * numbers["delta"] - 20 * n,
        hits,
        x_hit=n * weight * maroni, maroni_hit=n * maroni, ce_hit=Fraction(0),
        sweeps=False,
        notes=(_PENTAGONAL_DELTA_NOTE,
               f"reconstructed for profile {profile}"))
