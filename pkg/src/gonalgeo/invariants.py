"""Exact numerical invariants of the fibered surface carried by a family
of simple branched covers.

A family is pinned down by three choices: the collision census of one
(k, b), the genus of the base curve the branch points move on, and the
total degree c of the divisor the b branch points sweep out.  The
parameter curve of the family covers the base curve with degree the
class count, simply branched over collisions of overlapping type, which
fixes its genus; the surface fibered over the parameter curve then has
every invariant a polynomial in the census counts and (c, base genus).
Evaluation is exact throughout: integers where integrality is
guaranteed, Fraction elsewhere, no floating point.

The audit half of the module walks the long route to the canonical
self-intersection (branch curve on a product, blow-up of its nodes,
ramification of the pulled-back cover) and reports each station against
the closed forms, carrying two candidate cross terms side by side; see
``audit_chain``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .degeneration import DegenerationCensus
from .errors import InvariantViolation, ParameterError

# Pointwise facts used by the audit narrative, not recomputed: a fiber
# component of self-intersection -1 through a blown-up collision meets
# the ramification divisor 0 times and the residual divisor twice; a
# component of self-intersection -2 meets them the other way around.
MINUS_ONE_COMPONENT_MEETS = {"ramification": 0, "residual": 2}
MINUS_TWO_COMPONENT_MEETS = {"ramification": 2, "residual": 0}


@dataclass(frozen=True)
class FamilyParams:
    """One family of covers: a census plus the base-curve data.

    ``c`` is the total degree of the moving branch divisor (the b branch
    points sweep out divisors of degrees summing to c).  Geometric
    families need every summand at least 1 and, on a general base curve,
    at least base_genus + 3; violations are cautions, not errors, since
    the invariant formulas are polynomial identities either way.
    """

    k: int
    g: int
    b: int
    c: int
    base_genus: int
    census: DegenerationCensus
    special_base: bool = False

    def __post_init__(self):
        if self.b != 2 * self.g + 2 * self.k - 2:
            raise ParameterError(
                f"branch count {self.b} does not match genus {self.g} and degree {self.k}"
            )
        if (self.census.k, self.census.b) != (self.k, self.b):
            raise ParameterError(
                f"census is for ({self.census.k}, {self.census.b}), "
                f"family wants ({self.k}, {self.b})"
            )
        if self.c < 0:
            raise ParameterError(f"branch divisor degree must be nonnegative, got {self.c}")
        if self.base_genus < 0:
            raise ParameterError(f"base genus must be nonnegative, got {self.base_genus}")

    @classmethod
    def from_census(
        cls,
        census: DegenerationCensus,
        c: int,
        base_genus: int,
        special_base: bool = False,
    ) -> "FamilyParams":
        return cls(census.k, census.g, census.b, c, base_genus, census, special_base)

    @property
    def collision_count_base(self) -> int:
        """Points of the base curve where two branch points meet: (b-1)c."""
        return (self.b - 1) * self.c

    @property
    def cautions(self) -> tuple[str, ...]:
        out = []
        if self.c < self.b:
            out.append(
                f"branch degree {self.c} is below the branch count {self.b}; "
                "no geometric family moves every branch point"
            )
        floor = self.b * (self.base_genus + 3)
        if not self.special_base and self.c < floor:
            out.append(
                f"branch degree {self.c} is below the very-ampleness floor {floor} "
                "for a general base curve of this genus"
            )
        return tuple(out)


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of the fibered surface, all exact.

    ``ratio`` and ``slope`` are None when their denominators vanish.
    ``q_label`` quotes the irregularity of a general member, which equals
    the parameter-curve genus; it is a label, not a derived value.
    """

    parameter_genus: int
    collision_count_base: int
    collision_count_parameter: int
    singular_fiber_count: int
    euler: int
    k2: int
    chi: Fraction
    chi_integral: bool
    k2_coeff: int
    chi_coeff: Fraction
    excess: Fraction
    positive_index: bool
    ratio: Fraction | None
    slope: Fraction | None
    q_label: int

    def as_payload(self) -> dict:
        out: dict = {}
        notes = []
        for name in (
            "parameter_genus", "collision_count_base", "collision_count_parameter",
            "singular_fiber_count", "euler", "k2", "chi", "k2_coeff", "chi_coeff",
            "excess", "ratio", "slope",
        ):
            value = getattr(self, name)
            if value is None:
                notes.append(f"{name} omitted: denominator is zero")
            else:
                out[name] = rational_payload(value)
        out["chi_integral"] = self.chi_integral
        out["positive_index"] = self.positive_index
        out["q_label"] = self.q_label
        if notes:
            out["notes"] = notes
        return out


def rational_payload(value) -> dict:
    """Exact rational as JSON-safe strings; the float is a convenience
    approximation and never authoritative."""
    fr = Fraction(value)
    return {
        "numerator": str(fr.numerator),
        "denominator": str(fr.denominator),
        "approx": float(fr),
    }


def genus_y(p: FamilyParams) -> int:
    """Genus of the parameter curve, from the degree and the branching
    contributed by overlapping-type collisions."""
    cen = p.census
    doubled = cen.classes * (2 * p.base_genus - 2) + 2 * p.collision_count_base * (
        cen.type_three // 3
    )
    if doubled % 2:
        raise InvariantViolation(
            f"parameter-curve genus is not integral for ({p.k}, {p.b}), c={p.c}, "
            f"base genus {p.base_genus}"
        )
    return 1 + doubled // 2


def surface_invariants(p: FamilyParams) -> SurfaceInvariants:
    """Evaluate every closed-form invariant, with the built-in identity
    checks (Noether; excess closed form against direct subtraction).

    >>> from gonalgeo.degeneration import census
    >>> pack = FamilyParams.from_census(census(3, 4), c=8, base_genus=2)
    >>> inv = surface_invariants(pack)
    >>> inv.parameter_genus, inv.k2, inv.chi, inv.euler
    (29, -224, Fraction(-28, 1), -112)
    >>> inv.excess, inv.ratio, inv.slope is None
    (Fraction(0, 1), Fraction(8, 1), True)
    """
    cen = p.census
    n, n1, n22, n3 = cen.classes, cen.type_one, cen.type_two_two, cen.type_three
    e = cen.rational_splits
    g, b, c, gx = p.g, p.b, p.c, p.base_genus
    third = n3 // 3
    m = p.collision_count_base
    gy = genus_y(p)

    r = cen.singular * m
    euler = 4 * (g - 1) * (gy - 1) + 2 * r
    k2_coeff = (b - 1) * (2 * e + n1 + (8 * g - 7) * third) - 3 * n
    k2 = c * k2_coeff + 8 * n * (gx - 1) * (g - 1)
    chi_coeff = Fraction((b - 1) * (3 * n1 + (12 * g - 11) * third) - 3 * n, 12)
    chi = c * chi_coeff + n * (gx - 1) * (g - 1)

    excess = c * ((b - 1) * (2 * e - n1 + Fraction(n3, 9)) - n)
    if excess != k2 - 8 * chi:
        raise InvariantViolation(
            f"excess closed form {excess} disagrees with direct K2 - 8*chi "
            f"{k2 - 8 * chi}: transcription bug"
        )
    if 12 * chi != k2 + euler:
        raise InvariantViolation(
            f"Noether identity failed: 12*chi={12 * chi}, K2+e={k2 + euler}"
        )

    rel = (g - 1) * (gy - 1)
    rel_chi = chi - rel
    return SurfaceInvariants(
        parameter_genus=gy,
        collision_count_base=m,
        collision_count_parameter=(n1 + n22 + third) * m,
        singular_fiber_count=r,
        euler=euler,
        k2=k2,
        chi=chi,
        chi_integral=chi.denominator == 1,
        k2_coeff=k2_coeff,
        chi_coeff=chi_coeff,
        excess=excess,
        positive_index=excess > 0,
        ratio=Fraction(k2) / chi if chi else None,
        slope=Fraction(k2 - 8 * rel) / rel_chi if rel_chi else None,
        q_label=gy,
    )


def euler_characteristic(p: FamilyParams) -> int:
    return surface_invariants(p).euler


def k_squared(p: FamilyParams) -> int:
    return surface_invariants(p).k2


def chi_holomorphic(p: FamilyParams) -> Fraction:
    return surface_invariants(p).chi


def index_excess(p: FamilyParams) -> Fraction:
    return surface_invariants(p).excess


def ratio_and_slope(p: FamilyParams) -> tuple[Fraction | None, Fraction | None]:
    inv = surface_invariants(p)
    return inv.ratio, inv.slope


@dataclass(frozen=True)
class AuditReport:
    """Stations of the long computation, each exact.

    The cross term of the pulled-back canonical class is carried twice.
    ``reference_cross_term`` is the branch curve against the canonical
    class of the plain product (the classically quoted intermediate);
    ``derived_cross_term`` is the first-principles value on the blow-up,
    where the strict transform loses twice the exceptional stack and the
    canonical class gains it once, so the two differ by exactly
    reference_cross_term + 4 * (number of blown-up collisions).  Only
    the derived chain is expected to land on the closed form; nothing is
    asserted either way, the discrepancies are report content.
    """

    exceptional_sq: int
    strict_transform_sq: int
    ramification_sq: int
    ram_cross: int
    ka_sq: int
    pullback_ka_sq: int
    reference_cross_term: int
    derived_cross_term: int
    reference_kg2: int
    reference_ks2: int
    reference_kf2: int
    derived_kg2: int
    derived_ks2: int
    derived_kf2: int
    kf2_closed_form: int
    derived_matches_closed: bool
    reference_discrepancy: int
    derived_discrepancy: int

    def as_payload(self) -> dict:
        out: dict = {}
        for name in (
            "exceptional_sq", "strict_transform_sq", "ramification_sq", "ram_cross",
            "ka_sq", "pullback_ka_sq", "reference_cross_term", "derived_cross_term",
            "reference_kg2", "reference_ks2", "reference_kf2",
            "derived_kg2", "derived_ks2", "derived_kf2",
            "kf2_closed_form", "reference_discrepancy", "derived_discrepancy",
        ):
            out[name] = rational_payload(getattr(self, name))
        out["derived_matches_closed"] = self.derived_matches_closed
        out["component_intersections"] = {
            "minus_one": MINUS_ONE_COMPONENT_MEETS,
            "minus_two": MINUS_TWO_COMPONENT_MEETS,
        }
        return out


def audit_chain(p: FamilyParams) -> AuditReport:
    """Recompute the canonical self-intersection the long way.

    The branch curve sits in the product of the parameter curve with the
    line; its nodes (one per equal-type collision) are blown up, the
    degree-k cover is pulled back, and the canonical self-intersection
    of the resulting surface is chained through the ramification
    divisor, the cross term, and the pulled-back canonical class, then
    corrected for contracted components and collision fibers.
    """
    cen = p.census
    n, n1, n22, n3 = cen.classes, cen.type_one, cen.type_two_two, cen.type_three
    e = cen.rational_splits
    k, b, c, gx = p.k, p.b, p.c, p.base_genus
    third = n3 // 3
    m = p.collision_count_base
    gy = genus_y(p)

    exceptional_sq = -m * n1
    strict_transform_sq = 2 * b * c * n - 4 * m * n1
    ramification_sq = (n + (b - 1) * (third - n1)) * c
    ram_cross = m * (2 * n22 + 4 * third)
    ka_sq = -(8 * (gy - 1) + m * n1)
    pullback_ka_sq = k * ka_sq

    # branch curve against -2s + (2gy - 2)f on the plain product
    reference_cross = (2 * b * (gx - 1) - 2 * c) * n + 2 * b * m * third
    derived_cross = 2 * reference_cross + 4 * m * n1

    def chain(cross: int) -> tuple[int, int, int]:
        kg2 = ramification_sq + cross + pullback_ka_sq
        ks2 = kg2 + (k - 2) * n1 * m
        kf2 = ks2 + 2 * m * e
        return kg2, ks2, kf2

    ref_kg2, ref_ks2, ref_kf2 = chain(reference_cross)
    der_kg2, der_ks2, der_kf2 = chain(derived_cross)
    closed = k_squared(p)
    return AuditReport(
        exceptional_sq=exceptional_sq,
        strict_transform_sq=strict_transform_sq,
        ramification_sq=ramification_sq,
        ram_cross=ram_cross,
        ka_sq=ka_sq,
        pullback_ka_sq=pullback_ka_sq,
        reference_cross_term=reference_cross,
        derived_cross_term=derived_cross,
        reference_kg2=ref_kg2,
        reference_ks2=ref_ks2,
        reference_kf2=ref_kf2,
        derived_kg2=der_kg2,
        derived_ks2=der_ks2,
        derived_kf2=der_kf2,
        kf2_closed_form=closed,
        derived_matches_closed=der_kf2 == closed,
        reference_discrepancy=ref_kf2 - closed,
        derived_discrepancy=der_kf2 - closed,
    )
