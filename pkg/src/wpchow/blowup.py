"""The weighted blow-up of a smooth surface point and the moduli assembly.

Blowing up A^2 at the origin with weights (w1, w2) means passing to the
quotient of A^3 (coordinates x, y, u of weights w1, w2, -1) minus the
locus {x = y = 0}.  The exceptional divisor is P(w1, w2); restricting the
ideal sheaf of the exceptional divisor to it gives O(1), which is the
source of every class-level identity used here.

The moduli application: blowing up the cuspidal point of P(2, 3, 4) with
weights (4, 6) produces the compactified moduli stack of 2-pointed
genus-1 curves, fibered over P(4, 6) by the completed-square family of
``wpchow.curves``.  The blow-up enters purely through its class-level
consequences:

* the localization sequence splits, giving degreewise
  A^n(total) = A^(n-1)(P(4, 6)) + A^n(U) for U the cusp complement;
* the exceptional class y satisfies y^2 |-> c1(O_E(-1)) = -t under the
  fiberwise pushforward and restricts to 0 on U;
* the pulled-back hyperplane class x satisfies x*y = 0 and x^2 |-> t.

Every assembled presentation is cross-checked degreewise against that
split decomposition; a disagreement raises
:class:`AssemblyMismatchError` and signals an implementation bug.

Recorded fact, used by no computation here: on the Zariski chart of
P(2, 3, 4) where the weight-2 and weight-3 coordinates are invertible,
the ambient is an affine plane and the change of variables x -> y,
y -> x + y + 1 moves the blown-up cuspidal point to the origin, so the
surface blow-up picture above literally applies to the moduli case.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .curves import discriminant_polynomial
from .graded import (
    GradedElement,
    GradedPresentation,
    graded_piece,
    hom_check,
    is_zero,
    pieces_equal,
    quotient,
)
from .intlinalg import AbelianGroupShape
from .poly import Poly, WeightedGrading, weighted_degree
from .wps import (
    HypersurfaceComplementInput,
    WeightedProjectiveStack,
    chow_of_complement,
    chow_ring,
    line_image_class,
    pic_complement,
    point_class,
)

__all__ = [
    "AssemblyMismatchError",
    "BlowupData",
    "ChartData",
    "ExceptionalSquare",
    "MODULI_AMBIENT",
    "MODULI_BLOWUP",
    "chart",
    "check_split_assembly",
    "cusp_complement_chow",
    "cusp_locus_class",
    "discriminant_hypersurface",
    "exceptional_selfintersection",
    "invariant_ring_check",
    "m12_open_chow",
    "m12bar_chow",
    "phi_degree2_images",
    "restriction_hom",
    "RestrictionHom",
]


class AssemblyMismatchError(Exception):
    """An assembled presentation disagrees with its split decomposition."""


@dataclass(frozen=True)
class BlowupData:
    """Weights of a blow-up of a smooth surface point."""

    w1: int
    w2: int

    def __post_init__(self):
        if self.w1 < 1 or self.w2 < 1:
            raise ValueError("blow-up weights must be positive integers")

    @property
    def ambient_grading(self) -> WeightedGrading:
        """Weights (w1, w2, -1) on the coordinates (x, y, u) of [A^3/Gm]."""
        return WeightedGrading({"x": self.w1, "y": self.w2, "u": -1})

    @property
    def exceptional(self) -> WeightedProjectiveStack:
        return WeightedProjectiveStack((self.w1, self.w2))


@dataclass(frozen=True)
class ChartData:
    """Literal chart data of the blow-up, recorded for documentation.

    The chart covering {x != 0} (``which == 1``) is the quotient of A^2 by
    mu_{w1} embedded via (a, b) -> (1, a, b); the {y != 0} chart is
    symmetric.  The recorded action weights and the exponent in the group
    homomorphism xi -> xi^-i are stored as given: the exponent is not
    pinned down by the chart construction and the first weight is trivial
    modulo the group order, so ``exponent_unresolved`` flags the
    ambiguity and nothing downstream consumes these fields.
    """

    which: int
    group_order: int
    action_weights: tuple[int, int]
    alpha: str
    beta: str
    exponent_unresolved: bool = True


def chart(data: BlowupData, which: int) -> ChartData:
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    order = data.w1 if which == 1 else data.w2
    alpha = "(a, b) -> (1, a, b)" if which == 1 else "(a, b) -> (a, 1, b)"
    return ChartData(
        which=which,
        group_order=order,
        action_weights=(-order, 1),
        alpha=alpha,
        beta=f"xi -> xi^-i for xi a {order}-th root of unity",
    )


def invariant_ring_check(w1: int, w2: int, degree_bound: int) -> bool:
    """Check R[x, y, u]^Gm = R[u^w1*x, u^w2*y] up to total degree bound.

    Enumerates every monomial x^i * y^j * u^k with i + j + k <= bound that
    is invariant (weighted degree 0 under (w1, w2, -1)) and verifies, by
    exact polynomial arithmetic, that it equals (u^w1*x)^i * (u^w2*y)^j.
    """
    if w1 < 1 or w2 < 1:
        raise ValueError("weights must be positive integers")
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    grading = WeightedGrading({"x": w1, "y": w2, "u": -1})
    x, y, u = (Poly.variable(v) for v in ("x", "y", "u"))

    def powers(base: Poly) -> list[Poly]:
        table = [Poly.constant(1)]
        for _ in range(degree_bound):
            table.append(table[-1] * base)
        return table

    x_pow, y_pow, u_pow = powers(x), powers(y), powers(u)
    first_pow = powers(u**w1 * x)
    second_pow = powers(u**w2 * y)
    for i in range(degree_bound + 1):
        for j in range(degree_bound + 1 - i):
            for k in range(degree_bound + 1 - i - j):
                monomial = x_pow[i] * y_pow[j] * u_pow[k]
                if weighted_degree(monomial, grading) != 0:
                    continue
                if monomial != first_pow[i] * second_pow[j]:
                    return False
    return True


@dataclass(frozen=True)
class ExceptionalSquare:
    """The self-intersection identity of the exceptional divisor.

    ``pushforward`` is the class of E^2 pushed to the exceptional
    P(w1, w2) along the bundle projection: restricting the ideal sheaf of
    E to E gives O_E(1), so the normal bundle class is c1(O_E(-1)) = -t.
    """

    exceptional: WeightedProjectiveStack
    pushforward: GradedElement


def exceptional_selfintersection(data: BlowupData) -> ExceptionalSquare:
    ring = chow_ring(data.exceptional)
    minus_t = GradedElement.of(ring, -Poly.variable("t"), 1)
    return ExceptionalSquare(exceptional=data.exceptional, pushforward=minus_t)


# -- the moduli assembly ---------------------------------------------------

MODULI_AMBIENT = WeightedProjectiveStack((2, 3, 4))
MODULI_BLOWUP = BlowupData(4, 6)


def cusp_locus_class() -> GradedElement:
    """Class of the cuspidal locus {[s^2, s^3, 0]} in A*(P(2, 3, 4)).

    The locus is the image of the weight-1 line under s -> (s^2, s^3, 0),
    which uses the weight-2 and weight-3 coordinates and misses the
    weight-4 one: the pushforward is 2*3*(4t)*t = 24*t^2.
    """
    return line_image_class(MODULI_AMBIENT, used=(1, 2), remaining=(3,))


def cusp_complement_chow() -> GradedPresentation:
    """A*(U) for U = P(2, 3, 4) minus the cuspidal point: Z[t]/(24 t^2)."""
    return chow_of_complement(MODULI_AMBIENT, [cusp_locus_class()])


def discriminant_hypersurface() -> HypersurfaceComplementInput:
    """The closure of the nodal locus, cut out by the discriminant."""
    return HypersurfaceComplementInput(
        weights=(2, 3, 4),
        variables=("a2", "a3", "a4"),
        polynomial=discriminant_polynomial(),
    )


def phi_degree2_images() -> dict[str, tuple[GradedElement, GradedElement]]:
    """Degree-2 images under (pushforward, restriction) of the total space.

    The split embedding sends a degree-2 class to a pair: its pushforward
    along the fibration to P(4, 6) (a degree-1 class) and its restriction
    to the cusp complement U (a degree-2 class).  On monomials in the
    pulled-back hyperplane class x and the exceptional class y:

    * x^2 -> (t, t^2): the pushforward of x^2 is the hyperplane class,
      via the mu_4-point comparison 6*c1(L)^2 |-> 6*t;
    * x*y -> (0, 0): the pullback of O(1) is trivial on the exceptional
      divisor, and y restricts to 0 on U;
    * y^2 -> (-t, 0): the self-intersection identity composed with the
      section (the fibration retracts the exceptional divisor).
    """
    exceptional_ring = chow_ring(MODULI_BLOWUP.exceptional)
    u_ring = cusp_complement_chow()
    t_e = GradedElement.of(exceptional_ring, "t", 1)
    zero_e = GradedElement.of(exceptional_ring, 0, 1)
    square = exceptional_selfintersection(MODULI_BLOWUP)
    t2_u = GradedElement.of(u_ring, "t^2", 2)
    zero_u = GradedElement.of(u_ring, 0, 2)
    return {
        "x^2": (t_e, t2_u),
        "x*y": (zero_e, zero_u),
        "y^2": (square.pushforward, zero_u),
    }


def check_split_assembly(presentation: GradedPresentation, bound: int = 8) -> None:
    """Cross-check a candidate total-space presentation, raising on mismatch.

    Verifies for every n <= bound that the degree-n piece equals
    A^(n-1)(P(4, 6)) + A^n(U), and that every degree-2 relation of the
    presentation dies componentwise under the degree-2 split images.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if presentation.generators != (("x", 1), ("y", 1)):
        raise ValueError(
            "assembly check expects generators x (pullback class) and "
            "y (exceptional class), both of degree 1"
        )
    exceptional_ring = chow_ring(MODULI_BLOWUP.exceptional)
    u_ring = cusp_complement_chow()
    for n in range(bound + 1):
        below = (
            graded_piece(exceptional_ring, n - 1)
            if n >= 1
            else AbelianGroupShape.trivial()
        )
        expected = below.direct_sum(graded_piece(u_ring, n))
        actual = graded_piece(presentation, n)
        if actual != expected:
            raise AssemblyMismatchError(
                f"degree {n}: presentation gives {actual}, split decomposition "
                f"gives {expected}"
            )
    images = phi_degree2_images()
    grading = presentation.grading
    for relation in presentation.relations:
        if relation.is_zero or weighted_degree(relation, grading) != 2:
            continue
        e_image = GradedElement.of(exceptional_ring, 0, 1)
        u_image = GradedElement.of(u_ring, 0, 2)
        for monomial, coefficient in relation.terms():
            e_part, u_part = images[monomial.render()]
            e_image = e_image + int(coefficient) * e_part
            u_image = u_image + int(coefficient) * u_part
        if not (is_zero(e_image) and is_zero(u_image)):
            raise AssemblyMismatchError(
                f"relation {relation} does not vanish under the split images"
            )


def m12bar_chow(bound: int = 8) -> GradedPresentation:
    """Chow ring of the compactified 2-pointed moduli: Z[x,y]/(xy, 24x^2+24y^2).

    x is the pullback of O(1) from P(2, 3, 4), y the exceptional class.
    The presentation is cross-checked degreewise (n <= bound) against the
    split decomposition A^(n-1)(P(4, 6)) + A^n(U); a mismatch raises
    :class:`AssemblyMismatchError` and would signal a bug, never an
    expected outcome.
    """
    torsion = prod(MODULI_BLOWUP.exceptional.weights)
    presentation = GradedPresentation.make(
        [("x", 1), ("y", 1)],
        ["x*y", f"{torsion}*x^2 + {torsion}*y^2"],
    )
    check_split_assembly(presentation, bound)
    return presentation


def m12_open_chow(bound: int = 8) -> GradedPresentation:
    """Chow ring of the open 2-pointed moduli, degreewise Z[t]/(12 t).

    Starts from A*(U) = Z[t]/(24 t^2) and kills the classes supported on
    the nodal fiber: the curve class d*t, where d = 12 is the order of
    the Picard group of the discriminant complement, and the class 12*t^2
    of each of the two mu_2-fixed points.  The result is checked
    degreewise against Z[t]/(12 t) up to ``bound``.
    """
    u_ring = cusp_complement_chow()
    degree = pic_complement(discriminant_hypersurface()).character_weight
    t = Poly.variable("t")
    curve_class = GradedElement.of(u_ring, degree * t, 1)
    point = point_class(MODULI_AMBIENT, 1)
    point_in_u = GradedElement.of(u_ring, point.value, 2)
    presentation = quotient(u_ring, [curve_class, point_in_u, point_in_u])
    target = GradedPresentation.make([("t", 1)], [degree * t])
    if not pieces_equal(presentation, target, bound):
        raise AssemblyMismatchError(
            f"open-moduli quotient does not match Z[t]/({degree}*t) degreewise"
        )
    return presentation


@dataclass(frozen=True)
class RestrictionHom:
    """Certified restriction homomorphism between the two moduli rings."""

    source: GradedPresentation
    target: GradedPresentation
    images: tuple[tuple[str, GradedElement], ...]

    @property
    def images_dict(self) -> dict[str, GradedElement]:
        return dict(self.images)


def restriction_hom(bound: int = 8) -> RestrictionHom:
    """The restriction map x -> t, y -> 0, verified relation by relation.

    The exceptional class y is supported on the boundary, so it restricts
    to 0; the pulled-back hyperplane class restricts to the hyperplane
    class t of the open part.
    """
    source = m12bar_chow(bound)
    target = m12_open_chow(bound)
    images = {
        "x": GradedElement.of(target, "t", 1),
        "y": GradedElement.of(target, 0, 1),
    }
    if not hom_check(source, target, images):
        raise AssemblyMismatchError("restriction images do not kill the relations")
    return RestrictionHom(source, target, tuple(sorted(images.items())))
