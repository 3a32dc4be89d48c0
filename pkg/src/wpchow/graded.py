"""Finitely presented graded Z-algebras and their degreewise structure.

A :class:`GradedPresentation` is a polynomial ring over Z on generators of
positive degree, modulo homogeneous relations with integer coefficients.
Because every generator has degree >= 1, each graded piece is a finitely
generated abelian group presented by an integer relation lattice, so all
degreewise questions reduce to Hermite/Smith normal form computations;
no Groebner machinery is needed.

``pieces_equal`` compares two presentations degree by degree.  That is a
necessary but not sufficient condition for a ring isomorphism; ring-level
claims should pair it with :func:`hom_check`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from .intlinalg import AbelianGroupShape, cokernel, solve_integer
from .poly import (
    Monomial,
    Poly,
    WeightedGrading,
    parse_poly,
    substitute,
    weighted_degree,
)

__all__ = [
    "DegreeMismatchError",
    "GradedElement",
    "GradedPresentation",
    "graded_piece",
    "hom_check",
    "is_zero",
    "monomials_of_degree",
    "pieces_equal",
    "quotient",
]


class DegreeMismatchError(ValueError):
    """An element was used in a degree it does not have."""


def _coerce_relation(value: Union[Poly, str]) -> Poly:
    return parse_poly(value) if isinstance(value, str) else value


@dataclass(frozen=True)
class GradedPresentation:
    """Generators with positive degrees plus homogeneous integer relations."""

    generators: tuple[tuple[str, int], ...]
    relations: tuple[Poly, ...] = ()

    def __post_init__(self):
        seen = set()
        for name, degree in self.generators:
            if not isinstance(degree, int) or degree < 1:
                raise ValueError(f"generator {name!r} must have a positive integer degree")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        grading = self.grading
        for relation in self.relations:
            if not isinstance(relation, Poly):
                raise TypeError("relations must be Poly instances")
            if not set(relation.variables) <= seen:
                extra = sorted(set(relation.variables) - seen)
                raise ValueError(f"relation uses unknown generators {extra}")
            if not relation.has_integer_coefficients():
                raise ValueError(f"relation {relation} must have integer coefficients")
            if not relation.is_zero:
                weighted_degree(relation, grading)  # raises InhomogeneousError

    @classmethod
    def make(
        cls,
        generators: Iterable[tuple[str, int]],
        relations: Iterable[Union[Poly, str]] = (),
    ) -> "GradedPresentation":
        return cls(
            tuple((str(n), int(d)) for n, d in generators),
            tuple(_coerce_relation(r) for r in relations),
        )

    @property
    def grading(self) -> WeightedGrading:
        return WeightedGrading(dict(self.generators))

    def generator_degree(self, name: str) -> int:
        for gen, degree in self.generators:
            if gen == name:
                return degree
        raise KeyError(f"no generator named {name!r}")

    def render(self) -> str:
        gens = ", ".join(name for name, _ in self.generators)
        if not self.relations:
            return f"Z[{gens}]"
        rels = ", ".join(r.render() for r in self.relations)
        return f"Z[{gens}]/({rels})"

    def __str__(self) -> str:
        return self.render()

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "generators": [{"name": n, "degree": d} for n, d in self.generators],
            "relations": [r.render() for r in self.relations],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "GradedPresentation":
        generators = tuple((g["name"], int(g["degree"])) for g in data["generators"])
        relations = tuple(parse_poly(text) for text in data["relations"])
        return cls(generators, relations)


def monomials_of_degree(
    generators: Sequence[tuple[str, int]], degree: int
) -> list[Monomial]:
    """All monomials of the given degree, in descending graded-lex order.

    Generator degrees are >= 1, so the list is finite.  The ordering (and
    hence every relation matrix built on it) is reproducible: variables are
    taken in sorted name order and earlier variables carry higher exponents
    first.
    """
    if degree < 0:
        return []
    gens = sorted(generators)
    results: list[Monomial] = []

    def descend(index: int, remaining: int, acc: list[tuple[str, int]]) -> None:
        if index == len(gens):
            if remaining == 0:
                results.append(Monomial.of(dict(acc)))
            return
        name, gen_degree = gens[index]
        for exp in range(remaining // gen_degree, -1, -1):
            acc.append((name, exp))
            descend(index + 1, remaining - exp * gen_degree, acc)
            acc.pop()

    descend(0, degree, [])
    return results


def _relation_rows(
    presentation: GradedPresentation, degree: int
) -> tuple[list[Monomial], list[list[int]]]:
    """Degree-``degree`` monomial basis and the relation lattice rows on it.

    The lattice is spanned by all products m * r with r a relation and m a
    monomial such that deg(m * r) == degree.
    """
    basis = monomials_of_degree(presentation.generators, degree)
    index = {mono: i for i, mono in enumerate(basis)}
    grading = presentation.grading
    rows: list[list[int]] = []
    for relation in presentation.relations:
        if relation.is_zero:
            continue
        rel_degree = weighted_degree(relation, grading)
        if rel_degree > degree:
            continue
        for mono in monomials_of_degree(presentation.generators, degree - rel_degree):
            product = Poly({mono: 1}) * relation
            row = [0] * len(basis)
            for pm, coeff in product.terms():
                row[index[pm]] = int(coeff)
            rows.append(row)
    return basis, rows


@lru_cache(maxsize=None)
def _graded_piece_cached(presentation: GradedPresentation, degree: int) -> AbelianGroupShape:
    basis, rows = _relation_rows(presentation, degree)
    return cokernel(rows, len(basis))


def graded_piece(presentation: GradedPresentation, degree: int) -> AbelianGroupShape:
    """The degree-``degree`` component as an abelian group shape."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return _graded_piece_cached(presentation, degree)


@dataclass(frozen=True)
class GradedElement:
    """Homogeneous integer-coefficient element of a graded presentation."""

    ambient: GradedPresentation
    value: Poly
    degree: int

    def __post_init__(self):
        if not set(self.value.variables) <= {n for n, _ in self.ambient.generators}:
            raise ValueError("element uses variables outside the ambient generators")
        if not self.value.has_integer_coefficients():
            raise ValueError("graded elements must have integer coefficients")
        if not self.value.is_zero:
            actual = weighted_degree(self.value, self.ambient.grading)
            if actual != self.degree:
                raise DegreeMismatchError(
                    f"element {self.value} has degree {actual}, not {self.degree}"
                )

    @classmethod
    def of(
        cls,
        ambient: GradedPresentation,
        value: Union[Poly, str, int, Fraction],
        degree: Optional[int] = None,
    ) -> "GradedElement":
        if isinstance(value, str):
            value = parse_poly(value)
        elif isinstance(value, (int, Fraction)):
            value = Poly.constant(value)
        if degree is None:
            if value.is_zero:
                raise ValueError("the zero element needs an explicit degree")
            degree = weighted_degree(value, ambient.grading)
        return cls(ambient, value, degree)

    def __add__(self, other: "GradedElement") -> "GradedElement":
        if not isinstance(other, GradedElement):
            return NotImplemented
        if other.ambient != self.ambient:
            raise ValueError("elements live in different presentations")
        if other.degree != self.degree:
            raise DegreeMismatchError("cannot add elements of different degrees")
        return GradedElement(self.ambient, self.value + other.value, self.degree)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.ambient, -self.value, self.degree)

    def __mul__(self, other) -> "GradedElement":
        if isinstance(other, GradedElement):
            if other.ambient != self.ambient:
                raise ValueError("elements live in different presentations")
            return GradedElement(
                self.ambient, self.value * other.value, self.degree + other.degree
            )
        if isinstance(other, int):
            return GradedElement(self.ambient, self.value * other, self.degree)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return self.value.render()


def is_zero(element: GradedElement) -> bool:
    """True iff the element lies in the relation lattice of its degree."""
    if element.value.is_zero:
        return True
    basis, rows = _relation_rows(element.ambient, element.degree)
    index = {mono: i for i, mono in enumerate(basis)}
    vector = [0] * len(basis)
    for mono, coeff in element.value.terms():
        vector[index[mono]] = int(coeff)
    if not rows:
        return not any(vector)
    return solve_integer(rows, vector) is not None


def quotient(
    presentation: GradedPresentation,
    extra: Iterable[Union[GradedElement, Poly, str]],
) -> GradedPresentation:
    """Presentation with the extra homogeneous classes added as relations.

    Models the right-exact localization sequence: killing the classes of a
    closed substack presents the Chow ring of the open complement.
    """
    relations = list(presentation.relations)
    for item in extra:
        if isinstance(item, GradedElement):
            if item.ambient != presentation:
                raise ValueError("extra element lives in a different presentation")
            relations.append(item.value)
        else:
            poly = _coerce_relation(item)
            # validate via GradedElement (homogeneity, integrality, variables)
            if not poly.is_zero:
                GradedElement.of(presentation, poly)
            relations.append(poly)
    return GradedPresentation(presentation.generators, tuple(relations))


def _coerce_image(
    target: GradedPresentation,
    value: Union[GradedElement, Poly, str, int],
    expected_degree: int,
    generator: str,
) -> GradedElement:
    if isinstance(value, GradedElement):
        if value.ambient != target:
            raise ValueError(f"image of {generator!r} lives in the wrong presentation")
        if value.degree != expected_degree:
            raise DegreeMismatchError(
                f"image of {generator!r} has degree {value.degree}, expected {expected_degree}"
            )
        return value
    if isinstance(value, str):
        value = parse_poly(value)
    elif isinstance(value, int):
        value = Poly.constant(value)
    return GradedElement(target, value, expected_degree)


def hom_check(
    source: GradedPresentation,
    target: GradedPresentation,
    images: Mapping[str, Union[GradedElement, Poly, str, int]],
) -> bool:
    """Check that generator images define a graded ring homomorphism.

    Every generator of ``source`` must be assigned an image in ``target``
    of the same degree (wrong degrees raise :class:`DegreeMismatchError`).
    Returns True iff every relation of ``source`` maps to zero in
    ``target``.
    """
    mapping: dict[str, Poly] = {}
    for name, degree in source.generators:
        if name not in images:
            raise ValueError(f"no image supplied for generator {name!r}")
        element = _coerce_image(target, images[name], degree, name)
        mapping[name] = element.value
    grading = source.grading
    for relation in source.relations:
        if relation.is_zero:
            continue
        degree = weighted_degree(relation, grading)
        image = substitute(relation, mapping)
        if not is_zero(GradedElement(target, image, degree)):
            return False
    return True


def pieces_equal(
    first: GradedPresentation, second: GradedPresentation, up_to: int
) -> bool:
    """Degreewise group equality for all 0 <= n <= up_to.

    Necessary, not sufficient, for the rings to be isomorphic.
    """
    if up_to < 0:
        raise ValueError("up_to must be non-negative")
    return all(
        graded_piece(first, n) == graded_piece(second, n) for n in range(up_to + 1)
    )
