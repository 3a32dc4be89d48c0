"""Weighted blow-up data, invariant ring, and the moduli assembly."""

from __future__ import annotations

import pytest

from wpchow import (
    AbelianGroupShape,
    AssemblyMismatchError,
    BlowupData,
    GradedElement,
    GradedPresentation,
    Poly,
    chart,
    check_split_assembly,
    chow_ring,
    cusp_complement_chow,
    cusp_locus_class,
    exceptional_selfintersection,
    graded_piece,
    hom_check,
    invariant_ring_check,
    is_zero,
    m12_open_chow,
    m12bar_chow,
    parse_poly,
    phi_degree2_images,
    pieces_equal,
    restriction_hom,
)


def test_invariant_ring_examples():
    assert invariant_ring_check(4, 6, 12)
    assert invariant_ring_check(1, 1, 10)
    assert invariant_ring_check(2, 3, 20)


def test_invariant_ring_all_small_weights():
    assert all(
        invariant_ring_check(w1, w2, 15)
        for w1 in range(1, 7)
        for w2 in range(w1, 7)
    )


def test_invariant_ring_validation():
    with pytest.raises(ValueError):
        invariant_ring_check(0, 2, 5)
    with pytest.raises(ValueError):
        invariant_ring_check(1, 1, 0)


def test_invariant_monomial_identity_spot_check():
    # x*y*u^10 is invariant for weights (4, 6, -1) and equals (u^4 x)(u^6 y)
    x, y, u = (Poly.variable(v) for v in ("x", "y", "u"))
    assert x * y * u**10 == (u**4 * x) * (u**6 * y)


def test_blowup_data_and_charts():
    data = BlowupData(4, 6)
    assert data.exceptional.weights == (4, 6)
    assert data.ambient_grading.weight("u") == -1
    first = chart(data, 1)
    assert first.group_order == 4
    assert first.alpha == "(a, b) -> (1, a, b)"
    assert first.action_weights == (-4, 1)
    assert first.exponent_unresolved
    second = chart(data, 2)
    assert second.group_order == 6
    assert second.alpha == "(a, b) -> (a, 1, b)"
    trivial = chart(BlowupData(1, 1), 1)
    assert trivial.group_order == 1
    with pytest.raises(ValueError):
        chart(data, 3)
    with pytest.raises(ValueError):
        BlowupData(0, 1)


def test_exceptional_selfintersection():
    square = exceptional_selfintersection(BlowupData(4, 6))
    assert square.exceptional.weights == (4, 6)
    assert square.pushforward.value == -Poly.variable("t")
    assert square.pushforward.degree == 1
    assert square.pushforward.ambient == chow_ring(square.exceptional)


def test_cusp_class_and_complement():
    assert cusp_locus_class().value == 24 * Poly.variable("t") ** 2
    u_ring = cusp_complement_chow()
    assert pieces_equal(u_ring, GradedPresentation.make([("t", 1)], ["24*t^2"]), 8)


def test_phi_degree2_images():
    images = phi_degree2_images()
    t = Poly.variable("t")
    assert images["y^2"][0].value == -t
    assert images["y^2"][1].value.is_zero
    assert images["x*y"][0].value.is_zero
    assert images["x*y"][1].value.is_zero
    assert images["x^2"][0].value == t
    assert images["x^2"][1].value == t**2
    # both relations of the assembled ring die componentwise
    for relation in m12bar_chow().relations:
        e_image = 0 * images["x^2"][0]
        u_image = 0 * images["x^2"][1]
        for monomial, coefficient in relation.terms():
            e_part, u_part = images[monomial.render()]
            e_image = e_image + int(coefficient) * e_part
            u_image = u_image + int(coefficient) * u_part
        assert is_zero(e_image)
        assert is_zero(u_image)


def test_m12bar_presentation_and_pieces():
    presentation = m12bar_chow()
    assert presentation.generators == (("x", 1), ("y", 1))
    assert presentation.relations == (
        parse_poly("x*y"),
        parse_poly("24*x^2 + 24*y^2"),
    )
    pieces = [graded_piece(presentation, n) for n in range(9)]
    assert pieces[0] == AbelianGroupShape(1, ())
    assert pieces[1] == AbelianGroupShape(2, ())
    assert pieces[2] == AbelianGroupShape(1, (24,))
    assert pieces[3:] == [AbelianGroupShape(0, (24, 24))] * 6
    assert pieces[5] == AbelianGroupShape(0, (24, 24))


def test_m12bar_assembly_matches_split_decomposition():
    e_ring = chow_ring(BlowupData(4, 6).exceptional)
    u_ring = cusp_complement_chow()
    presentation = m12bar_chow(8)
    for n in range(9):
        below = (
            graded_piece(e_ring, n - 1) if n >= 1 else AbelianGroupShape.trivial()
        )
        assert graded_piece(presentation, n) == below.direct_sum(
            graded_piece(u_ring, n)
        )


def test_check_split_assembly_detects_corruption():
    corrupted = GradedPresentation.make(
        [("x", 1), ("y", 1)], ["x*y", "23*x^2 + 24*y^2"]
    )
    with pytest.raises(AssemblyMismatchError):
        check_split_assembly(corrupted, 8)
    dropped = GradedPresentation.make([("x", 1), ("y", 1)], ["x*y"])
    with pytest.raises(AssemblyMismatchError):
        check_split_assembly(dropped, 8)


def test_m12_open_chow():
    presentation = m12_open_chow()
    twelve_t = parse_poly("12*t")
    twelve_t2 = parse_poly("12*t^2")
    assert twelve_t in presentation.relations
    assert twelve_t2 in presentation.relations
    assert pieces_equal(presentation, GradedPresentation.make([("t", 1)], ["12*t"]), 8)
    degree_one = graded_piece(presentation, 1)
    assert degree_one == AbelianGroupShape.cyclic(12)
    assert degree_one != AbelianGroupShape.cyclic(6)
    assert degree_one != AbelianGroupShape.cyclic(24)


def test_restriction_hom():
    certified = restriction_hom()
    assert certified.images_dict["x"].value == Poly.variable("t")
    assert certified.images_dict["y"].value.is_zero
    assert hom_check(certified.source, certified.target, certified.images_dict)
    # relation-by-relation: x*y -> 0 trivially; 24x^2 + 24y^2 -> 24t^2,
    # which is 2t * (12t), hence zero in the target
    assert is_zero(GradedElement.of(certified.target, "24*t^2"))
    assert not hom_check(certified.source, certified.target, {"x": "t", "y": "t"})


def test_restriction_degree_zero_is_identity():
    certified = restriction_hom()
    assert graded_piece(certified.source, 0) == AbelianGroupShape(1, ())
    assert graded_piece(certified.target, 0) == AbelianGroupShape(1, ())
