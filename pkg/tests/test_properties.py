"""Property-based invariants over randomly drawn (q, n, k) parameters."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from polydiagram import (
    area_general,
    area_sequence,
    area_shoelace,
    build_diagram,
    build_polynomial,
    evaluate_polynomial,
    finite_difference,
    format_decimal,
    monomial_map,
    rational_from_json,
    rational_to_json,
)

bases = st.integers(min_value=1, max_value=50)
shifts = st.integers(min_value=0, max_value=10)
degrees = st.integers(min_value=1, max_value=12)


@given(q=bases, n=shifts, k=degrees)
def test_general_formula_matches_shoelace(q, n, k):
    p = build_polynomial(q, n, k)
    assert area_general(p) == area_shoelace(build_diagram(p))


@given(q=bases, n=shifts, k=degrees)
def test_area_denominator_is_one_or_two(q, n, k):
    assert area_general(build_polynomial(q, n, k)).denominator in (1, 2)


@given(q=bases, n=shifts, k=degrees)
def test_shifting_n_scales_area_by_q(q, n, k):
    base = area_general(build_polynomial(q, n, k))
    assert area_general(build_polynomial(q, n + 1, k)) == q * base


@given(q=bases, n=shifts, k=degrees)
def test_monomial_points_step_by_factor_q(q, n, k):
    pts = monomial_map(build_polynomial(q, n, k))
    assert len(pts) == k + 1
    assert all(a.x * q == b.x for a, b in zip(pts, pts[1:]))
    assert [pt.y for pt in pts] == list(range(k, -1, -1))


@given(q=st.integers(min_value=2, max_value=50), n=shifts, k=degrees)
def test_value_at_one_is_the_geometric_sum(q, n, k):
    p = build_polynomial(q, n, k)
    total = evaluate_polynomial(p, 1)
    assert total * (q - 1) == q**n * (q ** (k + 1) - 1)


@given(q=st.integers(min_value=2, max_value=30), n=st.integers(min_value=0, max_value=5))
def test_order_n_plus_3_difference_annihilates_quadratic_family(q, n):
    # the area is a degree-(n+2) polynomial in q
    seq = area_sequence(2, n, q, q + n + 3)
    assert finite_difference(seq, n + 3) == [Fraction(0)]


@given(q=st.integers(min_value=2, max_value=200))
def test_quadratic_family_ratio_identity(q):
    area = area_general(build_polynomial(q, 0, 2))
    ratio = area_general(build_polynomial(q + 1, 0, 2)) / area
    assert ratio == Fraction(q * (q + 4), (q + 3) * (q - 1))


rationals = st.fractions(
    min_value=Fraction(-(10**12)), max_value=Fraction(10**12), max_denominator=10**9
)


@given(value=rationals)
def test_json_rational_round_trip(value):
    assert rational_from_json(rational_to_json(value)) == value


@given(value=rationals, digits=st.integers(min_value=0, max_value=8))
@settings(max_examples=200)
def test_decimal_rendering_is_within_half_a_step(value, digits):
    text = format_decimal(value, digits)
    assert abs(Fraction(text) - value) <= Fraction(1, 2 * 10**digits)
