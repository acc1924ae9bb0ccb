"""Exact diagram areas by four independent routes, cross-checked.

Two formula routes (the per-slab trapezoid sum, and its closed form for the
degree-2 family) and two geometric oracles (the shoelace sum over the vertex
cycle, and lattice-point counting through Pick's relation A = I + B/2 - 1)
must all produce the same rational.  Every function returns a Fraction in
lowest terms; for a lattice polygon the reduced denominator is always 1 or 2.

The slab decomposition cuts the region under the monomial chain into k-1
rectangular trapezoids plus one right triangle at the far end.  Slab m
(0 <= m <= k-2) spans x = q^(n+m)..q^(n+m+1) with parallel vertical sides of
heights k-m and k-m-1, hence area (q^(n+m+1) - q^(n+m)) * (2k-2m-1) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import PolynomialDiagram, SpecialPolynomial, build_diagram

__all__ = [
    "DEFAULT_PICK_BUDGET",
    "PickBudgetExceeded",
    "AreaCrossCheck",
    "area_closed_form_k2",
    "trapezoid_area",
    "triangle_area",
    "area_general",
    "area_shoelace",
    "boundary_lattice_count",
    "interior_lattice_count",
    "area_pick",
    "cross_check",
]

# Interior-point counting walks one integer column at a time, so its cost is
# linear in the x-extent q^(n+k) - q^n.  The budget caps how many columns the
# oracle will scan before declining.
DEFAULT_PICK_BUDGET = 10**6


class PickBudgetExceeded(Exception):
    """The interior-point scan would exceed the configured column budget.

    Signals that the counting oracle declined to run, not that any computed
    value is wrong.
    """


@dataclass(frozen=True)
class AreaCrossCheck:
    """Areas from every applicable route; agree is exact equality of all present."""

    closed_form: Fraction | None
    general_formula: Fraction
    shoelace: Fraction
    pick: Fraction | None
    agree: bool


def area_closed_form_k2(q: int, n: int) -> Fraction:
    """Closed-form area q^n * (q+3) * (q-1) / 2 for the degree-2 family."""
    SpecialPolynomial(q, n, 2)  # reuse the parameter validation
    return Fraction(q**n * (q + 3) * (q - 1), 2)


def trapezoid_area(p: SpecialPolynomial, m: int) -> Fraction:
    """Area of slab m of the decomposition, (q^(n+m+1) - q^(n+m)) * (2k-2m-1) / 2.

    Valid for 0 <= m <= k-2; the final slab (m = k-1) is the right triangle,
    not a trapezoid.
    """
    if not 0 <= m <= p.k - 2:
        raise ValueError(f"m must be in 0..k-2 = 0..{p.k - 2}, got {m}")
    width = p.q ** (p.n + m + 1) - p.q ** (p.n + m)
    return Fraction(width * (2 * p.k - 2 * m - 1), 2)


def triangle_area(p: SpecialPolynomial) -> Fraction:
    """Area of the rightmost right triangle, (q^(n+k) - q^(n+k-1)) / 2."""
    return Fraction(p.q ** (p.n + p.k) - p.q ** (p.n + p.k - 1), 2)


def area_general(p: SpecialPolynomial) -> Fraction:
    """Total diagram area: sum of the k-1 trapezoid slabs plus the triangle.

    For k = 1 the slab sum is empty and only the triangle remains.  Equals
    area_closed_form_k2 exactly when k = 2, and 0 when q = 1.
    """
    total = triangle_area(p)
    for m in range(p.k - 1):
        total += trapezoid_area(p, m)
    return total


def area_shoelace(d: PolynomialDiagram) -> Fraction:
    """Shoelace oracle: |sum of x_i*y_{i+1} - x_{i+1}*y_i| / 2 over the cycle.

    Exact for every diagram, including degenerate ones (which give 0).
    """
    pts = d.vertices
    if len(pts) < 3:
        raise ValueError(f"need at least 3 vertices, got {len(pts)}")
    total = 0
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        total += x0 * y1 - x1 * y0
    return Fraction(abs(total), 2)


def boundary_lattice_count(d: PolynomialDiagram) -> int:
    """Lattice points on the boundary: gcd(|dx|, |dy|) summed over the edges."""
    pts = d.vertices
    m = len(pts)
    return sum(
        math.gcd(abs(pts[(i + 1) % m].x - pts[i].x), abs(pts[(i + 1) % m].y - pts[i].y))
        for i in range(m)
    )


def interior_lattice_count(d: PolynomialDiagram, budget: int = DEFAULT_PICK_BUDGET) -> int:
    """Lattice points strictly inside, counted column by column.

    For each integer x strictly between the leftmost and rightmost vertices,
    the interior points are the integers y with 0 < y < h(x), where h is the
    height of the monomial chain at x; that count is (num-1) // den for
    h = num/den.  Raises PickBudgetExceeded when more than `budget` columns
    would be scanned, and ValueError for degenerate diagrams.
    """
    if d.degenerate:
        raise ValueError("degenerate diagram (q = 1) has no interior")
    chain = d.vertices[1:]
    x_left, x_right = chain[0].x, chain[-1].x
    columns = x_right - x_left - 1
    if columns > budget:
        raise PickBudgetExceeded(
            f"scan of {columns} columns exceeds the budget of {budget}"
        )
    count = 0
    last = len(chain) - 1
    for i in range(last):
        a, b = chain[i], chain[i + 1]
        den = b.x - a.x
        # Columns a.x < x <= b.x belong to this segment; the rightmost
        # vertex column of the whole chain is excluded.  Stepping one
        # column right lowers the height numerator by exactly 1, so the
        # scan only decrements instead of recomputing h(x) each time.
        span = den if i + 1 < last else den - 1
        num = a.y * den - 2  # h(x)-numerator minus 1, at x = a.x + 1
        for _ in range(span):
            if num >= 0:
                count += num // den
            num -= 1
    return count


def area_pick(d: PolynomialDiagram, budget: int = DEFAULT_PICK_BUDGET) -> Fraction:
    """Lattice-point oracle: area = interior + boundary/2 - 1."""
    interior = interior_lattice_count(d, budget=budget)
    boundary = boundary_lattice_count(d)
    return Fraction(2 * interior + boundary - 2, 2)


def cross_check(
    p: SpecialPolynomial, pick_budget: int = DEFAULT_PICK_BUDGET
) -> AreaCrossCheck:
    """Compute the area by every applicable route and compare exactly.

    The slab formula and the shoelace oracle always run; the closed form
    joins when k = 2, and the Pick oracle joins when the diagram is
    non-degenerate and within the scan budget.  Disagreement is reported in
    the record, never raised.
    """
    d = build_diagram(p)
    general = area_general(p)
    lace = area_shoelace(d)
    closed = area_closed_form_k2(p.q, p.n) if p.k == 2 else None
    pick: Fraction | None
    if d.degenerate:
        pick = None
    else:
        try:
            pick = area_pick(d, budget=pick_budget)
        except PickBudgetExceeded:
            pick = None
    present = [v for v in (closed, general, lace, pick) if v is not None]
    agree = all(v == present[0] for v in present)
    return AreaCrossCheck(
        closed_form=closed,
        general_formula=general,
        shoelace=lace,
        pick=pick,
        agree=agree,
    )
