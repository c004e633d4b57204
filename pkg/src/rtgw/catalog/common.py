"""Linear algebra over algebra elements and correspondence searches."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..poly import Coefficient
from ..report import Report
from ..tgw import AlgebraElement, commutator
from .matrices import Matrix3, bracket, coordinates, solve


def combine(coeffs: Sequence, elements: Sequence[AlgebraElement]) -> AlgebraElement:
    out = elements[0].datum.zero()
    for c, e in zip(coeffs, elements):
        c = Coefficient.coerce(c)
        if not c.is_zero():
            out = out + e.scale(c)
    return out


def _sample_points(p: int, n: int = 4) -> list[list[Fraction]]:
    return [[Fraction(7 * k + 3 * i + 1, 11 + 2 * k + i) for i in range(p)] for k in range(n)]


def decompose(element: AlgebraElement, basis: Sequence[AlgebraElement]) -> list[Coefficient] | None:
    """Constant coordinates of ``element`` in ``basis``, verified exactly; ``None`` if outside the span."""
    d = element.datum
    keys = sorted(set(element.terms).union(*(b.terms for b in basis)))
    pts = _sample_points(d.ctx.p)

    def features(e):
        out = []
        for k in keys:
            c = e.coefficient(k)
            for pt in pts:
                out.append(c.evaluate(pt))
        return out

    cols = [features(b) for b in basis]
    rows = [[col[r] for col in cols] for r in range(len(cols[0]))]
    sol = solve(rows, features(element))
    if sol is None or combine(sol, basis) != element:
        return None
    return sol


def bracket_coordinates(images: Sequence[AlgebraElement]) -> dict:
    out = {}
    for a, b in combinations(range(len(images)), 2):
        out[a, b] = decompose(commutator(images[a], images[b]), images)
    return out


def matrix_bracket_coordinates(mats: Sequence[Matrix3]) -> dict:
    return {(a, b): coordinates(bracket(mats[a], mats[b]), mats) for a, b in combinations(range(len(mats)), 2)}


def consistent_scalings(alg: dict, mat: dict, n: int, units: Sequence[Coefficient]) -> list[tuple]:
    """All ``s`` in ``units^n`` with ``s_a s_b alg[a,b] = sum_c mat[a,b][c] s_c``-coordinatewise.

    Backtracking: a pair is tested once every index it involves is assigned.
    """
    if any(v is None for v in alg.values()):
        return []
    found = []

    def ok(s, m):
        for (a, b), coords in alg.items():
            if a >= m or b >= m:
                continue
            for c in range(m):
                if s[a] * s[b] * coords[c] != mat[a, b][c] * s[c]:
                    return False
        return True

    def go(s):
        m = len(s)
        if not ok(s, m):
            return
        if m == n:
            found.append(tuple(s))
            return
        for u in units:
            go(s + [u])

    go([])
    return found


def homomorphism_report(title: str, names: Sequence[str], images: Sequence[AlgebraElement],
                        mats: Sequence[Matrix3], relation: str) -> Report:
    """Check ``[phi(a), phi(b)] = phi([a, b])`` on all unordered basis pairs."""
    rep = Report(title)
    for a, b in combinations(range(len(mats)), 2):
        cs = coordinates(bracket(mats[a], mats[b]), mats)
        lhs = commutator(images[a], images[b])
        rhs = combine(cs, images)
        rep.check_equal(relation, f"{names[a]},{names[b]}", lhs, rhs)
    return rep


def fewest_changes(solutions: Sequence[tuple], one=Coefficient(1)) -> tuple | None:
    if not solutions:
        return None
    return min(solutions, key=lambda s: (sum(1 for v in s if v != one), [str(v) for v in s]))


__all__ = ["combine", "decompose", "bracket_coordinates", "matrix_bracket_coordinates",
           "consistent_scalings", "homomorphism_report", "fewest_changes"]
