"""Exact 3x3 matrices over the coefficient field, and linear solving."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..poly import SQRT3, ZERO, Coefficient, I


class Matrix3:
    __slots__ = ("e",)

    def __init__(self, entries: Sequence):
        if len(entries) != 9:
            raise ValueError("a 3x3 matrix has 9 entries")
        self.e = tuple(Coefficient.coerce(v) for v in entries)

    @classmethod
    def unit(cls, k: int, l: int) -> "Matrix3":
        """Matrix unit ``E_kl`` with 1-based indices."""
        e = [0] * 9
        e[3 * (k - 1) + (l - 1)] = 1
        return cls(e)

    @classmethod
    def zero(cls) -> "Matrix3":
        return cls([0] * 9)

    def __getitem__(self, kl) -> Coefficient:
        k, l = kl
        return self.e[3 * k + l]

    def __add__(self, other: "Matrix3") -> "Matrix3":
        return Matrix3([a + b for a, b in zip(self.e, other.e)])

    def __sub__(self, other: "Matrix3") -> "Matrix3":
        return Matrix3([a - b for a, b in zip(self.e, other.e)])

    def __neg__(self) -> "Matrix3":
        return Matrix3([-a for a in self.e])

    def scale(self, c) -> "Matrix3":
        c = Coefficient.coerce(c)
        return Matrix3([c * a for a in self.e])

    def __mul__(self, other: "Matrix3") -> "Matrix3":
        out = []
        for k in range(3):
            for l in range(3):
                s = ZERO
                for m in range(3):
                    s = s + self[k, m] * other[m, l]
                out.append(s)
        return Matrix3(out)

    def trace(self) -> Coefficient:
        return self.e[0] + self.e[4] + self.e[8]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix3) and self.e == other.e

    def __hash__(self):
        return hash(self.e)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.e)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(self[k, l]) for l in range(3)) for k in range(3)) + "]"


def bracket(a: Matrix3, b: Matrix3) -> Matrix3:
    return a * b - b * a


E = Matrix3.unit


def solve(rows: list[list[Coefficient]], rhs: list[Coefficient]) -> list[Coefficient] | None:
    """Exact solution of an (overdetermined) linear system, or ``None``."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, len(aug)) if not aug[k][c].is_zero()), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for k in range(len(aug)):
            if k != r and not aug[k][c].is_zero():
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
    if any(not row[n].is_zero() for row in aug[r:]):
        return None
    if len(pivots) < n:
        return None
    out = [ZERO] * n
    for k, c in enumerate(pivots):
        out[c] = aug[k][n]
    return out


def coordinates(m: Matrix3, basis: Sequence[Matrix3]) -> list[Coefficient]:
    rows = [[b.e[pos] for b in basis] for pos in range(9)]
    sol = solve(rows, list(m.e))
    if sol is None:
        raise ValueError("matrix is not in the span of the basis")
    return sol


def gell_mann() -> list[Matrix3]:
    """F_1 .. F_8 (list index 0 .. 7)."""
    inv_sqrt3 = SQRT3.inverse()
    return [
        E(2, 1) + E(1, 2),
        (E(2, 1) - E(1, 2)).scale(I),
        E(1, 1) - E(2, 2),
        E(3, 1) + E(1, 3),
        (E(3, 1) - E(1, 3)).scale(I),
        E(3, 2) + E(2, 3),
        (E(3, 2) - E(2, 3)).scale(I),
        (E(1, 1) + E(2, 2) - E(3, 3).scale(2)).scale(inv_sqrt3),
    ]


def structure_constants(F: Sequence[Matrix3]) -> dict[tuple[int, int, int], Coefficient]:
    """``f^{abc} = -(i/4) tr(F_a [F_b, F_c])`` (0-based keys, nonzero only)."""
    c = -I / 4
    out = {}
    n = len(F)
    for a in range(n):
        for b in range(n):
            for k in range(n):
                v = c * (F[a] * bracket(F[b], F[k])).trace()
                if not v.is_zero():
                    out[a, b, k] = v
    return out


def so3_matrices() -> dict[str, Matrix3]:
    return {
        "Lx": E(3, 2) - E(2, 3),
        "Ly": E(1, 3) - E(3, 1),
        "Lz": E(2, 1) - E(1, 2),
    }


def d_tensor() -> dict[tuple[int, int, int], Coefficient]:
    """Totally symmetric d-tensor from its independent entries (1-based keys)."""
    half = Coefficient.coerce(Fraction(1, 2))
    r3 = SQRT3.inverse()
    r23 = (SQRT3 * 2).inverse()
    base = {
        (1, 4, 6): half, (1, 5, 7): half, (2, 4, 7): -half, (2, 5, 6): half,
        (3, 4, 4): half, (3, 5, 5): half, (3, 6, 6): -half, (3, 7, 7): -half,
        (1, 1, 8): r3, (2, 2, 8): r3, (3, 3, 8): r3, (8, 8, 8): -r3,
        (4, 4, 8): -r23, (5, 5, 8): -r23, (6, 6, 8): -r23, (7, 7, 8): -r23,
    }
    from itertools import permutations

    out = {}
    for key, v in base.items():
        for perm in set(permutations(key)):
            out[perm] = v
    return out


def invariant_d_tensor(F: Sequence[Matrix3]) -> dict[tuple[int, int, int], Coefficient]:
    """``d_{abc} = (1/4) tr(F_a {F_b, F_c})`` (1-based keys): an independent oracle."""
    out = {}
    q = Coefficient.coerce(Fraction(1, 4))
    for a in range(8):
        for b in range(8):
            for c in range(8):
                v = q * (F[a] * (F[b] * F[c] + F[c] * F[b])).trace()
                if not v.is_zero():
                    out[a + 1, b + 1, c + 1] = v
    return out


__all__ = ["Matrix3", "E", "bracket", "solve", "coordinates", "gell_mann", "structure_constants",
           "so3_matrices", "d_tensor", "invariant_d_tensor"]
