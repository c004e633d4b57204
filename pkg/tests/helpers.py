"""Hypothesis strategies shared by the property suites."""

from fractions import Fraction

from hypothesis import strategies as st

from rtgw.poly import Coefficient
from rtgw.tgw import X, Y

small = st.integers(-3, 3)


@st.composite
def coefficients(draw, bound=5):
    a, b, c, d = (draw(st.integers(-bound, bound)) for _ in range(4))
    n = draw(st.integers(1, 4))
    return Coefficient(a, b, c, d, n)


@st.composite
def polynomials(draw, ctx, max_terms=3, max_deg=2):
    out = ctx.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        e = [0] * ctx.p
        for _ in range(draw(st.integers(0, max_deg))):
            e[draw(st.integers(0, ctx.p - 1))] += 1
        m = ctx.one()
        for i, k in enumerate(e):
            m = m * ctx.var(i) ** k
        out = out + m.scale(draw(coefficients(3)))
    return out


@st.composite
def base_elements(draw, datum, invertible_den=True):
    """Random element of the localization: polynomial over a product of set atoms."""
    ring = datum.ring
    f = ring(draw(polynomials(datum.ctx)))
    atoms = datum.ring.spec.generators
    for _ in range(draw(st.integers(0, 2))):
        a = draw(st.sampled_from(atoms))
        s = [draw(st.integers(-2, 2)) if i in ring.spec.shift_indices else 0 for i in range(datum.ctx.p)]
        f = f * ring.atom_inverse(a.shift(s))
    return f


@st.composite
def letters(draw, datum, max_len=4):
    n = draw(st.integers(0, max_len))
    return [(draw(st.integers(0, datum.q - 1)), draw(st.sampled_from((X, Y)))) for _ in range(n)]


@st.composite
def words(draw, datum, max_len=3):
    """``f * w`` for a random letter sequence ``w`` and coefficient ``f``."""
    return datum.word(draw(letters(datum, max_len)), draw(base_elements(datum)))


@st.composite
def elements(draw, datum, max_terms=2, max_len=3):
    out = datum.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        out = out + draw(words(datum, max_len))
    return out


def frac(a, b=1):
    return Coefficient.coerce(Fraction(a, b))


# criterion number -> one-line verdict, filled by test_acceptance and printed at session end
ACCEPTANCE: dict[int, str] = {}


def gate(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line
