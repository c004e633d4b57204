"""Perturbed data must be caught by validation."""

import random

import pytest

from rtgw.catalog.so3 import so3_datum
from rtgw.catalog.su3 import su3_datum
from rtgw.loc import Atom
from rtgw.poly import I
from rtgw.tgw import validate

CONSTANTS = (1, -1, 2, I)


def _unit_ratio(d, rng):
    # a/a' for two distinct atoms of the multiplicative set: a non-constant unit
    spec = d.ring.spec
    a = rng.choice(spec.generators)
    shift = rng.choice((1, 2, -1))
    b = Atom(a.coeffs, a.const + shift * max(1, abs(a.coeffs[0][1])))
    return d.ring(a.to_poly(d.ctx)) / d.ring(b.to_poly(d.ctx))


def perturb(d, seed):
    rng = random.Random(seed)
    q = d.q
    kind = ("t_add", "t_unit", "mu_unit", "mu_sign")[seed % 4]
    if kind.startswith("t"):
        i = rng.randrange(q)
        t = list(d.t)
        t[i] = t[i] + d.ring(rng.choice(CONSTANTS)) if kind == "t_add" else t[i] * _unit_ratio(d, rng)
        return kind, d.with_entries(t=t)
    i, j = rng.sample(range(q), 2)
    key = "mu_xx" if "mu_xy" not in d.explicit or rng.random() < 0.5 else rng.choice(("mu_xx", "mu_xy", "mu_yy"))
    m = [list(r) for r in (d.mu_xx if key == "mu_xx" else d.explicit[key])]
    m[i][j] = m[i][j] * (_unit_ratio(d, rng) if kind == "mu_unit" else d.ring(rng.choice((-1, I, 2))))
    if key == "mu_xx":
        return f"{kind}:{key}", d.with_entries(mu_xx=m)
    return f"{kind}:{key}", d.with_entries(**{key: m})


CASES = [("su3", s) for s in range(16)] + [("so3", s) for s in range(12)]


@pytest.mark.parametrize("name,seed", CASES, ids=[f"{n}-{s}" for n, s in CASES])
def test_perturbation_is_detected(name, seed):
    d = su3_datum() if name == "su3" else so3_datum()
    kind, bad = perturb(d, seed)
    rep = validate(bad)
    assert rep.failures, f"{kind} perturbation passed validation"


def test_control_is_clean():
    assert validate(su3_datum().with_entries()).passed
    assert validate(so3_datum().with_entries()).passed
