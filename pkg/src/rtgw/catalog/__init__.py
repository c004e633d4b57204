"""Catalogued data: the rank-three unitary and orthogonal instances."""

from __future__ import annotations

from ..report import Report
from ..tgw import Datum
from . import so3, su3

BUILTINS = {"su3": su3.su3_datum, "so3": so3.so3_datum}


def builtin(name: str) -> Datum:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin datum {name!r}; expected one of {sorted(BUILTINS)}") from None


def verify(name: str) -> Report:
    if name == "su3":
        return su3.verify_su3()
    if name == "so3":
        return so3.verify_so3()
    if name == "all":
        rep = Report("all")
        rep.extend(su3.verify_su3(), "su3:")
        rep.extend(so3.verify_so3(), "so3:")
        return rep
    raise ValueError(f"unknown catalog entry {name!r}")


def invariant_ring_generators(which: str) -> list:
    if which == "su3":
        return su3.invariant_ring()
    if which == "so3":
        return so3.invariant_ring()
    raise ValueError(f"unknown catalog entry {which!r}")


def casimir_report(order: int) -> Report:
    rep = Report(f"Casimir C{order}")
    for corr in ("consistent", "printed"):
        rep.extend(su3.casimir(order, correspondence=corr).report())
    return rep


__all__ = ["BUILTINS", "builtin", "verify", "invariant_ring_generators", "casimir_report", "su3", "so3"]
