"""Groups H^V(pt; Z/2) for the Klein four group.

Dimensions come from the Poincare series.  Bases are given where a
presentation is known:
  positive cone (p, b, q >= 0): standard monomials modulo the cubic relation
  theta sector: one coefficient zero, one negative (axis i), the third
      nonnegative (axis k); basis theta_i/(x_i^n y_i^m) x_k^n' y_k^m'
Everywhere else only the dimension is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator, Sequence

from .degrees import KleinDegree
from .f2algebra import DEGREES, NAMED_CLASSES, Monomial, positive_cone_basis
from .series import LaurentPoly, dim_point, series_for

POSITIVE_CONE = "positive-cone"
THETA_SECTOR = "theta-sector"
MIXED = "mixed"


@dataclass(frozen=True)
class GroupDescriptor:
    degree: Any
    dimension: int
    basis: tuple[Any, ...] | None
    sector: str

    def basis_strings(self) -> list[str] | None:
        return None if self.basis is None else [str(m) for m in self.basis]


def sector_of(d: KleinDegree) -> str:
    rep = d.rep
    if min(rep) >= 0:
        return POSITIVE_CONE
    neg = [c for c in rep if c < 0]
    if len(neg) == 1 and 0 in rep:
        return THETA_SECTOR
    return MIXED


def theta_sector_basis(d: KleinDegree) -> list[Monomial]:
    rep = d.rep
    i = next(n for n, c in enumerate(rep) if c < 0) + 1
    others = [n + 1 for n, c in enumerate(rep) if c > 0]
    ci = rep[i - 1]
    ck = rep[others[0] - 1] if others else 0
    out = []
    for mk in range(0, ck + 1):
        nk = ck - mk
        m = d.a - 2 + mk
        n = -ci - 2 - m
        if m < 0 or n < 0:
            continue
        exps = {f"x{others[0]}": nk, f"y{others[0]}": mk} if others else {}
        out.append(Monomial.make(exps, (i, n, m)))
    return out


def basis_at(d: KleinDegree) -> list[Monomial] | None:
    sector = sector_of(d)
    if sector == POSITIVE_CONE:
        return positive_cone_basis(d.p, d.b, d.q, d.a)
    if sector == THETA_SECTOR:
        return theta_sector_basis(d)
    return None


def group_at(d: KleinDegree) -> GroupDescriptor:
    d = KleinDegree(*d)
    basis = basis_at(d)
    dim = dim_point(*d)
    return GroupDescriptor(d, dim, None if basis is None else tuple(basis), sector_of(d))


def series(d: KleinDegree | Sequence[int]) -> LaurentPoly:
    """Series of the representation part of d (the trivial part is ignored)."""
    _, p, b, q = d
    return series_for(p, b, q)


def named_class_degrees() -> dict[str, KleinDegree]:
    return {g: DEGREES[g] for g in NAMED_CLASSES}


# permutations of (sigma, eps, sigma*eps); S3 acts by relabeling
S3 = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1))


def window(a_max: int, r_max: int) -> Iterator[KleinDegree]:
    ar = range(-a_max, a_max + 1)
    rr = range(-r_max, r_max + 1)
    for a, p, b, q in product(ar, rr, rr, rr):
        yield KleinDegree(a, p, b, q)
