"""Bredon motivic cohomology of R with Z/2 coefficients, through Betti realization.

The weight plane (b, q) splits into four regions:
  PointRegion  b >= 0, b + q >= 0   realization is an isomorphism onto H(pt)
  BorelRegion  b < 0,  b + q >= 0   H(E_{Sigma2}C2) via kappa2^b; iso for a <= 2b + 2
  TildeRegion  b >= 1, b + q < 0    the cofiber of E_{Sigma2}C2 -> pt, shifted
  ZeroRegion   b <= 0, b + q < 0    zero
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .degrees import KleinDegree, MotivicBidegree, Region, realize, region_of
from .f2algebra import Element, Monomial
from .klein_point import GroupDescriptor, basis_at, group_at
from .series import dim_point
from .spaces import SuspendedMonomial, b_space_basis


class Status(enum.Enum):
    ISO = "Iso"
    MONO = "Mono"
    MONO_NOT_EPI = "MonoNotEpi"
    ZERO_DOMAIN = "ZeroDomain"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MotivicGroup:
    bidegree: MotivicBidegree
    dimension: int
    region: Region
    basis: tuple | None

    @property
    def realized(self) -> KleinDegree:
        return realize(self.bidegree)

    def basis_strings(self) -> list[str] | None:
        return None if self.basis is None else [str(m) for m in self.basis]


@dataclass(frozen=True)
class StatusReport:
    bidegree: MotivicBidegree
    raw: Status
    refined: Status
    dim_domain: int
    dim_codomain: int


def _as_bidegree(d) -> MotivicBidegree:
    return d if isinstance(d, MotivicBidegree) else MotivicBidegree(*d)


def borel_degree(d: MotivicBidegree) -> KleinDegree:
    """Point degree carrying the BorelRegion group after dividing by kappa2^-b."""
    return KleinDegree(d.a - 2 * d.b, d.p - d.q + d.b, 0, d.b + d.q)


def borel_group(d) -> MotivicGroup:
    """(a + p sigma, b + q sigma) with b + q >= 0: kappa2^-b times the sigma,
    sigma*eps sector of the point; zero when b + q < 0."""
    d = _as_bidegree(d)
    region = region_of(d.b, d.q)
    if d.b + d.q < 0:
        return MotivicGroup(d, 0, region, ())
    base = borel_degree(d)
    inner = basis_at(base) or []
    kap = (("k2", -d.b),)
    basis = tuple(Monomial.make(m.exps + kap, m.theta) for m in inner)
    return MotivicGroup(d, dim_point(*base), region, basis)


def tilde_group(d: MotivicBidegree) -> MotivicGroup:
    """Zero for a > 2b + 1; otherwise the reduced B-group in degree (a - b - 1, b),
    written as x1^(p-q) x3^q Sigma(beta)."""
    if d.a > 2 * d.b + 1 or d.b <= 0:
        return MotivicGroup(d, 0, Region.TILDE, ())
    basis = tuple(SuspendedMonomial(d.p - d.q, d.q, m)
                  for m in b_space_basis(d.a - d.b - 1, d.b, True))
    return MotivicGroup(d, len(basis), Region.TILDE, basis)


def motivic_group_R(d) -> MotivicGroup:
    d = _as_bidegree(d)
    region = region_of(d.b, d.q)
    if region is Region.ZERO:
        return MotivicGroup(d, 0, region, ())
    if region is Region.TILDE:
        return tilde_group(d)
    if region is Region.POINT:
        g = group_at(realize(d))
        return MotivicGroup(d, g.dimension, region, g.basis)
    return borel_group(d)


def motivic_dim(d) -> int:
    return motivic_group_R(d).dimension


def raw_status(d: MotivicBidegree) -> Status:
    region = region_of(d.b, d.q)
    if region is Region.POINT:
        return Status.ISO
    if region is Region.BOREL:
        return Status.ISO if d.a <= 2 * d.b + 2 else Status.MONO
    if region is Region.TILDE:
        if d.a > 2 * d.b + 1 or d.a <= 1:
            return Status.ZERO_DOMAIN
        return Status.MONO
    return Status.ZERO_DOMAIN


def realization_status(d) -> StatusReport:
    """Status guaranteed by the general results, plus a refinement from the two dimensions.

    Only a raw Mono is refined: an injective map between finite F2 spaces
    of equal dimension is an isomorphism.
    """
    d = _as_bidegree(d)
    raw = raw_status(d)
    dom = motivic_dim(d)
    cod = dim_point(*realize(d))
    refined = raw
    if raw is Status.MONO:
        if dom == cod:
            refined = Status.ISO
        elif dom == 0:
            refined = Status.ZERO_DOMAIN
        else:
            refined = Status.MONO_NOT_EPI
    return StatusReport(d, raw, refined, dom, cod)


# -------------------------------------------------------------- decomposition


def decomposition_tag(d: MotivicBidegree) -> str | None:
    """'R' for the summand generated by kappa2 and the sigma, sigma*eps sector,
    'NC' for the negative cone, None where the group is zero by region."""
    if d.b + d.q >= 0:
        return "R"
    if d.b >= 1:
        return "NC"
    return None


def decomposition_R(bidegrees: Iterable) -> list[tuple[MotivicBidegree, str | None, int]]:
    out = []
    for d in bidegrees:
        d = _as_bidegree(d)
        out.append((d, decomposition_tag(d), motivic_dim(d)))
    return out


def motivic_window(a_max: int, r_max: int) -> Iterator[MotivicBidegree]:
    for a in range(-a_max, a_max + 1):
        for p in range(-r_max, r_max + 1):
            for b in range(-r_max, r_max + 1):
                for q in range(-r_max, r_max + 1):
                    yield MotivicBidegree(a, p, b, q)


def h_r(a: int, w: int) -> int:
    """dim H^{a, w}(R; Z/2) = 1 iff 0 <= a <= w (for w >= 0)."""
    return int(0 <= a <= w)


def check_theorem_2q(a: int, b: int, q: int) -> tuple[int, int]:
    """(lhs, rhs): dim H^{a + 2q sigma, b + q sigma}(R) against the sum of
    shifted motivic cohomologies of R."""
    lhs = motivic_dim(MotivicBidegree(a, 2 * q, b, q))
    rhs = sum(h_r(a + 2 * j, j + b) + h_r(a + 2 * j + 1, j + b) for j in range(q))
    rhs += h_r(a + 2 * q, q + b)
    return lhs, rhs


# -------------------------------------------------------------- negative cone module


def nc_generator(e1: int, e3: int, n: int, m: int, power: int, with_c: bool) -> SuspendedMonomial:
    """x1^e1 x3^e3 Sigma(x2^n y2^m b^power c) or Sigma(x2^n y2^m b^power)."""
    exps = {"x2": n, "y2": m, "b": power, "c": int(with_c)}
    return SuspendedMonomial(e1, e3, Monomial.make(exps))


def _y1_action(g: SuspendedMonomial) -> list[SuspendedMonomial]:
    d = g.inner.as_dict()
    n, m, p, c = d.get("x2", 0), d.get("y2", 0), d.get("b", 0), d.get("c", 0)
    if c:
        if p == 0:
            return []
        return [nc_generator(g.e1 + 1, g.e3, n + 1, m, p - 1, True),
                nc_generator(g.e1 + 1, g.e3, n, m + 1, p, False)]
    if p == 0:
        raise ValueError(f"{g} is not a negative cone generator")
    return [nc_generator(g.e1 + 1, g.e3, n, m, p - 1, True)]


def nc_module_action(coeff: Monomial, gen: SuspendedMonomial) -> Element:
    """Action of a Stong(sigma) monomial on a negative cone generator.

    x1 shifts the x1 exponent, y1 follows the Sigma(b^p c), Sigma(b^p)
    rules, and theta1-divided classes act by zero.
    """
    if coeff.theta is not None:
        return Element((), "nc")
    d = coeff.as_dict()
    if any(g not in ("x1", "y1") for g in d):
        raise ValueError(f"{coeff} is not in the sigma-axis Stong ring")
    terms = {gen}
    for _ in range(d.get("y1", 0)):
        nxt: set = set()
        for t in terms:
            for u in _y1_action(t):
                nxt ^= {u}
        terms = nxt
    x = d.get("x1", 0)
    return Element((SuspendedMonomial(t.e1 + x, t.e3, t.inner) for t in terms), "nc")


def nc_multiply(g: SuspendedMonomial, h: SuspendedMonomial) -> Element:
    """Products of two negative cone classes vanish."""
    return Element((), "nc")
