"""Degrees in RO(C2 x Sigma2) and motivic bidegrees over R.

A Klein degree (a, p, b, q) stands for a + p*sigma + b*eps + q*(sigma (x) eps).
A motivic bidegree (a, p, b, q) stands for the C2-equivariant motivic
bidegree (a + p*sigma, b + q*sigma): topological part first, weight second.
"""

from __future__ import annotations

import enum
import re
from typing import NamedTuple


class DegreeParseError(ValueError):
    pass


class KleinDegree(NamedTuple):
    a: int
    p: int
    b: int
    q: int

    def __add__(self, other):  # type: ignore[override]
        return KleinDegree(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return KleinDegree(*(x - y for x, y in zip(self, other)))

    def __neg__(self):
        return KleinDegree(-self.a, -self.p, -self.b, -self.q)

    def scale(self, k: int) -> KleinDegree:
        return KleinDegree(k * self.a, k * self.p, k * self.b, k * self.q)

    @property
    def rep(self) -> tuple[int, int, int]:
        """Coefficients of (sigma, eps, sigma (x) eps)."""
        return (self.p, self.b, self.q)

    def permuted(self, perm: tuple[int, int, int]) -> KleinDegree:
        """Relabel the three nontrivial irreducibles: new[i] = old[perm[i]]."""
        r = self.rep
        return KleinDegree(self.a, r[perm[0]], r[perm[1]], r[perm[2]])

    def __str__(self) -> str:
        return format_klein(self)


class MotivicBidegree(NamedTuple):
    a: int
    p: int
    b: int
    q: int

    @property
    def weight(self) -> tuple[int, int]:
        return (self.b, self.q)

    def __str__(self) -> str:
        return f"({self.a},{self.p}:{self.b},{self.q})"


AXES = ("sigma", "eps", "sigma*eps")


class C2Degree(NamedTuple):
    """a + s chi for one nontrivial character chi of the Klein group."""

    a: int
    s: int
    axis: str = "sigma"

    def embed(self) -> KleinDegree:
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}")
        rep = [0, 0, 0]
        rep[AXES.index(self.axis)] = self.s
        return KleinDegree(self.a, *rep)


ZERO = KleinDegree(0, 0, 0, 0)
UNIT_A = KleinDegree(1, 0, 0, 0)


def realize(d: MotivicBidegree) -> KleinDegree:
    """Betti realization of a motivic bidegree.

    (a + p sigma, b + q sigma) goes to (a - b) + (p - q) sigma + b eps + q sigma(x)eps.
    """
    return KleinDegree(d.a - d.b, d.p - d.q, d.b, d.q)


def unrealize(k: KleinDegree) -> MotivicBidegree:
    return MotivicBidegree(k.a + k.b, k.p + k.q, k.b, k.q)


class Region(enum.Enum):
    ZERO = "ZeroRegion"
    TILDE = "TildeRegion"
    POINT = "PointRegion"
    BOREL = "BorelRegion"

    def __str__(self) -> str:
        return self.value


def region_of(b: int, q: int) -> Region:
    """Region of the (b, q) weight plane."""
    if b + q < 0:
        return Region.TILDE if b >= 1 else Region.ZERO
    return Region.POINT if b >= 0 else Region.BOREL


_INT = r"\s*([+-]?\d+)\s*"
_KLEIN_RE = re.compile(rf"^\(?{_INT},{_INT},{_INT},{_INT}\)?$")
_MOT_RE = re.compile(rf"^\(?\(?{_INT},{_INT}\)?\s*[:;]\s*\(?{_INT},{_INT}\)?\)?$")
_MOT_FLAT_RE = re.compile(rf"^\(\({_INT},{_INT}\)\s*,\s*\({_INT},{_INT}\)\)$")


def parse_klein(text: str) -> KleinDegree:
    m = _KLEIN_RE.match(text.strip())
    if not m:
        raise DegreeParseError(f"expected a,p,b,q but got {text!r}")
    return KleinDegree(*(int(g) for g in m.groups()))


def parse_motivic(text: str) -> MotivicBidegree:
    """Accepts 'a,p:b,q' and '((a,p),(b,q))'."""
    s = text.strip()
    m = _MOT_RE.match(s) or _MOT_FLAT_RE.match(s)
    if not m:
        raise DegreeParseError(f"expected a,p:b,q but got {text!r}")
    return MotivicBidegree(*(int(g) for g in m.groups()))


def format_klein(d: KleinDegree) -> str:
    return f"({d.a},{d.p},{d.b},{d.q})"


def pretty_klein(d: KleinDegree) -> str:
    """Human form such as 3 - sigma - eps - sigma*eps."""
    parts = []
    for coef, name in zip(d, ("", "sigma", "eps", "sigma*eps")):
        if coef == 0:
            continue
        if not name:
            parts.append(str(coef))
        elif coef == 1:
            parts.append(name)
        elif coef == -1:
            parts.append("-" + name)
        else:
            parts.append(f"{coef}{name}")
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out
