"""Related spaces: B_{Sigma2}C2, E_{Sigma2}C2 and its cofiber, and BC2 over R.

B_{Sigma2}C2 has RO(Sigma2)-graded cohomology
    M[c, b] / (c^2 = x2 c + y2 b),  |c| = eps, |b| = 1 + eps,
over the Stong ring M of the axis eps.  Degrees of B are pairs (a, b) for
a + b eps.  E_{Sigma2}C2 is graded over the Klein group; kappa2 is invertible
there, with kappa2 b = x1 x3 and kappa2 c = y1 x3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .degrees import KleinDegree
from .f2algebra import Monomial, stong_basis
from .klein_point import GroupDescriptor, basis_at, group_at

# -------------------------------------------------------------- B_{Sigma2}C2


@lru_cache(maxsize=None)
def b_space_basis(a: int, b: int, reduced: bool = False) -> tuple[Monomial, ...]:
    """Stong(eps) monomial times c^delta b^e, delta in {0, 1}."""
    out = []
    top = max(a, (a + b) // 2, 0) + 2
    for delta in (0, 1):
        for e in range(0, top + 1):
            if reduced and delta == 0 and e == 0:
                continue
            for s in stong_basis(2, a - e, b - delta - e):
                out.append(Monomial.make(s.exps + (("c", delta), ("b", e)), s.theta))
    return tuple(out)


def b_space_dim(a: int, b: int, reduced: bool = False) -> int:
    return len(b_space_basis(a, b, reduced))


def b_space_group(a: int, b: int, reduced: bool = False) -> GroupDescriptor:
    basis = b_space_basis(a, b, reduced)
    return GroupDescriptor((a, b), len(basis), basis, "reduced" if reduced else "unreduced")


# -------------------------------------------------------------- suspension classes


@dataclass(frozen=True)
class SuspendedMonomial:
    """x1^e1 x3^e3 Sigma(inner), a class of the cofiber of E_{Sigma2}C2 -> pt.

    x1 and x3 act invertibly there, so e1 and e3 range over all integers.
    """

    e1: int
    e3: int
    inner: Monomial

    @property
    def degree(self) -> KleinDegree:
        d = self.inner.degree
        return KleinDegree(d.a + 1, d.p + self.e1, d.b, d.q + self.e3)

    def sort_key(self) -> tuple:
        return (self.e1, self.e3, self.inner.sort_key())

    def __str__(self) -> str:
        parts = []
        if self.e1:
            parts.append("x1" if self.e1 == 1 else f"x1^{self.e1}")
        if self.e3:
            parts.append("x3" if self.e3 == 1 else f"x3^{self.e3}")
        parts.append(f"S({self.inner})")
        return "*".join(parts)


def etilde_space_group(d: KleinDegree) -> GroupDescriptor:
    """H^d of the cofiber: the reduced B-group in degree (a - 1, b)."""
    d = KleinDegree(*d)
    basis = tuple(SuspendedMonomial(d.p, d.q, m) for m in b_space_basis(d.a - 1, d.b, True))
    return GroupDescriptor(d, len(basis), basis, "etilde")


def etilde_dim(d: KleinDegree) -> int:
    return b_space_dim(d.a - 1, d.b, True)


# -------------------------------------------------------------- E_{Sigma2}C2

KAPPA2 = KleinDegree(-1, 1, -1, 1)


def e_space_shift(d: KleinDegree) -> int:
    """kappa2-shift k taking d to a degree with p, q >= 0, b <= 0 and a basis.

    The shifted degree d + k kappa2 has either b = 0 or min(p, q) = 0.
    """
    return max(-d.p, -d.q, d.b)


def e_space_group(d: KleinDegree) -> GroupDescriptor:
    """Basis kappa2^-k times (image of the point) and (lifts of the cofiber).

    At the shifted degree the sequence 0 -> H(pt) -> H(E) -> H(cofiber) -> 0
    splits, the point part has a known basis, and x1^p x3^q beta lifts the
    cofiber class x1^p x3^q Sigma(beta).
    """
    d = KleinDegree(*d)
    k = e_space_shift(d)
    s = d + KAPPA2.scale(k)
    point = basis_at(s)
    if point is None:  # unreachable by the choice of k
        raise AssertionError(f"no point basis at {s}")
    kap = (("k2", -k),)
    basis = [Monomial.make(m.exps + kap, m.theta) for m in point]
    lift = (("x1", s.p), ("x3", s.q))
    for beta in b_space_basis(s.a, s.b, True):
        basis.append(Monomial.make(beta.exps + lift + kap, beta.theta))
    return GroupDescriptor(d, len(basis), tuple(basis), "espace")


def e_space_dim(d: KleinDegree) -> int:
    return e_space_group(d).dimension


# -------------------------------------------------------------- BC2 over R


@dataclass(frozen=True)
class RMonomial:
    """tau^i rho^j s^delta t^e in H^{*,*}(R)[s, t]/(s^2 = tau t + rho s)."""

    tau: int = 0
    rho: int = 0
    s: int = 0
    t: int = 0

    @property
    def bidegree(self) -> tuple[int, int]:
        # tau (0,1), rho (1,1), s (1,1), t (2,1)
        return (self.rho + self.s + 2 * self.t, self.tau + self.rho + self.s + self.t)

    def realize(self) -> Monomial:
        """s -> c, t -> b, tau -> y2, rho -> x2."""
        return Monomial.make({"y2": self.tau, "x2": self.rho, "c": self.s, "b": self.t})

    def __str__(self) -> str:
        parts = [g if e == 1 else f"{g}^{e}" for g, e in
                 (("tau", self.tau), ("rho", self.rho), ("s", self.s), ("t", self.t)) if e]
        return "*".join(parts) if parts else "1"


def bc2_basis(a: int, w: int, truncate: int | None = None) -> list[RMonomial]:
    """Basis in bidegree (a, w); with truncate=q, classes with t^e, e >= q, vanish."""
    out = []
    for s in (0, 1):
        for t in range(0, max(a, 0) // 2 + 1):
            if truncate is not None and t >= truncate:
                continue
            rho = a - s - 2 * t
            tau = w - rho - s - t
            if rho >= 0 and tau >= 0:
                out.append(RMonomial(tau, rho, s, t))
    return out


def bc2_motivic_dim(a: int, w: int) -> int:
    return len(bc2_basis(a, w))


def w_q_dim(q: int, a: int, w: int) -> int:
    """W_q: the motivic B C2 with t^q = 0."""
    return len(bc2_basis(a, w, truncate=q))


def point_dim(d: KleinDegree) -> int:
    return group_at(d).dimension


# -------------------------------------------------------------- realization dictionary


class UnknownClass(KeyError):
    pass


_REALIZE = {"s": "c", "t": "b", "tau": "y2", "rho": "x2"}
_KEPT = ("x1", "y1", "x3", "y3", "t1", "k2")


def realize_class(name: str) -> str:
    """Betti realization of a named motivic class."""
    name = {"τ": "tau", "ρ": "rho", "θ1": "t1", "κ2": "k2"}.get(name, name)
    if name in _REALIZE:
        return _REALIZE[name]
    if name in _KEPT:
        return name
    raise UnknownClass(name)
