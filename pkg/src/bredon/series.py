"""Poincare series of the Klein-four Bredon cohomology of a point.

For a representation V = p sigma + b eps + q sigma*eps, the series P_V(x) is a
Laurent polynomial whose coefficient of x^t is the dimension of H^{V - t}.
Equivalently dim H^{a + V} is the coefficient of x^(-a).

Every closed form is a sum of shifted products of geometric sums
x^lo + ... + x^hi.  `series_for` evaluates those products by counting lattice
points; `series_oracle` multiplies the same factors out term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class LaurentPoly:
    """Finite Laurent polynomial in x with nonnegative integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._c = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def geometric(cls, lo: int, hi: int) -> LaurentPoly:
        """x^lo + ... + x^hi, zero when hi < lo."""
        return cls({e: 1 for e in range(lo, hi + 1)})

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def total(self) -> int:
        return sum(self._c.values())

    def span(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, c in self.items():
            mono = "1" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}" if e == 0 else f"{c}{mono}")
        return " + ".join(terms)


@dataclass(frozen=True)
class Term:
    """x^shift times a product of geometric sums over the given spans."""

    shift: int
    spans: tuple[tuple[int, int], ...]

    def is_empty(self) -> bool:
        return any(hi < lo for lo, hi in self.spans)

    def coeff(self, t: int) -> int:
        if self.is_empty():
            return 0
        t -= self.shift
        if not self.spans:
            return int(t == 0)
        if len(self.spans) == 1:
            lo, hi = self.spans[0]
            return int(lo <= t <= hi)
        if len(self.spans) == 2:
            (l1, h1), (l2, h2) = self.spans
            # i in [l1, h1], j = t - i in [l2, h2]
            return max(0, min(h1, t - l2) - max(l1, t - h2) + 1)
        head, rest = self.spans[0], Term(0, self.spans[1:])
        return sum(rest.coeff(t - i) for i in range(head[0], head[1] + 1))

    def exponent_range(self) -> tuple[int, int] | None:
        if self.is_empty():
            return None
        return (self.shift + sum(lo for lo, _ in self.spans),
                self.shift + sum(hi for _, hi in self.spans))


def _g(lo: int, hi: int) -> tuple[int, int]:
    return (lo, hi)


def _one(n: int) -> tuple[int, int]:
    """1 + x + ... + x^n."""
    return (0, n)


def closed_form(p: int, b: int, q: int) -> list[Term]:
    """The printed closed form for the representation p sigma + b eps + q sigma*eps.

    Coefficients are fed to the formulas in (sigma, eps, sigma*eps) order.
    The printed forms are not visibly symmetric, so relabeling invariance is
    a property to check rather than an assumption.
    """
    coeffs = [c for c in (p, b, q) if c != 0]
    pos = [c for c in coeffs if c > 0]
    neg = [-c for c in coeffs if c < 0]
    if not coeffs:
        return [Term(0, ())]
    if len(coeffs) == 1:
        (n,) = coeffs
        return [Term(0, (_one(n),))] if n > 0 else [Term(0, (_g(n, -2),))]
    if len(coeffs) == 2:
        if len(pos) == 2:
            return [Term(0, (_one(pos[0]), _one(pos[1])))]
        if len(neg) == 2:
            return [Term(0, (_g(-neg[0], -2), _g(-neg[1], -2)))]
        return [Term(0, (_one(pos[0]), _g(-neg[0], -2)))]
    if len(pos) == 3:
        l, m, n = pos
        return positive_cone_form(l, m, n)
    if len(pos) == 2:
        l, m = pos
        return one_negative_form(l, m, neg[0])
    if len(pos) == 1:
        j, k = neg
        return two_negative_form(pos[0], j, k)
    i, j, k = neg
    return negative_cone_form(i, j, k)


def positive_cone_form(l: int, m: int, n: int) -> list[Term]:
    return [Term(0, (_one(l), _one(m))), Term(1, (_one(l + m), _one(n - 1)))]


def one_negative_form(l: int, m: int, k: int, branch: str | None = None) -> list[Term]:
    """l alpha + m beta - k gamma with k, l, m >= 1.

    branch forces one of 'small' (k <= l, m), 'big_l' (k > l) or 'big_m'
    (k > m); by default the first applicable branch is used.
    """
    if branch is None:
        branch = "small" if k <= l and k <= m else ("big_l" if k > l else "big_m")
    if branch == "small":
        return [Term(0, (_g(-k, -1), _one(k - 2))),
                Term(k, (_one(l - k), _one(m - k)))]
    if branch == "big_m":
        l, m = m, l
    return [Term(-(l + 1), (_one(l), _one(l - 1))),
            Term(-k, (_one(k - l - 2), _one(l + m)))]


def one_negative_branches(l: int, m: int, k: int) -> list[str]:
    out = []
    if k <= l and k <= m:
        out.append("small")
    if k > l:
        out.append("big_l")
    if k > m:
        out.append("big_m")
    return out


def two_negative_form(l: int, j: int, k: int, branch: str | None = None) -> list[Term]:
    """l alpha - j beta - k gamma with j, k, l >= 1.

    Branches: 'big' (j, k >= l + 1), 'l_ge_k' and 'l_ge_j'.
    """
    if branch is None:
        branch = "big" if j >= l + 1 and k >= l + 1 else ("l_ge_k" if l >= k else "l_ge_j")
    if branch == "big":
        return [Term(-(j + k - l), (_one(j - l - 2), _one(k - l - 2))),
                Term(-(l + 1), (_one(l), _one(l - 1)))]
    if branch == "l_ge_j":
        j, k = k, j
    return [Term(-j, (_one(j - 2), _one(l - k))),
            Term(-k, (_one(l - 1), _one(k - 1)))]


def two_negative_branches(l: int, j: int, k: int) -> list[str]:
    out = []
    if j >= l + 1 and k >= l + 1:
        out.append("big")
    if l >= k:
        out.append("l_ge_k")
    if l >= j:
        out.append("l_ge_j")
    return out


def negative_cone_form(i: int, j: int, k: int) -> list[Term]:
    s = i + j + k
    return [Term(-s, (_one(j + k - 2), _one(i - 2))),
            Term(-s + i - 1, (_one(k - 1), _one(j - 1)))]


def evaluate_terms(terms: Sequence[Term]) -> LaurentPoly:
    """Closed-form evaluation by lattice point counting."""
    ranges = [r for r in (t.exponent_range() for t in terms) if r is not None]
    if not ranges:
        return LaurentPoly()
    lo = min(r[0] for r in ranges)
    hi = max(r[1] for r in ranges)
    return LaurentPoly({e: sum(t.coeff(e) for t in terms) for e in range(lo, hi + 1)})


def series_for(p: int, b: int, q: int) -> LaurentPoly:
    """Poincare series of p sigma + b eps + q sigma*eps."""
    return evaluate_terms(closed_form(p, b, q))


def series_oracle(factors: Iterable[Sequence[tuple[int, int]]], shifts: Iterable[int]) -> LaurentPoly:
    """Sum over terms of x^shift times the product of the given geometric spans,
    multiplied out naively."""
    total = LaurentPoly()
    for spans, k in zip(factors, shifts):
        prod = LaurentPoly.monomial(k)
        for lo, hi in spans:
            prod = prod * LaurentPoly.geometric(lo, hi)
        total = total + prod
    return total


def oracle_for_terms(terms: Sequence[Term]) -> LaurentPoly:
    return series_oracle([t.spans for t in terms], [t.shift for t in terms])


def dim_point(a: int, p: int, b: int, q: int) -> int:
    """dim over Z/2 of H^{a + p sigma + b eps + q sigma*eps}(pt)."""
    return series_for(p, b, q).coeff(-a)
