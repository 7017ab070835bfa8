"""Elements of the Klein-four point ring and its relatives over F2.

Alphabet (ASCII spelling in parentheses):
  x_i, y_i (x1..y3)      Euler and orientation classes of sigma, eps, sigma*eps
  theta_i (t1..t3)       the Stong classes in degree 2 - 2 chi_i, optionally
                         divided as t1/(x1^2*y1)
  kappa_i (k1..k3), iota_i (i1..i3), Theta (T)
  c, b                   the classes of B_{Sigma2}C2 pulled back to E_{Sigma2}C2

A product that the known relations do not determine comes back as an
UnknownProduct instead of a guess.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Union

from .degrees import KleinDegree

POLY = ("x1", "y1", "x2", "y2", "x3", "y3")
ORDER = POLY + ("c", "b", "k1", "k2", "k3", "i1", "i2", "i3", "T")
NAMED = ("k1", "k2", "k3", "i1", "i2", "i3", "T")
_POS = {g: n for n, g in enumerate(ORDER)}

DEGREES: dict[str, KleinDegree] = {
    "x1": KleinDegree(0, 1, 0, 0), "y1": KleinDegree(-1, 1, 0, 0),
    "x2": KleinDegree(0, 0, 1, 0), "y2": KleinDegree(-1, 0, 1, 0),
    "x3": KleinDegree(0, 0, 0, 1), "y3": KleinDegree(-1, 0, 0, 1),
    "t1": KleinDegree(2, -2, 0, 0), "t2": KleinDegree(2, 0, -2, 0),
    "t3": KleinDegree(2, 0, 0, -2), "T": KleinDegree(3, -1, -1, -1),
    "k1": KleinDegree(-1, -1, 1, 1), "k2": KleinDegree(-1, 1, -1, 1),
    "k3": KleinDegree(-1, 1, 1, -1), "i1": KleinDegree(1, 1, -1, -1),
    "i2": KleinDegree(1, -1, 1, -1), "i3": KleinDegree(1, -1, -1, 1),
    "c": KleinDegree(0, 0, 1, 0), "b": KleinDegree(1, 0, 1, 0),
}

# the sixteen named classes of the point ring
NAMED_CLASSES = ("x1", "y1", "x2", "y2", "x3", "y3", "t1", "t2", "t3",
                 "T", "k1", "k2", "k3", "i1", "i2", "i3")

SECTORS = ("point", "espace", "C2", "Delta", "Sigma2", "trivial")

# Mackey levels: which polynomial generators survive, and the quadratic relation
LEVELS: dict[str, tuple[tuple[str, ...], tuple[str, str, str, str] | None]] = {
    "K": (POLY, None),
    "C2": (("y1", "x2", "y2", "x3", "y3"), ("x2", "y3", "y2", "x3")),
    "Delta": (("x1", "y1", "y2", "x3", "y3"), ("x1", "y3", "y1", "x3")),
    "Sigma2": (("x1", "y1", "x2", "y2", "y3"), ("x1", "y2", "y1", "x2")),
    "trivial": (("y1", "y2", "y3"), None),
}
LEVEL_ORDER = ("K", "C2", "Delta", "Sigma2", "trivial")


class IllFormed(ValueError):
    pass


class UnknownProduct:
    """Marker for a product the known relations do not determine."""

    __slots__ = ("reason",)

    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"UnknownProduct({self.reason!r})"

    def __str__(self) -> str:
        return f"unknown ({self.reason})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UnknownProduct)

    def __hash__(self) -> int:
        return hash("UnknownProduct")


@dataclass(frozen=True)
class Monomial:
    """exps: sorted ((generator, exponent), ...); theta: (axis, n, m) or None."""

    exps: tuple[tuple[str, int], ...] = ()
    theta: tuple[int, int, int] | None = None

    @classmethod
    def make(cls, exps: dict[str, int] | Iterable[tuple[str, int]] = (),
             theta: tuple[int, int, int] | None = None) -> Monomial:
        d: dict[str, int] = {}
        for g, e in (exps.items() if isinstance(exps, dict) else exps):
            if g not in _POS:
                raise IllFormed(f"unknown generator {g!r}")
            d[g] = d.get(g, 0) + e
        return cls(tuple(sorted(((g, e) for g, e in d.items() if e), key=lambda t: _POS[t[0]])), theta)

    @classmethod
    def from_poly(cls, vec: tuple[int, ...]) -> Monomial:
        return cls.make(zip(POLY, vec))

    def exp(self, g: str) -> int:
        for h, e in self.exps:
            if h == g:
                return e
        return 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.exps)

    def poly_vector(self) -> tuple[int, ...]:
        return tuple(self.exp(g) for g in POLY)

    def is_poly(self) -> bool:
        return self.theta is None and all(g in POLY for g, _ in self.exps)

    def is_unit(self) -> bool:
        return not self.exps and self.theta is None

    @property
    def degree(self) -> KleinDegree:
        d = KleinDegree(0, 0, 0, 0)
        for g, e in self.exps:
            d = d + DEGREES[g].scale(e)
        if self.theta is not None:
            i, n, m = self.theta
            d = d + DEGREES[f"t{i}"] - DEGREES[f"x{i}"].scale(n) - DEGREES[f"y{i}"].scale(m)
        return d

    def times(self, other: Monomial) -> Monomial:
        """Formal product; thetas must not collide."""
        if self.theta is not None and other.theta is not None:
            raise IllFormed("formal product of two theta monomials")
        return Monomial.make(self.exps + other.exps, self.theta or other.theta)

    def sort_key(self) -> tuple:
        vec = tuple(self.exp(g) for g in ORDER)
        th = self.theta or (0, 0, 0)
        return (self.theta is not None, th[0], -th[1], -th[2], vec)

    def __str__(self) -> str:
        parts = []
        if self.theta is not None:
            i, n, m = self.theta
            den = [_pow(f"x{i}", n), _pow(f"y{i}", m)]
            den = [d for d in den if d]
            if not den:
                parts.append(f"t{i}")
            elif len(den) == 1 and "^" not in den[0]:
                parts.append(f"t{i}/{den[0]}")
            else:
                parts.append(f"t{i}/(" + "*".join(den) + ")")
        parts.extend(_pow(g, e) for g, e in self.exps)
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _pow(g: str, e: int) -> str:
    if e == 0:
        return ""
    return g if e == 1 else f"{g}^{e}"


ONE = Monomial()


class Element:
    """F2-linear combination of monomials in a named sector."""

    __slots__ = ("terms", "sector")

    def __init__(self, terms: Iterable[Monomial] = (), sector: str = "point"):
        acc: set[Monomial] = set()
        for t in terms:
            acc ^= {t}
        self.terms = frozenset(acc)
        self.sector = sector

    @classmethod
    def zero(cls, sector: str = "point") -> Element:
        return cls((), sector)

    @classmethod
    def of(cls, m: Monomial, sector: str = "point") -> Element:
        return cls((m,), sector)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Element) -> Element:
        return Element(self.terms ^ other.terms, self.sector)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=lambda t: t.sort_key(), reverse=True)

    @property
    def degree(self) -> KleinDegree | None:
        degs = {t.degree for t in self.terms}
        if len(degs) > 1:
            raise IllFormed(f"inhomogeneous element {self}")
        return next(iter(degs)) if degs else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Element({self}, sector={self.sector!r})"


Product = Union[Element, UnknownProduct]


# ---------------------------------------------------------------- parsing

_ALIASES = {"θ": "t", "κ": "k", "ι": "i", "Θ": "T"}
_TOKEN = re.compile(r"\s*(?:(?P<gen>[xytki][123]|[cbT])|(?P<num>-?\d+)|(?P<op>[*^/()+]))")


def _tokens(text: str) -> list[tuple[str, str]]:
    for a, b in _ALIASES.items():
        text = text.replace(a, b)
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise IllFormed(f"cannot parse {text!r} at {text[pos:]!r}")
        kind = m.lastgroup or ""
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0
        self.text = text

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, value: str | None = None) -> tuple[str, str]:
        tok = self.peek()
        if tok is None or (value is not None and tok[1] != value):
            raise IllFormed(f"cannot parse {self.text!r}")
        self.i += 1
        return tok

    def power(self) -> int:
        tok = self.peek()
        if tok and tok[1] == "^":
            self.take()
            return int(self.take()[1])
        return 1

    def element(self) -> list[Monomial]:
        terms = [self.monomial()]
        while self.peek() and self.peek()[1] == "+":  # type: ignore[index]
            self.take()
            terms.append(self.monomial())
        if self.peek() is not None:
            raise IllFormed(f"trailing input in {self.text!r}")
        return terms

    def monomial(self) -> Monomial:
        exps: list[tuple[str, int]] = []
        theta = None
        zero = False
        while True:
            kind, val = self.take()
            if kind == "num":
                if val == "0":
                    zero = True
                elif val != "1":
                    raise IllFormed(f"coefficient {val} is not in F2 notation")
            elif val.startswith("t"):
                if theta is not None:
                    raise IllFormed("two theta factors in one monomial")
                theta = self.theta(int(val[1]))
            elif kind == "gen":
                exps.append((val, self.power()))
            else:
                raise IllFormed(f"unexpected {val!r} in {self.text!r}")
            tok = self.peek()
            if tok and tok[1] == "*":
                self.take()
                continue
            break
        if zero:
            return _ZERO_MARK
        return Monomial.make(exps, theta)

    def theta(self, axis: int) -> tuple[int, int, int]:
        n = m = 0
        tok = self.peek()
        if not tok or tok[1] != "/":
            return (axis, 0, 0)
        self.take()
        grouped = self.peek() is not None and self.peek()[1] == "("  # type: ignore[index]
        if grouped:
            self.take()
        while True:
            _, g = self.take()
            e = self.power()
            if g == f"x{axis}":
                n += e
            elif g == f"y{axis}":
                m += e
            else:
                raise IllFormed(f"t{axis} can only be divided by x{axis}, y{axis}")
            if grouped and self.peek() and self.peek()[1] == "*":  # type: ignore[index]
                self.take()
                continue
            break
        if grouped:
            self.take(")")
        return (axis, n, m)


_ZERO_MARK = Monomial.make({"T": 0}, (0, -1, -1))


def parse_monomial(text: str) -> Monomial:
    terms = parse_terms(text)
    if len(terms) != 1:
        raise IllFormed(f"{text!r} is not a single monomial")
    return terms[0]


def parse_terms(text: str) -> list[Monomial]:
    return [t for t in _Parser(text).element() if t != _ZERO_MARK]


def parse_element(text: str, sector: str = "point") -> Element:
    e = Element(parse_terms(text), sector)
    _validate(e)
    return normal_form(e, sector)


def _validate(e: Element) -> None:
    for t in e.terms:
        if t.theta is not None and (t.theta[1] < 0 or t.theta[2] < 0):
            raise IllFormed(f"negative theta denominator in {t}")
        for g, x in t.exps:
            if x < 0 and not (g == "k2" and e.sector == "espace"):
                raise IllFormed(f"negative exponent on {g} in {t}")
        if e.sector != "espace" and any(g in ("c", "b") for g, _ in t.exps):
            raise IllFormed(f"{t} uses c or b outside the E-space sector")
        if e.sector in LEVELS:
            allowed = LEVELS[e.sector][0]
            if t.theta is not None or any(g not in allowed for g, _ in t.exps):
                raise IllFormed(f"{t} is not in the {e.sector} level ring")
    e.degree  # homogeneity


# ---------------------------------------------------------------- polynomial part

def _divides(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    return all(s <= b for s, b in zip(small, big))


def _vec(**kw: int) -> tuple[int, ...]:
    return tuple(kw.get(g, 0) for g in POLY)


def _relation(lead: str, a: str, b: str, c: str) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    return (_vec(**{lead: 1, a: 1}), (_vec(**{b: 1, c: 1}),))


# lead term and tail of x1 y2 y3 + y1 x2 y3 + y1 y2 x3 in lex x1 > y1 > ... > y3
_CONE_LEAD = _vec(x1=1, y2=1, y3=1)
_CONE_TAIL = (_vec(y1=1, x2=1, y3=1), _vec(y1=1, y2=1, x3=1))


def _level_relation(level: str):
    rel = LEVELS[level][1]
    if rel is None:
        return None
    a, b, c, d = rel
    return (_vec(**{a: 1, b: 1}), (_vec(**{c: 1, d: 1}),))


@lru_cache(maxsize=None)
def reduce_poly(vec: tuple[int, ...], level: str = "K") -> frozenset[tuple[int, ...]]:
    """Normal form of a monomial modulo the level's relation (lex order)."""
    if level == "K":
        lead, tail = _CONE_LEAD, _CONE_TAIL
    else:
        rel = _level_relation(level)
        if rel is None:
            return frozenset({vec})
        lead, tail = rel
    if not _divides(lead, vec):
        return frozenset({vec})
    rest = tuple(v - l for v, l in zip(vec, lead))
    out: set[tuple[int, ...]] = set()
    for t in tail:
        out ^= reduce_poly(tuple(r + s for r, s in zip(rest, t)), level)
    return frozenset(out)


def poly_nf(vecs: Iterable[tuple[int, ...]], level: str = "K") -> frozenset[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for v in vecs:
        out ^= reduce_poly(v, level)
    return frozenset(out)


def is_standard(vec: tuple[int, ...]) -> bool:
    """True when a positive-cone monomial is not divisible by the lead term."""
    return not _divides(_CONE_LEAD, vec)


# ---------------------------------------------------------------- Stong ring

def stong_dim(a: int, s: int) -> int:
    """dim of the single-axis ring F2[x, y] + theta-part in degree a + s chi."""
    return len(stong_basis(1, a, s))


def stong_basis(axis: int, a: int, s: int) -> list[Monomial]:
    """x^n y^m sits in (-m, n + m); theta/(x^n y^m) sits in (2 + m, -2 - n - m)."""
    if a <= 0 and s + a >= 0:
        return [Monomial.make({f"x{axis}": s + a, f"y{axis}": -a})]
    if a >= 2 and s <= -a:
        return [Monomial.make((), (axis, -a - s, a - 2))]
    return []


# ---------------------------------------------------------------- products in the point ring

def _third(i: int, j: int) -> int:
    return 6 - i - j


@dataclass(frozen=True)
class _State:
    poly: tuple[int, ...]
    thetas: tuple[tuple[int, int, int], ...]
    named: tuple[tuple[str, int], ...]


def _state_of(m: Monomial) -> _State:
    named = tuple((g, e) for g, e in m.exps if g in NAMED)
    if any(g in ("c", "b") for g, _ in m.exps):
        raise IllFormed(f"{m} is not in the point ring")
    if any(e < 0 for _, e in m.exps):
        raise IllFormed(f"negative exponent in {m}")
    return _State(m.poly_vector(), (m.theta,) if m.theta else (), named)


def _merge_named(*parts: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    d: dict[str, int] = {}
    for part in parts:
        for g, e in part:
            d[g] = d.get(g, 0) + e
    return tuple(sorted(((g, e) for g, e in d.items() if e), key=lambda t: _POS[t[0]]))


def _named_list(named: tuple[tuple[str, int], ...]) -> list[str]:
    return [g for g, e in named for _ in range(e)]


def _drop(named: tuple[tuple[str, int], ...], *gens: str) -> tuple[tuple[str, int], ...]:
    d = dict(named)
    for g in gens:
        d[g] -= 1
    return _merge_named(d.items())


def _axis_vec(axis: int, nx: int, ny: int) -> tuple[int, ...]:
    v = [0] * 6
    v[2 * (axis - 1)] = nx
    v[2 * (axis - 1) + 1] = ny
    return tuple(v)


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


_ZERO = frozenset()
_UNKNOWN = None  # sentinel inside the evaluator


def _is_zero_state(s: _State) -> bool:
    """Annihilation rules; each is a listed relation applied to one factor pair."""
    names = _named_list(s.named)
    plain = {t[0] for t in s.thetas if t[1] == 0 and t[2] == 0}
    poly_axes = {i for i in (1, 2, 3) if s.poly[2 * i - 2] or s.poly[2 * i - 1]}
    if "T" in names:
        if len(names) > 1 or plain or poly_axes:
            return True
    for g in names:
        if g[0] != "i":
            continue
        i = int(g[1])
        if any(j != i for j in plain):
            return True
        if f"k{i}" in names:
            return True
        if any(h[0] == "i" and h != g for h in names):
            return True
        if any(j != i for j in poly_axes):
            return True
    return False


def _terminal(s: _State) -> frozenset[Monomial] | None:
    """Recognised normal forms, or None."""
    if not s.thetas and not s.named:
        return frozenset(Monomial.from_poly(v) for v in reduce_poly(s.poly))
    if len(s.thetas) == 1 and not s.named:
        (i, n, m), = s.thetas
        others = [j for j in (1, 2, 3) if j != i and (s.poly[2 * j - 2] or s.poly[2 * j - 1])]
        if len(others) <= 1:
            return frozenset({Monomial.make(zip(POLY, s.poly), (i, n, m))})
        return None
    if not s.thetas and len(_named_list(s.named)) == 1 and not any(s.poly):
        return frozenset({Monomial.make(s.named)})
    # Borel sector: kappa2^e times the sigma / sigma*eps sector with nonnegative
    # sigma*eps coefficient
    if s.named and all(g == "k2" for g, _ in s.named) and not s.poly[2] and not s.poly[3]:
        if not s.thetas:
            return frozenset({Monomial.make(list(zip(POLY, s.poly)) + list(s.named))})
        if len(s.thetas) == 1 and s.thetas[0][0] == 1:
            return frozenset({Monomial.make(list(zip(POLY, s.poly)) + list(s.named), s.thetas[0])})
    return None


def _rewrites(s: _State) -> list[list[_State]]:
    """Each entry is one applicable relation: the state rewritten as a sum."""
    out: list[list[_State]] = []
    names = _named_list(s.named)
    for g in dict.fromkeys(names):
        if g[0] != "k":
            continue
        i = int(g[1])
        j, k = [h for h in (1, 2, 3) if h != i]
        xi, yi = s.poly[2 * i - 2], s.poly[2 * i - 1]
        rest = _drop(s.named, g)
        if xi:
            base = _sub(s.poly, _axis_vec(i, 1, 0))
            out.append([
                _State(_add(base, _add(_axis_vec(j, 1, 0), _axis_vec(k, 0, 1))), s.thetas, rest),
                _State(_add(base, _add(_axis_vec(j, 0, 1), _axis_vec(k, 1, 0))), s.thetas, rest),
            ])
        if yi:
            base = _sub(s.poly, _axis_vec(i, 0, 1))
            out.append([_State(_add(base, _add(_axis_vec(j, 0, 1), _axis_vec(k, 0, 1))), s.thetas, rest)])
        for h in dict.fromkeys(names):
            if h[0] == "k" and h != g:
                kk = _third(i, int(h[1]))
                out.append([_State(_add(s.poly, _axis_vec(kk, 0, 2)), s.thetas, _drop(s.named, g, h))])
        for t in s.thetas:
            if t[0] != i and t[1] == 0 and t[2] == 0:
                kk = _third(i, t[0])
                thetas = tuple(x for x in s.thetas if x != t)
                out.append([_State(s.poly, thetas, _merge_named(rest, ((f"i{kk}", 1),)))])
    for g in dict.fromkeys(names):
        if g[0] != "i":
            continue
        i = int(g[1])
        for t in s.thetas:
            if t == (i, 0, 0):
                thetas = tuple(x for x in s.thetas if x != t)
                out.append([_State(s.poly, thetas, _merge_named(_drop(s.named, g), (("T", 1),)))])
    return out


def _absorb(s: _State) -> _State | None:
    """Let x_i, y_i act on theta_i; None when that kills the product."""
    if len(s.thetas) > 1 and len({t[0] for t in s.thetas}) < len(s.thetas):
        return None
    poly = list(s.poly)
    thetas = []
    for i, n, m in s.thetas:
        ex, ey = poly[2 * i - 2], poly[2 * i - 1]
        if ex > n or ey > m:
            return None
        poly[2 * i - 2] = poly[2 * i - 1] = 0
        thetas.append((i, n - ex, m - ey))
    return _State(tuple(poly), tuple(sorted(thetas)), s.named)


@lru_cache(maxsize=None)
def _evaluate(s: _State) -> frozenset[Monomial] | None:
    """Monomials of the product, or None when no chain of relations decides it.

    Relations are tried in turn; a named normal form is only used when no
    relation leads to a determinate answer.
    """
    s2 = _absorb(s)
    if s2 is None:
        return _ZERO
    s = s2
    if _is_zero_state(s):
        return _ZERO
    for alternative in _rewrites(s):
        acc: set[Monomial] = set()
        for piece in alternative:
            r = _evaluate(piece)
            if r is None:
                break
            acc ^= r
        else:
            return frozenset(acc)
    return _terminal(s)


def _multiply_point(u: Monomial, v: Monomial) -> frozenset[Monomial] | None:
    su, sv = _state_of(u), _state_of(v)
    s = _State(_add(su.poly, sv.poly), tuple(sorted(su.thetas + sv.thetas)), _merge_named(su.named, sv.named))
    return _evaluate(s)


# ---------------------------------------------------------------- E-space sector

def _espace_rewrite(m: Monomial) -> frozenset[Monomial]:
    """kappa2 y2 -> y1 y3 and kappa2 x2 -> x1 y3 + x3 y1 while kappa2 has a
    positive exponent; c^2 -> x2 c + y2 b; x2, y2 act on theta2 by the Stong rule."""
    d = m.as_dict()
    k = d.get("k2", 0)
    th = m.theta
    if th is not None:
        i, n, mm = th
        ex, ey = d.get(f"x{i}", 0), d.get(f"y{i}", 0)
        if ex or ey:
            if ex > n or ey > mm:
                return frozenset()
            d[f"x{i}"] = d[f"y{i}"] = 0
            return _espace_rewrite(Monomial.make(d, (i, n - ex, mm - ey)))
    if d.get("c", 0) >= 2:
        d["c"] -= 2
        a = dict(d, c=d["c"] + 1, x2=d.get("x2", 0) + 1)
        b = dict(d, b=d.get("b", 0) + 1, y2=d.get("y2", 0) + 1)
        return frozenset(_espace_rewrite(Monomial.make(a, th))) ^ _espace_rewrite(Monomial.make(b, th))
    if k >= 1 and d.get("y2", 0):
        d["y2"] -= 1
        d["k2"] = k - 1
        d["y1"] = d.get("y1", 0) + 1
        d["y3"] = d.get("y3", 0) + 1
        return _espace_rewrite(Monomial.make(d, th))
    if k >= 1 and d.get("x2", 0):
        d["x2"] -= 1
        d["k2"] = k - 1
        a = dict(d, x1=d.get("x1", 0) + 1, y3=d.get("y3", 0) + 1)
        b = dict(d, x3=d.get("x3", 0) + 1, y1=d.get("y1", 0) + 1)
        return _espace_rewrite(Monomial.make(a, th)) ^ _espace_rewrite(Monomial.make(b, th))
    if th is None and k <= 0 and not any(g in ("c", "b") for g in d if d[g]):
        vec = m.poly_vector()
        rest = [(g, e) for g, e in m.exps if g not in POLY]
        return frozenset(Monomial.make(list(zip(POLY, v)) + rest) for v in reduce_poly(vec))
    return frozenset({m})


def _multiply_espace(u: Monomial, v: Monomial) -> frozenset[Monomial] | None:
    if u.theta is not None and v.theta is not None:
        if u.theta[0] == v.theta[0]:
            return _ZERO
        return None
    if (u.theta or v.theta) and (u.theta or v.theta)[0] != 2:  # type: ignore[index]
        return None
    return _espace_rewrite(u.times(v))


# ---------------------------------------------------------------- public API

def normal_form(e: Element, sector: str | None = None) -> Element:
    sector = sector or e.sector
    out: set[Monomial] = set()
    for t in e.terms:
        if sector == "point":
            r = _evaluate(_state_of(t))
            out ^= {t} if r is None else set(r)
        elif sector == "espace":
            out ^= set(_espace_rewrite(t))
        elif sector in LEVELS:
            out ^= {Monomial.from_poly(v) for v in reduce_poly(t.poly_vector(), sector)}
        else:
            raise IllFormed(f"unknown sector {sector!r}")
    return Element(out, sector)


def multiply(u: Element, v: Element) -> Product:
    """Product in u's sector; UnknownProduct if any term pair is undetermined."""
    if u.sector != v.sector:
        raise IllFormed(f"cannot multiply across sectors {u.sector} and {v.sector}")
    acc: set[Monomial] = set()
    for s, t in _cartesian(u.terms, v.terms):
        if u.sector == "point":
            r = _multiply_point(s, t)
        elif u.sector == "espace":
            r = _multiply_espace(s, t)
        else:
            r = reduce_level(s.times(t), u.sector)
        if r is None:
            return UnknownProduct(f"{s} * {t} is not determined by the known relations")
        acc ^= set(r)
    return Element(acc, u.sector)


def reduce_level(m: Monomial, level: str) -> frozenset[Monomial]:
    return frozenset(Monomial.from_poly(v) for v in reduce_poly(m.poly_vector(), level))


def restrict(e: Element, to_level: str, from_level: str = "K") -> Element:
    """Restriction in the Mackey structure of the positive cone.

    Generators present in the target level are kept, the others go to 0.
    """
    if LEVEL_ORDER.index(to_level) < LEVEL_ORDER.index(from_level) and to_level != from_level:
        raise IllFormed(f"no restriction from {from_level} to {to_level}")
    if from_level not in ("K", "trivial") and to_level not in (from_level, "trivial"):
        raise IllFormed(f"{to_level} is not below {from_level}")
    keep = set(LEVELS[to_level][0])
    src = LEVELS[from_level][0]
    out: set[Monomial] = set()
    for t in e.terms:
        if not t.is_poly() or any(g not in src for g, _ in t.exps):
            raise IllFormed(f"{t} is not in the {from_level} level ring")
        if all(g in keep for g, _ in t.exps):
            out ^= set(reduce_level(t, to_level))
    sector = "point" if to_level == "K" else to_level
    return Element(out, sector)


def transfer(e: Element, to_level: str) -> Element:
    """Transfers in the positive-cone Mackey functor are zero."""
    return Element.zero("point" if to_level == "K" else to_level)


def positive_cone_basis(p: int, b: int, q: int, a: int) -> list[Monomial]:
    """Standard monomials of F2[x1..y3]/(x1 y2 y3 + y1 x2 y3 + y1 y2 x3) in degree (a, p, b, q)."""
    if min(p, b, q) < 0:
        return []
    out = []
    total_y = -a
    for m1 in range(0, p + 1):
        for m2 in range(0, b + 1):
            m3 = total_y - m1 - m2
            if m3 < 0 or m3 > q:
                continue
            vec = (p - m1, m1, b - m2, m2, q - m3, m3)
            if is_standard(vec):
                out.append(Monomial.from_poly(vec))
    return out


def stong_mul(u: Element, v: Element) -> Element:
    """Product inside one Stong ring F2[x_i, y_i] + F2{theta_i/(x_i^n y_i^m)}."""
    axes = set()
    for t in list(u.terms) + list(v.terms):
        if t.theta is not None:
            axes.add(t.theta[0])
        for g, _ in t.exps:
            if g not in POLY:
                raise IllFormed(f"{t} is not in a Stong ring")
            axes.add(int(g[1]))
    if len(axes) > 1:
        raise IllFormed("stong_mul needs both factors on one axis")
    r = multiply(Element(u.terms, "point"), Element(v.terms, "point"))
    assert not isinstance(r, UnknownProduct)  # single-axis products are always determined
    return r
