"""Consistency suites and independent oracles.

Every check returns a CheckReport.  A check counts individual comparisons;
failures keep the degree and both computed values so a report can be
printed without rerunning anything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any, Callable, Iterable

from .cellular import cellular_dim
from .degrees import KleinDegree, MotivicBidegree, Region, realize, region_of
from .f2algebra import (
    DEGREES,
    NAMED_CLASSES,
    Element,
    Monomial,
    UnknownProduct,
    multiply,
    normal_form,
    parse_element,
    stong_basis,
)
from .klein_point import S3, basis_at, sector_of
from .motivic import (
    Status,
    borel_group,
    check_theorem_2q as _theorem_2q,
    decomposition_tag,
    motivic_dim,
    motivic_group_R,
    nc_generator,
    nc_module_action,
    nc_multiply,
    realization_status,
)
from .series import (
    closed_form,
    dim_point,
    evaluate_terms,
    negative_cone_form,
    one_negative_branches,
    one_negative_form,
    oracle_for_terms,
    positive_cone_form,
    series_for,
    two_negative_branches,
    two_negative_form,
)
from .spaces import (
    KAPPA2,
    b_space_basis,
    b_space_dim,
    bc2_motivic_dim,
    e_space_dim,
    e_space_group,
    etilde_dim,
    w_q_dim,
)

MAX_COUNTEREXAMPLES = 25


@dataclass
class CheckReport:
    name: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: int = 0
    failed: int = 0
    counterexamples: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def expect(self, ok: bool, where: Any, *values: Any) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append((where,) + values)

    def equal(self, where: Any, got: Any, want: Any) -> None:
        self.expect(got == want, where, got, want)

    def summary(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}: {self.passed} passed, {self.failed} failed"

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "counterexamples": [[str(x) for x in c] for c in self.counterexamples],
        }


# ---------------------------------------------------------------- series


def check_series_oracle(max_coeff: int = 6) -> CheckReport:
    """Each printed closed form against naive convolution of its factors.

    All branches are checked wherever their hypotheses hold, including the
    overlaps between sub-cases, which must agree with each other.
    """
    rep = CheckReport("series_vs_convolution", {"max_coeff": max_coeff})
    rng = range(1, max_coeff + 1)

    def same(where, terms):
        rep.equal(where, evaluate_terms(terms), oracle_for_terms(terms))

    # one and two nonzero coefficients
    for n in range(-max_coeff, max_coeff + 1):
        same(("single", n), closed_form(n, 0, 0))
    for u, v in product(range(-max_coeff, max_coeff + 1), repeat=2):
        if u and v:
            same(("pair", u, v), closed_form(u, v, 0))
    # the dispatcher, for every sign pattern in every order
    for p, b, q in product(range(-max_coeff, max_coeff + 1), repeat=3):
        same(("dispatch", p, b, q), closed_form(p, b, q))
    for l, m, n in product(rng, repeat=3):
        same(("positive", l, m, n), positive_cone_form(l, m, n))
        same(("negative", l, m, n), negative_cone_form(l, m, n))
        polys = []
        for br in one_negative_branches(l, m, n):
            terms = one_negative_form(l, m, n, br)
            same(("one_negative", l, m, n, br), terms)
            polys.append((br, evaluate_terms(terms)))
        for (b1, s1), (b2, s2) in zip(polys, polys[1:]):
            rep.equal(("one_negative overlap", l, m, n, b1, b2), s1, s2)
        polys = []
        for br in two_negative_branches(l, m, n):
            terms = two_negative_form(l, m, n, br)
            same(("two_negative", l, m, n, br), terms)
            polys.append((br, evaluate_terms(terms)))
        for (b1, s1), (b2, s2) in zip(polys, polys[1:]):
            rep.equal(("two_negative overlap", l, m, n, b1, b2), s1, s2)
    return rep


def check_series_cellular(r_max: int = 3) -> CheckReport:
    """dim_point against homology of the equivariant cellular Hom complex."""
    rep = CheckReport("series_vs_cellular", {"r_max": r_max})
    rr = range(-r_max, r_max + 1)
    for p, b, q in product(rr, repeat=3):
        s = series_for(p, b, q)
        span = s.span() or (0, 0)
        # every exponent where the series is nonzero, plus a margin of zeros
        for t in range(span[0] - 2, span[1] + 3):
            a = -t
            rep.equal((a, p, b, q), dim_point(a, p, b, q), cellular_dim(a, p, b, q))
    return rep


def check_s3_symmetry(a_max: int = 8, r_max: int = 5) -> CheckReport:
    rep = CheckReport("s3_symmetry", {"a_max": a_max, "r_max": r_max})
    rr = range(-r_max, r_max + 1)
    for p, b, q in product(rr, repeat=3):
        base = series_for(p, b, q)
        rep_ = (p, b, q)
        for perm in S3[1:]:
            other = series_for(*(rep_[i] for i in perm))
            for a in range(-a_max, a_max + 1):
                rep.equal((a, p, b, q, perm), other.coeff(-a), base.coeff(-a))
    return rep


def check_vanishing(bound: int = 10) -> CheckReport:
    """The printed vanishing ranges for the point, B_{Sigma2}C2 and the cofiber."""
    rep = CheckReport("vanishing", {"bound": bound})
    r = range(-bound, bound + 1)
    for a, b, q in product(r, repeat=3):
        if a > b >= -q > 0:
            rep.equal(("point a>b>=-q>0", a, q, b, q), dim_point(a, q, b, q), 0)
        if b >= 0 and q >= 0 and a >= 1:
            rep.equal(("point b,q>=0,a>=1", a, q, b, q), dim_point(a, q, b, q), 0)
    for a in r:
        rep.equal(("B line b=a-1", a, a - 1), b_space_dim(a, a - 1), 0)
        rep.equal(("B line b=a-2", a, a - 2), b_space_dim(a, a - 2), 0)
        if a <= 2:
            rep.equal(("reduced B b=0", a, 0), b_space_dim(a, 0, True), 0)
        for b in r:
            if a <= b + 2 and b < 0:
                rep.equal(("B a<=b+2,b<0", a, b), b_space_dim(a, b), 0)
    for p, q in product(range(-4, 5), repeat=2):
        for a in range(-bound, 4):
            rep.equal(("cofiber a<=3,b=0", a, p, 0, q), etilde_dim(KleinDegree(a, p, 0, q)), 0)
    return rep


def check_series_vs_basis(bound: int = 5, a_max: int | None = None) -> CheckReport:
    """Basis cardinality against the series wherever a basis is produced."""
    rep = CheckReport("series_vs_basis", {"bound": bound})
    a_max = a_max if a_max is not None else 3 * bound + 4
    rr = range(-bound, bound + 1)
    for p, b, q in product(rr, repeat=3):
        if sector_of(KleinDegree(0, p, b, q)) == "mixed":
            continue
        s = series_for(p, b, q)
        for a in range(-a_max, a_max + 1):
            d = KleinDegree(a, p, b, q)
            basis = basis_at(d)
            if basis is None:
                rep.expect(False, d, "no basis")
                continue
            ok = (len(basis) == s.coeff(-a) and len(set(basis)) == len(basis)
                  and all(m.degree == d for m in basis))
            rep.expect(ok, d, len(basis), s.coeff(-a))
    return rep


def check_named_classes() -> CheckReport:
    rep = CheckReport("named_class_degrees")
    for g in NAMED_CLASSES:
        d = DEGREES[g]
        dim = dim_point(*d)
        single_axis = sum(1 for c in d.rep if c) == 1
        if single_axis or g == "T":
            rep.equal((g, d), dim, 1)
        else:
            rep.expect(dim >= 1, (g, d), dim, ">=1")
        rep.equal((g, "parsed degree"), parse_element(g).degree, d)
    return rep


# ---------------------------------------------------------------- spaces


def check_split_ses(ab_max: int = 8, pq_max: int = 8) -> CheckReport:
    """dim E = dim pt + dim of the cofiber one degree up, for p, q >= 0."""
    rep = CheckReport("split_ses", {"ab_max": ab_max, "pq_max": pq_max})
    r = range(-ab_max, ab_max + 1)
    for a, b in product(r, repeat=2):
        for p, q in product(range(0, pq_max + 1), repeat=2):
            d = KleinDegree(a, p, b, q)
            lhs = e_space_dim(d)
            rhs = dim_point(*d) + etilde_dim(d + KleinDegree(1, 0, 0, 0))
            rep.equal(d, lhs, rhs)
    return rep


def check_spaces(bound: int = 6) -> CheckReport:
    """Periodicities of E and the cofiber, BC2 against B, and W_q vanishing."""
    rep = CheckReport("spaces", {"bound": bound})
    r = range(-bound, bound + 1)
    for a, p, b, q in product(r, range(-3, 4), r, range(-3, 4)):
        d = KleinDegree(a, p, b, q)
        e = e_space_group(d)
        rep.equal(("E basis size", d), len(e.basis), e.dimension)
        rep.expect(all(m.degree == d for m in e.basis), ("E basis degree", d))
        rep.equal(("E kappa2 period", d), e_space_dim(d + KAPPA2), e.dimension)
        t = etilde_dim(d)
        rep.equal(("cofiber sigma period", d), etilde_dim(d + KleinDegree(0, 1, 0, 0)), t)
        rep.equal(("cofiber sigma*eps period", d), etilde_dim(d + KleinDegree(0, 0, 0, 1)), t)
    for a, w in product(r, repeat=2):
        if a <= 2 * w:
            rep.equal(("BC2 vs B", a, w), bc2_motivic_dim(a, w), b_space_dim(a - w, w))
    for qq in range(1, 5):
        for b in range(qq, qq + 5):
            rep.equal(("W_q (2b,b)", qq, b), w_q_dim(qq, 2 * b, b), 0)
    for a, b in product(r, repeat=2):
        basis = b_space_basis(a, b)
        rep.expect(all(m.degree == KleinDegree(a, 0, b, 0) for m in basis), ("B degree", a, b))
    return rep


def check_isotropy_les(r_max: int = 5, a_lo: int = -40, a_hi: int = 30) -> CheckReport:
    """Rank bookkeeping along E -> pt -> cofiber with the connecting maps.

    Walking up in a, each map's rank is forced by exactness; every forced
    rank must be a genuine rank (between 0 and both dimensions).  Where the
    connecting map E -> cofiber is known to vanish its forced rank must be 0.
    """
    rep = CheckReport("isotropy_les", {"r_max": r_max, "a": [a_lo, a_hi]})
    rr = range(-r_max, r_max + 1)
    for p, b, q in product(rr, repeat=3):
        rd = 0  # rank of the connecting map landing in degree a
        for a in range(a_lo, a_hi + 1):
            d = KleinDegree(a, p, b, q)
            t, pt, e = etilde_dim(d), dim_point(*d), e_space_dim(d)
            rf = t - rd        # cofiber -> pt
            rg = pt - rf       # pt -> E
            rd_next = e - rg   # E -> cofiber (degree a + 1)
            ok = min(rf, rg, rd_next) >= 0 and rf <= pt and rg <= e
            if b + q < 0 and 1 - b <= a <= b + 1:
                ok = ok and rd_next == 0
            rep.expect(ok, d, (rf, rg, rd_next))
            rd = rd_next
    return rep


# ---------------------------------------------------------------- algebra


_RELATIONS: list[tuple[str, str, str]] = []
for _i, _j, _k in permutations((1, 2, 3)):
    _RELATIONS += [
        (f"k{_i}", f"x{_i}", f"x{_j}*y{_k} + y{_j}*x{_k}"),
        (f"k{_i}", f"y{_i}", f"y{_j}*y{_k}"),
        (f"k{_i}", f"k{_j}", f"y{_k}^2"),
        (f"k{_i}", f"t{_j}", f"i{_k}"),
        (f"i{_i}", f"t{_j}", "0"),
        (f"i{_i}", f"i{_j}", "0"),
        (f"i{_i}", f"x{_j}", "0"),
        (f"i{_i}", f"y{_j}", "0"),
    ]
for _i in (1, 2, 3):
    _RELATIONS += [
        (f"i{_i}", f"t{_i}", "T"),
        (f"i{_i}", f"k{_i}", "0"),
        ("T", f"t{_i}", "0"),
        ("T", f"k{_i}", "0"),
        ("T", f"i{_i}", "0"),
        ("T", f"x{_i}", "0"),
        ("T", f"y{_i}", "0"),
        (f"t{_i}", f"t{_i}", "0"),
        (f"t{_i}", f"x{_i}", "0"),
        (f"t{_i}", f"y{_i}", "0"),
        (f"x{_i}", f"t{_i}/(x{_i}^2*y{_i})", f"t{_i}/(x{_i}*y{_i})"),
    ]
_RELATIONS.append(("T", "T", "0"))


def _canonical(text: str) -> Element:
    return Element() if text == "0" else normal_form(parse_element(text))


def check_relations() -> CheckReport:
    rep = CheckReport("ring_relations", {"count": len(_RELATIONS)})
    for u, v, want in _RELATIONS:
        got = multiply(parse_element(u), parse_element(v))
        rep.expect(not isinstance(got, UnknownProduct) and got == _canonical(want),
                   f"{u} * {v}", str(got), want)
    f = "x1*y2*y3 + y1*x2*y3 + y1*y2*x3"
    rep.equal("f", str(normal_form(parse_element(f))), "0")
    rep.equal("x1*y2*y3", str(normal_form(parse_element("x1*y2*y3"))), "y1*x2*y3 + y1*y2*x3")
    # f vanishes again after substituting k1*x1 for x2*y3 + y2*x3
    sub = multiply(parse_element("x1*y1"), parse_element("k1"))
    total = Element() if isinstance(sub, UnknownProduct) else sub + normal_form(parse_element("y1*x2*y3 + y1*y2*x3"))
    rep.expect(not isinstance(sub, UnknownProduct) and total.is_zero(), "f via k1*x1", str(total))
    for u, v, want in (("k2", "y2", "y1*y3"), ("k2", "x2", "x1*y3 + y1*x3")):
        got = multiply(parse_element(u, "espace"), parse_element(v, "espace"))
        rep.expect(not isinstance(got, UnknownProduct) and got == parse_element(want, "espace"),
                   f"espace {u} * {v}", str(got), want)
    for u, v in (("t2", "t3"), ("k1", "k1"), ("i1", "i1")):
        rep.expect(isinstance(multiply(parse_element(u), parse_element(v)), UnknownProduct),
                   f"{u} * {v} stays unknown")
    return rep


def check_positive_cone_products(trials: int = 300, seed: int = 7) -> CheckReport:
    """Products of random positive-cone elements: commutative, associative,
    degree additive, and equal to a dense reduction done independently."""
    rep = CheckReport("positive_cone_products", {"trials": trials, "seed": seed})
    rnd = random.Random(seed)

    def rand_mono() -> Monomial:
        return Monomial.from_poly(tuple(rnd.randint(0, 3) for _ in range(6)))

    for _ in range(trials):
        u, v, w = (normal_form(Element.of(rand_mono())) for _ in range(3))
        uv = multiply(u, v)
        rep.equal(("commutative", str(u), str(v)), uv, multiply(v, u))
        rep.equal(("associative", str(u), str(v), str(w)),
                  multiply(uv, w), multiply(u, multiply(v, w)))
        if uv:
            rep.equal(("degree", str(u), str(v)), uv.degree, u.degree + v.degree)
        dense = Element()
        for s, t in product(u.terms, v.terms):
            dense = dense + _dense_reduce(s.times(t).poly_vector())
        rep.equal(("dense", str(u), str(v)), uv, dense)
    return rep


def _dense_reduce(vec: tuple[int, ...]) -> Element:
    """Reduce modulo x1 y2 y3 + y1 x2 y3 + y1 y2 x3 with a dense coefficient table.

    Kept separate from the production reducer on purpose.
    """
    todo = {vec: 1}
    done: dict[tuple[int, ...], int] = {}
    while todo:
        v, c = todo.popitem()
        if not c:
            continue
        if v[0] >= 1 and v[3] >= 1 and v[5] >= 1:
            base = (v[0] - 1, v[1], v[2], v[3] - 1, v[4], v[5] - 1)
            for add in ((0, 1, 1, 0, 0, 1), (0, 1, 0, 1, 1, 0)):
                t = tuple(x + y for x, y in zip(base, add))
                todo[t] = todo.get(t, 0) ^ 1
        else:
            done[v] = done.get(v, 0) ^ c
    return Element(Monomial.from_poly(v) for v, c in done.items() if c)


# ---------------------------------------------------------------- motivic


REMARK_POINT_DIMS = {
    (2, 0, 1, -3): 2,
    (2, 0, 1, -2): 1,
    (1, -2, -2, 2): 2,
    (2, -2, -2, 2): 2,
    (3, -2, -2, 2): 0,
    (3, -3, -2, 3): 1,
}


def check_remark_examples() -> CheckReport:
    rep = CheckReport("remark_examples")
    for d, want in REMARK_POINT_DIMS.items():
        rep.equal(("point", d), dim_point(*d), want)
    rep.equal(("cofiber", (2, 0, 1, -3)), etilde_dim(KleinDegree(2, 0, 1, -3)), 1)
    rep.equal(("cofiber", (4, 0, 0, 0)), etilde_dim(KleinDegree(4, 0, 0, 0)), 1)
    motivic = {
        (3, -3, 1, -3): (1, "MonoNotEpi", 2),
        (3, -2, 1, -2): (1, "Iso", 1),
        (1, 0, -2, 3): (1, "Iso", 1),
        (-1, 0, -2, 2): (1, "MonoNotEpi", 2),
        (0, 0, -2, 2): (1, "MonoNotEpi", 2),
        (1, 0, -2, 2): (0, "Iso", 0),
    }
    for d, (dim, status, cod) in motivic.items():
        s = realization_status(MotivicBidegree(*d))
        rep.equal(("motivic", d), (s.dim_domain, str(s.refined), s.dim_codomain), (dim, status, cod))
    k = borel_group(MotivicBidegree(-2, 2, -1, 1))
    rep.equal("kappa2", [str(m) for m in k.basis], ["k2"])
    rep.equal("H^{0,sigma}(EC2)", borel_group(MotivicBidegree(0, 0, 0, 1)).dimension, 0)
    return rep


def check_theorem_2q(b_max: int = 5, q_max: int = 5, a_lo: int = -10, a_hi: int = 5) -> CheckReport:
    rep = CheckReport("theorem_2q", {"b": [0, b_max], "q": [0, q_max], "a": [a_lo, a_hi]})
    for b, q in product(range(b_max + 1), range(q_max + 1)):
        for a in range(a_lo, a_hi + 1):
            lhs, rhs = _theorem_2q(a, b, q)
            rep.equal((a, b, q), lhs, rhs)
    return rep


def _point_region_sample(rnd: random.Random, n: int) -> list[MotivicBidegree]:
    out = []
    while len(out) < n:
        d = MotivicBidegree(rnd.randint(-8, 8), rnd.randint(-5, 5), rnd.randint(0, 5), rnd.randint(-5, 5))
        if region_of(d.b, d.q) is Region.POINT:
            out.append(d)
    return out


def check_realization_status(samples: int = 50, seed: int = 2024, bound: int = 6) -> CheckReport:
    rep = CheckReport("realization_status", {"samples": samples, "seed": seed, "bound": bound})
    rnd = random.Random(seed)
    for d in _point_region_sample(rnd, samples):
        s = realization_status(d)
        rep.expect(s.raw is Status.ISO and s.refined is Status.ISO and s.dim_domain == s.dim_codomain,
                   d, str(s.raw), s.dim_domain, s.dim_codomain)
    r = range(-bound, bound + 1)
    for a, p, b, q in product(range(-2 * bound, bound + 1), r, r, r):
        d = MotivicBidegree(a, p, b, q)
        region = region_of(b, q)
        s = realization_status(d)
        if region is Region.BOREL:
            want = Status.ISO if a <= 2 * b + 2 else Status.MONO
            rep.equal(("borel raw", d), s.raw, want)
            if want is Status.ISO:
                rep.equal(("borel iso dims", d), s.dim_domain, s.dim_codomain)
        if s.raw is Status.ZERO_DOMAIN:
            rep.equal(("zero domain", d), s.dim_domain, 0)
        if s.raw is Status.MONO:
            rep.expect(s.dim_domain <= s.dim_codomain, ("mono dims", d), s.dim_domain, s.dim_codomain)
        if s.refined is Status.ISO:
            rep.equal(("iso dims", d), s.dim_domain, s.dim_codomain)
    rep.equal("boundary MonoNotEpi", realization_status(MotivicBidegree(3, -3, 1, -3)).refined, Status.MONO_NOT_EPI)
    rep.equal("boundary Iso", realization_status(MotivicBidegree(3, -2, 1, -2)).refined, Status.ISO)
    return rep


def _borel_ring_dim(d: MotivicBidegree) -> int:
    """Monomials of Stong(sigma)[x3, y3] kappa2^k landing on realize(d)."""
    r = realize(d)
    k = -r.b  # the eps-coefficient only comes from kappa2
    rest = r - KAPPA2.scale(k)
    n3 = rest.q
    if n3 < 0:
        return 0
    count = 0
    for m3 in range(0, n3 + 1):
        count += len(stong_basis(1, rest.a + m3, rest.p))
    return count


def check_motivic_structure(bound: int = 5, a_max: int = 10) -> CheckReport:
    """Borel ring enumeration, cofiber-region independence, nilpotency,
    decomposition tags and basis degrees."""
    rep = CheckReport("motivic_structure", {"bound": bound, "a_max": a_max})
    r = range(-bound, bound + 1)
    for a, p, b, q in product(range(-a_max, a_max + 1), r, r, r):
        d = MotivicBidegree(a, p, b, q)
        g = motivic_group_R(d)
        region = g.region
        if region is Region.BOREL:
            bg = borel_group(d)
            rep.equal(("borel ring", d), bg.dimension, _borel_ring_dim(d))
            rep.equal(("borel basis size", d), len(bg.basis), bg.dimension)
            if p <= q - b - 2:
                rep.expect(all(m.theta is not None and m.theta[0] == 1 for m in bg.basis),
                           ("nilpotent", d), [str(m) for m in bg.basis])
        if region is Region.TILDE:
            rep.equal(("tilde p-independent", d), g.dimension, motivic_dim(MotivicBidegree(a, 0, b, q)))
            rep.equal(("tilde q-independent", d), g.dimension, motivic_dim(MotivicBidegree(a, p, b, -b - 1)))
        if g.basis is not None:
            rd = realize(d)
            rep.expect(all(m.degree == rd for m in g.basis), ("basis degree", d))
        if g.dimension:
            rep.expect(decomposition_tag(d) in ("R", "NC"), ("tagged", d))
    return rep


def check_nc_module() -> CheckReport:
    rep = CheckReport("nc_module")
    sc = nc_generator(0, -1, 0, 0, 0, True)
    sb = nc_generator(0, -2, 0, 0, 1, False)
    y1 = Monomial.make({"y1": 1})
    rep.equal("theta1/x1 . S(c)/x3", nc_module_action(Monomial.make((), (1, 1, 0)), sc).is_zero(), True)
    rep.equal("y1 . S(c)/x3", nc_module_action(y1, sc).is_zero(), True)
    got = nc_module_action(y1, sb)
    rep.equal("y1 . S(b)/x3^2", [str(t) for t in got.sorted_terms()], ["x1*x3^-2*S(c)"])
    for gen in (sc, sb):
        rep.expect(all(t.degree == gen.degree + DEGREES["y1"] for t in nc_module_action(y1, gen).terms),
                   ("degree", str(gen)))
    rep.equal("products", nc_multiply(sc, sb).is_zero(), True)
    return rep


# ---------------------------------------------------------------- suites


SUITES: dict[str, tuple[Callable[[], CheckReport], ...]] = {
    "series": (check_series_oracle, check_series_cellular, check_s3_symmetry,
               check_vanishing, check_series_vs_basis, check_named_classes),
    "ses": (check_split_ses, check_spaces, check_isotropy_les),
    "2q": (check_theorem_2q,),
    "remarks": (check_remark_examples, check_realization_status),
}
SUITES["all"] = (SUITES["series"] + SUITES["ses"] + SUITES["2q"] + SUITES["remarks"]
                 + (check_relations, check_positive_cone_products,
                    check_motivic_structure, check_nc_module))


# the keyword each check uses for its representation bound, for --window
WINDOW_ARG = {
    check_series_cellular: "r_max",
    check_s3_symmetry: "r_max",
    check_series_vs_basis: "bound",
    check_isotropy_les: "r_max",
    check_motivic_structure: "bound",
    check_spaces: "bound",
}


def run_suite(name: str = "all", window: int | None = None) -> list[CheckReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out = []
    for check in SUITES[name]:
        kw = {}
        if window is not None and check in WINDOW_ARG:
            kw[WINDOW_ARG[check]] = window
        out.append(check(**kw))
    return out


def format_reports(reports: Iterable[CheckReport]) -> str:
    lines = []
    for r in reports:
        lines.append(r.summary())
        for c in r.counterexamples:
            lines.append("    " + "  ".join(str(x) for x in c))
    return "\n".join(lines)
