"""Acceptance criteria, one test each.

Every test prints a single line "criterion N <name>: PASS|FAIL <detail>" to
the terminal (also under pytest's capture) and then asserts.  Run directly
with `python3 tests/test_acceptance.py` for just the eleven lines.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

from bredon import verify
from bredon.degrees import MotivicBidegree, Region, region_of
from bredon.f2algebra import DEGREES, NAMED_CLASSES
from bredon.motivic import Status, realization_status
from bredon.render import region_map_ascii
from bredon.series import dim_point

GOLDEN = Path(__file__).parent / "data" / "region_map_default.txt"


def _line(number: int, name: str, ok: bool, detail: str) -> str:
    return f"criterion {number:>2} {name}: {'PASS' if ok else 'FAIL'} {detail}"


def _report(number: int, name: str, rep: verify.CheckReport) -> tuple[bool, str]:
    detail = f"({rep.passed} checks, {rep.failed} failures)"
    if rep.counterexamples:
        detail += " first: " + "  ".join(str(x) for x in rep.counterexamples[0])
    return rep.ok, _line(number, name, rep.ok, detail)


def c1_remark_examples():
    bad = [(d, dim_point(*d), want) for d, want in verify.REMARK_POINT_DIMS.items()
           if dim_point(*d) != want]
    ok = not bad and len(verify.REMARK_POINT_DIMS) == 6
    return ok, _line(1, "remark example replay", ok, f"(6 values, mismatches {bad})")


def c2_named_classes():
    bad = []
    for g in NAMED_CLASSES:
        d = DEGREES[g]
        dim = dim_point(*d)
        exact = sum(1 for c in d.rep if c) == 1 or g == "T"
        if (exact and dim != 1) or dim < 1:
            bad.append((g, tuple(d), dim))
    ok = not bad and len(NAMED_CLASSES) == 16
    return ok, _line(2, "named class degrees", ok, f"(16 classes, bad {bad})")


def c3_series_oracle():
    return _report(3, "closed forms vs convolution", verify.check_series_oracle(max_coeff=6))


def c4_s3_symmetry():
    return _report(4, "S3 symmetry", verify.check_s3_symmetry(a_max=8, r_max=5))


def c5_vanishing():
    return _report(5, "vanishing suites", verify.check_vanishing(bound=10))


def c6_split_ses():
    return _report(6, "split SES identity", verify.check_split_ses(ab_max=8, pq_max=8))


def c7_theorem_2q():
    return _report(7, "2q decomposition", verify.check_theorem_2q(b_max=5, q_max=5, a_lo=-10, a_hi=5))


def c8_relations():
    return _report(8, "ring relations", verify.check_relations())


def c9_realization_status():
    rep = verify.CheckReport("status")
    rnd = random.Random(11)
    point = []
    while len(point) < 50:
        d = MotivicBidegree(rnd.randint(-10, 10), rnd.randint(-6, 6), rnd.randint(0, 6), rnd.randint(-6, 6))
        if region_of(d.b, d.q) is Region.POINT:
            point.append(d)
    for d in point:
        s = realization_status(d)
        rep.expect(s.raw is Status.ISO and s.refined is Status.ISO, d, s.raw)
    borel = []
    while len(borel) < 200:
        b = rnd.randint(-6, -1)
        d = MotivicBidegree(rnd.randint(-14, 6), rnd.randint(-6, 6), b, rnd.randint(-b, 6))
        borel.append(d)
    for d in borel:
        s = realization_status(d)
        if d.a <= 2 * d.b + 2:
            rep.expect(s.raw is Status.ISO and s.dim_domain == s.dim_codomain, d, s.raw, s.dim_domain, s.dim_codomain)
        else:
            rep.expect(s.raw is Status.MONO and s.dim_domain <= s.dim_codomain, d, s.raw)
    rep.equal((3, -3, 1, -3), realization_status(MotivicBidegree(3, -3, 1, -3)).refined, Status.MONO_NOT_EPI)
    rep.equal((3, -2, 1, -2), realization_status(MotivicBidegree(3, -2, 1, -2)).refined, Status.ISO)
    return _report(9, "realization status", rep)


def c10_series_vs_basis():
    return _report(10, "basis vs series", verify.check_series_vs_basis(bound=5))


def c11_region_map_golden():
    got = region_map_ascii().encode("utf-8")
    want = GOLDEN.read_bytes()
    ok = got == want
    return ok, _line(11, "region map golden file", ok, f"({len(got)} bytes vs {len(want)} bytes)")


CRITERIA = [c1_remark_examples, c2_named_classes, c3_series_oracle, c4_s3_symmetry, c5_vanishing,
            c6_split_ses, c7_theorem_2q, c8_relations, c9_realization_status, c10_series_vs_basis,
            c11_region_map_golden]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i + 1:02d}" for i in range(len(CRITERIA))])
def test_criterion(criterion, capsys):
    ok, line = criterion()
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
