"""bredon: command line front end.

    bredon point-dim --degree 2,0,1,-3
    bredon motivic --degree 3,-3:1,-3 --json
    bredon mul k1 x1
    bredon region-map --format svg -o regions.svg

Degrees are a,p,b,q for a + p sigma + b eps + q sigma*eps and a,p:b,q for
the motivic bidegree (a + p sigma, b + q sigma).  Negative values may be
written directly after the option (--degree -1,0:-2,2).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Sequence

from . import __version__
from .degrees import (
    DegreeParseError,
    KleinDegree,
    MotivicBidegree,
    parse_klein,
    parse_motivic,
    realize,
)
from .f2algebra import IllFormed, LEVEL_ORDER, UnknownProduct, multiply, parse_element, restrict
from .klein_point import group_at
from .motivic import borel_group, motivic_group_R, realization_status
from .render import region_map_ascii, region_map_svg
from .spaces import (
    b_space_group,
    bc2_basis,
    e_space_group,
    etilde_space_group,
)
from .verify import SUITES, format_reports, run_suite

SPACES = ("B", "E", "Etilde", "BC2", "Wq")
TARGETS = ("point", "motivic", "borel", "space")

# options whose value may start with a minus sign
_VALUE_OPTS = {"--degree", "--a", "--p", "--b", "--q", "--b-range", "--q-range", "--at", "--window"}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- JSON shapes


def degree_json(d: Sequence[int]) -> dict[str, int]:
    if isinstance(d, (KleinDegree, MotivicBidegree)):
        return {k: int(v) for k, v in d._asdict().items()}
    if len(d) == 2:
        return {"a": int(d[0]), "b": int(d[1])}
    raise TypeError(f"not a degree: {d!r}")


def degree_from_json(obj: dict[str, int], motivic: bool = False):
    if set(obj) == {"a", "p", "b", "q"}:
        cls = MotivicBidegree if motivic else KleinDegree
        return cls(obj["a"], obj["p"], obj["b"], obj["q"])
    return (obj["a"], obj["b"])


def _basis(strings: list[str] | None) -> list[str] | None:
    return None if strings is None else list(strings)


def point_result(d: KleinDegree) -> dict[str, Any]:
    g = group_at(d)
    return {"degree": degree_json(d), "dimension": g.dimension, "sector": g.sector,
            "basis": _basis(g.basis_strings())}


def motivic_result(d: MotivicBidegree) -> dict[str, Any]:
    g = motivic_group_R(d)
    s = realization_status(d)
    return {
        "degree": degree_json(d),
        "realized": degree_json(realize(d)),
        "dimension": g.dimension,
        "region": g.region.value,
        "realization": {"raw": s.raw.value, "refined": s.refined.value,
                        "dim_domain": s.dim_domain, "dim_codomain": s.dim_codomain},
        "basis": _basis(g.basis_strings()),
    }


def borel_result(d: MotivicBidegree) -> dict[str, Any]:
    g = borel_group(d)
    return {"degree": degree_json(d), "dimension": g.dimension, "region": g.region.value,
            "basis": _basis(g.basis_strings())}


def space_result(space: str, text: str, reduced: bool = False, q: int | None = None) -> dict[str, Any]:
    if space in ("E", "Etilde"):
        d = parse_klein(text)
        g = e_space_group(d) if space == "E" else etilde_space_group(d)
        return {"space": space, "degree": degree_json(d), "dimension": g.dimension,
                "basis": _basis(g.basis_strings())}
    a, b = _pair(text)
    if space == "B":
        g = b_space_group(a, b, reduced)
        return {"space": space, "degree": {"a": a, "b": b}, "reduced": reduced,
                "dimension": g.dimension, "basis": _basis(g.basis_strings())}
    if space == "BC2":
        basis = bc2_basis(a, b)
        return {"space": space, "degree": {"a": a, "w": b}, "dimension": len(basis),
                "basis": [str(m) for m in basis]}
    if space == "Wq":
        if q is None or q < 1:
            raise UsageError("--space Wq needs --q N with N >= 1")
        basis = bc2_basis(a, b, truncate=q)
        return {"space": space, "q": q, "degree": {"a": a, "w": b}, "dimension": len(basis),
                "basis": [str(m) for m in basis]}
    raise UsageError(f"unknown space {space!r}")


def _pair(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*\(?\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)?\s*", text)
    if not m:
        raise UsageError(f"expected a,b but got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*([+-]?\d+)\s*[:,]\s*([+-]?\d+)\s*", text)
    if m:
        return range(int(m.group(1)), int(m.group(2)) + 1)
    m = re.fullmatch(r"\s*([+-]?\d+)\s*", text)
    if m:
        return range(int(m.group(1)), int(m.group(1)) + 1)
    raise UsageError(f"expected lo:hi but got {text!r}")


def render_json(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def parse_json(text: str) -> Any:
    return json.loads(text)


# ---------------------------------------------------------------- scan


@dataclass(frozen=True)
class ScanConfig:
    a: range
    p: range
    b: range
    q: range
    target: str = "motivic"
    fmt: str = "csv"
    space: str = "E"

    def degrees(self):
        for a, p, b, q in product(self.a, self.p, self.b, self.q):
            yield (a, p, b, q)


SCAN_COLUMNS = ("a", "p", "b", "q", "dimension", "region", "raw", "refined", "basis")


def _scan_row(target: str, space: str, t: tuple[int, int, int, int]) -> dict[str, Any]:
    a, p, b, q = t
    row: dict[str, Any] = {"a": a, "p": p, "b": b, "q": q,
                           "region": "", "raw": "", "refined": "", "basis": None}
    if target == "point":
        g = group_at(KleinDegree(*t))
        row.update(dimension=g.dimension, basis=g.basis_strings())
    elif target == "motivic":
        r = motivic_result(MotivicBidegree(*t))
        row.update(dimension=r["dimension"], region=r["region"], raw=r["realization"]["raw"],
                   refined=r["realization"]["refined"], basis=r["basis"])
    elif target == "borel":
        r = borel_result(MotivicBidegree(*t))
        row.update(dimension=r["dimension"], region=r["region"], basis=r["basis"])
    elif target == "space":
        if space not in ("E", "Etilde"):
            raise UsageError("scan --target space supports --space E or Etilde")
        d = KleinDegree(*t)
        g = e_space_group(d) if space == "E" else etilde_space_group(d)
        row.update(dimension=g.dimension, basis=g.basis_strings())
    else:
        raise UsageError(f"unknown target {target!r}")
    return row


def _threads() -> int:
    raw = os.environ.get("BREDON_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def scan(config: ScanConfig) -> list[dict[str, Any]]:
    degs = list(config.degrees())
    work: Callable[[tuple], dict] = lambda t: _scan_row(config.target, config.space, t)
    n = min(_threads(), max(1, len(degs)))
    if n == 1 or len(degs) < 64:
        return [work(t) for t in degs]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(work, degs))


def format_scan(rows: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return render_json(rows) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_COLUMNS)
    for r in rows:
        basis = "" if r["basis"] is None else ";".join(r["basis"])
        w.writerow([r["a"], r["p"], r["b"], r["q"], r["dimension"], r["region"],
                    r["raw"], r["refined"], basis])
    return buf.getvalue()


# ---------------------------------------------------------------- commands


def _emit(args, obj: dict[str, Any], text: str) -> None:
    print(render_json(obj) if getattr(args, "json", False) else text)


def cmd_point_dim(args) -> int:
    d = parse_klein(args.degree)
    r = point_result(d)
    _emit(args, {"degree": r["degree"], "dimension": r["dimension"]}, str(r["dimension"]))
    return 0


def cmd_point_basis(args) -> int:
    r = point_result(parse_klein(args.degree))
    if r["basis"] is None:
        text = f"dimension {r['dimension']} (no basis available in the {r['sector']} sector)"
    else:
        text = "\n".join(r["basis"]) if r["basis"] else "0"
    _emit(args, r, text)
    return 0


def cmd_mul(args) -> int:
    u = parse_element(args.left, args.sector)
    v = parse_element(args.right, args.sector)
    r = multiply(u, v)
    if isinstance(r, UnknownProduct):
        _emit(args, {"product": None, "unknown": True, "reason": r.reason}, str(r))
    else:
        _emit(args, {"product": str(r), "unknown": False}, str(r))
    return 0


def cmd_restrict(args) -> int:
    r = restrict(parse_element(args.element), args.to, args.source)
    _emit(args, {"from": args.source, "to": args.to, "result": str(r)}, str(r))
    return 0


def cmd_space_dim(args) -> int:
    r = space_result(args.space, args.degree, args.reduced, args.q)
    text = str(r["dimension"])
    if args.basis and r["basis"] is not None:
        text += "\n" + "\n".join(r["basis"])
    _emit(args, r, text)
    return 0


def cmd_motivic(args) -> int:
    r = motivic_result(parse_motivic(args.degree))
    re_ = r["realization"]
    text = (f"dimension {r['dimension']}\nregion {r['region']}\n"
            f"realization {re_['raw']} (refined {re_['refined']}, "
            f"{re_['dim_domain']} -> {re_['dim_codomain']})")
    if r["basis"] is not None and r["basis"]:
        text += "\nbasis " + ", ".join(r["basis"])
    out = {k: r[k] for k in ("dimension", "region", "basis")}
    out["realization"] = {"raw": re_["raw"], "refined": re_["refined"]}
    out["degree"] = r["degree"]
    _emit(args, out, text)
    return 0


def cmd_borel(args) -> int:
    r = borel_result(parse_motivic(args.degree))
    text = str(r["dimension"])
    if r["basis"]:
        text += "\n" + "\n".join(r["basis"])
    _emit(args, r, text)
    return 0


def cmd_status(args) -> int:
    s = realization_status(parse_motivic(args.degree))
    obj = {"degree": degree_json(s.bidegree), "raw": s.raw.value, "refined": s.refined.value,
           "dim_domain": s.dim_domain, "dim_codomain": s.dim_codomain}
    _emit(args, obj, f"{s.raw.value} (refined {s.refined.value}, {s.dim_domain} -> {s.dim_codomain})")
    return 0


def cmd_scan(args) -> int:
    config = ScanConfig(_range(args.a), _range(args.p), _range(args.b), _range(args.q),
                        args.target, args.format, args.space)
    sys.stdout.write(format_scan(scan(config), config.fmt))
    return 0


def cmd_region_map(args) -> int:
    b_lo, b_hi = _range(args.b_range)[0], _range(args.b_range)[-1]
    q_lo, q_hi = _range(args.q_range)[0], _range(args.q_range)[-1]
    at = _pair(args.at) if args.at else None
    if args.format == "svg":
        text = region_map_svg((b_lo, b_hi), (q_lo, q_hi), at)
    else:
        text = region_map_ascii((b_lo, b_hi), (q_lo, q_hi), at)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    window = int(args.window) if args.window else None
    reports = run_suite(args.suite, window)
    if args.json:
        print(render_json([r.as_dict() for r in reports]))
    else:
        print(format_reports(reports))
    return 0 if all(r.ok for r in reports) else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bredon", description="Bredon cohomology calculator, Z/2 coefficients.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("point-dim", cmd_point_dim, "dimension of H^V(pt)")
    p.add_argument("--degree", required=True, help="a,p,b,q")
    p = add("point-basis", cmd_point_basis, "monomial basis of H^V(pt) where known")
    p.add_argument("--degree", required=True, help="a,p,b,q")
    p = add("mul", cmd_mul, "product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--sector", default="point", choices=("point", "espace") + LEVEL_ORDER[1:])
    p = add("restrict", cmd_restrict, "restriction in the positive-cone Mackey functor")
    p.add_argument("element")
    p.add_argument("--to", required=True, choices=LEVEL_ORDER)
    p.add_argument("--from", dest="source", default="K", choices=LEVEL_ORDER)
    p = add("space-dim", cmd_space_dim, "cohomology of B, E, Etilde, BC2 or W_q")
    p.add_argument("--space", required=True, choices=SPACES)
    p.add_argument("--degree", required=True, help="a,b for B; a,p,b,q for E and Etilde; a,w for BC2 and Wq")
    p.add_argument("--reduced", action="store_true", help="reduced cohomology (B only)")
    p.add_argument("--q", type=int, help="truncation t^q = 0 for Wq")
    p.add_argument("--basis", action="store_true", help="also print the basis")
    for name, fn, h in (("motivic", cmd_motivic, "H^{a+p sigma, b+q sigma}(R)"),
                        ("borel", cmd_borel, "Borel motivic cohomology of R"),
                        ("status", cmd_status, "status of the realization map")):
        p = add(name, fn, h)
        p.add_argument("--degree", required=True, help="a,p:b,q")
    p = add("scan", cmd_scan, "table over a window of degrees")
    p.add_argument("--target", default="motivic", choices=TARGETS)
    p.add_argument("--space", default="E", choices=("E", "Etilde"))
    for coord in ("a", "p", "b", "q"):
        p.add_argument(f"--{coord}", default="0", help="lo:hi (inclusive) or a single value")
    p.add_argument("--format", default="csv", choices=("csv", "json"))
    p = add("region-map", cmd_region_map, "regions of the weight plane")
    p.add_argument("--b-range", default="-6:6")
    p.add_argument("--q-range", default="-6:6")
    p.add_argument("--format", default="ascii", choices=("ascii", "svg"))
    p.add_argument("--at", help="a,p: annotate each cell with the group dimension")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p = add("verify", cmd_verify, "run the consistency suites")
    p.add_argument("--suite", default="all", choices=tuple(SUITES))
    p.add_argument("--window", help="representation bound for the window checks")
    return ap


def _glue_negative_values(argv: list[str]) -> list[str]:
    """'--degree -1,0,2,3' -> '--degree=-1,0,2,3' so argparse keeps the value."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (DegreeParseError, UsageError, IllFormed) as exc:
        print(f"bredon: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
