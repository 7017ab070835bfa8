"""Brute-force Bredon cohomology of a point from representation-sphere chains.

With constant Z/2 coefficients, finite cellular HZ/2-module spectra are
modelled by bounded complexes of permutation modules over F2[K], so for
actual representations V and W

    H^{n + V - W}_K(pt) = H_{-n}( Hom_K(C(S^W), C(S^V)) ).

C(S^{m chi}) is the reduced chain complex F2 <- F2[K/ker chi] <- ... with m
free cells, and C(S^V) is the tensor product over the three irreducibles.
The Hom complex of K-maps between permutation modules has a basis of orbit
sums on pairs of cells, which keeps everything finite and exact.

This shares no code with the closed forms and is used only as an oracle.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

# K = Z/2 x Z/2 as bit pairs (s, e); characters are evaluated on the bits
_K = [(0, 0), (1, 0), (0, 1), (1, 1)]
_CHARS = (
    lambda g: g[0],            # sigma
    lambda g: g[1],            # eps
    lambda g: g[0] ^ g[1],     # sigma (x) eps
)


class SphereChains:
    """Reduced cellular chains of S^{p sigma + b eps + q sigma*eps}, p, b, q >= 0.

    A cell is a tuple of per-factor cells; a factor cell is (dim, side) with
    side in {0, 1} for dim >= 1 and side 0 for the fixed 0-cell.
    """

    def __init__(self, mult: tuple[int, int, int]):
        self.mult = mult
        factors = []
        for m in mult:
            factors.append([(0, 0)] + [(i, s) for i in range(1, m + 1) for s in (0, 1)])
        self.cells = list(product(*factors))
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.dim = [sum(f[0] for f in c) for c in self.cells]

    def act(self, g: tuple[int, int], cell):
        out = []
        for chi, (d, s) in zip(_CHARS, cell):
            out.append((d, s ^ chi(g)) if d else (d, s))
        return tuple(out)

    @staticmethod
    def _factor_boundary(cell):
        d, s = cell
        if d == 0:
            return []
        if d == 1:
            return [(0, 0)]
        return [(d - 1, 0), (d - 1, 1)]

    def boundary(self, cell) -> list:
        """Cells appearing (mod 2) in the boundary of a cell."""
        out = []
        for pos, fc in enumerate(cell):
            for b in self._factor_boundary(fc):
                out.append(cell[:pos] + (b,) + cell[pos + 1:])
        return out


def _rank_f2(rows: list[int]) -> int:
    rank = 0
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


class HomComplex:
    """Hom_K(C(S^W), C(S^V)) graded by target degree minus source degree."""

    def __init__(self, v: tuple[int, int, int], w: tuple[int, int, int]):
        self.V = SphereChains(v)
        self.W = SphereChains(w)
        self._orbits: dict[int, list[frozenset]] = {}
        self._orbit_of: dict[tuple, tuple[int, int]] = {}
        seen = set()
        for x in self.W.cells:
            for y in self.V.cells:
                if (x, y) in seen:
                    continue
                orb = frozenset((self.W.act(g, x), self.V.act(g, y)) for g in _K)
                seen |= orb
                m = self.V.dim[self.V.index[y]] - self.W.dim[self.W.index[x]]
                lst = self._orbits.setdefault(m, [])
                for pair in orb:
                    self._orbit_of[pair] = (m, len(lst))
                lst.append(orb)
        self._vcob: dict = {}
        for y in self.V.cells:
            for z in self.V.boundary(y):
                self._vcob.setdefault(z, []).append(y)

    def rank(self) -> int:
        return sum(len(v) for v in self._orbits.values())

    def _differential_rank(self, m: int) -> int:
        """Rank of D: Hom_m -> Hom_{m-1}, D f = d_V f + f d_W."""
        src = self._orbits.get(m, [])
        if not src or not self._orbits.get(m - 1):
            return 0
        rows = []
        for orb in src:
            vec: dict[int, int] = {}
            for x, y in orb:
                # d_V o f: the pair (x, y) contributes (x, z) for z in d y
                for z in self.V.boundary(y):
                    vec[(x, z)] = vec.get((x, z), 0) ^ 1
                # f o d_W: (x, y) contributes (u, y) for u with x in d u
                for u in self._wcob(x):
                    vec[(u, y)] = vec.get((u, y), 0) ^ 1
            # read off coefficients at one representative per target orbit
            bits = 0
            reps: dict[int, tuple] = {}
            for pair, c in vec.items():
                _, idx = self._orbit_of[pair]
                reps.setdefault(idx, pair)
            for idx, pair in reps.items():
                if vec.get(pair, 0):
                    bits |= 1 << idx
            rows.append(bits)
        return _rank_f2(rows)

    def _wcob(self, x) -> list:
        if not hasattr(self, "_wcob_map"):
            self._wcob_map: dict = {}
            for u in self.W.cells:
                for z in self.W.boundary(u):
                    self._wcob_map.setdefault(z, []).append(u)
        return self._wcob_map.get(x, [])

    def homology(self, m: int) -> int:
        n = len(self._orbits.get(m, []))
        return n - self._differential_rank(m) - self._differential_rank(m + 1)


@lru_cache(maxsize=None)
def _complex(v: tuple[int, int, int], w: tuple[int, int, int]) -> HomComplex:
    return HomComplex(v, w)


def cellular_dim(a: int, p: int, b: int, q: int) -> int:
    """dim H^{a + p sigma + b eps + q sigma*eps}(pt; Z/2) by brute force."""
    rep = (p, b, q)
    v = tuple(max(c, 0) for c in rep)
    w = tuple(max(-c, 0) for c in rep)
    return _complex(v, w).homology(-a)  # type: ignore[arg-type]
