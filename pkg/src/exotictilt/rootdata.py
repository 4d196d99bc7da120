"""Finite root systems of simply-connected semisimple type, in exact arithmetic.

Conventions
-----------
* A weight is a plain tuple of ints in *fundamental-weight coordinates*:
  ``coords[i] == <lam, alpha_i_vee>`` (0-based index i).
* The Cartan matrix entry ``A[i][j]`` is ``<alpha_j, alpha_i_vee>``, so the
  j-th simple root has fundamental coordinates equal to column j of A.
* Weyl group elements act on fundamental coordinates by integer matrices
  (tuples of row tuples).
* rho is the all-ones weight.

Only products of irreducible finite types are supported (total rank <= 8),
so the weight lattice is the full lattice Z^rank and X / Z.Phi is finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

Weight = tuple  # tuple[int, ...]
Matrix = tuple  # tuple[tuple[int, ...], ...]

MAX_RANK = 8
WEYL_BOUND = 10**6


class RootSystemError(ValueError):
    pass


class PositiveRoot(NamedTuple):
    coords: Weight        # fundamental-weight coordinates
    root_coords: tuple    # coordinates in the simple-root basis
    coroot: tuple         # functional: <lam, coroot> = dot(coroot, lam)


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int

    def __repr__(self):
        return f"WeylElement(len={self.length})"


# ---------------------------------------------------------------------------
# Cartan matrices

_POS_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _cartan_matrix(letter: str, n: int):
    ok = (
        (letter == "A" and n >= 1)
        or (letter in ("B", "C") and n >= 2)
        or (letter == "D" and n >= 4)
        or (letter == "E" and n in (6, 7, 8))
        or (letter == "F" and n == 4)
        or (letter == "G" and n == 2)
    )
    if not ok:
        raise RootSystemError(f"unknown or unsupported Cartan type {letter}{n}")
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if letter in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B" and n >= 2:
            a[n - 1][n - 2] = -2    # <alpha_{n-1}, alpha_n_vee> = -2, alpha_n short
        if letter == "C" and n >= 2:
            a[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            link(i, j)
        link(1, 3)
    elif letter == "F":
        link(0, 1)
        link(1, 2, aij=-2, aji=-1)
        link(2, 3)
    elif letter == "G":
        link(0, 1, aij=-3, aji=-1)
    return tuple(tuple(row) for row in a)


def _validate_cartan(a) -> None:
    n = len(a)
    for i in range(n):
        if a[i][i] != 2:
            raise RootSystemError("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise RootSystemError("invalid Cartan off-diagonal entries")
    d = _symmetrizers(a)
    # positive-definite symmetrization: leading principal minors of D*A
    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _det_fraction([row[:k] for row in sym[:k]]) <= 0:
            raise RootSystemError("Cartan symmetrization not positive definite")


def _symmetrizers(a):
    """Positive integers d with d[i]*a[i][j] == d[j]*a[j][i]."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    stack.append(j)
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // _gcd(lcm_den, x.denominator)
    ints = [int(x * lcm_den) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _det_fraction(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _invert_fraction_matrix(a):
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


# ---------------------------------------------------------------------------
# Root system


@dataclass
class RootSystem:
    spec: str
    rank: int
    cartan_matrix: Matrix
    simple_roots: tuple            # of Weight (columns of the Cartan matrix)
    positive_roots: tuple          # of PositiveRoot
    components: tuple              # of (indices tuple, highest_root: PositiveRoot)
    symmetrizers: tuple            # d_i with (alpha_i, alpha_i) = 2 d_i
    cartan_inverse: tuple          # Fraction matrix, for root coordinates
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- small linear algebra -------------------------------------------------

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def zero(self) -> Weight:
        return (0,) * self.rank

    def memo(self, name: str) -> dict:
        return self._cache.setdefault(name, {})

    def add(self, lam: Weight, mu: Weight) -> Weight:
        return tuple(a + b for a, b in zip(lam, mu))

    def sub(self, lam: Weight, mu: Weight) -> Weight:
        return tuple(a - b for a, b in zip(lam, mu))

    def neg(self, lam: Weight) -> Weight:
        return tuple(-a for a in lam)

    def apply(self, matrix: Matrix, lam: Weight) -> Weight:
        return tuple(sum(row[j] * lam[j] for j in range(self.rank)) for row in matrix)

    def mat_mul(self, m1: Matrix, m2: Matrix) -> Matrix:
        n = self.rank
        return tuple(
            tuple(sum(m1[i][k] * m2[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def mat_inv(self, m: Matrix) -> Matrix:
        memo = self.memo("mat_inv")
        res = memo.get(m)
        if res is None:
            frac = _invert_fraction_matrix(m)
            res = tuple(tuple(int(x) for x in row) for row in frac)
            memo[m] = res
        return res

    @property
    def identity_matrix(self) -> Matrix:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def simple_reflection_matrix(self, i: int) -> Matrix:
        """Matrix of s_{alpha_i} (0-based i) on fundamental coordinates."""
        alpha = self.simple_roots[i]
        return tuple(
            tuple(int(k == j) - alpha[k] * int(i == j) for j in range(self.rank))
            for k in range(self.rank)
        )

    def reflection_matrix(self, root: PositiveRoot) -> Matrix:
        return tuple(
            tuple(int(k == j) - root.coords[k] * root.coroot[j] for j in range(self.rank))
            for k in range(self.rank)
        )

    # -- pairings and coordinates ---------------------------------------------

    def pairing(self, lam: Weight, coroot) -> int:
        """<lam, coroot>; coroot is a PositiveRoot, a 0-based simple index,
        or a raw coroot functional tuple."""
        if isinstance(coroot, PositiveRoot):
            vec = coroot.coroot
        elif isinstance(coroot, int):
            return lam[coroot]
        else:
            vec = coroot
        return sum(a * b for a, b in zip(vec, lam))

    def root_coords(self, lam: Weight):
        """Coordinates of lam in the simple-root basis, as Fractions."""
        return tuple(
            sum(row[j] * lam[j] for j in range(self.rank)) for row in self.cartan_inverse
        )

    def root_coords_int(self, lam: Weight):
        """Integer simple-root coordinates, or None if lam is not in Z.Phi."""
        c = self.root_coords(lam)
        if any(x.denominator != 1 for x in c):
            return None
        return tuple(int(x) for x in c)

    def height(self, lam: Weight):
        """Sum of simple-root coordinates (a Fraction for general weights)."""
        return sum(self.root_coords(lam))

    def inner(self, lam: Weight, mu: Weight):
        """W-invariant inner product with (alpha_i, alpha_i) = 2 d_i."""
        c = self.root_coords(mu)
        return sum(cj * dj * lj for cj, dj, lj in zip(c, self.symmetrizers, lam))

    # -- dominance -------------------------------------------------------------

    def is_dominant(self, lam: Weight) -> bool:
        return all(a >= 0 for a in lam)

    def dominance_leq(self, lam: Weight, mu: Weight) -> bool:
        """lam <= mu iff mu - lam is a nonnegative integer combination of
        simple roots."""
        c = self.root_coords_int(self.sub(mu, lam))
        return c is not None and all(x >= 0 for x in c)

    def dominant_rep(self, lam: Weight):
        """(dom, v, delta): dom = v(lam) dominant, v the minimal-length Weyl
        element achieving it, delta = length(v).

        Repeatedly reflects at the smallest simple index with negative pairing;
        the resulting v is minimal (exhaustively tested in low rank).
        """
        memo = self.memo("dominant_rep")
        res = memo.get(lam)
        if res is not None:
            return res
        cur = lam
        mat = self.identity_matrix
        steps = 0
        while True:
            i = next((k for k, a in enumerate(cur) if a < 0), None)
            if i is None:
                break
            cur = tuple(
                a - cur[i] * self.simple_roots[i][k] for k, a in enumerate(cur)
            )
            mat = self.mat_mul(self.simple_reflection_matrix(i), mat)
            steps += 1
        v = WeylElement(mat, steps)
        assert self.weyl_length(mat) == steps
        res = (cur, v, steps)
        memo[lam] = res
        return res

    def dom(self, lam: Weight) -> Weight:
        return self.dominant_rep(lam)[0]

    def delta(self, lam: Weight) -> int:
        return self.dominant_rep(lam)[2]

    # -- Weyl group --------------------------------------------------------------

    def weyl_length(self, matrix: Matrix) -> int:
        pos = self.memo("pos_set")
        if not pos:
            for r in self.positive_roots:
                pos[r.coords] = True
        n = 0
        for r in self.positive_roots:
            if self.apply(matrix, r.coords) not in pos:
                n += 1
        return n

    def weyl_element(self, matrix: Matrix) -> WeylElement:
        memo = self.memo("weyl_elements")
        w = memo.get(matrix)
        if w is None:
            w = WeylElement(matrix, self.weyl_length(matrix))
            memo[matrix] = w
        return w

    def weyl_group(self, bound: int = WEYL_BOUND):
        """All Weyl group elements, enumerated by orbit traversal."""
        key = ("weyl_group", bound)
        if key in self._cache:
            return self._cache[key]
        gens = [self.simple_reflection_matrix(i) for i in range(self.rank)]
        seen = {self.identity_matrix}
        order = [self.weyl_element(self.identity_matrix)]
        frontier = [self.identity_matrix]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gens:
                    prod = self.mat_mul(m, g)
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
                        order.append(self.weyl_element(prod))
                        if len(order) > bound:
                            raise RootSystemError(
                                f"Weyl group larger than bound {bound}"
                            )
            frontier = nxt
        self._cache[key] = order
        return order

    def weyl_orbit(self, lam: Weight):
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(self.rank):
                    if mu[i] != 0:
                        ref = tuple(
                            a - mu[i] * self.simple_roots[i][k]
                            for k, a in enumerate(mu)
                        )
                        if ref not in seen:
                            seen.add(ref)
                            nxt.append(ref)
            frontier = nxt
        return sorted(seen)

    def longest_element(self) -> WeylElement:
        key = "longest"
        if key not in self._cache:
            self._cache[key] = max(self.weyl_group(), key=lambda w: w.length)
        return self._cache[key]

    def minus_w0(self, lam: Weight) -> Weight:
        """-w_0(lam); permutes the dominant weights."""
        return self.neg(self.apply(self.longest_element().matrix, lam))

    # -- convex hulls (lattice model) ---------------------------------------------

    def conv_set(self, lam: Weight):
        """conv(lam) = {mu in lam + Z.Phi : dom(mu) <= dom(lam)}.

        Computed by downward traversal along simple roots; completeness relies
        on saturation of Weyl-module weight sets (cross-checked against a
        geometric hull test in ranks 1-2).
        """
        top = self.dom(lam)
        seen = {top}
        frontier = [top]
        while frontier:
            nxt = []
            for mu in frontier:
                for alpha in self.simple_roots:
                    nu = self.sub(mu, alpha)
                    if nu not in seen and self.dominance_leq(self.dom(nu), top):
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return sorted(seen)

    def conv_interior(self, lam: Weight):
        orbit = set(self.weyl_orbit(lam))
        return [mu for mu in self.conv_set(lam) if mu not in orbit]


# ---------------------------------------------------------------------------
# Construction


def _close_roots(rank, cartan, simple_matrices):
    """All positive roots with simple-root coordinates and coroot functionals."""
    def unit(i):
        return tuple(int(j == i) for j in range(rank))

    seeds = []
    for j in range(rank):
        coords = tuple(cartan[i][j] for i in range(rank))
        seeds.append((coords, unit(j), unit(j)))
    seen = {s[0]: s for s in seeds}
    frontier = list(seeds)
    while frontier:
        nxt = []
        for coords, rc, cr in frontier:
            for i in range(rank):
                p = coords[i]
                new_coords = tuple(
                    a - p * cartan[k][i] for k, a in enumerate(coords)
                )
                if new_coords in seen:
                    continue
                new_rc = tuple(a - p * int(k == i) for k, a in enumerate(rc))
                mat = simple_matrices[i]
                new_cr = tuple(
                    sum(mat[k][j] * cr[k] for k in range(rank)) for j in range(rank)
                )
                entry = (new_coords, new_rc, new_cr)
                seen[new_coords] = entry
                nxt.append(entry)
        frontier = nxt
    pos = [
        PositiveRoot(coords, rc, cr)
        for coords, rc, cr in seen.values()
        if all(x >= 0 for x in rc)
    ]
    pos.sort(key=lambda r: (sum(r.root_coords), r.root_coords))
    return tuple(pos)


def build_root_system(spec: str) -> RootSystem:
    """Build a root system from a type string such as "A2", "G2" or "A1xA1"."""
    spec = spec.strip()
    if not spec:
        raise RootSystemError("empty root-system spec")
    parts = [p.strip() for p in spec.split("x")]
    types = []
    for p in parts:
        if len(p) < 2 or p[0].upper() not in "ABCDEFG" or not p[1:].isdigit():
            raise RootSystemError(f"unknown root-system spec {p!r}")
        types.append((p[0].upper(), int(p[1:])))
    total = sum(n for _, n in types)
    if total > MAX_RANK:
        raise RootSystemError(f"total rank {total} exceeds bound {MAX_RANK}")

    blocks = [_cartan_matrix(letter, n) for letter, n in types]
    cartan = []
    offset = 0
    for b in blocks:
        n = len(b)
        for row in b:
            cartan.append((0,) * offset + row + (0,) * (total - offset - n))
        offset += n
    cartan = tuple(cartan)
    _validate_cartan(cartan)

    rank = total
    tmp = RootSystem(
        spec="x".join(f"{l}{n}" for l, n in types),
        rank=rank,
        cartan_matrix=cartan,
        simple_roots=tuple(
            tuple(cartan[i][j] for i in range(rank)) for j in range(rank)
        ),
        positive_roots=(),
        components=(),
        symmetrizers=_symmetrizers(cartan),
        cartan_inverse=_invert_fraction_matrix(cartan),
    )
    mats = [tmp.simple_reflection_matrix(i) for i in range(rank)]
    pos = _close_roots(rank, cartan, mats)

    expected = sum(_POS_ROOT_COUNT[l](n) for l, n in types)
    if len(pos) != expected:
        raise RootSystemError(
            f"positive root closure produced {len(pos)}, expected {expected}"
        )

    comps = []
    offset = 0
    for letter, n in types:
        idx = tuple(range(offset, offset + n))
        in_comp = [
            r for r in pos if all(r.root_coords[j] == 0 or j in idx
                                  for j in range(rank))
        ]
        highest = max(in_comp, key=lambda r: sum(r.root_coords))
        comps.append((idx, highest))
        offset += n
    tmp.positive_roots = pos
    tmp.components = tuple(comps)
    return tmp
