"""Root systems of the simple Lie algebras over exact rational arithmetic.

Positive roots are integer coordinate vectors in the simple-root basis,
generated from the Cartan matrix by root-string closure.  The invariant
bilinear form is normalised so that long roots have squared length 2; every
derived quantity (Weyl vector, coroot half-sum, Coxeter numbers, exponents)
is an exact integer or Fraction.

Simple roots are numbered as in Bourbaki, so fundamental-weight coordinates
agree with the usual tables (e.g. the first fundamental weight of E6 carries
the 27-dimensional representation).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

FAMILIES = "ABCDEFG"
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")

# Smallest accepted rank per family.  C2 and D3 duplicate B2 and A3 and are
# accepted as alternative presentations of the same algebra; D2 would be
# reducible and is rejected.
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}

_LABEL_RE = re.compile(r"^([A-Ga-g])[_ ]?([0-9]+)$")


@dataclass(frozen=True, order=True)
class LieType:
    """Label of a simple Lie algebra: family A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("type E exists only for ranks 6, 7, 8")
        elif self.family == "F":
            if self.rank != 4:
                raise ValueError("type F exists only for rank 4")
        elif self.family == "G":
            if self.rank != 2:
                raise ValueError("type G exists only for rank 2")
        elif self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"type {self.family} requires rank >= {_MIN_RANK[self.family]}"
            )

    @classmethod
    def parse(cls, label: str) -> "LieType":
        m = _LABEL_RE.match(label.strip())
        if not m:
            raise ValueError(f"cannot parse Lie type label {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_exceptional(self) -> bool:
        return self.family in "EFG"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def classical_type(kind: str, dim: int) -> LieType:
    """Simple type of the matrix algebra sl/sp/so of the given size.

    so3 and so4 are rejected: so4 is not simple and so3 has no standard
    presentation here (use sl2 / A1 instead).
    """
    if kind == "sl":
        if dim < 2:
            raise ValueError("sl requires dimension >= 2")
        return LieType("A", dim - 1)
    if kind == "sp":
        if dim < 2 or dim % 2:
            raise ValueError("sp requires even dimension >= 2")
        if dim == 2:
            return LieType("A", 1)
        return LieType("C", dim // 2)
    if kind == "so":
        if dim < 5:
            raise ValueError("so requires dimension >= 5 (so3/so4 are not supported)")
        if dim % 2:
            return LieType("B", (dim - 1) // 2)
        return LieType("D", dim // 2)
    raise ValueError(f"unknown classical kind {kind!r}, expected sl, sp or so")


@dataclass(frozen=True)
class Root:
    """A positive root: integer coordinates in the simple-root basis."""

    coords: tuple[int, ...]
    height: int
    is_long: bool
    norm2: Fraction


def _cartan_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    # Entry [i][j] is the pairing of alpha_i with the coroot of alpha_j.
    n = lt.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    fam = lt.family
    if fam in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)  # last simple root short
        if fam == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)  # last simple root long
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]:
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    else:  # G2, first root short
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in c)


def _simple_norms(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    # Half squared lengths d_j of the simple roots, scaled so max(d) = 1.
    # Symmetry of the form forces c[i][j] d_j = c[j][i] d_i along each bond.
    n = len(cartan)
    d = {0: Fraction(1)}
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and j not in d:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                queue.append(j)
    if len(d) != n:
        raise ValueError("Cartan matrix has a disconnected diagram")
    top = max(d.values())
    return tuple(d[j] / top for j in range(n))


def _positive_root_coords(
    cartan: tuple[tuple[int, ...], ...],
) -> tuple[list[tuple[int, ...]], dict[tuple[int, ...], list[int]]]:
    # Height-by-height closure.  For each known root we keep its vector of
    # coroot pairings; gamma + alpha_i is a root iff the alpha_i-string below
    # gamma is longer than that pairing.
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    pairing: dict[tuple[int, ...], list[int]] = {
        simple[i]: list(cartan[i]) for i in range(n)
    }
    known = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for coords in layer:
            p = pairing[coords]
            for i in range(n):
                if p[i] >= 0:
                    if coords[i] <= p[i]:
                        continue  # cannot step down far enough
                    steps_down = 0
                    probe = list(coords)
                    while steps_down <= p[i]:
                        probe[i] -= 1
                        if tuple(probe) not in known:
                            break
                        steps_down += 1
                    if steps_down <= p[i]:
                        continue
                up = list(coords)
                up[i] += 1
                new = tuple(up)
                if new in known:
                    continue
                known.add(new)
                row = cartan[i]
                pairing[new] = [p[j] + row[j] for j in range(n)]
                nxt.append(new)
        ordered.extend(nxt)
        layer = nxt
    return ordered, pairing


class RootSystem:
    """Immutable container for the root data of one simple type.

    All attributes are fixed at construction; instances can be shared freely
    across threads.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.cartan = _cartan_matrix(lie_type)
        self.simple_norms = _simple_norms(self.cartan)
        self.gram = tuple(
            tuple(self.cartan[i][j] * self.simple_norms[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        for i in range(self.rank):
            for j in range(self.rank):
                assert self.gram[i][j] == self.gram[j][i]

        coords_list, pairings = _positive_root_coords(self.cartan)
        scale = lcm(*(d.denominator for d in self.simple_norms))
        int_norms = [int(d * scale) for d in self.simple_norms]

        roots = []
        long_total = [0] * self.rank
        short_total = [0] * self.rank
        for coords in coords_list:
            p = pairings[coords]
            scaled = sum(c * pi * w for c, pi, w in zip(coords, p, int_norms))
            norm2 = Fraction(scaled, scale)
            is_long = scaled == 2 * scale
            acc = long_total if is_long else short_total
            for k, c in enumerate(coords):
                acc[k] += c
            roots.append(Root(coords, sum(coords), is_long, norm2))
        self.positive_roots = tuple(roots)
        self.dimension = self.rank + 2 * len(roots)

        self.theta = max(roots, key=lambda r: r.height)
        assert sum(1 for r in roots if r.height == self.theta.height) == 1
        assert self.theta.norm2 == 2, "normalisation failed"

        shorts = [r for r in roots if not r.is_long]
        if shorts:
            self.theta_short = max(shorts, key=lambda r: r.height)
            ratio = 2 / self.theta_short.norm2
            assert ratio.denominator == 1 and int(ratio) in (2, 3)
            self.r = int(ratio)
        else:
            self.theta_short = self.theta
            self.r = 1

        total = [lt + st for lt, st in zip(long_total, short_total)]
        self.rho = tuple(Fraction(t, 2) for t in total)
        # Coroot half-sum: each root contributes its coordinates divided by
        # its squared length, i.e. 1/2 for long roots and r/2 for short ones.
        self.rho_check = tuple(
            Fraction(lt, 2) + Fraction(st * self.r, 2)
            for lt, st in zip(long_total, short_total)
        )

        self._scale = scale
        self._int_norms = tuple(int_norms)

    # -- bilinear form -----------------------------------------------------

    def form(self, x, y) -> Fraction:
        """Normalised invariant form between vectors in root coordinates."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.gram[i]
            total += xi * sum(yj * row[j] for j, yj in enumerate(y) if yj)
        return total

    def coroot_pairings(self, coords) -> tuple[int, ...]:
        """Pairings of an integer root-coordinate vector with every simple coroot."""
        return tuple(
            sum(ci * self.cartan[i][j] for i, ci in enumerate(coords))
            for j in range(self.rank)
        )

    # -- weights -------------------------------------------------------------

    @property
    def fundamental_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        """Fundamental weights as root-coordinate rows (inverse Cartan)."""
        cached = getattr(self, "_fundamental_weights", None)
        if cached is None:
            cached = _invert_rational(self.cartan)
            self._fundamental_weights = cached
        return cached

    def weight_root_coords(self, weight) -> tuple[Fraction, ...]:
        """Convert fundamental-weight coordinates to root coordinates."""
        rows = self.fundamental_weights
        return tuple(
            sum(wi * rows[i][k] for i, wi in enumerate(weight) if wi)
            for k in range(self.rank)
        )

    def weight_form(self, a, b) -> Fraction:
        """Invariant form between two weights in fundamental coordinates.

        Uses that the pairing of a weight with the j-th simple root equals
        its j-th coordinate times the half squared length of that root.
        """
        y = self.weight_root_coords(b)
        return sum(
            yj * aj * dj
            for yj, aj, dj in zip(y, a, self.simple_norms)
            if yj and aj
        ) or Fraction(0)

    # -- classical invariants ------------------------------------------------

    def coxeter_number(self) -> int:
        return self.theta.height + 1

    def dual_coxeter_number(self) -> int:
        # 1 + (rho, theta-check); theta-check = theta since (theta,theta) = 2.
        value = 1 + self.form(self.rho, self.theta.coords)
        assert value.denominator == 1
        return int(value)

    def dual_coxeter_number_of_dual(self) -> int:
        """Dual Coxeter number of the Langlands dual root system."""
        return 1 + self.theta_short.height

    def exponents(self) -> tuple[int, ...]:
        """Exponents, read off as the conjugate of the height distribution."""
        counts: dict[int, int] = {}
        for root in self.positive_roots:
            counts[root.height] = counts.get(root.height, 0) + 1
        exps = [
            sum(1 for k in counts.values() if k >= j)
            for j in range(1, counts[1] + 1)
        ]
        exps.reverse()
        assert len(exps) == self.rank
        assert sum(2 * m + 1 for m in exps) == self.dimension
        return tuple(exps)

    def height_sums(self) -> tuple[int, int]:
        """Height totals over long and short positive roots.

        In the simply-laced case every root is reported under the short sum,
        matching the convention that makes the r-weighted combination equal
        twice the squared length of the coroot half-sum.
        """
        long_sum = sum(r.height for r in self.positive_roots if r.is_long)
        short_sum = sum(r.height for r in self.positive_roots if not r.is_long)
        if self.r == 1:
            return 0, long_sum + short_sum
        return long_sum, short_sum

    def rho_check_norm2_doubled(self) -> Fraction:
        return 2 * self.form(self.rho_check, self.rho_check)

    def strange_formula_holds(self) -> bool:
        """Freudenthal-de Vries: (rho,rho) = dim*h^*/12 in this normalisation."""
        expected = Fraction(self.dimension * self.dual_coxeter_number(), 12)
        return self.form(self.rho, self.rho) == expected

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


def _invert_rational(matrix) -> tuple[tuple[Fraction, ...], ...]:
    # Gauss-Jordan over Fractions; matrices here are at most rank x rank.
    n = len(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def _build_cached(lt: LieType) -> RootSystem:
    return RootSystem(lt)


def build(label: str | LieType) -> RootSystem:
    """Build (or fetch from cache) the root system for a type label."""
    lt = LieType.parse(label) if isinstance(label, str) else label
    return _build_cached(lt)
