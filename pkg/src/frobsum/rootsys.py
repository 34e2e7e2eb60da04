"""Exact root-system arithmetic for semisimple simply connected groups.

Cartan convention (fixed everywhere in this package)::

    cartan[i][j] = <alpha_j, alpha_i^vee>

so the expansion of the simple root ``alpha_j`` in the fundamental-weight
basis is *column* ``j`` of the Cartan matrix. Simple roots are numbered as in
Bourbaki; in particular ``alpha_1`` is the short root of G2 and ``alpha_n`` is
the short (resp. long) root of B_n (resp. C_n).

Weights are integer tuples in the fundamental-weight basis. Roots carry both
their simple-root coordinates and the simple-coroot coordinates of their
coroot, so pairing a weight with a coroot is a dot product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import ConfigurationError, DomainError, UsageError

Weight = tuple[int, ...]

ALLOWED_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# classical |R_+| per irreducible factor
POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(family: str, n: int) -> list[list[int]]:
    """Cartan matrix of an irreducible type, 0-based, Bourbaki numbering."""
    family = family.upper()
    if family not in ALLOWED_RANKS or not ALLOWED_RANKS[family](n):
        raise ConfigurationError(f"invalid root system factor {family}{n}")
    if family == "A":
        return _chain(n)
    if family == "B":
        a = _chain(n)
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        a[n - 1][n - 2] = -2
        return a
    if family == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if family == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if family == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a
    if family == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    # G2, alpha_1 short
    return [[2, -3], [-1, 2]]


def parse_type_label(spec: str) -> list[tuple[str, int]]:
    """Parse ``"A2"``, ``"b3"``, ``"A1xA1xA1"`` into (family, rank) factors."""
    if not spec or not spec.strip():
        raise UsageError("empty root system specification")
    factors = []
    for token in spec.strip().lower().split("x"):
        m = re.fullmatch(r"\s*([a-g])\s*(\d+)\s*", token)
        if m is None:
            raise UsageError(f"malformed root system factor {token!r}")
        factors.append((m.group(1).upper(), int(m.group(2))))
    return factors


def format_type_label(type_label: Sequence[tuple[str, int]]) -> str:
    return "x".join(f"{f}{n}" for f, n in type_label)


@dataclass(frozen=True)
class PositiveRoot:
    root: Weight  # simple-root coordinates
    coroot: Weight  # simple-coroot coordinates of alpha^vee

    @property
    def height(self) -> int:
        return sum(self.root)


@dataclass(frozen=True)
class RootSystemData:
    type_label: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[PositiveRoot, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def label(self) -> str:
        return format_type_label(self.type_label)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def zero(self) -> Weight:
        return (0,) * self.rank

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of sum_j root[j] alpha_j."""
        n = self.rank
        return tuple(sum(self.cartan[i][j] * root[j] for j in range(n)) for i in range(n))

    def weight(self, coords: Iterable[int]) -> Weight:
        w = tuple(int(c) for c in coords)
        if len(w) != self.rank:
            raise UsageError(f"weight {list(w)} has {len(w)} coordinates, expected {self.rank}")
        return w


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared root lengths d_i with d_i * A[i][j] == d_j * A[j][i]."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    return d  # type: ignore[return-value]


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    # Grow roots height by height using alpha_i-strings: for beta in R_+,
    # beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0 where q is the
    # largest k with beta - k alpha_i a root.
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))


def build_root_system(type_label: Sequence[tuple[str, int]] | str) -> RootSystemData:
    """Assemble Cartan data and the positive roots of a (product) root system.

    >>> rs = build_root_system("A2")
    >>> [r.root for r in rs.positive_roots]
    [(1, 0), (0, 1), (1, 1)]
    """
    if isinstance(type_label, str):
        type_label = parse_type_label(type_label)
    factors = [(str(f).upper(), int(n)) for f, n in type_label]
    if not factors:
        raise ConfigurationError("root system needs at least one factor")
    blocks = [cartan_matrix(f, n) for f, n in factors]
    size = sum(len(b) for b in blocks)
    cartan = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                cartan[offset + i][offset + j] = v
        offset += len(b)

    d = _symmetrizer(cartan)
    positive = []
    for m in _positive_roots(cartan):
        # (alpha, alpha) = sum_{i,j} m_i m_j d_i A[i][j] / 2
        norm = sum(m[i] * m[j] * d[i] * cartan[i][j] for i in range(size) for j in range(size)) / 2
        co = [m[i] * d[i] / norm for i in range(size)]
        assert all(c.denominator == 1 for c in co), (m, co)
        positive.append(PositiveRoot(tuple(m), tuple(int(c) for c in co)))

    return RootSystemData(
        type_label=tuple(factors),
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(positive),
    )


def pairing(w: Sequence[int], coroot_coords: Sequence[int]) -> int:
    """<w, alpha^vee> for w in weight coordinates, alpha^vee in coroot coordinates."""
    if len(w) != len(coroot_coords):
        raise UsageError(f"dimension mismatch: weight of length {len(w)}, coroot of length {len(coroot_coords)}")
    return sum(int(c) * int(m) for c, m in zip(w, coroot_coords))


def is_dominant(w: Sequence[int]) -> bool:
    return all(c >= 0 for c in w)


def weyl_dimension(rs: RootSystemData, mu: Sequence[int]) -> int:
    """dim H^0(mu) = prod_{alpha > 0} <mu + rho, alpha^vee> / <rho, alpha^vee>.

    Numerator and denominator are accumulated as exact integers and divided
    once at the end.
    """
    mu = rs.weight(mu)
    if not is_dominant(mu):
        raise DomainError(f"weight {list(mu)} is not dominant")
    shifted = tuple(c + 1 for c in mu)
    num = prod(pairing(shifted, a.coroot) for a in rs.positive_roots)
    den = prod(sum(a.coroot) for a in rs.positive_roots)
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl dimension numerator not divisible by denominator"
    return q
