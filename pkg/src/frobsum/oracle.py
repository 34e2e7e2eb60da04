"""Monomial decompositions of F^r_* O(d) on P^n and on products of P^1.

On P^n with homogeneous coordinates x_0..x_n, a monomial of degree d is
uniquely x^(q*b) * x^a with 0 <= a_i <= q-1, so

    F^r_* O(d) = sum_e O(e)^{m_e},   m_e = #{a in [0, q-1]^{n+1} : |a| = d - q*e}.

This is independent of the root-system machinery and serves as an oracle
for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import UsageError


def bounded_compositions(total: int, parts: int, bound: int) -> int:
    """#{a in Z^parts : 0 <= a_i <= bound, sum(a) == total}, by inclusion-exclusion."""
    if parts < 1:
        raise UsageError("parts must be >= 1")
    if bound < 0 or total < 0:
        return 0
    count = 0
    for k in range(parts + 1):
        rest = total - k * (bound + 1)
        if rest < 0:
            break
        count += (-1) ** k * comb(parts, k) * comb(rest + parts - 1, parts - 1)
    return count


@dataclass(frozen=True)
class OracleDecomposition:
    entries: dict  # degree (int, or tuple for products) -> multiplicity

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def support(self) -> set:
        return set(self.entries)


def decompose_projective_space(n: int, p: int, r: int, d: int) -> OracleDecomposition:
    if n < 1 or r < 1 or p < 2:
        raise UsageError(f"need n >= 1, p >= 2, r >= 1 (got n={n}, p={p}, r={r})")
    q = p**r
    lo = -((-(d - (n + 1) * (q - 1))) // q)
    hi = d // q
    entries = {}
    for e in range(lo, hi + 1):
        m = bounded_compositions(d - q * e, n + 1, q - 1)
        if m > 0:
            entries[e] = m
    return OracleDecomposition(entries)


def decompose_product_of_lines(n: int, p: int, r: int, d: Sequence[int]) -> OracleDecomposition:
    if len(d) != n:
        raise UsageError(f"degree vector has length {len(d)}, expected {n}")
    factors = [decompose_projective_space(1, p, r, di).entries for di in d]
    entries = {}
    for combo in itertools.product(*(sorted(f.items()) for f in factors)):
        mult = 1
        for _, m in combo:
            mult *= m
        entries[tuple(e for e, _ in combo)] = mult
    return OracleDecomposition(entries)
