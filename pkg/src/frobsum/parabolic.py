"""Parabolic subgroups P = P_I given by a Levi subset I of the simple roots."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UsageError
from .rootsys import RootSystemData, Weight


@dataclass(frozen=True)
class ParabolicData:
    """Levi subset ``levi`` (0-based simple-root indices) and derived data.

    ``two_rho_P`` is the sum of the positive roots outside the Levi, in
    fundamental-weight coordinates; ``-two_rho_P`` is the canonical class of
    G/P. Half of it is never formed so everything stays integral.
    """

    rs: RootSystemData
    levi: frozenset[int]
    two_rho_P: Weight
    dim_GP: int

    @property
    def complement(self) -> tuple[int, ...]:
        """Simple-root indices not in the Levi (the marked nodes)."""
        return tuple(i for i in range(self.rs.rank) if i not in self.levi)

    def levi_label(self) -> str:
        return ",".join(str(i + 1) for i in sorted(self.levi)) or "none"


def build_parabolic(rs: RootSystemData, levi: Iterable[int]) -> ParabolicData:
    """Build P_I from 0-based Levi indices.

    >>> from frobsum.rootsys import build_root_system
    >>> build_parabolic(build_root_system("A2"), {1}).two_rho_P
    (3, 0)
    """
    levi = frozenset(int(i) for i in levi)
    bad = sorted(i for i in levi if not 0 <= i < rs.rank)
    if bad:
        raise UsageError(f"Levi index {bad[0] + 1} out of range 1..{rs.rank}")
    total = [0] * rs.rank
    count = 0
    for a in rs.positive_roots:
        if all(c == 0 or i in levi for i, c in enumerate(a.root)):
            continue  # a in R_I
        count += 1
        for i, c in enumerate(a.root):
            total[i] += c
    return ParabolicData(rs=rs, levi=levi, two_rho_P=rs.root_to_weight(total), dim_GP=count)


def parse_levi(spec: str, rank: int, marked: bool = False) -> frozenset[int]:
    """Parse ``"2"``, ``"1,3"`` or ``"none"`` (1-based) into 0-based Levi indices.

    With ``marked=True`` the listed nodes are the ones *outside* the Levi.
    """
    spec = (spec or "none").strip().lower()
    if spec in ("none", "", "empty"):
        chosen: set[int] = set()
    elif spec == "all":
        chosen = set(range(rank))
    else:
        chosen = set()
        for token in spec.split(","):
            token = token.strip()
            try:
                k = int(token)
            except ValueError:
                raise UsageError(f"malformed node index {token!r}") from None
            if not 1 <= k <= rank:
                raise UsageError(f"node index {k} out of range 1..{rank}")
            chosen.add(k - 1)
    if marked:
        chosen = set(range(rank)) - chosen
    return frozenset(chosen)


def in_XP(pd: ParabolicData, mu: Sequence[int]) -> bool:
    """True iff mu pairs to zero with every coroot of the Levi."""
    return all(mu[i] == 0 for i in pd.levi)
