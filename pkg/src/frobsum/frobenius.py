"""Line-bundle summands of Frobenius pushforwards on G/P.

Throughout, ``q = p**r`` and for a simple root ``alpha_i`` outside the Levi
``t_i = <2 rho_P, alpha_i^vee>`` (always >= 2). L(lam) is a direct summand of
F^r_* L(mu) iff for every simple root

    0 <= <mu - q*lam, alpha_i^vee> <= (q - 1) * t_i

and along Levi coordinates both sides vanish. Multiplicities are reported
only where they are determined: the trivial summand for mu in X_r(T), its
projection-formula twist, and the dual twist. All other multiplicities are
``None`` (unknown).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, PreconditionError, UsageError
from .parabolic import ParabolicData, in_XP
from .rootsys import RootSystemData, Weight, is_dominant, weyl_dimension


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_characteristic(p: int, r: int, allow_composite: bool = False) -> None:
    if r < 1:
        raise UsageError(f"Frobenius power r must be >= 1, got {r}")
    if p < 2:
        raise UsageError(f"p must be >= 2, got {p}")
    if not allow_composite and not is_prime(p):
        raise UsageError(f"p={p} is not prime (use allow_composite, or --allow-composite-p on the command line, to explore anyway)")


@dataclass(frozen=True)
class FrobeniusQuery:
    pd: ParabolicData
    p: int
    r: int
    mu: Weight
    allow_composite: bool = False

    def __post_init__(self):
        check_characteristic(self.p, self.r, self.allow_composite)
        object.__setattr__(self, "mu", self.pd.rs.weight(self.mu))
        if not in_XP(self.pd, self.mu):
            raise DomainError(f"mu={list(self.mu)} is not in X(P) for Levi {{{self.pd.levi_label()}}}")

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def rs(self) -> RootSystemData:
        return self.pd.rs

    def with_mu(self, mu: Sequence[int]) -> FrobeniusQuery:
        return FrobeniusQuery(self.pd, self.p, self.r, tuple(mu), self.allow_composite)

    def with_r(self, r: int) -> FrobeniusQuery:
        return FrobeniusQuery(self.pd, self.p, r, self.mu, self.allow_composite)


def is_summand(q: FrobeniusQuery, lam: Sequence[int]) -> bool:
    """Whether L^P(lam) is a direct summand of F^r_* L^P(mu)."""
    lam = q.rs.weight(lam)
    if not in_XP(q.pd, lam):
        raise DomainError(f"lambda={list(lam)} is not in X(P)")
    Q = q.q
    for i in range(q.rs.rank):
        diff = q.mu[i] - Q * lam[i]
        if i in q.pd.levi:
            assert diff == 0, "lattice membership violated on a Levi coordinate"
            continue
        if not 0 <= diff <= (Q - 1) * q.pd.two_rho_P[i]:
            return False
    return True


def summand_ranges(q: FrobeniusQuery) -> list[range]:
    """Per-coordinate ranges of <lam, alpha_i^vee> over all summands."""
    Q = q.q
    ranges = []
    for i in range(q.rs.rank):
        if i in q.pd.levi:
            ranges.append(range(0, 1))
            continue
        m, t = q.mu[i], q.pd.two_rho_P[i]
        lo = -((-(m - (Q - 1) * t)) // Q)  # ceil
        hi = m // Q
        ranges.append(range(lo, hi + 1))
    return ranges


def enumerate_summands(q: FrobeniusQuery) -> list[Weight]:
    """All lam with L^P(lam) a summand of F^r_* L^P(mu), sorted lexicographically.

    >>> from frobsum.rootsys import build_root_system
    >>> from frobsum.parabolic import build_parabolic
    >>> pd = build_parabolic(build_root_system("A2"), ())
    >>> enumerate_summands(FrobeniusQuery(pd, 2, 1, (0, 0)))
    [(-1, -1), (-1, 0), (0, -1), (0, 0)]
    """
    return sorted(itertools.product(*summand_ranges(q)))


def brute_force_summands(q: FrobeniusQuery) -> list[Weight]:
    """Filter a bounding box through ``is_summand``; cross-check for the above."""
    Q = q.q
    axes = []
    for i in range(q.rs.rank):
        if i in q.pd.levi:
            axes.append(range(0, 1))
        else:
            m, t = q.mu[i], q.pd.two_rho_P[i]
            axes.append(range(m // Q - t - 1, m // Q + 2))
    return sorted(lam for lam in itertools.product(*axes) if is_summand(q, lam))


def in_restricted(q: FrobeniusQuery, mu: Sequence[int]) -> bool:
    """mu in X_r(T): 0 <= <mu, alpha^vee> <= p^r - 1 for every simple root."""
    return all(0 <= c <= q.q - 1 for c in mu)


def multiplicity_of_trivial(q: FrobeniusQuery) -> int:
    """Multiplicity of O_{G/P} in F^r_* L^P(mu) for mu in X_r(T) ∩ X(P).

    Equals dim H^0(G/P, L^P(mu)), i.e. the Weyl dimension of mu.
    """
    if not in_restricted(q, q.mu):
        raise PreconditionError(
            f"mu={list(q.mu)} is not in X_r(T): need 0 <= <mu, alpha^vee> <= {q.q - 1} for all simple roots; "
            "the multiplicity of the trivial summand is not determined here"
        )
    return weyl_dimension(q.rs, q.mu)


def serre_dual_weight(q: FrobeniusQuery) -> Weight:
    """Weight nu with (F^r_* L(mu))^dual = F^r_* L(nu), nu = (q-1) 2rho_P - mu."""
    Q = q.q
    return tuple((Q - 1) * t - m for t, m in zip(q.pd.two_rho_P, q.mu))


def padic_split(q: FrobeniusQuery, mu: Sequence[int] | None = None) -> tuple[Weight, Weight]:
    """Split dominant mu as mu0 + q*mu1 with mu0 in X_r(T), mu1 dominant."""
    mu = q.mu if mu is None else q.rs.weight(mu)
    if not is_dominant(mu):
        raise DomainError(f"weight {list(mu)} is not dominant")
    Q = q.q
    mu0 = tuple(c % Q for c in mu)
    mu1 = tuple(c // Q for c in mu)
    return mu0, mu1


@dataclass(frozen=True)
class StableSummands:
    weights: list[Weight]
    threshold: int | None  # smallest r reaching the limit set; None for finite r


def stable_line_summands_of_structure_sheaf(
    pd: ParabolicData, p: int, r: int | str, allow_composite: bool = False
) -> StableSummands:
    """Line bundles occurring in F^r_* O_{G/P}, or in any F^r_* O for ``r="limit"``.

    Along a coordinate i outside the Levi, -<lam, alpha_i^vee> runs over
    0..floor((q-1) t_i / q), which equals t_i - 1 as soon as q >= t_i.
    """
    rank = pd.rs.rank
    if r == "limit":
        check_characteristic(p, 1, allow_composite)
        depth = {i: pd.two_rho_P[i] - 1 for i in pd.complement}
        threshold = 1
        for i in pd.complement:
            t = pd.two_rho_P[i]
            k = 1
            while p**k < t:
                k += 1
            threshold = max(threshold, k)
    else:
        r = int(r)
        check_characteristic(p, r, allow_composite)
        Q = p**r
        depth = {i: (Q - 1) * pd.two_rho_P[i] // Q for i in pd.complement}
        threshold = None
    axes = [range(-depth[i], 1) if i in depth else range(0, 1) for i in range(rank)]
    return StableSummands(sorted(itertools.product(*axes)), threshold)


def gros_kaneda_multiplicity(rs: RootSystemData, p: int, r: int, allow_composite: bool = False) -> int:
    """Multiplicity of L^B(-rho) in F^r_* O_{G/B}: dim H^0((p^r - 2) rho)."""
    check_characteristic(p, r, allow_composite)
    return weyl_dimension(rs, tuple(p**r - 2 for _ in range(rs.rank)))


@dataclass(frozen=True)
class SummandEntry:
    weight: Weight
    multiplicity: int | None  # None: not determined


@dataclass(frozen=True)
class MultiplicityConflict:
    weight: Weight
    direct: int
    dual: int


@dataclass
class DecompositionReport:
    query: FrobeniusQuery
    summands: list[SummandEntry]
    total_rank: int
    accounted_rank: int
    conflicts: list[MultiplicityConflict] = field(default_factory=list)

    def multiplicity(self, lam: Sequence[int]) -> int | None:
        lam = tuple(lam)
        for e in self.summands:
            if e.weight == lam:
                return e.multiplicity
        raise KeyError(lam)

    def to_json(self) -> dict:
        q = self.query
        out = {
            "query": {
                "type": q.rs.label,
                "levi": [i + 1 for i in sorted(q.pd.levi)],
                "p": q.p,
                "r": q.r,
                "mu": list(q.mu),
            },
            "summands": [
                {
                    "lambda": list(e.weight),
                    "multiplicity": "unknown" if e.multiplicity is None else str(e.multiplicity),
                }
                for e in self.summands
            ],
            "total_rank": str(self.total_rank),
            "accounted_rank": str(self.accounted_rank),
        }
        if self.conflicts:
            out["conflicts"] = [
                {"lambda": list(c.weight), "direct": str(c.direct), "dual": str(c.dual)} for c in self.conflicts
            ]
        return out


def decompose(q: FrobeniusQuery) -> DecompositionReport:
    """Collect every line-bundle summand and the multiplicities that are known.

    For dominant mu = mu0 + q*mu1 the summand L(mu1) has multiplicity
    dim H^0(mu0). For mu in X_r(T) the same rule applied to the dual weight
    nu = nu0 + q*nu1 gives L(-nu1) with multiplicity dim H^0(nu0).
    """
    weights = enumerate_summands(q)
    known: dict[Weight, int] = {}
    conflicts = []

    if is_dominant(q.mu):
        mu0, mu1 = padic_split(q)
        known[mu1] = weyl_dimension(q.rs, mu0)

    if in_restricted(q, q.mu):
        nu = serre_dual_weight(q)
        nu0, nu1 = padic_split(q, nu)
        lam = tuple(-c for c in nu1)
        mult = weyl_dimension(q.rs, nu0)
        if lam in known and known[lam] != mult:
            conflicts.append(MultiplicityConflict(lam, known[lam], mult))
        else:
            known[lam] = mult

    present = set(weights)
    assert all(lam in present for lam in known), "determined summand missing from enumeration"
    entries = [SummandEntry(lam, known.get(lam)) for lam in weights]
    total = q.q**q.pd.dim_GP
    accounted = sum(known.values())
    assert accounted <= total, "accounted rank exceeds rank of the pushforward"
    return DecompositionReport(q, entries, total, accounted, conflicts)
