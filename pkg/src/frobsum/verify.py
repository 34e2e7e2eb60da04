"""Self-check suites run by ``frobsum verify``.

Each suite performs a batch of exact checks and tallies passes and failures.
Random suites are driven by an explicit seed so runs are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .frobenius import (
    FrobeniusQuery,
    brute_force_summands,
    decompose,
    enumerate_summands,
    is_summand,
    multiplicity_of_trivial,
    serre_dual_weight,
)
from .oracle import decompose_product_of_lines, decompose_projective_space
from .parabolic import build_parabolic
from .rootsys import build_root_system, weyl_dimension

RANDOM_TYPES = ("A1", "A2", "A3", "B2")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures[:20]}


def irreducible_types(max_rank: int) -> list[str]:
    out = []
    for n in range(1, max_rank + 1):
        out.append(f"A{n}")
        if n >= 2:
            out += [f"B{n}", f"C{n}"]
        if n >= 3:
            out.append(f"D{n}")
        if n in (6, 7, 8):
            out.append(f"E{n}")
        if n == 4:
            out.append("F4")
        if n == 2:
            out.append("G2")
    return out


def all_levi_subsets(rank: int):
    for k in range(rank + 1):
        yield from itertools.combinations(range(rank), k)


def projective_space(n: int):
    """P^n as A_n / P with Levi {alpha_2, ..., alpha_n}."""
    return build_parabolic(build_root_system(f"A{n}"), range(1, n))


def random_query(rng: random.Random, types: Sequence[str] = RANDOM_TYPES, primes=(2, 3, 5), max_r: int = 2):
    rs = build_root_system(rng.choice(types))
    levi = [i for i in range(rs.rank) if rng.random() < 0.4]
    pd = build_parabolic(rs, levi)
    p = rng.choice(primes)
    r = rng.randint(1, max_r)
    q = p**r
    mu = tuple(0 if i in pd.levi else rng.randint(-3 * q, 3 * q) for i in range(rs.rank))
    return FrobeniusQuery(pd, p, r, mu)


def suite_andersen_haboush(max_n: int = 4, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("ah")
    for t in irreducible_types(max_n):
        rs = build_root_system(t)
        for p in primes:
            for r in range(1, max_r + 1):
                q = p**r
                dim = weyl_dimension(rs, tuple(q - 1 for _ in range(rs.rank)))
                res.check(dim == q**rs.num_positive_roots, f"{t} p={p} r={r}: {dim}")
    return res


def suite_example41(max_n: int = 4, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("example41")
    for t in irreducible_types(max_n):
        rs = build_root_system(t)
        pd = build_parabolic(rs, ())
        expected = sorted(tuple(-1 if i in J else 0 for i in range(rs.rank)) for J in all_levi_subsets(rs.rank))
        for p in primes:
            for r in range(1, max_r + 1):
                got = enumerate_summands(FrobeniusQuery(pd, p, r, rs.zero()))
                res.check(got == expected, f"{t} p={p} r={r}")
    return res


def suite_fsplit(max_n: int = 4, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("fsplit")
    for t in irreducible_types(max_n):
        rs = build_root_system(t)
        for levi in all_levi_subsets(rs.rank):
            pd = build_parabolic(rs, levi)
            for p in primes:
                for r in range(1, max_r + 1):
                    q = FrobeniusQuery(pd, p, r, rs.zero())
                    res.check(is_summand(q, rs.zero()), f"{t} levi={levi} p={p} r={r}")
    return res


def suite_criterion(samples: int = 200, seed: int = 0, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("criterion")
    rng = random.Random(seed)
    for _ in range(samples):
        q = random_query(rng, primes=primes, max_r=max_r)
        res.check(enumerate_summands(q) == brute_force_summands(q), f"{q.rs.label} {q.pd.levi_label()} {q.p}^{q.r} {q.mu}")
    return res


def suite_duality(samples: int = 1000, seed: int = 0, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("duality")
    rng = random.Random(seed)
    for _ in range(samples):
        q = random_query(rng, primes=primes, max_r=max_r)
        original = set(enumerate_summands(q))
        dual = {tuple(-c for c in lam) for lam in enumerate_summands(q.with_mu(serre_dual_weight(q)))}
        res.check(original == dual, f"{q.rs.label} {q.pd.levi_label()} {q.p}^{q.r} {q.mu}")
    return res


def suite_transitivity(samples: int = 1000, seed: int = 0, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("transitivity")
    rng = random.Random(seed)
    for _ in range(samples):
        q = random_query(rng, primes=primes, max_r=max_r)
        lam = rng.choice(enumerate_summands(q))
        s = rng.randint(1, max_r)
        nu = rng.choice(enumerate_summands(q.with_mu(lam).with_r(s)))
        composite = q.with_r(q.r + s)
        res.check(is_summand(composite, nu), f"{q.rs.label} {q.pd.levi_label()} p={q.p} r={q.r} s={s} {q.mu}->{lam}->{nu}")
    return res


def suite_oracle(max_n: int = 3, primes=(2, 3, 5), max_r: int = 2, **_) -> SuiteResult:
    res = SuiteResult("oracle")
    for n in range(1, max_n + 1):
        pd = projective_space(n)
        for p in primes:
            for r in range(1, max_r + 1):
                Q = p**r
                for d in range(0, Q):
                    tag = f"P^{n} p={p} r={r} d={d}"
                    orc = decompose_projective_space(n, p, r, d)
                    q = FrobeniusQuery(pd, p, r, (d,) + (0,) * (n - 1))
                    support = {lam[0] for lam in enumerate_summands(q)}
                    res.check(support == orc.support, f"{tag}: support")
                    m0 = multiplicity_of_trivial(q)
                    res.check(m0 == orc.entries.get(0) == comb(d + n, n), f"{tag}: trivial multiplicity")
                    res.check(orc.total == Q**n, f"{tag}: conservation")
                    rep = decompose(q)
                    for e in rep.summands:
                        if e.multiplicity is not None:
                            res.check(e.multiplicity == orc.entries[e.weight[0]], f"{tag}: multiplicity at {e.weight}")
    # products of projective lines against A1 x ... x A1, full flag
    for n in range(1, max_n + 1):
        rs = build_root_system("x".join(["A1"] * n))
        pd = build_parabolic(rs, ())
        for p in primes:
            for r in range(1, max_r + 1):
                Q = p**r
                for d in itertools.product(range(0, Q), repeat=n):
                    orc = decompose_product_of_lines(n, p, r, d)
                    q = FrobeniusQuery(pd, p, r, d)
                    tag = f"(P^1)^{n} p={p} r={r} d={d}"
                    res.check(set(enumerate_summands(q)) == orc.support, f"{tag}: support")
                    res.check(orc.total == Q**n == Q**pd.dim_GP, f"{tag}: conservation")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "ah": suite_andersen_haboush,
    "example41": suite_example41,
    "fsplit": suite_fsplit,
    "criterion": suite_criterion,
    "duality": suite_duality,
    "transitivity": suite_transitivity,
    "oracle": suite_oracle,
}


def run_suites(names: Sequence[str], **options) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    return [SUITES[name](**options) for name in names]
