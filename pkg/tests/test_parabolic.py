import itertools

import pytest

from frobsum.errors import UsageError
from frobsum.parabolic import build_parabolic, in_XP, parse_levi
from frobsum.rootsys import build_root_system

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2", "A1xA2"]


def test_full_flag_a2(a2):
    pd = build_parabolic(a2, ())
    assert pd.two_rho_P == (2, 2)
    assert pd.dim_GP == 3


def test_projective_plane(p2):
    assert p2.two_rho_P == (3, 0)
    assert p2.dim_GP == 2


def test_point():
    pd = build_parabolic(build_root_system("A3"), {0, 1, 2})
    assert pd.dim_GP == 0
    assert pd.two_rho_P == (0, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_projective_space_canonical_class(n):
    # omega_{P^n} = O(-(n+1))
    pd = build_parabolic(build_root_system(f"A{n}"), range(1, n))
    assert pd.two_rho_P == (n + 1,) + (0,) * (n - 1)
    assert pd.dim_GP == n


def test_grassmannian_gr24():
    # Gr(2,4) = A3 / P with Levi {1,3}: dim 4, omega = O(-4)
    pd = build_parabolic(build_root_system("A3"), {0, 2})
    assert pd.dim_GP == 4
    assert pd.two_rho_P == (0, 4, 0)


def test_odd_quadric_b3():
    # B3 / P_1 is the 5-dimensional quadric, omega = O(-5)
    pd = build_parabolic(build_root_system("B3"), {1, 2})
    assert pd.dim_GP == 5
    assert pd.two_rho_P == (5, 0, 0)


@pytest.mark.parametrize("t", TYPES)
def test_parabolic_invariants(t):
    rs = build_root_system(t)
    full = build_parabolic(rs, ())
    assert full.two_rho_P == (2,) * rs.rank
    assert full.dim_GP == rs.num_positive_roots
    subsets = [frozenset(c) for k in range(rs.rank + 1) for c in itertools.combinations(range(rs.rank), k)]
    dims = {}
    for levi in subsets:
        pd = build_parabolic(rs, levi)
        dims[levi] = pd.dim_GP
        assert in_XP(pd, pd.two_rho_P)
        for i in pd.complement:
            assert pd.two_rho_P[i] >= 2
    for a, b in itertools.product(subsets, repeat=2):
        if a <= b:
            assert dims[a] >= dims[b]


def test_in_XP(a2, p2):
    assert in_XP(p2, (5, 0))
    assert not in_XP(p2, (0, 1))
    assert in_XP(build_parabolic(a2, ()), (-3, 7))


def test_out_of_range(a2):
    with pytest.raises(UsageError, match="3"):
        build_parabolic(a2, {2})


def test_parse_levi():
    assert parse_levi("none", 3) == frozenset()
    assert parse_levi("2", 3) == frozenset({1})
    assert parse_levi("1, 3", 3) == frozenset({0, 2})
    assert parse_levi("1", 3, marked=True) == frozenset({1, 2})
    assert parse_levi("all", 2) == frozenset({0, 1})
    with pytest.raises(UsageError):
        parse_levi("4", 3)
    with pytest.raises(UsageError, match="x"):
        parse_levi("1,x", 3)
