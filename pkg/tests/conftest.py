import itertools

import pytest

from frobsum.parabolic import build_parabolic
from frobsum.rootsys import build_root_system


def reflection_orbit_roots(cartan):
    """Positive roots as the Weyl orbit of the simple roots (simple-root coords).

    s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, closed under all s_i.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * beta[j] for j in range(n))
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return {b for b in seen if all(c >= 0 for c in b)}


def monomial_decomposition(n, q, d):
    """F^r_* O_{P^n}(d) by listing residues a in [0, q-1]^{n+1}."""
    out = {}
    for a in itertools.product(range(q), repeat=n + 1):
        rest = d - sum(a)
        if rest % q == 0:
            out[rest // q] = out.get(rest // q, 0) + 1
    return out


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def p2(a2):
    return build_parabolic(a2, {1})


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
