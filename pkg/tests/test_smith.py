import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detideals.graphs import (
    build_matrix,
    char_matrix,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    path_graph,
)
from detideals.polyring import RING_Q, RING_Z, UniPoly, poly_str
from detideals.smith import (
    GroupDescription,
    char_poly,
    cokernel,
    delta_bruteforce,
    minor_tables,
    snf_integer,
    snf_poly_q,
)

XQ = UniPoly.variable(RING_Q)


def qc(c):
    return UniPoly.const(c, RING_Q)


# ---------------------------------------------------------------------------
# integer SNF


def test_snf_k33_laplacian():
    snf = snf_integer(build_matrix(complete_bipartite_graph(3, 3), "laplacian"))
    assert snf.factors == (1, 1, 3, 3, 9)
    assert snf.rank == 5 and snf.n == 6
    assert snf.diagonal() == (1, 1, 3, 3, 9, 0)


def test_snf_adjacency_complete():
    for n in range(2, 7):
        snf = snf_integer(build_matrix(complete_graph(n), "adjacency"))
        assert snf.factors == (1,) * (n - 1) + (n - 1,)


def test_snf_laplacian_complete():
    # settles the diag(1,n,...,n,0) vs diag(1,n-1,...) question computationally
    for n in range(2, 7):
        snf = snf_integer(build_matrix(complete_graph(n), "laplacian"))
        assert snf.factors == (1,) + (n,) * (n - 2)
    assert delta_bruteforce(build_matrix(complete_graph(3), "laplacian"), 2) == 3


def test_snf_c4_and_star():
    assert snf_integer(build_matrix(cycle_graph(4), "laplacian")).factors == (1, 1, 4)
    assert snf_integer(build_matrix(path_graph(3), "distlap")).factors == (1, 5)


def test_snf_zero_and_identity():
    assert snf_integer([[0, 0], [0, 0]]).factors == ()
    assert snf_integer([[1, 0], [0, 1]]).factors == (1, 1)
    assert snf_integer([[2, 0], [0, 3]]).factors == (1, 6)


matrices = st.lists(
    st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4
)


@given(matrices)
@settings(deadline=None, max_examples=80)
def test_snf_matches_bruteforce_oracle(m):
    snf = snf_integer(m)
    for k in range(1, 5):
        assert snf.delta(k) == delta_bruteforce(m, k)
    for a, b in zip(snf.factors, snf.factors[1:]):
        assert b % a == 0


@given(matrices)
@settings(deadline=None, max_examples=40)
def test_snf_determinant_invariance(m):
    det = delta_bruteforce(m, 4)  # |det| as gcd of the single 4-minor
    snf = snf_integer(m)
    if det:
        prod = math.prod(snf.factors)
        assert prod == det


# ---------------------------------------------------------------------------
# SNF over Q[x]


def test_snf_poly_q_k33():
    snf = snf_poly_q(char_matrix(complete_bipartite_graph(3, 3), "laplacian", RING_Q))
    xm3 = XQ - qc(3)
    assert snf.factors == (
        qc(1),
        qc(1),
        xm3,
        xm3,
        xm3,
        XQ * xm3 * (XQ - qc(6)),
    )


def test_snf_poly_q_single_vertex():
    from detideals.graphs import Graph

    snf = snf_poly_q(char_matrix(Graph(1, (0,)), "adjacency", RING_Q))
    assert snf.factors == (XQ,)


def test_snf_poly_q_fig2_g1():
    from detideals.suites import fig2_graphs

    g1, _ = fig2_graphs()
    snf = snf_poly_q(char_matrix(g1, "adjacency", RING_Q))
    assert snf.factors[4] == XQ + qc(1)
    assert snf.factors[5] == (XQ - qc(1)) * (XQ + qc(1)) * (XQ**3 - XQ**2 - qc(5) * XQ + qc(1))


def test_snf_poly_q_product_is_char_poly():
    for g in enumerate_connected(5)[:8]:
        for kind in ("adjacency", "distlap"):
            snf = snf_poly_q(char_matrix(g, kind, RING_Q))
            prod = qc(1)
            for f in snf.factors:
                prod = prod * f
            assert prod == char_poly(build_matrix(g, kind)).to_q()
            for a, b in zip(snf.factors, snf.factors[1:]):
                from detideals.polyring import divmod_poly

                assert divmod_poly(b, a)[1].is_zero()


def test_snf_poly_q_matches_bruteforce():
    m = char_matrix(cycle_graph(4), "laplacian", RING_Q)
    snf = snf_poly_q(m)
    for k in range(1, 5):
        assert snf.delta(k) == delta_bruteforce(m, k)


# ---------------------------------------------------------------------------
# cokernels


def test_cokernel_examples():
    c4 = cycle_graph(4)
    k = cokernel(snf_integer(build_matrix(c4, "laplacian")))
    assert k == GroupDescription((4,), 1)
    s = cokernel(snf_integer(build_matrix(c4, "adjacency")))
    assert s == GroupDescription((), 2)
    assert str(s) == "Z^2"
    for n in (4, 5, 6):
        g = cokernel(snf_integer(build_matrix(complete_graph(n), "laplacian")))
        assert g == GroupDescription((n,) * (n - 2), 1)


def test_laplacian_kinds_have_rank_n_minus_1():
    for g in enumerate_connected(5):
        for kind in ("laplacian", "distlap"):
            snf = snf_integer(build_matrix(g, kind))
            assert snf.rank == g.n - 1


def test_cokernel_requires_integer_ring():
    snf = snf_poly_q(char_matrix(cycle_graph(4), "adjacency", RING_Q))
    with pytest.raises(ValueError):
        cokernel(snf)


# ---------------------------------------------------------------------------
# delta oracle plumbing and characteristic polynomials


def test_delta_bruteforce_range_check():
    with pytest.raises(ValueError):
        delta_bruteforce([[1]], 2)


def test_delta_bruteforce_full_size_is_abs_det():
    m = [[2, 1], [1, 1]]
    assert delta_bruteforce(m, 2) == 1
    m = [[0, 2], [-2, 0]]
    assert delta_bruteforce(m, 2) == 4


def _det_by_permutations(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        # count inversions for the sign
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


@given(matrices)
@settings(deadline=None, max_examples=50)
def test_char_poly_against_permutation_determinant(m):
    p = char_poly(m)
    assert p.lc == 1 and p.degree == 4
    # det(xI - M) evaluated at a few points equals the permutation-sum determinant
    for x in (-2, 0, 1, 3):
        shifted = [[(x if i == j else 0) - m[i][j] for j in range(4)] for i in range(4)]
        assert p(x) == _det_by_permutations(shifted)


def test_minor_tables_is_laplace_consistent():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    tables = minor_tables(m)
    assert tables[3][((0, 1, 2), (0, 1, 2))] == _det_by_permutations(m)
