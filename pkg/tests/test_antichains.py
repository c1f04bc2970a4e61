import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from contcolor import kernels
from contcolor.antichains import (
    Contradiction,
    EventuallyPeriodicSeq,
    ForcedTailMatch,
    block_members,
    chromatic_number,
    colorable,
    complete_graph,
    et_equivalent,
    kneser_graph,
    kneser_sequence_check,
    make_x_nu,
    nu_alpha,
    parse_list,
    prime_coded,
    successor,
    x_nu_counts,
    x_nu_forced_compare,
)
from contcolor.order import FOUND, NONE, homomorphism_search
from oracles import tail_equivalent_brute, x_nu_by_clauses

Seq = EventuallyPeriodicSeq.parse

FIGURE_EDGES = [
    ("0^1 1^inf", "0^inf"),
    ("0^1 1^inf", "2^2 0^inf"),
    ("0^2 1^inf", "1^3 2^inf"),
    ("0^2 1^inf", "2^2 0^inf"),
    ("0^3 1^inf", "1^3 2^inf"),
    ("0^3 1^inf", "1^4 2^inf"),
    ("0^4 1^inf", "1^4 2^inf"),
    ("0^4 1^inf", "1^5 2^inf"),
    ("0^5 1^inf", "1^5 2^inf"),
    ("0^5 1^inf", "2^6 0^inf"),
    ("0^6 1^inf", "2^6 0^inf"),
    ("0^6 1^inf", "2^7 0^inf"),
    ("0^7 1^inf", "2^7 0^inf"),
    ("0^inf", "1^inf"),
    ("0^inf", "2^inf"),
]

SEQS = ["1;2", "2;1", ";1,2", ";2,1", ";1,3", "5,1;2,1", ";1,1,2", ";2", "3;1,2", ";1,2,2"]


def test_sequence_basics():
    nu = Seq("5,1;2,1")
    assert nu.prefix(6) == [5, 1, 2, 1, 2, 1]
    assert nu.partial_sum(3) == 8
    assert nu.shift(3).prefix(4) == nu.prefix(7)[3:]
    assert str(nu) == "5,1;2,1" and Seq(str(nu)) == nu
    assert Seq("3,4") == EventuallyPeriodicSeq((), (3, 4))
    assert parse_list(" ") == ()
    with pytest.raises(ValueError):
        Seq("1;")
    with pytest.raises(ValueError):
        Seq("0;1")


def test_figure_sample():
    s = make_x_nu(2, Seq("1,3;2"), 3)
    got = sorted(tuple(sorted((s.label(u), s.label(v)))) for u, v in s.graph.edge_list())
    assert got == FIGURE_EDGES
    assert successor(2, 2) == 0 and successor(3, 1) == 2


def _as_oracle(v):
    return v if v[0] == "lim" else (v[1], v[2])


@pytest.mark.parametrize("kappa", [2, 3, 4])
@pytest.mark.parametrize("text", ["1,3;2", ";1", ";2,1,3"])
@pytest.mark.parametrize("K", [1, 2, 5])
def test_x_nu_matches_clauses(kappa, text, K):
    nu = Seq(text)
    s = make_x_nu(kappa, nu, K)
    V, E = x_nu_by_clauses(kappa, nu, K)
    assert {_as_oracle(v) for v in s.graph.vertices} == V
    assert {frozenset(map(_as_oracle, e)) for e in s.graph.edge_list()} == E
    assert (len(s.graph), len(s.graph.edges)) == x_nu_counts(kappa, nu, K)


def test_limit_cliques():
    kappa = 3
    s = make_x_nu(kappa, Seq(";1"), 2)
    low = [("lim", e) for e in range(kappa)]
    high = [("lim", 0)] + [("lim", e) for e in range(kappa, 2 * kappa - 1)]
    for group in (low, high):
        assert all(s.graph.has_edge(a, b) for a, b in itertools.combinations(group, 2))
    assert sorted(block_members(kappa, 0)) == [3, 4] and sorted(block_members(kappa, 1)) == [1, 2]


def test_et_examples():
    nu = Seq("5,1;2,1")
    assert et_equivalent(nu, nu.shift(3))
    assert not et_equivalent(Seq(";1,2"), Seq(";1,3"))
    assert et_equivalent(Seq("1;2"), Seq(";2"))


def test_et_is_equivalence_relation():
    seqs = [Seq(t) for t in SEQS]
    for a in seqs:
        assert et_equivalent(a, a)
    for a, b in itertools.product(seqs, repeat=2):
        assert et_equivalent(a, b) == et_equivalent(b, a)
        assert et_equivalent(a, b) == tail_equivalent_brute(a, b)
    for a, b, c in itertools.product(seqs, repeat=3):
        if et_equivalent(a, b) and et_equivalent(b, c):
            assert et_equivalent(a, c)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 3), max_size=3),
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
    st.lists(st.integers(1, 3), max_size=3),
    st.lists(st.integers(1, 3), min_size=1, max_size=3),
)
def test_et_matches_brute(pa, qa, pb, qb):
    a, b = EventuallyPeriodicSeq(pa, qa), EventuallyPeriodicSeq(pb, qb)
    assert et_equivalent(a, b) == tail_equivalent_brute(a, b)


def test_forced_compare_examples():
    r = x_nu_forced_compare(2, Seq(";1,2"), Seq(";1,3"), 12)
    assert isinstance(r, Contradiction) and r.index == 2
    nu = Seq("1,3;2")
    assert isinstance(x_nu_forced_compare(2, nu, nu, 20), ForcedTailMatch)
    nu = Seq("5,1;2,1")
    for a, b in ((nu, nu.shift(3)), (nu.shift(3), nu)):
        assert isinstance(x_nu_forced_compare(2, a, b, 20), ForcedTailMatch)
    with pytest.raises(ValueError):
        x_nu_forced_compare(1, nu, nu, 5)


def test_forced_compare_contradiction_within_bound():
    seqs = [Seq(t) for t in SEQS]
    for a, b in itertools.product(seqs, repeat=2):
        if et_equivalent(a, b):
            continue
        bound = 4 * (len(a.period) + len(b.period)) + len(a.preperiod) + len(b.preperiod)
        r = x_nu_forced_compare(2, a, b, bound)
        assert isinstance(r, Contradiction), (str(a), str(b))
        assert 0 <= r.index <= bound


def test_prime_coded_values():
    assert prime_coded("00") == [2, 6]
    assert prime_coded("10") == [4, 12]
    assert prime_coded("00", shifted=True) == [3, 35]
    assert nu_alpha("0110", 3) == prime_coded("011")
    with pytest.raises(ValueError):
        nu_alpha("01", 3)


def test_prime_coded_prefixes_split_after_first_difference():
    words = ["".join(w) for w in itertools.product("01", repeat=4)]
    for a, b in itertools.combinations(words, 2):
        i = next(j for j in range(4) if a[j] != b[j])
        sa, sb = prime_coded(a), prime_coded(b)
        assert sa[:i] == sb[:i]
        assert not set(sa[i:]) & set(sb[i:])
        assert not set(prime_coded(a, True)[i:]) & set(prime_coded(b, True)[i:])


@pytest.mark.parametrize("n,k", [(4, 1), (5, 2), (6, 2), (7, 3), (7, 2)])
def test_kneser_structure(n, k):
    G = kneser_graph(n, k)
    assert len(G) == comb(n, k)
    assert all(not set(u) & set(v) for u, v in G.edge_list())
    assert len(G.edges) == comb(n, k) * comb(n - k, k) // 2
    perm = {i: (i % n) + 1 for i in range(1, n + 1)}
    image = {tuple(sorted(perm[i] for i in v)) for v in G.vertices}
    assert image == set(G.vertices)
    assert all(G.has_edge(tuple(sorted(perm[i] for i in u)), tuple(sorted(perm[i] for i in v))) for u, v in G.edge_list())


@pytest.mark.parametrize("n,k,chi", [(4, 1, 4), (5, 2, 3), (6, 2, 4), (6, 3, 2), (7, 3, 3)])
def test_kneser_chromatic_numbers(n, k, chi):
    r = chromatic_number(kneser_graph(n, k), 8)
    assert r.status == "found" and r.value == chi


def test_no_hom_k62_to_k52():
    r = homomorphism_search(kneser_graph(6, 2), kneser_graph(5, 2), injective=False)
    assert r.status == NONE
    assert homomorphism_search(kneser_graph(5, 2), kneser_graph(6, 2), injective=False).status == FOUND


def test_colorable_matches_exhaustive_kernel():
    graphs = [kneser_graph(4, 1), kneser_graph(5, 2), kneser_graph(6, 2), complete_graph(5)]
    for G in graphs:
        for c in range(1, 6):
            assert (colorable(G, c).status == FOUND) == kernels.exhaustive_colorable(len(G), G.edge_array(), c)


def test_kneser_sequence_rows():
    r = kneser_sequence_check(3)
    assert r.ok
    rows = [(x.p, x.n, x.k) for x in r.rows]
    assert rows[:2] == [(0, 4, 1), (1, 7, 2)]
    d = r.to_dict()
    assert d["rows"][0]["ratio"] == "4/1" and d["rows"][1]["ratio"] == "7/2"
    assert int(d["rows"][0]["vertices"]) < int(d["rows"][1]["vertices"]) == 21


def test_kneser_sequence_long():
    assert kneser_sequence_check(12).ok
