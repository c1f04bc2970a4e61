from contcolor.analysis import (
    cb_derivative,
    cb_rank,
    fixed_point_set,
    n0_bound,
    remove_removables,
    truncate,
)
from contcolor.graphs import cycle_graph, path_graph
from contcolor.presentation import (
    Family,
    Kind,
    Mode,
    PeriodicOrbit,
    as_homeomorphism,
    PTuple,
    SystemPresentation,
    empty,
    make_n_sigma,
    make_odd_cycle,
    make_sigma_p,
    make_x1,
)
from contcolor.basis import box


def _with(S, orbits=(), families=()):
    S = as_homeomorphism(S)
    return SystemPresentation(S.mode, S.orbits + tuple(orbits), S.connectors, S.families + tuple(families))


def test_cb_derivative_sigma_p():
    D = cb_derivative(make_sigma_p(PTuple(1, (2, 2), 1, (0,))))
    assert [o.length for o in D.orbits] == [2, 2]
    assert not D.connectors and not D.families


def test_cb_derivative_finite_and_x1():
    assert cb_derivative(make_odd_cycle(0)).is_empty
    assert cb_derivative(cb_derivative(make_x1())).is_empty


def test_cb_rank():
    assert cb_rank(make_x1()) == 2
    assert cb_rank(empty()) == 0
    assert cb_rank(make_odd_cycle(3)) == 1
    assert all(cb_rank(make_odd_cycle(q)) == 1 for q in range(6))


def test_fixed_point_sets():
    assert not fixed_point_set(make_x1()).is_open
    assert not fixed_point_set(make_n_sigma(0)).is_open
    for p in box(1, 4):
        rep = fixed_point_set(make_sigma_p(p))
        assert rep.is_open and not rep.isolated_fixed_orbits


def test_n_sigma0_fixed_point_is_approached():
    # the window ends f^{-N} z stay adjacent to ever longer stretches before
    # the fixed point; in a window they are the vertices farthest from z
    G = truncate(make_n_sigma(0), 5)
    assert G.degree(("c", "z", -5)) == 1 and G.degree(("o", "y0", 0)) == 0


def test_remove_removables_drops_even_isolated():
    S = make_sigma_p(PTuple(0, (2,), 1, ()))
    T = _with(S, [PeriodicOrbit("extra", 4, Kind.ISOLATED)])
    assert remove_removables(T) == as_homeomorphism(S)


def test_remove_removables_keeps_x1():
    assert remove_removables(make_x1()) == make_x1()


def test_remove_removables_drops_isolated_fixed_point():
    S = make_sigma_p(PTuple(0, (2,), 1, ()))
    T = _with(S, [PeriodicOrbit("fix", 1, Kind.ISOLATED)])
    assert all(o.id != "fix" for o in remove_removables(T).orbits)


def test_remove_removables_keeps_odd():
    S = make_sigma_p(PTuple(0, (2,), 1, ()))
    T = _with(S, [PeriodicOrbit("odd", 5, Kind.ISOLATED)], [Family("F", 2, "y0")])
    R = remove_removables(T)
    assert any(o.id == "odd" for o in R.orbits)
    assert not R.families  # even members at a non-fixed limit


def test_remove_removables_demotes_orbit_reached_by_dropped_family():
    S = SystemPresentation(Mode.HOMEOMORPHISM, (PeriodicOrbit("y", 2, Kind.LIMIT),), (), (Family("F", 4, "y"),))
    assert remove_removables(S).is_empty
    T = SystemPresentation(Mode.HOMEOMORPHISM, (PeriodicOrbit("y", 3, Kind.LIMIT),), (), (Family("F", 6, "y"),))
    R = remove_removables(T)
    assert [(o.id, o.kind) for o in R.orbits] == [("y", Kind.ISOLATED)]


def test_truncate_odd_cycle_is_triangle():
    for N in (1, 4):
        G = truncate(make_odd_cycle(0), N)
        assert G.relabel(lambda v: v[2]) == cycle_graph(3)


def test_truncate_n_sigma0():
    G = truncate(make_n_sigma(0), 2)
    path = G.induced([v for v in G.vertices if v[0] == "c"])
    assert path.relabel(lambda v: v[2] + 2) == path_graph(5)
    assert len(G) == 6 and G.degree(("o", "y0", 0)) == 0


def test_truncate_sigma_p_vertex_count():
    assert len(truncate(make_sigma_p(PTuple(0, (2,), 1, ())), 3)) == 2 + 7


def test_truncate_family_members():
    G = truncate(make_x1(), 3, family_members=5)
    assert sum(1 for v in G.vertices if v[0] == "f") == 10
    assert len(G.edges) == 5


def test_n0_bound():
    assert n0_bound(make_sigma_p(PTuple(1, (2, 4), 1, (0,)))) == 2 * 4 * 3
