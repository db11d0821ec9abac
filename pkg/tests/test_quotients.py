import random
from itertools import combinations

import pytest

from pqham.graphs import (
    Graph,
    Multigraph,
    gp,
    hamilton_cycle,
    is_isomorphic,
    verify_hamilton_cycle,
)
from pqham.quotients import (
    LiftOutcome,
    Quotient,
    Symbol,
    format_symbol,
    graph_from_symbol,
    lift_closed_walk,
    permutation_orbits,
    quotient,
    stitch_isolates,
    symbol,
    verify_quotient_cycle,
    verify_semiregular,
)


def odd_graph_4():
    """Disjointness graph on 3-subsets of a 7-set, with the subset list."""
    subs = list(combinations(range(7), 3))
    edges = [(i, j) for (i, s), (j, t) in combinations(list(enumerate(subs)), 2)
             if not set(s) & set(t)]
    return Graph(35, edges), subs


def odd_graph_aut(subs, point_perm):
    idx = {s: i for i, s in enumerate(subs)}
    return [idx[tuple(sorted(point_perm[x] for x in s))] for s in subs]


O4, O4_SUBS = odd_graph_4()
O4_RHO = odd_graph_aut(O4_SUBS, {i: (i + 1) % 5 if i < 5 else i for i in range(7)})

PETERSEN = gp(5, 2)
PET_RHO = [(i + 1) % 5 if i < 5 else 5 + (i - 4) % 5 for i in range(10)]

# symbol matrix of the odd graph relative to a (7,5)-semiregular
# automorphism, as published
O4_SYMBOL = tuple(
    tuple(frozenset(c) for c in row) for row in [
        [(), (0,), (), (), (0,), (), (0, 4)],
        [(0,), (), (0, 4), (), (), (), (2,)],
        [(), (0, 1), (), (0, 3), (), (), ()],
        [(), (), (0, 2), (), (4,), (0,), ()],
        [(0,), (), (), (1,), (), (0, 2), ()],
        [(), (), (), (0,), (0, 3), (), (1,)],
        [(0, 1), (3,), (), (), (), (4,), ()],
    ]
)


def test_verify_semiregular_examples():
    assert verify_semiregular(PETERSEN, PET_RHO) == (2, 5)
    assert verify_semiregular(PETERSEN, list(range(10))) is None
    assert verify_semiregular(O4, O4_RHO) == (7, 5)
    not_aut = list(range(10))
    not_aut[0], not_aut[2] = 2, 0
    assert verify_semiregular(PETERSEN, not_aut) is None


def test_permutation_orbits():
    assert permutation_orbits([1, 2, 0, 4, 3]) == [[0, 1, 2], [3, 4]]


def test_quotient_c6():
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    q2 = quotient(c6, [(i + 2) % 6 for i in range(6)])
    assert (q2.m, q2.n) == (2, 3)
    assert q2.d_in == (0, 0) and q2.d(0, 1) == 2
    q3 = quotient(c6, [(i + 3) % 6 for i in range(6)])
    assert (q3.m, q3.n) == (3, 2)
    assert all(q3.d(a, b) == 1 for a, b in combinations(range(3), 2))


def test_quotient_o4():
    q = quotient(O4, O4_RHO)
    assert q.m == 7 and q.n == 5
    assert q.d_in == (0,) * 7
    want = sorted(len(s) for row in O4_SYMBOL for s in row if s)
    got = sorted(q.d(a, b) for a in range(7) for b in range(7)
                 if a != b and q.d(a, b))
    assert got == want
    # valency decomposes over the quotient for every orbit
    for a in range(7):
        assert q.d_in[a] + sum(q.d(a, b) for b in range(7) if b != a) == 4


def test_symbol_petersen():
    s = symbol(PETERSEN, PET_RHO)
    assert s.n == 5 and s.m == 2
    assert s.sets[0][0] == frozenset({1, 4})
    assert s.sets[1][1] == frozenset({2, 3})
    assert s.sets[0][1] == frozenset({0})


def test_symbol_c5():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    s = symbol(c5, [(i + 1) % 5 for i in range(5)])
    assert s.m == 1 and s.sets[0][0] == frozenset({1, 4})


def test_symbol_invariants_and_roundtrip():
    for g, rho in [(PETERSEN, PET_RHO), (O4, O4_RHO)]:
        s = symbol(g, rho)
        for i in range(s.m):
            assert s.sets[i][i] == frozenset((-t) % s.n for t in s.sets[i][i])
            for j in range(s.m):
                assert s.sets[j][i] == frozenset((-t) % s.n for t in s.sets[i][j])
        assert is_isomorphic(graph_from_symbol(s), g)


def test_published_symbol_realizes_o4():
    sym = Symbol(5, tuple(range(7)), O4_SYMBOL)
    assert is_isomorphic(graph_from_symbol(sym), O4)


def test_format_symbol():
    s = symbol(PETERSEN, PET_RHO)
    text = format_symbol(s)
    assert len(text.splitlines()) == 2
    assert "{1,4}" in text and "{0}" in text


def test_lift_o4_full():
    q = quotient(O4, O4_RHO)
    cyc = hamilton_cycle(q.graph.simple())
    assert any(q.d(cyc[i], cyc[(i + 1) % 7]) >= 2 for i in range(7))
    out = lift_closed_walk(O4, O4_RHO, cyc)
    assert out.full and out.piece_count == 1
    assert verify_hamilton_cycle(O4, list(out.cycle))


def test_lift_double_edge_two_cycle():
    q = quotient(O4, O4_RHO)
    a, b = next(e for e, c in q.graph.mult.items() if c >= 2)
    out = lift_closed_walk(O4, O4_RHO, [a, b])
    assert out.full and len(out.cycle) == 10
    # it is a genuine 10-cycle in the graph
    for i in range(10):
        assert O4.has_edge(out.cycle[i], out.cycle[(i + 1) % 10])
    assert len(set(out.cycle)) == 10


def test_lift_disjoint_case():
    # three orbits of length 3 joined by single zero-voltage edges:
    # the quotient triangle lifts to 3 disjoint triangles
    sym = Symbol(3, (0, 1, 2), tuple(
        tuple(frozenset(c) for c in row) for row in [
            [(), (0,), (0,)],
            [(0,), (), (0,)],
            [(0,), (0,), ()],
        ]))
    g = graph_from_symbol(sym)
    rho = [i - i % 3 + (i + 1) % 3 for i in range(9)]
    assert verify_semiregular(g, rho) == (3, 3)
    out = lift_closed_walk(g, rho, [0, 1, 2])
    assert not out.full and out.piece_count == 3
    assert len(out.cycle) == 3
    # every edge of the quotient cycle is a single edge
    q = quotient(g, rho)
    assert all(q.d(a, b) == 1 for a, b in combinations(range(3), 2))


def test_lift_dichotomy_double_edge_always_full():
    # quotient cycles through a multiplicity-2 edge always lift fully
    q = quotient(O4, O4_RHO)
    sg = q.graph.simple()
    for cyc in ([6, 0, 2, 3, 4, 5, 1], [0, 6, 1, 4, 3, 2, 5][::-1]):
        if verify_quotient_cycle(q, cyc):
            out = lift_closed_walk(O4, O4_RHO, cyc)
            if any(q.d(cyc[i], cyc[(i + 1) % 7]) >= 2 for i in range(7)):
                assert out.full


def test_lift_errors():
    with pytest.raises(ValueError):
        lift_closed_walk(O4, O4_RHO, [0, 1, 0])
    with pytest.raises(ValueError):
        lift_closed_walk(O4, O4_RHO, [0, 4, 2])  # 0-4 not a quotient edge
    with pytest.raises(ValueError):
        lift_closed_walk(PETERSEN, PET_RHO, [0, 1])  # spoke edge is single
    with pytest.raises(ValueError):
        lift_closed_walk(PETERSEN, list(range(10)), [0, 1])  # not semiregular


def complete_quotient(m):
    mult = {(a, b): 1 for a, b in combinations(range(m), 2)}
    return Quotient(Multigraph(m, mult), tuple((i,) for i in range(m)),
                    (0,) * m)


def test_stitch_one_cycle():
    q = complete_quotient(13)
    cyc = stitch_isolates(q, list(range(10)), [10, 11, 12])
    assert sorted(cyc) == list(range(13))
    assert verify_quotient_cycle(q, cyc)


def test_stitch_two_cycles():
    q = complete_quotient(12)
    cyc = stitch_isolates(q, [0, 1, 2, 3], [8, 9, 10, 11], second=[4, 5, 6, 7])
    assert sorted(cyc) == list(range(12))
    assert verify_quotient_cycle(q, cyc)


def test_stitch_errors():
    q = complete_quotient(6)
    with pytest.raises(ValueError):
        stitch_isolates(q, [0, 1, 2], [5], second=[3, 4])  # needs 2 isolates
    mult = {(0, 1): 1, (1, 2): 1, (0, 2): 1, (0, 3): 1}
    q2 = Quotient(Multigraph(4, mult), tuple((i,) for i in range(4)), (0,) * 4)
    with pytest.raises(ValueError):
        stitch_isolates(q2, [0, 1, 2], [3])  # 3 only adjacent to 0


def test_stitch_capacity():
    q = complete_quotient(10)
    with pytest.raises(ValueError):
        stitch_isolates(q, [0, 1, 2], list(range(3, 10)))


def test_random_circulant_quotients():
    rnd = random.Random(5)
    for _ in range(20):
        n = rnd.choice([3, 5, 7])
        m = rnd.randint(2, 4)
        N = m * n
        jumps = rnd.sample(range(1, N // 2 + 1), rnd.randint(2, 3))
        g = Graph(N, {(v, (v + j) % N) for v in range(N) for j in jumps
                      if v != (v + j) % N})
        rho = [(v + m) % N for v in range(N)]
        mn = verify_semiregular(g, rho)
        if mn is None:
            continue
        assert mn == (m, n)
        q = quotient(g, rho)
        for a in range(q.m):
            deg = q.d_in[a] + sum(q.d(a, b) for b in range(q.m) if b != a)
            assert deg == g.degree(q.orbits[a][0])
        s = symbol(g, rho)
        assert is_isomorphic(graph_from_symbol(s), g)
